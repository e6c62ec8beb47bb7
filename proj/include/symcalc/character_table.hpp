#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symcalc/combinatorics.hpp"

namespace symcalc {

struct CharacterTable {
  std::string group;                       // "S_4", "W_2", ...
  std::vector<std::string> row_labels;     // serialized canonical symbols
  std::vector<std::string> column_labels;  // serialized class labels
  std::vector<std::vector<Trace>> entries;
  std::vector<std::int64_t> centralizer_orders;
  std::int64_t group_order = 1;

  std::int64_t class_size(std::size_t col) const { return group_order / centralizer_orders[col]; }

  /// sum_c |c| chi(c) chi'(c) == |G| delta(chi, chi') for every pair of rows,
  /// i.e. weighted orthonormality with weights 1/z_c, in exact integers.
  bool row_orthonormal() const;
};

enum class TableFormat { Human, Csv };

void write_table(std::ostream& os, const CharacterTable& table, TableFormat format);

}  // namespace symcalc
