#include "symcalc/character_table.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "symcalc/checked.hpp"

namespace symcalc {

bool CharacterTable::row_orthonormal() const {
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a; b < entries.size(); ++b) {
      std::int64_t sum = 0;
      for (std::size_t c = 0; c < column_labels.size(); ++c) {
        sum = checked_add(sum, checked_mul(class_size(c), checked_mul(entries[a][c], entries[b][c])));
      }
      if (sum != (a == b ? group_order : 0)) return false;
    }
  }
  return true;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_table(std::ostream& os, const CharacterTable& table, TableFormat format) {
  const bool ortho = table.row_orthonormal();
  if (format == TableFormat::Csv) {
    os << "symbol";
    for (const auto& c : table.column_labels) os << ',' << csv_field(c);
    os << '\n';
    for (std::size_t r = 0; r < table.entries.size(); ++r) {
      os << csv_field(table.row_labels[r]);
      for (Trace v : table.entries[r]) os << ',' << v;
      os << '\n';
    }
    os << "centralizer";
    for (auto z : table.centralizer_orders) os << ',' << z;
    os << '\n';
    os << "# group=" << table.group << " order=" << table.group_order
       << " orthogonality=" << (ortho ? "pass" : "fail") << '\n';
    return;
  }

  std::size_t label_width = 6;
  for (const auto& l : table.row_labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
    std::size_t w = std::max<std::size_t>(table.column_labels[c].size(), 4);
    for (const auto& row : table.entries) w = std::max(w, std::to_string(row[c]).size());
    widths.push_back(w);
  }
  os << table.group << " (order " << table.group_order << ")\n";
  os << std::left << std::setw(static_cast<int>(label_width)) << "symbol";
  for (std::size_t c = 0; c < widths.size(); ++c) {
    os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << table.column_labels[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < table.entries.size(); ++r) {
    os << std::left << std::setw(static_cast<int>(label_width)) << table.row_labels[r];
    for (std::size_t c = 0; c < widths.size(); ++c) {
      os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << table.entries[r][c];
    }
    os << '\n';
  }
  os << std::left << std::setw(static_cast<int>(label_width)) << "z";
  for (std::size_t c = 0; c < widths.size(); ++c) {
    os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << table.centralizer_orders[c];
  }
  os << "\northogonality: " << (ortho ? "pass" : "fail") << '\n';
}

}  // namespace symcalc
