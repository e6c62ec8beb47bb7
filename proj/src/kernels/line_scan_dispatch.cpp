#include <cstdlib>
#include <string>

#include "symcalc/kernels/line_scan.hpp"

namespace symcalc::kernels {

bool cpu_has_avx2() {
#ifdef SYMCALC_HAVE_AVX2_KERNEL
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

bool forced_scalar() {
  const char* env = std::getenv("SYMCALC_KERNEL");
  return env != nullptr && std::string(env) == "scalar";
}

}  // namespace

LineScanFn select_line_scan() {
#ifdef SYMCALC_HAVE_AVX2_KERNEL
  if (!forced_scalar() && cpu_has_avx2()) return &line_scan_avx2;
#endif
  return &line_scan_scalar;
}

std::string_view selected_line_scan_name() {
#ifdef SYMCALC_HAVE_AVX2_KERNEL
  if (select_line_scan() == &line_scan_avx2) return "avx2";
#endif
  return "scalar";
}

}  // namespace symcalc::kernels
