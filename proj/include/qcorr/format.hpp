#pragma once

#include <cstdio>
#include <string>

namespace qcorr {

// Doubles formatted with 17 significant digits (round-trip exact); used for
// JSON and CSV output so identical runs produce byte-identical files.
inline std::string sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// 9 significant digits, used for OBJ vertex records.
inline std::string sig9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace qcorr
