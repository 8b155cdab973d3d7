#pragma once

#include <gmpxx.h>

#include <string>

#include "ym2d/errors.hpp"

namespace ym2d {

/// Rationals serialize as "p/q" everywhere (also "p" when q == 1 parses back).
inline std::string to_fraction_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class parse_fraction(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw input_error("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline double to_double(const mpq_class& q) { return q.get_d(); }

}  // namespace ym2d
