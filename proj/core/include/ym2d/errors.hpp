#pragma once

#include <stdexcept>
#include <string>

namespace ym2d {

/// Malformed user input: bad files, violated preconditions, unknown ids.
/// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A correctness alarm: an identity the mathematics guarantees has failed
/// (odd sine multiplicity, non-scalar crossing endomorphism, inexact
/// division in the Weyl formula).  The CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require_input(bool cond, const std::string& what) {
  if (!cond) throw input_error(what);
}

inline void require_internal(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace ym2d
