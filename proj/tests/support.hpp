#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "linkhom/arm.hpp"
#include "linkhom/betti.hpp"
#include "linkhom/error.hpp"
#include "linkhom/rational.hpp"

namespace test {

inline linkhom::arm::Linkage arm(std::string_view csv) { return linkhom::arm::Linkage::parse_list(csv); }
inline linkhom::Rational q(std::string_view s) { return linkhom::Rational::parse(s); }

inline std::vector<std::int64_t> ranks(std::initializer_list<std::int64_t> r) { return r; }

// Error code thrown by f, or "" if it returned normally.
template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const linkhom::Error& e) {
    return e.code();
  }
  return "";
}

template <class F>
linkhom::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const linkhom::Error& e) {
    return e.kind();
  }
  return linkhom::ErrorKind::internal;
}

}  // namespace test
