#pragma once

#include <doctest.h>

#include <optional>

#include "monolift/errors.hpp"
#include "monolift/lifted.hpp"
#include "monolift/rational.hpp"

namespace testing {

/// The code of the monolift::Error thrown by f, or nullopt if it returns.
template <typename F>
std::optional<monolift::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const monolift::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline monolift::Rational q(long num, long den) {
  monolift::Rational r(num, den);
  r.canonicalize();
  return r;
}

inline monolift::LiftedPoint pt(const char* text) { return monolift::LiftedPoint::parse(text); }

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<monolift::Rational> {
  static String convert(const monolift::Rational& r) { return monolift::to_pq(r).c_str(); }
};
template <>
struct StringMaker<monolift::ErrorCode> {
  static String convert(monolift::ErrorCode c) { return std::string(monolift::to_string(c)).c_str(); }
};
}  // namespace doctest
