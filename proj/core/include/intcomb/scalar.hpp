#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "intcomb/ratfunc.hpp"
#include "intcomb/rational.hpp"

namespace intcomb {

/// Coefficient field interface shared by every level of the scalar tower.
template <typename S>
concept ExactScalar = std::regular<S> && requires(S a, const S& b) {
  S(1L);
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.to_string() } -> std::convertible_to<std::string>;
};

inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (!r.is_square()) return std::nullopt;
  return r.sqrt();
}

inline std::optional<RationalFunction> exact_sqrt(const RationalFunction& r) {
  auto c = r.as_rational();
  if (!c || !c->is_square()) return std::nullopt;
  return RationalFunction(c->sqrt());
}

template <ExactScalar S>
S power(const S& base, unsigned e) {
  S result(1L);
  S b = base;
  while (e != 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return result;
}

}  // namespace intcomb
