#pragma once

#include <array>
#include <climits>
#include <optional>
#include <ostream>
#include <string>

#include "intcomb/param_poly.hpp"
#include "intcomb/rational.hpp"

namespace intcomb {

/// Which level of the scalar tower a value actually occupies.
enum class ScalarKind { Rational, UnivariateQ, BivariateQT };

/// Rational function in the formal parameters q and t over Q.
///
/// Normal form: numerator and denominator are coprime in Z[q,t] (integer
/// content included) and the denominator's leading coefficient is positive.
/// Two values are equal iff their normal forms are identical.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const Rational& r);             // NOLINT
  explicit RationalFunction(const ParamPoly& p) : num_(p), den_(1) {}
  RationalFunction(ParamPoly num, ParamPoly den);

  static RationalFunction q() { return RationalFunction(ParamPoly::q()); }
  static RationalFunction t() { return RationalFunction(ParamPoly::t()); }
  /// c * q^a * t^b with exponents of either sign.
  static RationalFunction monomial(const Rational& c, int q_exp, int t_exp);

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  [[nodiscard]] const ParamPoly& numerator() const { return num_; }
  [[nodiscard]] const ParamPoly& denominator() const { return den_; }
  [[nodiscard]] ScalarKind kind() const;
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] std::optional<Rational> as_rational() const;

  /// True when the denominator is a monomial, i.e. the value is a Laurent
  /// polynomial in q and t.
  [[nodiscard]] bool is_laurent() const { return den_.is_monomial(); }

  /// Degree in t at infinity: deg_t(numerator) - deg_t(denominator).
  /// INT_MIN for zero.
  [[nodiscard]] int t_degree() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] RationalFunction pow(int e) const;

  /// Substitutes q -> qv and t -> tv.
  [[nodiscard]] RationalFunction substitute(const RationalFunction& qv, const RationalFunction& tv) const;
  /// q -> 1/q, t -> 1/t.
  [[nodiscard]] RationalFunction invert_parameters() const;

  [[nodiscard]] std::string to_string(const std::array<std::string, 2>& names = {"q", "t"}) const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

 private:
  void normalize();
  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace intcomb
