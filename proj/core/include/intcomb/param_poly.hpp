#pragma once

#include <array>
#include <climits>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace intcomb {

/// Polynomial over Z in the two formal parameters (q, t), with nonnegative
/// exponents. Terms are kept sorted by (t-exponent, q-exponent) ascending and
/// never hold a zero coefficient, so structural equality is value equality.
class ParamPoly {
 public:
  struct Term {
    int q = 0;
    int t = 0;
    mpz_class c;
  };

  ParamPoly() = default;
  ParamPoly(long c);  // NOLINT: integers embed as constants
  explicit ParamPoly(const mpz_class& c);
  static ParamPoly monomial(const mpz_class& c, int q_exp, int t_exp);
  static ParamPoly q() { return monomial(1, 1, 0); }
  static ParamPoly t() { return monomial(1, 0, 1); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Leading term in (t, q) lexicographic order.
  [[nodiscard]] const Term& leading() const { return terms_.back(); }
  [[nodiscard]] int degree_q() const;
  [[nodiscard]] int degree_t() const;
  [[nodiscard]] int min_q() const;
  [[nodiscard]] int min_t() const;
  [[nodiscard]] bool has_t() const { return degree_t() > 0; }
  [[nodiscard]] bool has_q() const { return degree_q() > 0; }

  /// gcd of the integer coefficients, always >= 0.
  [[nodiscard]] mpz_class content() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  [[nodiscard]] ParamPoly scaled(const mpz_class& c) const;
  [[nodiscard]] ParamPoly shifted(int dq, int dt) const;
  [[nodiscard]] ParamPoly pow(unsigned e) const;

  /// Exact quotient; throws std::domain_error if `d` does not divide `*this`.
  [[nodiscard]] ParamPoly divide_exact(const ParamPoly& d) const;
  [[nodiscard]] ParamPoly divide_exact(const mpz_class& c) const;

  [[nodiscard]] std::string to_string(const std::array<std::string, 2>& names = {"q", "t"}) const;

  friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

 private:
  static bool key_less(const Term& a, const Term& b) { return a.t != b.t ? a.t < b.t : a.q < b.q; }
  void normalize();
  std::vector<Term> terms_;
};

/// Greatest common divisor over Z[q,t], normalized so the leading coefficient
/// is positive. gcd(0, 0) = 0.
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace intcomb
