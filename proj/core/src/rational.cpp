#include "intcomb/rational.hpp"

#include <utility>

namespace intcomb {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (sgn(v.get_den()) == 0) throw std::invalid_argument("zero denominator in literal: " + std::string(text));
  v.canonicalize();
  return Rational(v);
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
  if (!is_square()) throw std::domain_error("not a rational square: " + to_string());
  mpz_class n = ::sqrt(value_.get_num());
  mpz_class d = ::sqrt(value_.get_den());
  return {n, d};
}

Rational Rational::pow(long e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return {n, d};
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative n");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace intcomb
