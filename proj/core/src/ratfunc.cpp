#include "intcomb/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace intcomb {

RationalFunction::RationalFunction(const Rational& r) : num_(r.numerator()), den_(r.denominator()) {}

RationalFunction::RationalFunction(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::monomial(const Rational& c, int q_exp, int t_exp) {
  ParamPoly num = ParamPoly::monomial(c.numerator(), std::max(q_exp, 0), std::max(t_exp, 0));
  ParamPoly den = ParamPoly::monomial(c.denominator(), std::max(-q_exp, 0), std::max(-t_exp, 0));
  return {std::move(num), std::move(den)};
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_one()) {
    ParamPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  if (sgn(den_.leading().c) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ScalarKind RationalFunction::kind() const {
  if (num_.has_t() || den_.has_t()) return ScalarKind::BivariateQT;
  if (num_.has_q() || den_.has_q()) return ScalarKind::UnivariateQ;
  return ScalarKind::Rational;
}

std::optional<Rational> RationalFunction::as_rational() const {
  if (!is_constant()) return std::nullopt;
  mpz_class n = num_.is_zero() ? mpz_class(0) : num_.terms()[0].c;
  return Rational(n, den_.terms()[0].c);
}

int RationalFunction::t_degree() const {
  if (num_.is_zero()) return INT_MIN;
  return num_.degree_t() - den_.degree_t();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  // Cross-cancel first so the products stay small.
  ParamPoly g1 = den_.is_one() || o.num_.is_one() ? ParamPoly(1) : gcd(o.num_, den_);
  ParamPoly g2 = o.den_.is_one() || num_.is_one() ? ParamPoly(1) : gcd(num_, o.den_);
  ParamPoly n1 = g2.is_one() ? num_ : num_.divide_exact(g2);
  ParamPoly d2 = g2.is_one() ? o.den_ : o.den_.divide_exact(g2);
  ParamPoly n2 = g1.is_one() ? o.num_ : o.num_.divide_exact(g1);
  ParamPoly d1 = g1.is_one() ? den_ : den_.divide_exact(g1);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (sgn(den_.leading().c) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  RationalFunction inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (sgn(inv.den_.leading().c) < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(1) / pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
}

namespace {

RationalFunction eval_poly(const ParamPoly& p, const RationalFunction& qv, const RationalFunction& tv) {
  RationalFunction acc;
  for (const auto& term : p.terms())
    acc += RationalFunction(Rational(term.c)) * qv.pow(term.q) * tv.pow(term.t);
  return acc;
}

}  // namespace

RationalFunction RationalFunction::substitute(const RationalFunction& qv, const RationalFunction& tv) const {
  return eval_poly(num_, qv, tv) / eval_poly(den_, qv, tv);
}

RationalFunction RationalFunction::invert_parameters() const {
  return substitute(RationalFunction(1) / q(), RationalFunction(1) / t());
}

std::string RationalFunction::to_string(const std::array<std::string, 2>& names) const {
  if (den_.is_one()) return num_.to_string(names);
  auto wrap = [&](const ParamPoly& p) {
    std::string s = p.to_string(names);
    return p.size() > 1 || (p.size() == 1 && !p.is_constant() && p.terms()[0].c != 1) ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace intcomb
