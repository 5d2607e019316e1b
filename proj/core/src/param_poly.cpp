#include "intcomb/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace intcomb {

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.push_back({0, 0, mpz_class(c)});
}

ParamPoly::ParamPoly(const mpz_class& c) {
  if (sgn(c) != 0) terms_.push_back({0, 0, c});
}

ParamPoly ParamPoly::monomial(const mpz_class& c, int q_exp, int t_exp) {
  if (q_exp < 0 || t_exp < 0) throw std::domain_error("ParamPoly: negative exponent");
  ParamPoly p;
  if (sgn(c) != 0) p.terms_.push_back({q_exp, t_exp, c});
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0);
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0 && terms_[0].c == 1;
}

int ParamPoly::degree_q() const {
  int d = terms_.empty() ? INT_MIN : 0;
  for (const auto& t : terms_) d = std::max(d, t.q);
  return d;
}

int ParamPoly::degree_t() const { return terms_.empty() ? INT_MIN : terms_.back().t; }

int ParamPoly::min_q() const {
  int d = INT_MAX;
  for (const auto& t : terms_) d = std::min(d, t.q);
  return d;
}

int ParamPoly::min_t() const { return terms_.empty() ? INT_MAX : terms_.front().t; }

mpz_class ParamPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), key_less);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().q == t.q && out.back().t == t.t) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  terms_ = std::move(out);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

template <typename Combine>
std::vector<ParamPoly::Term> merge_terms(const std::vector<ParamPoly::Term>& a,
                                         const std::vector<ParamPoly::Term>& b, Combine combine) {
  std::vector<ParamPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto less = [](const ParamPoly::Term& x, const ParamPoly::Term& y) {
    return x.t != y.t ? x.t < y.t : x.q < y.q;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || less(b[j], a[i])) {
      out.push_back({b[j].q, b[j].t, combine(mpz_class(0), b[j].c)});
      ++j;
    } else {
      mpz_class c = combine(a[i].c, b[j].c);
      if (sgn(c) != 0) out.push_back({a[i].q, a[i].t, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x + y); });
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); });
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_constant()) return a.scaled(b.terms_[0].c);
  if (a.is_constant()) return b.scaled(a.terms_[0].c);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) r.terms_.push_back({x.q + y.q, x.t + y.t, x.c * y.c});
  r.normalize();
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.q != y.q || x.t != y.t || x.c != y.c) return false;
  }
  return true;
}

ParamPoly ParamPoly::scaled(const mpz_class& c) const {
  ParamPoly r;
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

ParamPoly ParamPoly::shifted(int dq, int dt) const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) {
    t.q += dq;
    t.t += dt;
    if (t.q < 0 || t.t < 0) throw std::domain_error("ParamPoly: shift produces negative exponent");
  }
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::divide_exact(const mpz_class& c) const {
  if (sgn(c) == 0) throw std::domain_error("ParamPoly: division by zero");
  ParamPoly r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t())) throw std::domain_error("ParamPoly: inexact division");
    mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& d) const {
  if (d.is_zero()) throw std::domain_error("ParamPoly: division by zero");
  if (d.is_constant()) return divide_exact(d.terms_[0].c);
  if (d.is_monomial()) {
    const auto& m = d.terms_[0];
    ParamPoly r = divide_exact(m.c);
    for (auto& t : r.terms_) {
      t.q -= m.q;
      t.t -= m.t;
      if (t.q < 0 || t.t < 0) throw std::domain_error("ParamPoly: inexact division");
    }
    return r;
  }
  ParamPoly quotient;
  ParamPoly rem = *this;
  const Term& ld = d.leading();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    if (lr.q < ld.q || lr.t < ld.t || !mpz_divisible_p(lr.c.get_mpz_t(), ld.c.get_mpz_t()))
      throw std::domain_error("ParamPoly: inexact division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), lr.c.get_mpz_t(), ld.c.get_mpz_t());
    ParamPoly m = monomial(c, lr.q - ld.q, lr.t - ld.t);
    quotient += m;
    rem -= m * d;
  }
  return quotient;
}

std::string ParamPoly::to_string(const std::array<std::string, 2>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->c;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool has_vars = it->q != 0 || it->t != 0;
    bool need_star = false;
    if (!has_vars || c != 1) {
      os << c;
      need_star = true;
    }
    auto emit = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (need_star) os << '*';
      os << name;
      if (e != 1) os << '^' << e;
      need_star = true;
    };
    emit(names[0], it->q);
    emit(names[1], it->t);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd over Z[q][t] by primitive polynomial remainder sequences.

namespace {

using UPoly = std::vector<mpz_class>;  // dense in q, index = exponent

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class ucontent(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly uscale(const UPoly& a, const mpz_class& c) {
  UPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

UPoly udiv_int(const UPoly& a, const mpz_class& c) {
  UPoly r = a;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

// Exact division in Z[q]; the caller guarantees divisibility.
UPoly udiv_exact(UPoly a, const UPoly& b) {
  trim(a);
  if (b.size() == 1) return udiv_int(a, b[0]);
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw std::domain_error("ParamPoly gcd: inexact univariate division");
  }
  UPoly q(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = a[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("ParamPoly gcd: inexact univariate division");
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    q[k] = c;
  }
  trim(a);
  if (!a.empty()) throw std::domain_error("ParamPoly gcd: inexact univariate division");
  trim(q);
  return q;
}

UPoly uprimitive(const UPoly& p) {
  mpz_class c = ucontent(p);
  if (c == 0 || c == 1) return p;
  return udiv_int(p, c);
}

// Pseudo-remainder of a by b in Z[q].
UPoly uprem(UPoly a, const UPoly& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    mpz_class top = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    trim(a);
    a = uprimitive(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return b.empty() ? UPoly{} : b;
  if (b.empty()) return a;
  mpz_class cg;
  mpz_class ca = ucontent(a), cb = ucontent(b);
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = udiv_int(a, ca);
  b = udiv_int(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = uprem(a, b);
    a = std::move(b);
    b = uprimitive(r);
  }
  a = uprimitive(a);
  if (sgn(a.back()) < 0) a = uscale(a, -1);
  return uscale(a, cg);
}

using Rec = std::vector<UPoly>;  // index = t exponent

Rec to_rec(const ParamPoly& p) {
  Rec r;
  for (const auto& term : p.terms()) {
    if (static_cast<int>(r.size()) <= term.t) r.resize(term.t + 1);
    UPoly& u = r[term.t];
    if (static_cast<int>(u.size()) <= term.q) u.resize(term.q + 1, 0);
    u[term.q] = term.c;
  }
  return r;
}

ParamPoly from_rec(const Rec& r) {
  ParamPoly p;
  for (std::size_t t = 0; t < r.size(); ++t)
    for (std::size_t q = 0; q < r[t].size(); ++q)
      if (sgn(r[t][q]) != 0) p += ParamPoly::monomial(r[t][q], static_cast<int>(q), static_cast<int>(t));
  return p;
}

void rtrim(Rec& r) {
  for (auto& u : r) trim(u);
  while (!r.empty() && r.back().empty()) r.pop_back();
}

UPoly rcontent(const Rec& r) {
  UPoly g;
  for (const auto& u : r) {
    if (u.empty()) continue;
    g = ugcd(g, u);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

Rec rdiv_content(const Rec& r, const UPoly& c) {
  Rec out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].empty() ? UPoly{} : udiv_exact(r[i], c);
  return out;
}

Rec rprimitive(const Rec& r) {
  UPoly c = rcontent(r);
  if (c.empty() || (c.size() == 1 && c[0] == 1)) return r;
  return rdiv_content(r, c);
}

Rec rprem(Rec a, const Rec& b) {
  const UPoly& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    UPoly top = a.back();
    for (auto& u : a) u = umul(u, lb);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = usub(a[shift + j], umul(top, b[j]));
    rtrim(a);
    a = rprimitive(a);
  }
  return a;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  auto normalize_sign = [](ParamPoly p) { return (!p.is_zero() && sgn(p.leading().c) < 0) ? -p : p; };
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);

  const int mq = std::min(a.min_q(), b.min_q());
  const int mt = std::min(a.min_t(), b.min_t());
  if (a.is_monomial() || b.is_monomial()) {
    mpz_class g;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return ParamPoly::monomial(g, mq, mt);
  }

  Rec ra = to_rec(a.shifted(-a.min_q(), -a.min_t()));
  Rec rb = to_rec(b.shifted(-b.min_q(), -b.min_t()));
  rtrim(ra);
  rtrim(rb);
  UPoly cont = ugcd(rcontent(ra), rcontent(rb));
  ra = rprimitive(ra);
  rb = rprimitive(rb);
  if (ra.size() < rb.size()) std::swap(ra, rb);
  while (!rb.empty()) {
    Rec r = rprem(ra, rb);
    ra = std::move(rb);
    rb = rprimitive(r);
  }
  ra = rprimitive(ra);
  Rec scaled(ra.size());
  for (std::size_t i = 0; i < ra.size(); ++i) scaled[i] = umul(ra[i], cont);
  ParamPoly g = from_rec(scaled).shifted(mq, mt);
  return normalize_sign(g);
}

}  // namespace intcomb
