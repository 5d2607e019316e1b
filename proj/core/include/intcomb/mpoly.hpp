#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intcomb/scalar.hpp"

namespace intcomb {

inline constexpr int kMaxVars = 8;

/// Exponent vector; entries beyond the ring's variable count stay zero.
using Exponent = std::array<std::int16_t, kMaxVars>;

inline int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 > x2 > ... .
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// Raised when an exact division leaves a nonzero remainder.
class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
};

/// Multivariate Laurent polynomial in x_1..x_N with exact coefficients.
/// Terms are stored sparsely in graded-lex order and zero coefficients are
/// never kept, so `==` is value equality.
template <ExactScalar S>
class LaurentMPoly {
 public:
  using TermMap = std::map<Exponent, S, GrlexLess>;

  explicit LaurentMPoly(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported variable count");
  }

  static LaurentMPoly constant(int nvars, const S& c) {
    LaurentMPoly p(nvars);
    p.add_term(Exponent{}, c);
    return p;
  }
  static LaurentMPoly variable(int nvars, int i) {
    Exponent e{};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(nvars, e, S(1L));
  }
  static LaurentMPoly monomial(int nvars, const Exponent& e, const S& c) {
    LaurentMPoly p(nvars);
    p.add_term(e, c);
    return p;
  }
  static LaurentMPoly monomial(int nvars, const std::vector<int>& e, const S& c) {
    return monomial(nvars, make_exponent(e), c);
  }

  static Exponent make_exponent(const std::vector<int>& e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many exponents");
    Exponent x{};
    for (std::size_t i = 0; i < e.size(); ++i) x[i] = static_cast<std::int16_t>(e[i]);
    return x;
  }

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  [[nodiscard]] S coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0L) : it->second;
  }

  void add_term(const Exponent& e, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] std::pair<Exponent, S> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  /// Highest total degree; INT_MIN for zero.
  [[nodiscard]] int degree() const { return terms_.empty() ? INT_MIN : total_degree(terms_.rbegin()->first); }

  [[nodiscard]] Exponent min_exponents() const {
    Exponent m{};
    if (terms_.empty()) return m;
    for (int i = 0; i < nvars_; ++i) m[i] = INT16_MAX;
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  }

  [[nodiscard]] bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i)
        if (e[i] < 0) return false;
    return true;
  }

  /// Exponent permutation: variable i of the result is variable perm[i] of *this.
  [[nodiscard]] LaurentMPoly permuted(const std::vector<int>& perm) const {
    LaurentMPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f{};
      for (int i = 0; i < nvars_; ++i) f[i] = e[perm[i]];
      r.terms_.emplace(f, c);
    }
    return r;
  }

  [[nodiscard]] bool is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
      std::vector<int> perm(nvars_);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[i], perm[i + 1]);
      if (!(permuted(perm) == *this)) return false;
    }
    return true;
  }

  /// Rewrites every coefficient as f(exponent, coefficient).
  [[nodiscard]] LaurentMPoly transform_coefficients(const std::function<S(const Exponent&, const S&)>& f) const {
    LaurentMPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      S v = f(e, c);
      if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
  }

  [[nodiscard]] LaurentMPoly shifted(const Exponent& by) const {
    LaurentMPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      for (int i = 0; i < nvars_; ++i) f[i] = static_cast<std::int16_t>(f[i] + by[i]);
      r.terms_.emplace(f, c);
    }
    return r;
  }

  [[nodiscard]] LaurentMPoly scaled(const S& c) const {
    if (c.is_zero()) return LaurentMPoly(nvars_);
    LaurentMPoly r(nvars_);
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
  }

  /// Keeps only terms of total degree <= d.
  [[nodiscard]] LaurentMPoly truncated_degree(int d) const {
    LaurentMPoly r(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) <= d) r.terms_.emplace(e, c);
    return r;
  }

  LaurentMPoly operator-() const { return scaled(S(-1L)); }

  LaurentMPoly& operator+=(const LaurentMPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentMPoly& operator-=(const LaurentMPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentMPoly operator+(LaurentMPoly a, const LaurentMPoly& b) { return a += b; }
  friend LaurentMPoly operator-(LaurentMPoly a, const LaurentMPoly& b) { return a -= b; }

  friend LaurentMPoly operator*(const LaurentMPoly& a, const LaurentMPoly& b) {
    a.check(b);
    LaurentMPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{};
        for (int i = 0; i < a.nvars_; ++i) e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  LaurentMPoly& operator*=(const LaurentMPoly& o) { return *this = *this * o; }

  [[nodiscard]] LaurentMPoly pow(unsigned k) const {
    LaurentMPoly r = constant(nvars_, S(1L));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const LaurentMPoly& a, const LaurentMPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Exact quotient in the Laurent ring; throws InexactDivision otherwise.
  [[nodiscard]] LaurentMPoly divide_exact(const LaurentMPoly& den) const {
    check(den);
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return LaurentMPoly(nvars_);
    // Clear monomial factors so both sides are polynomials; den then has no
    // x_i factor, hence the Laurent quotient is itself a polynomial.
    const Exponent nm = min_exponents(), dm = den.min_exponents();
    Exponent neg_nm{}, neg_dm{}, back{};
    for (int i = 0; i < nvars_; ++i) {
      neg_nm[i] = static_cast<std::int16_t>(-nm[i]);
      neg_dm[i] = static_cast<std::int16_t>(-dm[i]);
      back[i] = static_cast<std::int16_t>(nm[i] - dm[i]);
    }
    LaurentMPoly rem = shifted(neg_nm);
    const LaurentMPoly d = den.shifted(neg_dm);
    const auto [ld_exp, ld_coef] = d.leading_term();
    const bool unit_lead = ld_coef == S(1L);
    LaurentMPoly quotient(nvars_);
    while (!rem.is_zero()) {
      const auto& [lr_exp, lr_coef] = *rem.terms_.rbegin();
      Exponent m{};
      for (int i = 0; i < nvars_; ++i) {
        m[i] = static_cast<std::int16_t>(lr_exp[i] - ld_exp[i]);
        if (m[i] < 0) throw InexactDivision();
      }
      const S c = unit_lead ? lr_coef : lr_coef / ld_coef;
      quotient.terms_.emplace(m, c);
      for (const auto& [e, dc] : d.terms_) {
        Exponent f{};
        for (int i = 0; i < nvars_; ++i) f[i] = static_cast<std::int16_t>(e[i] + m[i]);
        rem.add_term(f, -(dc * c));
      }
    }
    return quotient.shifted(back);
  }

  /// Canonical text form: terms in descending graded-lex order, every
  /// exponent written out, e.g. "(3)*x^[2,0,1] + (q - 1)*x^[0,0,0]".
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << '(' << it->second.to_string() << ")*x^[";
      for (int i = 0; i < nvars_; ++i) os << (i ? "," : "") << it->first[i];
      os << ']';
    }
    return os.str();
  }

 private:
  void check(const LaurentMPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials over different variable counts");
  }

  int nvars_ = 0;
  TermMap terms_;
};

/// Maps every coefficient into another scalar type.
template <ExactScalar T, ExactScalar S, typename F>
LaurentMPoly<T> map_coefficients(const LaurentMPoly<S>& p, F&& f) {
  LaurentMPoly<T> r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
  return r;
}

/// Vandermonde product prod_{i<j} (x_i - x_j).
template <ExactScalar S>
LaurentMPoly<S> vandermonde(int n) {
  LaurentMPoly<S> v = LaurentMPoly<S>::constant(n, S(1L));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v *= LaurentMPoly<S>::variable(n, i) - LaurentMPoly<S>::variable(n, j);
  return v;
}

}  // namespace intcomb
