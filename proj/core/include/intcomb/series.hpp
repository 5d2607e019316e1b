#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intcomb/scalar.hpp"

namespace intcomb {

/// Formal Laurent series in one named variable, known exactly through a
/// fixed absolute order: every coefficient of exponent <= order() is exact,
/// nothing above it is stored.
///
/// Results never carry more precision than their inputs: the order of a
/// binary operation is at most the smaller of the two input orders, and is
/// lowered further when a negative valuation eats into it.
template <ExactScalar S>
class TruncatedSeries {
 public:
  TruncatedSeries(std::string var, int order) : var_(std::move(var)), low_(0), order_(order) {}

  static TruncatedSeries from_coefficients(std::string var, int low, std::vector<S> coeffs, int order) {
    TruncatedSeries s(std::move(var), order);
    s.low_ = low;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
  }
  static TruncatedSeries constant(std::string var, const S& c, int order) {
    return from_coefficients(std::move(var), 0, {c}, order);
  }
  static TruncatedSeries monomial(std::string var, const S& c, int exponent, int order) {
    return from_coefficients(std::move(var), exponent, {c}, order);
  }

  [[nodiscard]] const std::string& variable() const { return var_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  /// Lowest exponent with a nonzero coefficient; order()+1 for the zero series.
  [[nodiscard]] int valuation() const { return coeffs_.empty() ? order_ + 1 : low_; }

  [[nodiscard]] S coefficient(int e) const {
    if (e > order_) throw std::out_of_range("coefficient beyond truncation order");
    if (coeffs_.empty() || e < low_ || e >= low_ + static_cast<int>(coeffs_.size())) return S(0L);
    return coeffs_[e - low_];
  }

  [[nodiscard]] TruncatedSeries truncated(int order) const {
    TruncatedSeries r = *this;
    r.order_ = std::min(order, order_);
    r.normalize();
    return r;
  }

  [[nodiscard]] TruncatedSeries scaled(const S& c) const {
    TruncatedSeries r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.normalize();
    return r;
  }

  /// Multiplies by var^k.
  [[nodiscard]] TruncatedSeries shifted(int k) const {
    TruncatedSeries r = *this;
    r.low_ += k;
    r.order_ += k;
    return r;
  }

  TruncatedSeries operator-() const { return scaled(S(-1L)); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, S(1L));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return combine(a, b, S(-1L));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same(a, b);
    const int va = a.valuation(), vb = b.valuation();
    const int order = std::min({a.order_, b.order_, a.order_ + vb, b.order_ + va});
    TruncatedSeries r(a.var_, order);
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = va + vb;
    if (order < r.low_) return r.normalized();
    r.coeffs_.assign(order - r.low_ + 1, S(0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const int ea = a.low_ + static_cast<int>(i);
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const int e = ea + b.low_ + static_cast<int>(j);
        if (e > order) break;
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[e - r.low_] = r.coeffs_[e - r.low_] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r.normalized();
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("non-invertible series");
    const int vb = b.valuation();
    // 1/b = var^{-vb} * 1/u with u a unit known through relative order b.order - vb.
    const int rel = b.order_ - vb;
    std::vector<S> inv(static_cast<std::size_t>(std::max(rel, -1) + 1), S(0L));
    const S u0 = b.coeffs_[0];
    if (rel >= 0) {
      const S inv0 = S(1L) / u0;
      inv[0] = inv0;
      for (int k = 1; k <= rel; ++k) {
        S acc(0L);
        for (int i = 1; i <= k && i < static_cast<int>(b.coeffs_.size()); ++i) {
          if (b.coeffs_[i].is_zero()) continue;
          acc = acc + b.coeffs_[i] * inv[k - i];
        }
        inv[k] = -(acc * inv0);
      }
    }
    TruncatedSeries binv = from_coefficients(a.var_, -vb, std::move(inv), rel - vb);
    TruncatedSeries r = a * binv;
    return r.truncated(std::min(a.order_, b.order_));
  }

  [[nodiscard]] TruncatedSeries pow(unsigned e) const {
    TruncatedSeries r = constant(var_, S(1L), order_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Series square root with s(0) = +sqrt(a(0)); requires valuation 0.
  [[nodiscard]] TruncatedSeries sqrt() const {
    if (is_zero() || low_ != 0) throw std::domain_error("no series square root");
    auto s0 = exact_sqrt(coeffs_[0]);
    if (!s0) throw std::domain_error("no series square root");
    std::vector<S> s(static_cast<std::size_t>(order_ + 1), S(0L));
    s[0] = *s0;
    const S two_s0_inv = S(1L) / (S(2L) * s[0]);
    for (int k = 1; k <= order_; ++k) {
      S acc = coefficient(k);
      for (int i = 1; i < k; ++i) acc = acc - s[i] * s[k - i];
      s[k] = acc * two_s0_inv;
    }
    return from_coefficients(var_, 0, std::move(s), order_);
  }

  /// Smallest exponent <= min order at which the two series differ.
  [[nodiscard]] std::optional<int> first_difference(const TruncatedSeries& o) const {
    const int top = std::min(order_, o.order_);
    const int bottom = std::min(valuation(), o.valuation());
    for (int e = bottom; e <= top; ++e)
      if (!(coefficient(e) == o.coefficient(e))) return e;
    return std::nullopt;
  }

  [[nodiscard]] bool equal_through(const TruncatedSeries& o, int order) const {
    auto d = truncated(order).first_difference(o.truncated(order));
    return !d.has_value();
  }

  /// Canonical text: ascending exponents, explicit powers, then O(var^{order+1}).
  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << '(' << coeffs_[i].to_string() << ")*" << var_ << '^' << (low_ + static_cast<int>(i));
    }
    if (!first) os << " + ";
    os << "O(" << var_ << '^' << (order_ + 1) << ')';
    return os.str();
  }

 private:
  static void check_same(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.var_ != b.var_) throw std::invalid_argument("series in different variables: " + a.var_ + ", " + b.var_);
  }

  static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, const S& sign) {
    check_same(a, b);
    const int order = std::min(a.order_, b.order_);
    TruncatedSeries r(a.var_, order);
    if (a.is_zero() && b.is_zero()) return r;
    const int low = std::min(a.valuation(), b.valuation());
    if (order < low) return r;
    r.low_ = low;
    r.coeffs_.reserve(order - low + 1);
    for (int e = low; e <= order; ++e) r.coeffs_.push_back(a.coefficient(e) + sign * b.coefficient(e));
    return r.normalized();
  }

  TruncatedSeries normalized() {
    normalize();
    return *this;
  }

  void normalize() {
    const int keep = std::max(order_ - low_ + 1, 0);
    if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(keep);
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::string var_;
  int low_ = 0;
  int order_ = 0;
  std::vector<S> coeffs_;
};

template <ExactScalar S>
TruncatedSeries<S> operator*(const S& c, const TruncatedSeries<S>& s) {
  return s.scaled(c);
}

}  // namespace intcomb
