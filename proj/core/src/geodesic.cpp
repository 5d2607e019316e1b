#include "intcomb/geodesic.hpp"

#include <stdexcept>

namespace intcomb::geodesic {

namespace {

Series constant(long c, int order) { return Series::constant(kVar, Rational(c), order); }
Series g_monomial(int order) { return Series::monomial(kVar, Rational(1), 1, order); }

}  // namespace

Series limit_gf(int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  // Numerator 1 - sqrt(1-12g) has valuation 1; expand one order further and shift.
  const Series one = constant(1, order + 1);
  const Series radicand = one - Series::monomial(kVar, Rational(12), 1, order + 1);
  const Series numerator = one - radicand.sqrt();
  if (numerator.valuation() < 1) throw std::logic_error("limit_gf: numerator does not vanish at g = 0");
  return numerator.shifted(-1).scaled(Rational(1, 6));
}

Series limit_gf_by_iteration(int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const Series one = constant(1, order);
  const Series three_g = Series::monomial(kVar, Rational(3), 1, order);
  Series r = one;
  // Each pass fixes one more coefficient.
  for (int k = 0; k <= order; ++k) r = one + three_g * r * r;
  return r;
}

Series soliton_x(int order, SolitonEquation eq) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const Series r = limit_gf(order);
  const Series one = constant(1, order);
  const Series g = g_monomial(order);
  // x = g (x^2 + 1) / (g (u - 4)) with u the right-hand side; g (u - 4) is a unit.
  const Series rr = eq == SolitonEquation::Linearised ? r : r * r;
  const Series d = one / rr - g.scaled(Rational(4));
  Series x(kVar, order);
  for (int k = 0; k <= order; ++k) x = g * (x * x + one) / d;
  if (!(x * d - g * (x * x + one)).truncated(order).is_zero()) throw std::logic_error("soliton solve failed");
  return x;
}

Series soliton_residual(const Series& x, const Series& r, SolitonEquation eq) {
  const int order = std::min(x.order(), r.order());
  const Series one = constant(1, order);
  const Series g = g_monomial(order);
  const Series rr = eq == SolitonEquation::Linearised ? r : r * r;
  return x + one / x + constant(4, order) - one / (g * rr);
}

Series tau(int k, const Series& x) { return constant(1, x.order()) - x.pow(static_cast<unsigned>(k)); }

Series r_n_closed(int n, const Series& r, const Series& x) {
  if (n < -1) throw std::invalid_argument("n must be >= -1");
  return r * tau(n + 1, x) * tau(n + 4, x) / (tau(n + 2, x) * tau(n + 3, x));
}

Series r_n_closed(int n, int order) { return r_n_closed(n, limit_gf(order), soliton_x(order)); }

Series recursion_residual(const std::vector<Series>& family, int n) {
  if (n < 0 || static_cast<std::size_t>(n + 2) >= family.size()) throw std::out_of_range("recursion_residual: n outside family");
  const Series& prev = family[static_cast<std::size_t>(n)];
  const Series& cur = family[static_cast<std::size_t>(n + 1)];
  const Series& next = family[static_cast<std::size_t>(n + 2)];
  const int order = cur.order();
  return cur - constant(1, order) - g_monomial(order) * cur * (next + cur + prev);
}

Series recursion_residual(int n, int order) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const Series r = limit_gf(order);
  const Series x = soliton_x(order);
  std::vector<Series> family = {r_n_closed(n - 1, r, x), r_n_closed(n, r, x), r_n_closed(n + 1, r, x)};
  // Shift so family[0] = R_{n-1}; recursion_residual(family, n) indexes from R_{-1}.
  std::vector<Series> padded(static_cast<std::size_t>(n), Series(kVar, order));
  padded.insert(padded.end(), family.begin(), family.end());
  return recursion_residual(padded, n);
}

Series conserved_phi(const Series& x, const Series& y) {
  const int order = std::min(x.order(), y.order());
  return x * y * (constant(1, order) - g_monomial(order) * (x + y)) - x - y;
}

ConservationReport conserved_phi_check(const std::vector<Series>& rn, const Series& r, int order) {
  ConservationReport report;
  report.n_max = static_cast<int>(rn.size()) - 1;
  report.order = order;
  report.common_value = conserved_phi(r, r).truncated(order);
  for (int n = 0; n + 1 < static_cast<int>(rn.size()); ++n) {
    const Series value = conserved_phi(rn[n], rn[n + 1]).truncated(order);
    if (auto diff = value.first_difference(report.common_value)) {
      report.failing_n = n;
      report.failing_order = *diff;
      return report;
    }
  }
  report.pass = true;
  return report;
}

ConservationReport conserved_phi_check(int n_max, int order) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const int work = std::max(order, 1);
  const Series r = limit_gf(work);
  const Series x = soliton_x(work);
  std::vector<Series> rn;
  for (int n = 0; n <= n_max; ++n) rn.push_back(r_n_closed(n, r, x));
  return conserved_phi_check(rn, r, order);
}

std::vector<Series> fixed_point_oracle(int n_max, int order) {
  if (order < 0 || n_max < order) throw std::invalid_argument("fixed_point_oracle requires n_max >= order >= 0");
  const Series r = limit_gf_by_iteration(order);
  // c[n+1][k] = [g^k] R_n for n = -1..n_max+1; R_{n_max+1} is taken equal to R.
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n_max + 3),
                                       std::vector<Rational>(static_cast<std::size_t>(order + 1)));
  for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(n_max + 2)][k] = r.coefficient(k);
  for (int k = 0; k <= order; ++k) {
    for (int n = 0; n <= n_max; ++n) {
      const auto& cur = c[static_cast<std::size_t>(n + 1)];
      const auto& prev = c[static_cast<std::size_t>(n)];
      const auto& next = c[static_cast<std::size_t>(n + 2)];
      Rational v(k == 0 ? 1 : 0);
      for (int a = 0; a + 1 <= k; ++a) {
        const int b = k - 1 - a;
        v += cur[a] * (next[b] + cur[b] + prev[b]);
      }
      // Below depth n the distance constraint is invisible.
      if (n >= k && !(v == r.coefficient(k))) throw std::logic_error("oracle failure");
      c[static_cast<std::size_t>(n + 1)][k] = v;
    }
  }
  std::vector<Series> out;
  for (int n = 0; n <= n_max; ++n)
    out.push_back(Series::from_coefficients(kVar, 0, c[static_cast<std::size_t>(n + 1)], order));
  return out;
}

GeodesicSeriesFamily build_family(int n_max, int order) {
  GeodesicSeriesFamily f;
  f.order = order;
  f.r = limit_gf(order);
  f.x = soliton_x(order);
  for (int n = -1; n <= n_max; ++n) f.rn.push_back(r_n_closed(n, f.r, f.x));
  return f;
}

}  // namespace intcomb::geodesic
