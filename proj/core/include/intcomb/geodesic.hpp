#pragma once

#include <optional>
#include <vector>

#include "intcomb/rational.hpp"
#include "intcomb/series.hpp"

/// Two-point function of rooted tetravalent planar maps with two marked
/// univalent vertices, as truncated power series in the weight g.
///
///   R_n = 1 + g R_n (R_{n+1} + R_n + R_{n-1}),   R_{-1} = 0,  R_n -> R,
///
/// solved by R_n = R (1-x^{n+1})(1-x^{n+4}) / ((1-x^{n+2})(1-x^{n+3})) with
/// x + 1/x + 4 = 1/(g R), x = g + O(g^2). Since R = 1 + 3gR^2 this is the same
/// as x + 1/x + 1 = 1/(g R^2); the variant with +4 against 1/(g R^2) does not
/// solve the recursion and is kept only as a diagnostic.
namespace intcomb::geodesic {

using Series = TruncatedSeries<Rational>;

inline constexpr const char* kVar = "g";

/// R(g) = (1 - sqrt(1 - 12g)) / (6g) through g^order.
Series limit_gf(int order);

/// Same series as the unique power-series fixed point of R = 1 + 3 g R^2.
Series limit_gf_by_iteration(int order);

enum class SolitonEquation {
  /// x + 1/x + 4 = 1/(g R)
  Linearised,
  /// x + 1/x + 4 = 1/(g R^2)
  SquaredR,
};

/// x(g) through g^order.
Series soliton_x(int order, SolitonEquation eq = SolitonEquation::Linearised);

/// x + 1/x + 4 - 1/(g R) for given x and R (or 1/(g R^2) for the squared-R
/// form); zero when x solves the defining equation. Known through order(x) - 2.
Series soliton_residual(const Series& x, const Series& r, SolitonEquation eq = SolitonEquation::Linearised);

/// tau_k = 1 - x^k.
Series tau(int k, const Series& x);

/// Closed-form R_n; R_{-1} is identically zero.
Series r_n_closed(int n, int order);
Series r_n_closed(int n, const Series& r, const Series& x);

/// R_n - 1 - g R_n (R_{n+1} + R_n + R_{n-1}) evaluated on the closed form.
Series recursion_residual(int n, int order);
/// Same residual for an arbitrary sequence family[k] = R_{k-1} (so family[0] = R_{-1}).
Series recursion_residual(const std::vector<Series>& family, int n);

/// phi(x, y) = x y (1 - g(x + y)) - x - y.
Series conserved_phi(const Series& x, const Series& y);

struct ConservationReport {
  bool pass = false;
  int n_max = 0;
  int order = 0;
  std::optional<int> failing_n;
  std::optional<int> failing_order;
  Series common_value{kVar, 0};
};

/// Checks phi(R_n, R_{n+1}) == phi(R, R) for 0 <= n < n_max.
ConservationReport conserved_phi_check(int n_max, int order);
/// Same check on an explicit family rn[n] = R_n for n = 0..n_max.
ConservationReport conserved_phi_check(const std::vector<Series>& rn, const Series& r, int order);

/// Solves the recursion order by order from the boundary data alone,
/// returning R_0..R_{n_max}. Requires n_max >= order.
std::vector<Series> fixed_point_oracle(int n_max, int order);

struct GeodesicSeriesFamily {
  int order = 0;
  Series r{kVar, 0};
  Series x{kVar, 0};
  /// rn[k] = R_{k-1} for k = 0..n_max+1.
  std::vector<Series> rn;

  [[nodiscard]] const Series& at(int n) const { return rn.at(static_cast<std::size_t>(n + 1)); }
};

GeodesicSeriesFamily build_family(int n_max, int order);

}  // namespace intcomb::geodesic
