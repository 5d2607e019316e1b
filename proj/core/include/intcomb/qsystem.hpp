#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intcomb/mpoly.hpp"
#include "intcomb/rational.hpp"

/// Classical type-A Q-system on Kirillov-Reshetikhin characters:
/// Q_{a,n+1} Q_{a,n-1} = Q_{a,n}^2 - Q_{a+1,n} Q_{a-1,n}.
namespace intcomb::qsystem {

using Poly = LaurentMPoly<Rational>;

/// s_{(n^alpha)}(x_1..x_N); 1 at alpha = 0 or n = 0, (x_1...x_N)^n at alpha = N.
Poly rect_char(int alpha, int n, int nvars);

struct ClassicalReport {
  bool pass = false;
  int nvars = 0;
  int n_max = 0;
  int identities_checked = 0;
  std::optional<int> failing_alpha;
  std::optional<int> failing_n;
  std::string first_bad_monomial;
};

/// Checks the recursion for alpha in [1, N-1], 1 <= n < n_max, with gl_N
/// boundary Q_{N,n} = (x_1...x_N)^n. Requires 2 <= N <= 4, 1 <= n_max <= 4.
ClassicalReport classical_qsystem_check(int nvars, int n_max);

struct ConservedReport {
  bool pass = false;
  std::vector<Rational> trajectory;  // Q_0 .. Q_{n_max}
  std::vector<Rational> values;      // (Q_{n+1} + Q_{n-1}) / Q_n for 0 < n < n_max
};

/// A_1 system Q_{n+1} Q_{n-1} = Q_n^2 - 1 from (Q_0, Q_1). Throws
/// std::domain_error("degenerate orbit") on a zero divisor.
ConservedReport a1_conserved_quantity(const Rational& q0, const Rational& q1, int n_max);

}  // namespace intcomb::qsystem
