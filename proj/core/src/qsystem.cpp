#include "intcomb/qsystem.hpp"

#include <stdexcept>

#include "intcomb/symmetric.hpp"

namespace intcomb::qsystem {

Poly rect_char(int alpha, int n, int nvars) {
  if (alpha < 0 || alpha > nvars) throw std::invalid_argument("alpha out of range");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return schur_polynomial<Rational>(rectangle(n, alpha), nvars);
}

ClassicalReport classical_qsystem_check(int nvars, int n_max) {
  if (nvars < 2 || nvars > 4) throw std::invalid_argument("N must be in [2, 4]");
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("n_max must be in [1, 4]");
  ClassicalReport rep;
  rep.nvars = nvars;
  rep.n_max = n_max;
  std::vector<std::vector<Poly>> q(nvars + 1);
  for (int a = 0; a <= nvars; ++a)
    for (int n = 0; n <= n_max; ++n) q[a].push_back(rect_char(a, n, nvars));
  for (int a = 1; a < nvars; ++a) {
    for (int n = 1; n < n_max; ++n) {
      ++rep.identities_checked;
      const Poly diff = q[a][n + 1] * q[a][n - 1] - (q[a][n] * q[a][n] - q[a + 1][n] * q[a - 1][n]);
      if (!diff.is_zero() && !rep.failing_alpha) {
        rep.failing_alpha = a;
        rep.failing_n = n;
        const auto [e, c] = diff.leading_term();
        rep.first_bad_monomial = Poly::monomial(nvars, e, c).to_string();
      }
    }
  }
  rep.pass = !rep.failing_alpha.has_value();
  return rep;
}

ConservedReport a1_conserved_quantity(const Rational& q0, const Rational& q1, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be >= 2");
  ConservedReport rep;
  rep.trajectory = {q0, q1};
  for (int n = 1; n < n_max; ++n) {
    const Rational prev = rep.trajectory[n - 1];
    if (prev.is_zero()) throw std::domain_error("degenerate orbit");
    rep.trajectory.push_back((rep.trajectory[n] * rep.trajectory[n] - Rational(1)) / prev);
  }
  // A zero anywhere on the orbit is a divisor one step later.
  for (const auto& x : rep.trajectory)
    if (x.is_zero()) throw std::domain_error("degenerate orbit");
  for (int n = 1; n < n_max; ++n) {
    rep.values.push_back((rep.trajectory[n + 1] + rep.trajectory[n - 1]) / rep.trajectory[n]);
  }
  rep.pass = true;
  for (const auto& v : rep.values)
    if (!(v == rep.values.front())) rep.pass = false;
  return rep;
}

}  // namespace intcomb::qsystem
