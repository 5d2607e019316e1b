#include "intcomb/macdonald.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace intcomb::qsystem {

TLimitReport t_limit_check(int nvars, int degree_cap, int window) {
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("N must be in [1, 3]");
  TLimitReport rep;
  rep.nvars = nvars;
  const auto t = RationalFunction::t();
  for (const auto& [mu, f] : monomial_test_family(nvars, degree_cap)) {
    for (int a = 0; a <= nvars; ++a) {
      for (int n = -window; n <= window; ++n) {
        ++rep.cases;
        const QPoly diff = mac_apply(a, n, f).scaled(t.pow(-a * (nvars - a))) - m_apply(a, n, f);
        for (const auto& [e, c] : diff.terms()) {
          if (c.t_degree() >= 0 && !rep.failure) {
            std::ostringstream os;
            os << "a=" << a << " n=" << n << " f=m_" << partition_to_string(mu);
            rep.failure = os.str();
          }
        }
      }
    }
  }
  rep.pass = !rep.failure.has_value();
  return rep;
}

EigenReport macdonald_eigencheck(const Partition& lambda, int nvars) {
  if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
  if (static_cast<int>(lambda.size()) > nvars) throw std::invalid_argument("partition exceeds variable count");
  EigenReport rep;
  rep.lambda = lambda;
  rep.nvars = nvars;
  // Lexicographically decreasing is a linear extension of dominance.
  std::vector<Partition> basis;
  for (const auto& mu : partitions_of(partition_size(lambda), nvars))
    if (dominated_by(mu, lambda)) basis.push_back(mu);
  std::sort(basis.begin(), basis.end(), std::greater<>());
  auto coeff_of = [&](const QPoly& f, const Partition& nu) {
    std::vector<int> e(nu.begin(), nu.end());
    e.resize(nvars, 0);
    return f.coefficient(QPoly::make_exponent(e));
  };
  const std::size_t b = basis.size();
  // a[x][y] = coefficient of m_{basis[x]} in MM_{1,0} m_{basis[y]}.
  std::vector<std::vector<RationalFunction>> a(b, std::vector<RationalFunction>(b));
  for (std::size_t y = 0; y < b; ++y) {
    const QPoly img = mac_apply(1, 0, monomial_symmetric<RationalFunction>(basis[y], nvars));
    QPoly rebuilt(nvars);
    for (std::size_t x = 0; x < b; ++x) {
      a[x][y] = coeff_of(img, basis[x]);
      if (!a[x][y].is_zero() && !dominated_by(basis[x], basis[y])) throw std::domain_error("eigencheck failed");
      rebuilt += monomial_symmetric<RationalFunction>(basis[x], nvars).scaled(a[x][y]);
    }
    if (!(rebuilt == img)) throw std::domain_error("eigencheck failed");
  }
  rep.eigenvalue = a[0][0];
  std::vector<RationalFunction> c(b);
  c[0] = RationalFunction(1);
  for (std::size_t x = 1; x < b; ++x) {
    RationalFunction s;
    for (std::size_t y = 0; y < x; ++y) s += a[x][y] * c[y];
    const RationalFunction gap = rep.eigenvalue - a[x][x];
    if (gap.is_zero()) throw std::domain_error("eigencheck failed");
    c[x] = s / gap;
  }
  rep.p = QPoly(nvars);
  for (std::size_t x = 0; x < b; ++x) {
    rep.p += monomial_symmetric<RationalFunction>(basis[x], nvars).scaled(c[x]);
    rep.coefficients.emplace_back(basis[x], c[x]);
  }
  for (int i = 0; i < nvars; ++i) {
    const int li = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    rep.expected += RationalFunction::monomial(Rational(1), li, nvars - 1 - i);
  }
  rep.pass = rep.eigenvalue == rep.expected && mac_apply(1, 0, rep.p) == rep.p.scaled(rep.eigenvalue);
  return rep;
}

DimReport dim_exchange_check(const DimOptions& opt) {
  if (opt.nvars < 1 || opt.nvars > 3) throw std::invalid_argument("N must be in [1, 3]");
  if (opt.window < 0 || opt.window > 2) throw std::invalid_argument("window must be in [0, 2]");
  RationalFunction q = RationalFunction::q();
  RationalFunction t = opt.t_equals_q ? q : RationalFunction::t();
  if (opt.current == DimCurrent::F) {
    q = RationalFunction(1) / q;
    t = RationalFunction(1) / t;
  }
  DimReport rep;
  // (z - r1 w)(z - r2 w)(z - r3 w) = z^3 - e1 z^2 w + e2 z w^2 - e3 w^3
  const RationalFunction r1 = q, r2 = RationalFunction(1) / t, r3 = t / q;
  rep.g = {RationalFunction(1), -(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3)};
  const auto family = monomial_test_family(opt.nvars, opt.degree_cap);
  auto mm = [&](int n, const QPoly& f) { return mac_apply(1, n, f, q, t); };
  for (int m = -opt.window; m <= opt.window; ++m) {
    for (int n = -opt.window; n <= opt.window; ++n) {
      ++rep.mode_pairs;
      const int a = m + 2, b = n + 1;
      bool nonzero = false;
      for (const auto& [mu, f] : family) {
        QPoly res(opt.nvars);
        for (int k = 0; k <= 3; ++k) {
          res += mm(a - 3 + k, mm(b - k, f)).scaled(rep.g[k]);
          if (opt.swapped_control) res += mm(b - k, mm(a - 3 + k, f)).scaled(rep.g[k]);
          else res += mm(b - 3 + k, mm(a - k, f)).scaled(rep.g[k]);
          rep.applications += 4;
        }
        if (!res.is_zero()) nonzero = true;
      }
      if (nonzero) {
        ++rep.nonzero_residuals;
        if (!rep.first_failure) rep.first_failure = std::make_pair(m, n);
      }
    }
  }
  rep.pass = rep.nonzero_residuals == 0;
  return rep;
}

std::vector<QPoly> psi_coefficients(int nvars, int kmax, bool plus) {
  if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
  const auto s = RationalFunction::q(), t = RationalFunction::t();
  const auto s_inv = RationalFunction(1) / s;
  // One factor (1 - t y/s)(1 - s y/t) / ((1 - y/s)(1 - s y)) = sum_k c_k y^k.
  std::vector<RationalFunction> h(kmax + 1), c(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    for (int i = 0; i <= k; ++i) h[k] += s_inv.pow(i) * s.pow(k - i);
  const RationalFunction lin = t * s_inv + s / t;
  for (int k = 0; k <= kmax; ++k) {
    c[k] = h[k];
    if (k >= 1) c[k] -= lin * h[k - 1];
    if (k >= 2) c[k] += h[k - 2];
  }
  const int sign = plus ? 1 : -1;
  std::vector<QPoly> acc(kmax + 1, QPoly(nvars));
  acc[0] = QPoly::constant(nvars, RationalFunction(1));
  for (int i = 0; i < nvars; ++i) {
    std::vector<QPoly> next(kmax + 1, QPoly(nvars));
    for (int d = 0; d <= kmax; ++d) {
      if (acc[d].is_zero()) continue;
      for (int k = 0; d + k <= kmax; ++k) {
        std::vector<int> e(nvars, 0);
        e[i] = sign * k;
        next[d + k] += acc[d] * QPoly::monomial(nvars, e, c[k]);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace intcomb::qsystem
