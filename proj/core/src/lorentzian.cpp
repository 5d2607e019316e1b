#include "intcomb/lorentzian.hpp"

#include <sstream>
#include <stdexcept>

namespace intcomb::lorentzian {

namespace {

HighFloat to_float(const Rational& r) {
  HighFloat n(r.numerator().get_str());
  HighFloat d(r.denominator().get_str());
  return n / d;
}

HighFloat float_entry(const HighFloat& g, const HighFloat& a, int i, int j) {
  const HighFloat inv_a2 = 1 / (a * a);
  HighFloat sum = 0;
  HighFloat inv_pow = 1;
  for (int k = 0; k <= std::min(i, j); ++k) {
    sum += HighFloat(mpz_class(binomial(i, k) * binomial(j, k)).get_str()) * inv_pow;
    inv_pow *= inv_a2;
  }
  return boost::multiprecision::pow(a * g, i + j) * sum;
}

HighFloat evaluate_phi(const HighFloat& g, const HighFloat& a) { return (1 - g * g * (1 - a * a)) / (a * g); }

}  // namespace

TransferParams TransferParams::from_exact(const LorentzParams& p) {
  return {to_float(p.g), to_float(p.a), p};
}

Rational transfer_entry(const LorentzParams& p, int i, int j) { return transfer_entry<Rational>(p.g, p.a, i, j); }

Rational phi_invariant(const LorentzParams& p) { return phi_invariant<Rational>(p.g, p.a); }

std::vector<std::vector<Rational>> transfer_matrix(const LorentzParams& p, int size) {
  std::vector<std::vector<Rational>> t(size, std::vector<Rational>(size));
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) t[i][j] = t[j][i] = transfer_entry(p, i, j);
  return t;
}

LaurentMPoly<Rational> genfun_expansion(const LorentzParams& p, int order, GenfunVariant variant) {
  using P = LaurentMPoly<Rational>;
  const P z = P::variable(2, 0), w = P::variable(2, 1);
  const Rational cross = (variant == GenfunVariant::Exact ? Rational(1) : Rational(-1)) * p.g * p.g *
                         (Rational(1) - p.a * p.a);
  const P d = (z + w).scaled(p.g * p.a) + (z * w).scaled(cross);
  // 1/(1-D) = sum_m D^m; D has no constant term so m <= order suffices.
  P sum = P::constant(2, Rational(1));
  P power = P::constant(2, Rational(1));
  for (int m = 1; m <= order; ++m) {
    power = (power * d).truncated_degree(order);
    sum += power;
  }
  return sum;
}

GenfunReport genfun_check(const LorentzParams& p, int order, GenfunVariant variant) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  GenfunReport report;
  report.order = order;
  const auto expansion = genfun_expansion(p, order, variant);
  for (int total = 0; total <= order; ++total) {
    for (int i = total; i >= 0; --i) {
      const int j = total - i;
      const Rational expected = transfer_entry(p, i, j);
      const Rational actual = expansion.coefficient(LaurentMPoly<Rational>::make_exponent({i, j}));
      ++report.coefficients_checked;
      if (!(expected == actual)) {
        report.first_mismatch = {i, j};
        report.expected = expected.to_string();
        report.actual = actual.to_string();
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

TransferParams ConjugateResult::params() const {
  TransferParams p{g.midpoint(), to_float(a), std::nullopt};
  if (g_exact) p.exact = LorentzParams{*g_exact, a};
  return p;
}

ConjugateResult conjugate_parameter(const LorentzParams& p, const Rational& a_new) {
  if (a_new.is_zero()) throw std::domain_error("phi undefined");
  const Rational phi = phi_invariant(p);
  ConjugateResult r;
  r.a = a_new;
  // g'^2 (1 - a'^2) + phi a' g' - 1 = 0
  const Rational quad = Rational(1) - a_new * a_new;
  const Rational lin = phi * a_new;
  auto finish_exact = [&](const Rational& root) {
    r.g_exact = root;
    const HighFloat v = to_float(root);
    r.g = {v, v};
    r.numeric = false;
    r.phi_mismatch = boost::multiprecision::abs(to_float(phi_invariant<Rational>(root, a_new) - phi));
    return r;
  };
  if (quad.is_zero()) {
    if (lin.is_zero()) throw std::domain_error("no conjugate in family");
    const Rational root = Rational(1) / lin;
    if (root.sign() <= 0) throw std::domain_error("no conjugate in family");
    return finish_exact(root);
  }
  const Rational disc = lin * lin + Rational(4) * quad;
  if (disc.sign() < 0) throw std::domain_error("no conjugate in family");
  const Rational two_quad = Rational(2) * quad;
  if (disc.is_square()) {
    const Rational s = disc.sqrt();
    std::optional<Rational> best;
    for (const Rational& root : {(-lin + s) / two_quad, (-lin - s) / two_quad})
      if (root.sign() > 0 && (!best || root < *best)) best = root;
    if (!best) throw std::domain_error("no conjugate in family");
    return finish_exact(*best);
  }
  const HighFloat sd = boost::multiprecision::sqrt(to_float(disc));
  const HighFloat l = to_float(lin), tq = to_float(two_quad);
  std::optional<HighFloat> best;
  for (const HighFloat& root : {HighFloat((-l + sd) / tq), HighFloat((-l - sd) / tq)})
    if (root > 0 && (!best || root < *best)) best = root;
  if (!best) throw std::domain_error("no conjugate in family");
  // Widen by a few ulps of the working precision to enclose the true root.
  const HighFloat eps = boost::multiprecision::abs(*best) * HighFloat("1e-95");
  r.g = {*best - eps, *best + eps};
  r.numeric = true;
  r.phi_mismatch = boost::multiprecision::abs(evaluate_phi(*best, to_float(a_new)) - to_float(phi));
  return r;
}

CommutationReport commutation_residual(const TransferParams& p1, const TransferParams& p2, int size, int window,
                                       const HighFloat& tolerance) {
  if (size <= 0 || window <= 0 || 2 * window > size) throw std::invalid_argument("window must satisfy 0 < window <= size/2");
  const HighFloat rho1 = boost::multiprecision::abs(p1.g) * (1 + boost::multiprecision::abs(p1.a));
  const HighFloat rho2 = boost::multiprecision::abs(p2.g) * (1 + boost::multiprecision::abs(p2.a));
  const HighFloat r = rho1 * rho2;
  if (!(r < 1)) throw std::domain_error("truncation not controlled");

  CommutationReport report;
  report.size = size;
  report.window = window;
  report.tolerance = tolerance;
  report.residual = 0;
  report.exact_arithmetic = p1.exact.has_value() && p2.exact.has_value();

  if (report.exact_arithmetic) {
    const auto t1 = transfer_matrix(*p1.exact, size);
    const auto t2 = transfer_matrix(*p2.exact, size);
    for (int i = 0; i < window; ++i) {
      for (int j = 0; j < window; ++j) {
        Rational c(0);
        for (int k = 0; k < size; ++k) c += t1[i][k] * t2[k][j] - t2[i][k] * t1[k][j];
        const HighFloat v = to_float(c.abs());
        if (v > report.residual) {
          report.residual = v;
          report.argmax = {i, j};
        }
      }
    }
  } else {
    std::vector<std::vector<HighFloat>> t1(size, std::vector<HighFloat>(size)), t2 = t1;
    for (int i = 0; i < size; ++i) {
      for (int j = i; j < size; ++j) {
        t1[i][j] = t1[j][i] = float_entry(p1.g, p1.a, i, j);
        t2[i][j] = t2[j][i] = float_entry(p2.g, p2.a, i, j);
      }
    }
    for (int i = 0; i < window; ++i) {
      for (int j = 0; j < window; ++j) {
        HighFloat c = 0;
        for (int k = 0; k < size; ++k) c += t1[i][k] * t2[k][j] - t2[i][k] * t1[k][j];
        const HighFloat v = boost::multiprecision::abs(c);
        if (v > report.residual) {
          report.residual = v;
          report.argmax = {i, j};
        }
      }
    }
  }

  // sum_{k>=S} |T1_{ik} T2_{kj}| <= rho1^i rho2^j r^S / (1 - r), and the same
  // with the roles swapped for the second product.
  const HighFloat geometric = boost::multiprecision::pow(r, size) / (1 - r);
  report.tail_bound = 0;
  for (int i = 0; i < window; ++i) {
    for (int j = 0; j < window; ++j) {
      const HighFloat b = (boost::multiprecision::pow(rho1, i) * boost::multiprecision::pow(rho2, j) +
                           boost::multiprecision::pow(rho2, i) * boost::multiprecision::pow(rho1, j)) *
                          geometric;
      if (b > report.tail_bound) report.tail_bound = b;
    }
  }
  report.pass = report.residual <= report.tail_bound + tolerance;
  return report;
}

std::string to_string(const HighFloat& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

}  // namespace intcomb::lorentzian
