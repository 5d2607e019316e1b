#include "intcomb/operators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace intcomb::qsystem {

namespace {

QPoly var(int n, int i) { return QPoly::variable(n, i); }

}  // namespace

QPoly difference_operator(int alpha, int n, const QPoly& f, const OperatorParams& p) {
  const int nv = f.nvars();
  if (alpha < 0 || alpha > nv) throw std::invalid_argument("alpha out of range");
  if (nv > 16) throw std::invalid_argument("too many variables");
  std::map<int, RationalFunction> qpow;
  auto q_to = [&](int k) -> const RationalFunction& {
    auto it = qpow.find(k);
    if (it == qpow.end()) it = qpow.emplace(k, p.q.pow(k)).first;
    return it->second;
  };
  QPoly numerator(nv);
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    if (std::popcount(mask) != alpha) continue;
    auto in = [&](int i) { return (mask >> i & 1u) != 0; };
    const QPoly shifted = f.transform_coefficients([&](const Exponent& e, const RationalFunction& c) {
      int k = 0;
      for (int i = 0; i < nv; ++i)
        if (in(i)) k += e[i];
      return c * q_to(k);
    });
    std::vector<int> xi(nv, 0);
    for (int i = 0; i < nv; ++i)
      if (in(i)) xi[i] = n;
    QPoly pre = QPoly::monomial(nv, xi, RationalFunction(1));
    bool negate = false;
    for (int i = 0; i < nv; ++i) {
      for (int j = 0; j < nv; ++j) {
        if (i == j) continue;
        if (in(i) && !in(j)) {
          pre *= p.t ? var(nv, i).scaled(*p.t) - var(nv, j) : var(nv, i);
          if (i > j) negate = !negate;
        } else if (i < j && in(i) == in(j)) {
          // Completes prod (x_i - x_j) over I x I^c to the Vandermonde.
          pre *= var(nv, i) - var(nv, j);
        }
      }
    }
    numerator += negate ? -(pre * shifted) : pre * shifted;
  }
  try {
    return numerator.divide_exact(vandermonde<RationalFunction>(nv));
  } catch (const InexactDivision&) {
    throw std::domain_error("operator identity violated");
  }
}

QPoly m_apply(int alpha, int n, const QPoly& f) { return difference_operator(alpha, n, f, {}); }

QPoly mac_apply(int alpha, int n, const QPoly& f) {
  return difference_operator(alpha, n, f, {RationalFunction::q(), RationalFunction::t()});
}

QPoly mac_apply(int alpha, int n, const QPoly& f, const RationalFunction& q, const RationalFunction& t) {
  return difference_operator(alpha, n, f, {q, t});
}

std::vector<std::pair<Partition, QPoly>> monomial_test_family(int nvars, int degree_cap) {
  std::vector<std::pair<Partition, QPoly>> out;
  for (int d = 0; d <= degree_cap; ++d)
    for (const auto& mu : partitions_of(d, nvars)) out.emplace_back(mu, monomial_symmetric<RationalFunction>(mu, nvars));
  return out;
}

MSystemReport msystem_relations_check(int nvars, int degree_cap) {
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("N must be in [1, 3]");
  if (degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
  MSystemReport rep;
  rep.nvars = nvars;
  rep.degree_cap = degree_cap;
  auto op = [&](int a, int n, const QPoly& f) {
    if (a == 0) return f;
    if (a == nvars + 1) return QPoly(nvars);
    return m_apply(a, n, f);
  };
  const auto q = RationalFunction::q();
  auto fail = [&](const char* rel, int a, int b, int n, const Partition& mu) {
    if (!rep.failure) rep.failure = RelationFailure{rel, a, b, n, mu};
  };
  for (const auto& [mu, f] : monomial_test_family(nvars, degree_cap)) {
    for (int a = 0; a <= nvars; ++a) {
      for (int n = -2; n <= 2; ++n) {
        if (op(a, n, f).is_symmetric()) ++rep.symmetric_outputs;
        else fail("symmetry", a, a, n, mu);
      }
    }
    for (int n = 0; n <= 2; ++n) {
      for (int a = 1; a <= nvars; ++a) {
        for (int b = 1; b <= nvars; ++b) {
          ++rep.exchange_checked;
          const QPoly lhs = op(a, n, op(b, n + 1, f));
          const QPoly rhs = op(b, n + 1, op(a, n, f)).scaled(q.pow(std::min(a, b)));
          if (!(lhs == rhs)) fail("exchange", a, b, n, mu);
        }
        ++rep.quantum_q_checked;
        const QPoly lhs = op(a, n + 1, op(a, n - 1, f)).scaled(q.pow(a));
        const QPoly rhs = op(a, n, op(a, n, f)) - op(a + 1, n, op(a - 1, n, f));
        if (!(lhs == rhs)) fail("quantum-q", a, a, n, mu);
      }
    }
  }
  rep.pass = !rep.failure.has_value();
  return rep;
}

int GradedCharSpec::k() const {
  std::size_t k = 0;
  for (const auto& row : occupation) k = std::max(k, row.size());
  return static_cast<int>(k);
}

void GradedCharSpec::validate() const {
  if (nvars < 2) throw std::invalid_argument("graded character needs N >= 2");
  if (static_cast<int>(occupation.size()) > r()) throw std::invalid_argument("occupation has more than N-1 rows");
  for (const auto& row : occupation)
    for (int x : row)
      if (x < 0) throw std::invalid_argument("occupation numbers must be nonnegative");
}

long grading_exponent(const GradedCharSpec& spec) {
  spec.validate();
  long twice = 0;
  const int rows = static_cast<int>(spec.occupation.size());
  for (int a = 1; a <= rows; ++a) {
    const auto& ra = spec.occupation[a - 1];
    for (int i = 1; i <= static_cast<int>(ra.size()); ++i) {
      const long nai = ra[i - 1];
      twice -= static_cast<long>(i) * a * nai;
      for (int b = 1; b <= rows; ++b) {
        const auto& rb = spec.occupation[b - 1];
        for (int j = 1; j <= static_cast<int>(rb.size()); ++j)
          twice += nai * std::min(i, j) * std::min(a, b) * rb[j - 1];
      }
    }
  }
  if (twice % 2 != 0) throw std::logic_error("grading exponent is not an integer");
  return twice / 2;
}

QPoly at_q_equals_one(const QPoly& f) {
  return f.transform_coefficients(
      [](const Exponent&, const RationalFunction& c) { return c.substitute(RationalFunction(1), RationalFunction::t()); });
}

bool is_nonnegative_q_polynomial(const RationalFunction& c) {
  if (!c.is_laurent()) return false;
  for (const auto& term : c.numerator().terms())
    if (sgn(term.c) < 0) return false;
  return sgn(c.denominator().leading().c) > 0;
}

GradedCharacter graded_character(const GradedCharSpec& spec, FactorOrder order) {
  spec.validate();
  const int nv = spec.nvars;
  GradedCharacter out;
  out.a = grading_exponent(spec);
  // The operator product is written with j descending and alpha ascending
  // left to right; it acts on 1, so the rightmost factor goes first.
  QPoly g = QPoly::constant(nv, RationalFunction(1));
  const int rows = static_cast<int>(spec.occupation.size());
  for (int j = 1; j <= spec.k(); ++j) {
    for (int s = 0; s < rows; ++s) {
      const int a = order == FactorOrder::AlphaAscending ? rows - s : s + 1;
      const auto& row = spec.occupation[a - 1];
      const int mult = j <= static_cast<int>(row.size()) ? row[j - 1] : 0;
      for (int m = 0; m < mult; ++m) g = m_apply(a, j, g);
    }
  }
  const auto q = RationalFunction::q();
  out.chi_q_inverse = g.scaled(q.pow(static_cast<int>(-out.a)));
  const auto q_inv = RationalFunction(1) / q;
  out.chi_q = out.chi_q_inverse.transform_coefficients(
      [&](const Exponent&, const RationalFunction& c) { return c.substitute(q_inv, RationalFunction::t()); });
  if (!out.chi_q.is_polynomial()) throw std::domain_error("grading failure");
  out.schur_coefficients = schur_expand(out.chi_q);
  out.positive = std::all_of(out.schur_coefficients.begin(), out.schur_coefficients.end(),
                             [](const auto& pc) { return is_nonnegative_q_polynomial(pc.second); });
  return out;
}

bool factor_order_matters(const GradedCharSpec& spec) {
  return !(graded_character(spec, FactorOrder::AlphaAscending).chi_q ==
           graded_character(spec, FactorOrder::AlphaDescending).chi_q);
}

QPoly ungraded_character(const GradedCharSpec& spec) {
  spec.validate();
  QPoly prod = QPoly::constant(spec.nvars, RationalFunction(1));
  for (int a = 1; a <= static_cast<int>(spec.occupation.size()); ++a) {
    const auto& row = spec.occupation[a - 1];
    for (int j = 1; j <= static_cast<int>(row.size()); ++j)
      prod *= schur_polynomial<RationalFunction>(rectangle(j, a), spec.nvars).pow(static_cast<unsigned>(row[j - 1]));
  }
  return prod;
}

}  // namespace intcomb::qsystem
