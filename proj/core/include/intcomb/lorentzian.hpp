#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "intcomb/mpoly.hpp"
#include "intcomb/rational.hpp"
#include "intcomb/scalar.hpp"

/// Transfer matrices of 1+1 dimensional Lorentzian triangulations.
///
/// T(g,a)_{ij} = (ag)^{i+j} sum_k C(i,k) C(j,k) a^{-2k}, with generating
/// function 1 / (1 - ga(z+w) - g^2(1-a^2) zw). Two members of the family
/// commute iff phi(g,a) = (1 - g^2(1-a^2)) / (ag) agree.
namespace intcomb::lorentzian {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

struct LorentzParams {
  Rational g;
  Rational a;
};

/// Parameters that may only be known numerically (an irrational conjugate).
struct TransferParams {
  HighFloat g;
  HighFloat a;
  std::optional<LorentzParams> exact;

  static TransferParams from_exact(const LorentzParams& p);
};

template <ExactScalar S>
S transfer_entry(const S& g, const S& a, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("invalid state");
  const S ag = a * g;
  const S inv_a2 = S(1L) / (a * a);
  S sum(0L);
  S inv_pow(1L);
  for (int k = 0; k <= std::min(i, j); ++k) {
    sum = sum + S(Rational(mpz_class(binomial(i, k) * binomial(j, k)))) * inv_pow;
    inv_pow = inv_pow * inv_a2;
  }
  return power(ag, static_cast<unsigned>(i + j)) * sum;
}

Rational transfer_entry(const LorentzParams& p, int i, int j);

/// phi(g,a); throws std::domain_error("phi undefined") when a or g vanish.
template <ExactScalar S>
S phi_invariant(const S& g, const S& a) {
  if (g.is_zero() || a.is_zero()) throw std::domain_error("phi undefined");
  return (S(1L) - g * g * (S(1L) - a * a)) / (a * g);
}

Rational phi_invariant(const LorentzParams& p);

std::vector<std::vector<Rational>> transfer_matrix(const LorentzParams& p, int size);

enum class GenfunVariant {
  Exact,
  /// Sign of the g^2(1-a^2) zw term flipped; used as a negative control.
  FlippedCrossTerm,
};

struct GenfunReport {
  bool pass = false;
  int order = 0;
  int coefficients_checked = 0;
  /// First mismatching (i, j) in increasing total degree, with both sides.
  std::optional<std::pair<int, int>> first_mismatch;
  std::string expected;  // from the entry formula
  std::string actual;    // from the generating function
};

/// Compares sum_{i+j<=order} T_{ij} z^i w^j with the series expansion of the
/// closed-form generating function through total degree `order`.
GenfunReport genfun_check(const LorentzParams& p, int order, GenfunVariant variant = GenfunVariant::Exact);

/// Expansion of 1/(1 - ga(z+w) - s g^2(1-a^2) zw) through total degree
/// `order`, with s = +1 (or -1 for the flipped variant).
LaurentMPoly<Rational> genfun_expansion(const LorentzParams& p, int order, GenfunVariant variant);

struct Interval {
  HighFloat lower;
  HighFloat upper;
  [[nodiscard]] HighFloat midpoint() const { return (lower + upper) / 2; }
};

struct ConjugateResult {
  Rational a;
  /// Set when the selected root is rational.
  std::optional<Rational> g_exact;
  /// Enclosure of the selected root; degenerate when exact.
  Interval g;
  bool numeric = false;
  /// |phi(g', a') - phi(g, a)| evaluated at the midpoint.
  HighFloat phi_mismatch;

  [[nodiscard]] TransferParams params() const;
};

/// Finds g' with phi(g', a_new) = phi(g, a), taking the smallest positive
/// root. Throws std::domain_error("no conjugate in family") if none exists.
ConjugateResult conjugate_parameter(const LorentzParams& p, const Rational& a_new);

struct CommutationReport {
  bool pass = false;
  bool exact_arithmetic = false;
  int size = 0;
  int window = 0;
  HighFloat residual;    // max |[T1,T2]_{ij}| over i, j < window
  HighFloat tail_bound;  // bound on truncation error over the same window
  HighFloat tolerance;
  std::pair<int, int> argmax{0, 0};
};

inline const HighFloat kDefaultCommutationTolerance = HighFloat("1e-10");

/// Certifies commutation on a window of the S x S truncation.
///
/// The tail bound uses |T_{ik}| <= rho^{i+k} with rho = |g|(1+|a|); the
/// truncation is controlled only when rho1 * rho2 < 1.
CommutationReport commutation_residual(const TransferParams& p1, const TransferParams& p2, int size, int window,
                                       const HighFloat& tolerance = kDefaultCommutationTolerance);

std::string to_string(const HighFloat& x, int digits = 6);

}  // namespace intcomb::lorentzian
