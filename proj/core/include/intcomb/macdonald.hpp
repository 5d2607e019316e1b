#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intcomb/operators.hpp"

/// Checks built on the generalised Macdonald operators MM_{a,n}: the t -> oo
/// limit to M_{a,n}, Macdonald polynomials as MM_{1,0} eigenvectors, and the
/// quantum toroidal gl_1 exchange relation of the currents built from MM_{1,n}.
namespace intcomb::qsystem {

struct TLimitReport {
  bool pass = false;
  int nvars = 0;
  long cases = 0;
  // First case with t-degree >= 0 in t^{-a(N-a)} MM_{a,n} f - M_{a,n} f.
  std::optional<std::string> failure;
};

/// All a in [0, N], n in [-window, window], f in the monomial test family.
TLimitReport t_limit_check(int nvars, int degree_cap, int window);

struct EigenReport {
  bool pass = false;
  Partition lambda;
  int nvars = 0;
  RationalFunction eigenvalue;
  RationalFunction expected;  // sum_i q^{lambda_i} t^{N-i}
  QPoly p;                    // monic in m_lambda
  std::vector<std::pair<Partition, RationalFunction>> coefficients;  // in the m_mu basis
};

/// Solves the triangular eigenproblem for MM_{1,0} in the monomial basis and
/// verifies MM_{1,0} P = e P. Throws std::domain_error("eigencheck failed")
/// if the matrix is not triangular or the solve breaks down.
EigenReport macdonald_eigencheck(const Partition& lambda, int nvars);

enum class DimCurrent { E, F };

struct DimOptions {
  int window = 1;
  int nvars = 2;
  int degree_cap = 2;
  DimCurrent current = DimCurrent::E;
  bool t_equals_q = false;
  bool swapped_control = false;  // uses g(z,w) in both terms; must fail
};

struct DimReport {
  bool pass = false;
  long mode_pairs = 0;
  long applications = 0;
  long nonzero_residuals = 0;
  std::optional<std::pair<int, int>> first_failure;
  std::vector<RationalFunction> g;  // coefficients of z^3, z^2 w, z w^2, w^3
};

/// Mode pair (m, n) is the coefficient of z^{m+2} w^{n+1} in
/// g(z,w) e(z) e(w) + g(w,z) e(w) e(z), g(z,w) = (z - q w)(z - w/t)(z - t w/q).
/// The scalar prefactors of the modes factor out, so the residual is
///   sum_k g_k (MM_{a-3+k} MM_{b-k} + MM_{b-3+k} MM_{a-k}),  a = m+2, b = n+1.
/// The f current substitutes q -> 1/q, t -> 1/t throughout.
DimReport dim_exchange_check(const DimOptions& opt);

/// Coefficients of z^{+-k}, k = 0..kmax, of psi^{+-}(z). The first scalar
/// parameter stands for q^{1/2}, so the output needs no radicals.
std::vector<QPoly> psi_coefficients(int nvars, int kmax, bool plus);

}  // namespace intcomb::qsystem
