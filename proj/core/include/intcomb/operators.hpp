#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intcomb/mpoly.hpp"
#include "intcomb/ratfunc.hpp"
#include "intcomb/symmetric.hpp"

/// q-difference operators on symmetric Laurent polynomials in x_1..x_N:
///   M_{a,n}  = sum_{|I|=a} x_I^n prod_{i in I, j notin I} x_i/(x_i - x_j) Gamma_I
///   MM_{a,n} = sum_{|I|=a} x_I^n prod_{i in I, j notin I} (t x_i - x_j)/(x_i - x_j) Gamma_I
/// with (Gamma_i f)(x) = f(.., q x_i, ..). Results are formed over the
/// Vandermonde and divided exactly.
namespace intcomb::qsystem {

using QPoly = LaurentMPoly<RationalFunction>;

struct OperatorParams {
  RationalFunction q = RationalFunction::q();
  std::optional<RationalFunction> t;  // absent: M; present: generalised Macdonald
};

/// Throws std::domain_error("operator identity violated") if the Vandermonde
/// division is inexact.
QPoly difference_operator(int alpha, int n, const QPoly& f, const OperatorParams& p);

QPoly m_apply(int alpha, int n, const QPoly& f);
QPoly mac_apply(int alpha, int n, const QPoly& f);
QPoly mac_apply(int alpha, int n, const QPoly& f, const RationalFunction& q, const RationalFunction& t);

/// m_mu for every partition mu with |mu| <= degree_cap and at most N parts.
std::vector<std::pair<Partition, QPoly>> monomial_test_family(int nvars, int degree_cap);

struct RelationFailure {
  std::string relation;  // "exchange" or "quantum-q"
  int alpha = 0;
  int beta = 0;
  int n = 0;
  Partition test;
};

struct MSystemReport {
  bool pass = false;
  int nvars = 0;
  int degree_cap = 0;
  long exchange_checked = 0;
  long quantum_q_checked = 0;
  long symmetric_outputs = 0;
  std::optional<RelationFailure> failure;
};

/// For n in {0,1,2} and every test polynomial:
///   M_{a,n} M_{b,n+1} = q^{min(a,b)} M_{b,n+1} M_{a,n},  a, b in [1, N]
///   q^a M_{a,n+1} M_{a,n-1} = M_{a,n}^2 - M_{a+1,n} M_{a-1,n},  a in [1, N]
/// with M_{0,n} = 1 and M_{N+1,n} = 0.
MSystemReport msystem_relations_check(int nvars, int degree_cap);

/// Occupation numbers n_{a,j}, a in [1, N-1], j in [1, k]; occupation[a-1][j-1].
struct GradedCharSpec {
  int nvars = 0;
  std::vector<std::vector<int>> occupation;

  [[nodiscard]] int r() const { return nvars - 1; }
  [[nodiscard]] int k() const;
  void validate() const;
};

/// a(n) = 1/2 sum n_{a,i} min(i,j) min(a,b) n_{b,j} - 1/2 sum i a n_{a,i}; always an integer.
long grading_exponent(const GradedCharSpec& spec);

enum class FactorOrder { AlphaAscending, AlphaDescending };

struct GradedCharacter {
  long a = 0;
  QPoly chi_q;         // chi(q; x)
  QPoly chi_q_inverse; // chi(q^{-1}; x) = q^{-a} prod M ... 1
  std::vector<std::pair<Partition, RationalFunction>> schur_coefficients;  // of chi(q)
  bool positive = false;  // every Schur coefficient is a Laurent polynomial in q with nonnegative coefficients
};

/// Throws std::domain_error("grading failure") if the result is not a polynomial in x.
GradedCharacter graded_character(const GradedCharSpec& spec, FactorOrder order = FactorOrder::AlphaAscending);

/// Recomputes with alpha descending inside each j and reports whether chi changes.
bool factor_order_matters(const GradedCharSpec& spec);

/// prod s_{(j^a)}^{n_{a,j}}, the ungraded character.
QPoly ungraded_character(const GradedCharSpec& spec);

/// Evaluates q -> 1 coefficientwise.
QPoly at_q_equals_one(const QPoly& f);

bool is_nonnegative_q_polynomial(const RationalFunction& c);

}  // namespace intcomb::qsystem
