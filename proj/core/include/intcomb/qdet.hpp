#pragma once

#include <string>
#include <vector>

#include "intcomb/operators.hpp"

/// M_{a_1..a_k}: the coefficient of u_1^{a_1}...u_k^{a_k} in
/// prod_{i<j} (1 - q u_j/u_i) m(u_1)...m(u_k), m(u) = sum_n u^n M_{1,n},
/// computed either by expanding the prefactor or as the ASM sum
///   sum_A (-q)^{I(A)-N(A)} (1-q)^{N(A)} prod_i M_{1, a_i + k - i - m_i(A)}.
namespace intcomb::qsystem {

enum class QdetMode { Product, AsmSum };

/// One operator word: scalar * M_{1,b_1} M_{1,b_2} ... (leftmost acts last).
struct ModeWord {
  RationalFunction coefficient;
  std::vector<int> modes;
};

std::vector<ModeWord> qdet_expansion(const std::vector<int>& a, QdetMode mode);

/// Applies the expansion to f.
QPoly qdet_apply(const std::vector<int>& a, QdetMode mode, const QPoly& f);

struct QdetReport {
  bool pass = false;
  std::vector<int> a;
  int nvars = 0;
  long product_words = 0;
  long asm_words = 0;
  long tests = 0;
  bool modes_agree = false;
  bool constant_case = false;  // a = (n, ..., n)
  bool matches_m = false;      // only meaningful for constant a
};

/// Tables both modes on the monomial test family and, for a = (n, ..., n),
/// compares with M_{k,n}. Requires 1 <= k <= 3, N <= 3, |a_i| <= 2. Throws
/// std::domain_error("quantum determinant identity violated") when the
/// tables disagree and throw_on_mismatch is set.
QdetReport quantum_determinant(const std::vector<int>& a, int nvars, int degree_cap, bool throw_on_mismatch = false);

}  // namespace intcomb::qsystem
