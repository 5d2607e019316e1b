#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intcomb/mpoly.hpp"

namespace intcomb {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;

std::string partition_to_string(const Partition& p);
bool is_partition(const Partition& p);
int partition_size(const Partition& p);

/// All partitions of n with at most max_parts parts, in reverse lexicographic
/// order (largest first).
std::vector<Partition> partitions_of(int n, int max_parts);

/// Dominance order: a <= b iff every partial sum of a is <= that of b.
bool dominated_by(const Partition& a, const Partition& b);

/// Rectangular partition (n^alpha); empty when n == 0 or alpha == 0.
Partition rectangle(int n, int alpha);

/// Monomial symmetric polynomial m_lambda(x_1..x_N).
template <ExactScalar S>
LaurentMPoly<S> monomial_symmetric(const Partition& lambda, int nvars) {
  if (static_cast<int>(lambda.size()) > nvars) throw std::invalid_argument("partition exceeds variable count");
  std::vector<int> e(lambda.begin(), lambda.end());
  e.resize(nvars, 0);
  std::sort(e.begin(), e.end());
  LaurentMPoly<S> m(nvars);
  do {
    m.add_term(LaurentMPoly<S>::make_exponent(e), S(1L));
  } while (std::next_permutation(e.begin(), e.end()));
  return m;
}

/// Schur polynomial s_lambda(x_1..x_N) as the ratio of the alternant
/// det(x_i^{lambda_j + N - j}) by the Vandermonde determinant.
template <ExactScalar S>
LaurentMPoly<S> schur_polynomial(const Partition& lambda, int nvars) {
  if (!is_partition(lambda)) throw std::invalid_argument("not a partition: " + partition_to_string(lambda));
  if (static_cast<int>(lambda.size()) > nvars) throw std::invalid_argument("partition exceeds variable count");
  if (nvars == 0) return LaurentMPoly<S>::constant(0, S(1L));
  std::vector<int> shifted(nvars, 0);
  for (int j = 0; j < nvars; ++j) shifted[j] = (j < static_cast<int>(lambda.size()) ? lambda[j] : 0) + nvars - 1 - j;
  std::vector<int> perm(nvars);
  for (int i = 0; i < nvars; ++i) perm[i] = i;
  LaurentMPoly<S> alternant(nvars);
  do {
    int inversions = 0;
    for (int i = 0; i < nvars; ++i)
      for (int j = i + 1; j < nvars; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = shifted[perm[i]];
    alternant.add_term(LaurentMPoly<S>::make_exponent(e), S(inversions % 2 == 0 ? 1L : -1L));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return alternant.divide_exact(vandermonde<S>(nvars));
}

/// Coefficients c_lambda with f = sum c_lambda s_lambda, found by repeatedly
/// stripping the leading monomial. The result is checked by reconstruction.
template <ExactScalar S>
std::vector<std::pair<Partition, S>> schur_expand(const LaurentMPoly<S>& f) {
  if (!f.is_polynomial()) throw std::invalid_argument("not a polynomial");
  if (!f.is_symmetric()) throw std::invalid_argument("not symmetric");
  const int n = f.nvars();
  std::vector<std::pair<Partition, S>> out;
  LaurentMPoly<S> rem = f;
  int budget = 0;
  for (int d = 0; d <= std::max(f.degree(), 0); ++d) budget += static_cast<int>(partitions_of(d, n).size());
  while (!rem.is_zero()) {
    if (budget-- <= 0) throw std::logic_error("schur_expand: degree bound exceeded");
    auto [e, c] = rem.leading_term();
    Partition lambda;
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) lambda.push_back(e[i]);
    if (!is_partition(lambda)) throw std::logic_error("schur_expand: leading exponent is not a partition");
    rem -= schur_polynomial<S>(lambda, n).scaled(c);
    out.emplace_back(std::move(lambda), c);
  }
  LaurentMPoly<S> check(n);
  for (const auto& [lambda, c] : out) check += schur_polynomial<S>(lambda, n).scaled(c);
  if (!(check == f)) throw std::logic_error("schur_expand: reconstruction mismatch");
  return out;
}

}  // namespace intcomb
