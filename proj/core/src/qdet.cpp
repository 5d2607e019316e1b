#include "intcomb/qdet.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "intcomb/asm.hpp"

namespace intcomb::qsystem {

namespace {

std::vector<ModeWord> collect(std::map<std::vector<int>, RationalFunction>&& acc) {
  std::vector<ModeWord> out;
  for (auto& [modes, c] : acc)
    if (!c.is_zero()) out.push_back({std::move(c), modes});
  return out;
}

}  // namespace

std::vector<ModeWord> qdet_expansion(const std::vector<int>& a, QdetMode mode) {
  const int k = static_cast<int>(a.size());
  if (k < 1) throw std::invalid_argument("empty mode vector");
  const auto q = RationalFunction::q();
  std::map<std::vector<int>, RationalFunction> acc;
  if (mode == QdetMode::Product) {
    // Each chosen pair i<j contributes -q u_j/u_i, shifting the mode of slot j
    // up and of slot i down.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<int> modes = a;
      int chosen = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!(mask >> p & 1u)) continue;
        ++chosen;
        ++modes[pairs[p].first];
        --modes[pairs[p].second];
      }
      acc[modes] += (-q).pow(chosen);
    }
  } else {
    asms::for_each_asm(k, [&](const asms::Asm& asm_matrix) {
      const auto st = asms::asm_stats(asm_matrix);
      std::vector<int> modes(k);
      for (int i = 0; i < k; ++i) modes[i] = a[i] + (k - 1 - i) - static_cast<int>(st.m[i]);
      acc[modes] += (-q).pow(static_cast<int>(st.inversions - st.minus_ones)) *
                    (RationalFunction(1) - q).pow(st.minus_ones);
    });
  }
  return collect(std::move(acc));
}

QPoly qdet_apply(const std::vector<int>& a, QdetMode mode, const QPoly& f) {
  QPoly out(f.nvars());
  for (const auto& w : qdet_expansion(a, mode)) {
    QPoly g = f;
    for (auto it = w.modes.rbegin(); it != w.modes.rend(); ++it) g = m_apply(1, *it, g);
    out += g.scaled(w.coefficient);
  }
  return out;
}

QdetReport quantum_determinant(const std::vector<int>& a, int nvars, int degree_cap, bool throw_on_mismatch) {
  const int k = static_cast<int>(a.size());
  if (k < 1 || k > 3) throw std::invalid_argument("alpha must be in [1, 3]");
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("N must be in [1, 3]");
  for (int x : a)
    if (std::abs(x) > 2) throw std::invalid_argument("mode entries must satisfy |a_i| <= 2");
  QdetReport rep;
  rep.a = a;
  rep.nvars = nvars;
  rep.product_words = static_cast<long>(qdet_expansion(a, QdetMode::Product).size());
  rep.asm_words = static_cast<long>(qdet_expansion(a, QdetMode::AsmSum).size());
  rep.constant_case = std::all_of(a.begin(), a.end(), [&](int x) { return x == a[0]; });
  rep.modes_agree = true;
  rep.matches_m = rep.constant_case;
  for (const auto& [mu, f] : monomial_test_family(nvars, degree_cap)) {
    ++rep.tests;
    const QPoly prod = qdet_apply(a, QdetMode::Product, f);
    const QPoly asm_sum = qdet_apply(a, QdetMode::AsmSum, f);
    if (!(prod == asm_sum)) rep.modes_agree = false;
    // M_{k,n} = 0 for k > N.
    if (rep.constant_case) {
      const QPoly direct = k <= nvars ? m_apply(k, a[0], f) : QPoly(nvars);
      if (!(direct == prod)) rep.matches_m = false;
    }
  }
  if (!rep.modes_agree && throw_on_mismatch) throw std::domain_error("quantum determinant identity violated");
  rep.pass = rep.modes_agree && (!rep.constant_case || rep.matches_m);
  return rep;
}

}  // namespace intcomb::qsystem
