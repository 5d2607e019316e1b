#include "intcomb/whittaker.hpp"

#include <cctype>
#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace intcomb::whittaker {

namespace {

RootVector weight_of(int rank, const Word& w) {
  RootVector b(rank, 0);
  for (int letter : w) ++b[letter];
  return b;
}

// Exact rank by fraction-free-ish Gaussian elimination over Q.
long matrix_rank(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

void check_letter(const CartanData& cd, int i) {
  if (i < 0 || i >= cd.rank) throw std::invalid_argument("generator index out of range");
}

}  // namespace

CartanData CartanData::type_a(int r) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    a[i][i] = 2;
    if (i + 1 < r) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return from_matrix(a);
}

CartanData CartanData::of_type(char type, int r) {
  switch (type) {
    case 'A':
      return type_a(r);
    case 'B':
    case 'C': {
      if (r < 2) throw std::invalid_argument("types B and C need rank >= 2");
      auto cd = type_a(r);
      auto a = cd.a;
      // B: the last root is short; C is the transpose.
      if (type == 'B') a[r - 2][r - 1] = -2;
      else a[r - 1][r - 2] = -2;
      return from_matrix(a);
    }
    case 'D': {
      if (r < 4) throw std::invalid_argument("type D needs rank >= 4");
      auto a = type_a(r).a;
      a[r - 2][r - 1] = a[r - 1][r - 2] = 0;
      a[r - 3][r - 1] = a[r - 1][r - 3] = -1;
      return from_matrix(a);
    }
    case 'G':
      if (r != 2) throw std::invalid_argument("type G has rank 2");
      return from_matrix({{2, -1}, {-3, 2}});
    default:
      throw std::invalid_argument(std::string("unsupported Cartan type ") + type);
  }
}

CartanData CartanData::from_matrix(std::vector<std::vector<int>> a) {
  const int r = static_cast<int>(a.size());
  if (r < 1) throw std::invalid_argument("empty Cartan matrix");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(a[i].size()) != r) throw std::invalid_argument("Cartan matrix must be square");
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix must have 2 on the diagonal");
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && (a[i][j] > 0 || ((a[i][j] == 0) != (a[j][i] == 0))))
        throw std::invalid_argument("not a generalised Cartan matrix");
  // Symmetriser: propagate d_j = d_i a_ij / a_ji over each connected component.
  std::vector<Rational> d(r);
  std::vector<bool> seen(r, false);
  for (int s = 0; s < r; ++s) {
    if (seen[s]) continue;
    d[s] = Rational(1);
    seen[s] = true;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j) {
        if (i == j || a[i][j] == 0) continue;
        const Rational dj = d[i] * Rational(a[i][j], 1) / Rational(a[j][i], 1);
        if (!seen[j]) {
          d[j] = dj;
          seen[j] = true;
          stack.push_back(j);
        } else if (!(d[j] == dj)) {
          throw std::invalid_argument("Cartan matrix is not symmetrisable");
        }
      }
    }
  }
  mpz_class l = 1;
  for (const auto& x : d) l = lcm(l, x.denominator());
  CartanData cd;
  cd.rank = r;
  cd.a = std::move(a);
  for (const auto& x : d) cd.d.push_back(static_cast<int>(mpz_class(x.numerator() * (l / x.denominator())).get_si()));
  // Finite type: the symmetrised matrix is positive definite (leading minors > 0).
  std::vector<std::vector<Rational>> b(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) b[i][j] = Rational(cd.d[i] * cd.a[i][j]);
  for (int k = 0; k < r; ++k) {
    if (b[k][k].sign() <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
    for (int i = k + 1; i < r; ++i) {
      const Rational f = b[i][k] / b[k][k];
      for (int j = k; j < r; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return cd;
}

Rational CartanData::inner(const RootVector& x, const RootVector& y) const {
  long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += static_cast<long>(x[i]) * y[j] * d[i] * a[i][j];
  return Rational(s);
}

std::vector<RootVector> CartanData::positive_roots() const {
  std::vector<RootVector> roots;
  std::set<RootVector> known;
  std::vector<RootVector> level;
  for (int i = 0; i < rank; ++i) {
    RootVector e(rank, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    roots.insert(roots.end(), level.begin(), level.end());
    std::vector<RootVector> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank; ++i) {
        // alpha_i-string through beta: beta - p alpha_i ... beta + q alpha_i, p - q = <beta, alpha_i^vee>.
        int p = 0;
        for (;;) {
          RootVector down = beta;
          down[i] -= p + 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += a[i][j] * beta[j];
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  return roots;
}

long CartanData::kostant_partition(const RootVector& beta) const {
  const auto roots = positive_roots();
  std::map<std::pair<std::size_t, RootVector>, long> memo;
  std::function<long(std::size_t, const RootVector&)> count = [&](std::size_t k, const RootVector& rem) -> long {
    if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return 1;
    if (k == roots.size()) return 0;
    auto key = std::make_pair(k, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = count(k + 1, rem);
    RootVector r = rem;
    for (;;) {
      bool ok = true;
      for (int i = 0; i < rank; ++i) {
        r[i] -= roots[k][i];
        if (r[i] < 0) ok = false;
      }
      if (!ok) break;
      total += count(k + 1, r);
    }
    memo[key] = total;
    return total;
  };
  for (int x : beta)
    if (x < 0) return 0;
  return count(0, beta);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    out.push_back(Rational::parse(item));
  }
  return out;
}

Rational vertex_value(const CartanData& cd, const HighestWeight& hw, const RootVector& gamma) {
  Rational v(0);
  for (int i = 0; i < cd.rank; ++i) v += Rational(gamma[i] * cd.d[i]) * (hw.lambda[i] + Rational(1));
  v -= cd.inner(gamma, gamma) / Rational(2);
  if (v.is_zero()) throw std::domain_error("non-generic weight");
  return v;
}

ConePath ConePath::from_word(const CartanData& cd, const Word& w) {
  ConePath p;
  p.word = w;
  RootVector cur(cd.rank, 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    check_letter(cd, *it);
    ++cur[*it];
    p.vertices.push_back(cur);
  }
  p.endpoint = cur;
  return p;
}

Rational path_weight(const CartanData& cd, const HighestWeight& hw, const ConePath& p) {
  Rational w(1);
  for (const auto& gamma : p.vertices) w /= vertex_value(cd, hw, gamma);
  return w;
}

std::string word_to_string(const Word& w, char letter) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << letter << w[k] + 1;
  return os.str();
}

std::string element_to_string(const VermaElement& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : v) {
    if (c.is_zero()) continue;
    os << (first ? "" : " + ") << '(' << c << ")*" << word_to_string(w) << "|l>";
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<Word> words_up_to(int rank, int depth) {
  std::vector<Word> out{{}};
  std::vector<Word> layer{{}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int i = 0; i < rank; ++i) {
        Word x = w;
        x.push_back(i);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

VermaElement whittaker_expansion(const CartanData& cd, const HighestWeight& hw, int depth,
                                 const std::optional<Perturbation>& perturb) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (static_cast<int>(hw.lambda.size()) != cd.rank || static_cast<int>(hw.mu.size()) != cd.rank)
    throw std::invalid_argument("weight length does not match rank");
  VermaElement v;
  for (const auto& w : words_up_to(cd.rank, depth)) {
    Rational c = path_weight(cd, hw, ConePath::from_word(cd, w));
    for (int letter : w) c *= hw.mu[letter] * Rational(cd.d[letter]);
    if (perturb && perturb->word == w) c *= perturb->factor;
    v[w] = c;
  }
  return v;
}

VermaElement e_action(const CartanData& cd, const HighestWeight& hw, int i, const Word& w) {
  check_letter(cd, i);
  VermaElement out;
  // Walk from the right so the weight below position m is accumulated.
  Rational below = hw.lambda[i];
  for (int m = static_cast<int>(w.size()) - 1; m >= 0; --m) {
    if (w[m] == i && !below.is_zero()) {
      Word shorter = w;
      shorter.erase(shorter.begin() + m);
      out[shorter] += below;
    }
    below -= Rational(cd.a[i][w[m]]);
  }
  return out;
}

VermaElement e_action(const CartanData& cd, const HighestWeight& hw, int i, const VermaElement& v) {
  VermaElement out;
  for (const auto& [w, c] : v) {
    if (c.is_zero()) continue;
    for (const auto& [w2, c2] : e_action(cd, hw, i, w)) out[w2] += c * c2;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Rational pairing(const CartanData& cd, const HighestWeight& hw, const Word& e_word, const VermaElement& v) {
  // Only components of matching weight survive.
  const RootVector target = weight_of(cd.rank, e_word);
  VermaElement cur;
  for (const auto& [w, c] : v)
    if (weight_of(cd.rank, w) == target) cur[w] = c;
  for (auto it = e_word.rbegin(); it != e_word.rend() && !cur.empty(); ++it) cur = e_action(cd, hw, *it, cur);
  auto it = cur.find(Word{});
  return it == cur.end() ? Rational(0) : it->second;
}

WhittakerReport whittaker_defect(const CartanData& cd, const HighestWeight& hw, int depth,
                                 const std::optional<Perturbation>& perturb) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  WhittakerReport report;
  report.rank = cd.rank;
  report.depth = depth;

  // Genericity at every cone point up to the working depth.
  for (const auto& w : words_up_to(cd.rank, depth)) {
    if (w.empty() || !std::is_sorted(w.begin(), w.end())) continue;
    (void)vertex_value(cd, hw, weight_of(cd.rank, w));
  }

  const auto all_words = words_up_to(cd.rank, depth - 1);
  std::map<RootVector, std::vector<Word>> by_weight;
  for (const auto& w : all_words) by_weight[weight_of(cd.rank, w)].push_back(w);

  for (const auto& [beta, words] : by_weight) {
    std::vector<std::vector<Rational>> g(words.size(), std::vector<Rational>(words.size()));
    for (std::size_t r = 0; r < words.size(); ++r)
      for (std::size_t c = 0; c < words.size(); ++c) g[r][c] = pairing(cd, hw, words[r], VermaElement{{words[c], Rational(1)}});
    GramCertificate cert{beta, matrix_rank(std::move(g)), cd.kostant_partition(beta)};
    report.gram.push_back(cert);
    if (!cert.nonsingular()) report.inconclusive = true;
  }
  if (report.inconclusive) throw std::domain_error("verification inconclusive at this lambda");

  const VermaElement full = whittaker_expansion(cd, hw, depth, perturb);
  report.words_in_expansion = static_cast<long>(full.size());
  VermaElement shorter;
  for (const auto& [w, c] : full)
    if (static_cast<int>(w.size()) < depth) shorter[w] = c;

  std::map<RootVector, WeightSpaceSummary> summaries;
  for (int i = 0; i < cd.rank; ++i) {
    VermaElement defect = e_action(cd, hw, i, full);
    for (const auto& [w, c] : shorter) defect[w] -= hw.mu[i] * c;
    for (const auto& [beta, words] : by_weight) {
      auto& s = summaries[beta];
      s.beta = beta;
      for (const auto& u : words) {
        const Rational value = pairing(cd, hw, u, defect);
        ++s.pairings;
        ++report.pairings_checked;
        if (!value.is_zero()) {
          ++s.nonzero;
          report.nonzero.push_back({i, u, value});
        }
      }
    }
  }
  for (auto& [beta, s] : summaries) report.weight_spaces.push_back(s);
  report.pass = report.nonzero.empty();
  return report;
}

}  // namespace intcomb::whittaker
