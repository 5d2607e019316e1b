#include "intcomb/asm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "intcomb/mpoly.hpp"
#include "intcomb/ratfunc.hpp"

namespace intcomb::asms {

bool Asm::is_valid(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return false;
  std::vector<int> col(n, 0);
  for (const auto& row : rows) {
    if (row.size() != n) return false;
    int partial = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int v = row[j];
      if (v < -1 || v > 1) return false;
      partial += v;
      col[j] += v;
      if (partial < 0 || partial > 1 || col[j] < 0 || col[j] > 1) return false;
    }
    if (partial != 1) return false;
  }
  return std::all_of(col.begin(), col.end(), [](int c) { return c == 1; });
}

Asm::Asm(std::vector<std::vector<int>> rows) {
  if (!is_valid(rows)) throw std::invalid_argument("not an alternating sign matrix");
  n_ = static_cast<int>(rows.size());
  entries_.reserve(static_cast<std::size_t>(n_ * n_));
  for (const auto& row : rows)
    for (int v : row) entries_.push_back(static_cast<std::int8_t>(v));
}

Asm Asm::identity(int n) {
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return Asm(r);
}

Asm Asm::antidiagonal(int n) {
  std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) r[i][n - 1 - i] = 1;
  return Asm(r);
}

std::vector<std::vector<int>> Asm::rows() const {
  std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i][j] = at(i, j);
  return r;
}

bool Asm::is_permutation() const {
  return std::none_of(entries_.begin(), entries_.end(), [](std::int8_t v) { return v < 0; });
}

Asm Asm::transposed() const {
  Asm t;
  t.n_ = n_;
  t.entries_.resize(entries_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.entries_[static_cast<std::size_t>(j * n_ + i)] = entries_[static_cast<std::size_t>(i * n_ + j)];
  return t;
}

Asm Asm::mirrored() const {
  Asm t;
  t.n_ = n_;
  t.entries_.resize(entries_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t.entries_[static_cast<std::size_t>(i * n_ + (n_ - 1 - j))] = entries_[static_cast<std::size_t>(i * n_ + j)];
  return t;
}

std::string Asm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<std::vector<int>> Asm::monotone_triangle() const {
  std::vector<std::vector<int>> tri;
  std::vector<int> col(n_, 0);
  for (int i = 0; i < n_; ++i) {
    std::vector<int> row;
    for (int j = 0; j < n_; ++j) {
      col[j] += at(i, j);
      if (col[j] == 1) row.push_back(j);
    }
    tri.push_back(std::move(row));
  }
  return tri;
}

namespace {

// Builds row k+1 of a monotone triangle interlacing row k (values in [0, n)).
void extend(int n, std::vector<std::vector<int>>& tri, std::vector<int>& cur, std::size_t pos,
            const std::function<void(const Asm&)>& visit) {
  const auto& above = tri.back();
  const std::size_t len = above.size() + 1;
  if (pos == len) {
    tri.push_back(cur);
    if (static_cast<int>(len) == n) {
      std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
      std::vector<int> prev(n, 0);
      for (int i = 0; i < n; ++i) {
        std::vector<int> now(n, 0);
        for (int j : tri[static_cast<std::size_t>(i + 1)]) now[j] = 1;
        for (int j = 0; j < n; ++j) rows[i][j] = now[j] - prev[j];
        prev = now;
      }
      visit(Asm(rows));
    } else {
      std::vector<int> next;
      next.reserve(len + 1);
      extend(n, tri, next, 0, visit);
    }
    tri.pop_back();
    return;
  }
  int lo = pos == 0 ? 0 : std::max(above[pos - 1], cur.back() + 1);
  int hi = pos < above.size() ? above[pos] : n - 1;
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    extend(n, tri, cur, pos + 1, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
  if (n < 1 || n > kMaxEnumerationSize) throw std::invalid_argument("size too large for exhaustive enumeration");
  std::vector<std::vector<int>> tri{{}};
  std::vector<int> cur;
  extend(n, tri, cur, 0, visit);
}

std::vector<Asm> enumerate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

mpz_class asm_count_formula(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  mpz_class num = 1, den = 1;
  for (int k = 0; k < n; ++k) {
    num *= factorial(3 * k + 1);
    den *= factorial(n + k);
  }
  return num / den;
}

AsmStats asm_stats(const Asm& a) {
  const int n = a.size();
  AsmStats s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x = a.at(i, j);
      if (x == 0) continue;
      if (x < 0) ++s.minus_ones;
      for (int k = 0; k < i; ++k)
        for (int l = j + 1; l < n; ++l) s.inversions += x * a.at(k, l);
    }
  s.m.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.m[i] += static_cast<long>(a.at(i, j)) * (n - 1 - j);
  return s;
}

// ---------------------------------------------------------------------------
// Six-vertex configurations.

SixVertexConfig::SixVertexConfig(int n, std::vector<std::vector<bool>> horizontal,
                                 std::vector<std::vector<bool>> vertical)
    : n_(n), horizontal_(std::move(horizontal)), vertical_(std::move(vertical)) {
  if (n_ < 1 || static_cast<int>(horizontal_.size()) != n_ || static_cast<int>(vertical_.size()) != n_ + 1)
    throw std::invalid_argument("six-vertex configuration has wrong shape");
  for (const auto& r : horizontal_)
    if (static_cast<int>(r.size()) != n_ + 1) throw std::invalid_argument("six-vertex configuration has wrong shape");
  for (const auto& r : vertical_)
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("six-vertex configuration has wrong shape");
}

bool SixVertexConfig::is_dwbc() const {
  for (int i = 0; i < n_; ++i)
    if (!horizontal_[i][0] || horizontal_[i][n_]) return false;
  for (int j = 0; j < n_; ++j)
    if (!vertical_[0][j] || vertical_[n_][j]) return false;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const int in = static_cast<int>(horizontal_[i][j]) + static_cast<int>(!horizontal_[i][j + 1]) +
                     static_cast<int>(!vertical_[i][j]) + static_cast<int>(vertical_[i + 1][j]);
      if (in != 2) return false;
    }
  }
  return true;
}

SixVertexConfig asm_to_sixvertex(const Asm& a) {
  const int n = a.size();
  std::vector<std::vector<bool>> h(n, std::vector<bool>(n + 1, true));
  std::vector<std::vector<bool>> v(n + 1, std::vector<bool>(n, true));
  std::vector<int> col(n, 0);
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int j = 0; j < n; ++j) {
      row += a.at(i, j);
      col[j] += a.at(i, j);
      h[i][j + 1] = row == 0;
      v[i + 1][j] = col[j] == 0;
    }
  }
  return {n, std::move(h), std::move(v)};
}

Asm sixvertex_to_asm(const SixVertexConfig& c) {
  if (!c.is_dwbc()) throw std::invalid_argument("not a DWBC configuration");
  const int n = c.size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = static_cast<int>(!c.points_right(i, j + 1)) - static_cast<int>(!c.points_right(i, j));
  return Asm(rows);
}

// ---------------------------------------------------------------------------
// Osculating paths.

int OsculatingPaths::osculations() const {
  std::map<std::pair<int, int>, int> visits;
  for (const auto& p : paths)
    for (const auto& v : p.vertices) ++visits[v];
  int count = 0;
  for (const auto& [v, k] : visits)
    if (k == 2) ++count;
  return count;
}

OsculatingPaths asm_to_osculating(const Asm& a) {
  const auto c = asm_to_sixvertex(a);
  const int n = a.size();
  // Occupied edges: right-pointing horizontals, up-pointing verticals.
  auto west = [&](int i, int j) { return c.points_right(i, j); };
  auto east = [&](int i, int j) { return c.points_right(i, j + 1); };
  auto north = [&](int i, int j) { return c.points_up(i, j); };
  OsculatingPaths out;
  out.n = n;
  for (int start = 0; start < n; ++start) {
    LatticePath p;
    p.start_row = start;
    int i = start, j = 0;
    bool from_west = true;
    for (;;) {
      p.vertices.emplace_back(i, j);
      if (!(from_west ? west(i, j) : true)) throw std::logic_error("osculating path entered an empty edge");
      const bool go_north = from_west ? north(i, j) : !east(i, j);
      if (go_north) {
        if (i == 0) {
          p.end_column = j;
          break;
        }
        --i;
        from_west = false;
      } else {
        if (j + 1 >= n) throw std::logic_error("osculating path left through the E boundary");
        ++j;
        from_west = true;
      }
    }
    out.paths.push_back(std::move(p));
  }
  return out;
}

Asm osculating_to_asm(const OsculatingPaths& p) {
  const int n = p.n;
  if (n < 1 || static_cast<int>(p.paths.size()) != n) throw std::invalid_argument("wrong number of osculating paths");
  // Occupancy of horizontal edge (i, j) = left of vertex (i, j); vertical (i, j) = above vertex (i, j).
  std::vector<std::vector<int>> h(n, std::vector<int>(n + 1, 0));
  std::vector<std::vector<int>> v(n + 1, std::vector<int>(n, 0));
  std::map<std::pair<int, int>, std::vector<std::pair<char, char>>> moves;  // vertex -> (entry, exit)
  for (const auto& path : p.paths) {
    if (path.vertices.empty() || path.vertices.front() != std::make_pair(path.start_row, 0) ||
        path.vertices.back() != std::make_pair(0, path.end_column))
      throw std::invalid_argument("path does not run from the W to the N boundary");
    ++h[path.start_row][0];
    char entry = 'W';
    for (std::size_t k = 0; k < path.vertices.size(); ++k) {
      const auto [i, j] = path.vertices[k];
      if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("path leaves the grid");
      char exit = 'N';
      if (k + 1 < path.vertices.size()) {
        const auto [i2, j2] = path.vertices[k + 1];
        if (i2 == i && j2 == j + 1) {
          exit = 'E';
          ++h[i][j + 1];
        } else if (i2 == i - 1 && j2 == j) {
          exit = 'N';
          ++v[i][j];
        } else {
          throw std::invalid_argument("path step is not (1,0) or (0,1)");
        }
      } else {
        ++v[0][j];
      }
      moves[{i, j}].emplace_back(entry, exit);
      entry = exit == 'E' ? 'W' : 'S';
    }
  }
  for (const auto& row : h)
    for (int x : row)
      if (x > 1) throw std::invalid_argument("paths share an edge");
  for (const auto& row : v)
    for (int x : row)
      if (x > 1) throw std::invalid_argument("paths share an edge");
  for (const auto& [vertex, m] : moves) {
    if (m.size() == 2) {
      for (const auto& [entry, exit] : m)
        if ((entry == 'W' && exit != 'N') || (entry == 'S' && exit != 'E'))
          throw std::invalid_argument("paths cross instead of osculating");
    }
  }
  std::vector<std::vector<bool>> hb(n, std::vector<bool>(n + 1)), vb(n + 1, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= n; ++j) hb[i][j] = h[i][j] == 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < n; ++j) vb[i][j] = v[i][j] == 1;
  return sixvertex_to_asm(SixVertexConfig(n, std::move(hb), std::move(vb)));
}

// ---------------------------------------------------------------------------

LambdaDetReport lambda_det_identity(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("lambda_det_identity supports 1 <= n <= 5");
  using S = RationalFunction;
  using P = LaurentMPoly<S>;
  const S q = S::q();
  LambdaDetReport report;
  report.n = n;
  P lhs = P::constant(n, S(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lhs *= P::variable(n, i) - P::variable(n, j).scaled(q);
  P rhs(n);
  bool first = true;
  for_each_asm(n, [&](const Asm& a) {
    const AsmStats s = asm_stats(a);
    const long e = s.inversions - s.minus_ones;
    report.min_exponent = first ? e : std::min(report.min_exponent, e);
    first = false;
    const S weight = (-q).pow(static_cast<int>(e)) * (S(1) - q).pow(s.minus_ones);
    std::vector<int> exps(s.m.begin(), s.m.end());
    rhs.add_term(P::make_exponent(exps), weight);
    ++report.terms;
  });
  report.lhs = lhs.to_string();
  const P diff = lhs - rhs;
  if (!diff.is_zero()) {
    const auto [e, c] = diff.leading_term();
    std::ostringstream os;
    os << "x^[";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << e[i];
    os << "]: lhs " << lhs.coefficient(e).to_string() << ", rhs " << rhs.coefficient(e).to_string();
    report.mismatch = os.str();
  }
  report.pass = diff.is_zero();
  return report;
}

}  // namespace intcomb::asms
