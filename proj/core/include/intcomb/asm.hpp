#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

/// Alternating sign matrices and their six-vertex and osculating-path forms.
///
/// Conventions. Let r(i,j) be the partial sum of row i through column j and
/// c(i,j) the partial sum of column j through row i (0-based, rows counted
/// from the top). In the six-vertex picture the horizontal edge right of
/// vertex (i,j) points right iff r(i,j) = 0 and the vertical edge below it
/// points up iff c(i,j) = 0. An entry +1 is the vertex with both horizontal
/// arrows pointing in (W in, E in), -1 the one with both vertical arrows in.
/// Osculating paths occupy exactly the right-pointing horizontal and the
/// up-pointing vertical edges, run from the W boundary to the N boundary,
/// and at a vertex with all four edges occupied the path entering from W
/// turns north while the one entering from S turns east.
namespace intcomb::asms {

class Asm {
 public:
  /// Validates the alternating-sign constraints; throws std::invalid_argument.
  explicit Asm(std::vector<std::vector<int>> rows);

  static Asm identity(int n);
  static Asm antidiagonal(int n);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;
  [[nodiscard]] bool is_permutation() const;
  [[nodiscard]] Asm transposed() const;
  /// Reverses the column order (left-right mirror).
  [[nodiscard]] Asm mirrored() const;
  [[nodiscard]] std::string to_string() const;

  /// Column-partial-sum encoding: row k lists the columns whose partial sum
  /// through row k equals 1.
  [[nodiscard]] std::vector<std::vector<int>> monotone_triangle() const;

  friend bool operator==(const Asm& a, const Asm& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }
  friend bool operator<(const Asm& a, const Asm& b) {
    return a.monotone_triangle() < b.monotone_triangle();
  }

  static bool is_valid(const std::vector<std::vector<int>>& rows);

 private:
  Asm() = default;
  int n_ = 0;
  std::vector<std::int8_t> entries_;
};

inline constexpr int kMaxEnumerationSize = 7;

/// Streams every n x n ASM once, in lexicographic order of monotone
/// triangles. Throws for n outside [1, 7].
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);
std::vector<Asm> enumerate_asms(int n);

/// prod_{k=0}^{n-1} (3k+1)! / (n+k)!
mpz_class asm_count_formula(int n);

struct AsmStats {
  long inversions = 0;            // I(A) = sum_{i>k, j<l} A_{ij} A_{kl}
  int minus_ones = 0;             // N(A)
  std::vector<long> m;            // m_i(A) = (A v)_i, v = (n-1, ..., 1, 0)
};

AsmStats asm_stats(const Asm& a);

class SixVertexConfig {
 public:
  /// horizontal[i][j], j in [0, n]: edge left of vertex (i, j) (j = n is the E
  /// stub); true = arrow points right. vertical[i][j], i in [0, n]: edge above
  /// vertex (i, j) (i = n is the S stub); true = arrow points up.
  SixVertexConfig(int n, std::vector<std::vector<bool>> horizontal, std::vector<std::vector<bool>> vertical);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] bool points_right(int i, int j) const { return horizontal_[i][j]; }
  [[nodiscard]] bool points_up(int i, int j) const { return vertical_[i][j]; }
  [[nodiscard]] const std::vector<std::vector<bool>>& horizontal() const { return horizontal_; }
  [[nodiscard]] const std::vector<std::vector<bool>>& vertical() const { return vertical_; }

  /// Ice rule at every vertex plus domain-wall boundary arrows.
  [[nodiscard]] bool is_dwbc() const;

  friend bool operator==(const SixVertexConfig&, const SixVertexConfig&) = default;

 private:
  int n_;
  std::vector<std::vector<bool>> horizontal_;
  std::vector<std::vector<bool>> vertical_;
};

SixVertexConfig asm_to_sixvertex(const Asm& a);
/// Throws std::invalid_argument("not a DWBC configuration").
Asm sixvertex_to_asm(const SixVertexConfig& c);

struct LatticePath {
  int start_row = 0;                          // enters vertex (start_row, 0) from the W stub
  std::vector<std::pair<int, int>> vertices;  // (row, column), rows counted from the top
  int end_column = 0;                         // leaves vertex (0, end_column) through the N stub
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

struct OsculatingPaths {
  int n = 0;
  std::vector<LatticePath> paths;  // indexed by start row

  /// Vertices shared by two paths.
  [[nodiscard]] int osculations() const;
  friend bool operator==(const OsculatingPaths&, const OsculatingPaths&) = default;
};

OsculatingPaths asm_to_osculating(const Asm& a);
/// Throws std::invalid_argument when paths share an edge, cross, or leave the grid.
Asm osculating_to_asm(const OsculatingPaths& p);

struct LambdaDetReport {
  bool pass = false;
  int n = 0;
  long terms = 0;  // ASMs summed on the right-hand side
  long min_exponent = 0;  // min over A of I(A) - N(A)
  std::optional<std::string> mismatch;  // first differing monomial with both coefficients
  std::string lhs;
};

/// prod_{i<j} (v_i - q v_j) == sum_A (-q)^{I-N} (1-q)^N prod v_i^{m_i} as
/// polynomials in v_1..v_n and q. Valid for 1 <= n <= 5.
LambdaDetReport lambda_det_identity(int n);

}  // namespace intcomb::asms
