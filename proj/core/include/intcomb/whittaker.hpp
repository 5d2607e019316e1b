#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intcomb/rational.hpp"

/// Whittaker vectors in Verma modules of finite-type Kac-Moody algebras via
/// the path model: the coefficient of f_{i_1}...f_{i_k}|lambda> is
/// prod_i (d_i mu_i)^{beta_i} * prod_gamma 1/v(gamma), the product running over
/// the nonzero vertices of the path that adds alpha_{i_k}, alpha_{i_{k-1}}, ...,
/// alpha_{i_1} in turn, with v(gamma) = (lambda + rho | gamma) - (gamma|gamma)/2.
/// Generators are Chevalley ([e_i, f_i] = h_i), hence the d_i; in the
/// simply-laced case the prefactor is mu^beta.
///
/// Letters are 0-based internally; reports print them 1-based.
namespace intcomb::whittaker {

using Word = std::vector<int>;
using RootVector = std::vector<int>;  // coordinates in the simple roots

struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> a;  // a[i][j] = <alpha_i^vee, alpha_j>
  std::vector<int> d;               // symmetriser: d_i a_ij = (alpha_i|alpha_j)

  static CartanData type_a(int r);
  /// Accepts any finite-type symmetrisable Cartan matrix; throws
  /// std::invalid_argument otherwise.
  static CartanData from_matrix(std::vector<std::vector<int>> a);
  /// Types A, B, C, D, G (G requires rank 2).
  static CartanData of_type(char type, int rank);

  [[nodiscard]] Rational inner(const RootVector& x, const RootVector& y) const;
  /// Positive roots, ordered by height then lexicographically.
  [[nodiscard]] std::vector<RootVector> positive_roots() const;
  /// Number of ways to write beta as a sum of positive roots.
  [[nodiscard]] long kostant_partition(const RootVector& beta) const;
};

struct HighestWeight {
  std::vector<Rational> lambda;  // lambda_i = (lambda | alpha_i^vee)
  std::vector<Rational> mu;      // Whittaker parameters, nonzero
};

/// Parses "5/7,3/2" style lists.
std::vector<Rational> parse_rational_list(const std::string& text);

/// v(gamma); throws std::domain_error("non-generic weight") when it vanishes.
Rational vertex_value(const CartanData& cd, const HighestWeight& hw, const RootVector& gamma);

struct ConePath {
  Word word;
  RootVector endpoint;
  std::vector<RootVector> vertices;  // nonzero vertices, tail-first

  static ConePath from_word(const CartanData& cd, const Word& w);
};

Rational path_weight(const CartanData& cd, const HighestWeight& hw, const ConePath& p);

/// Linear combination of f-words acting on |lambda>.
using VermaElement = std::map<Word, Rational>;

std::string word_to_string(const Word& w, char letter = 'f');
std::string element_to_string(const VermaElement& v);

/// Words of length <= depth over the alphabet [0, rank), shortlex order.
std::vector<Word> words_up_to(int rank, int depth);

struct Perturbation {
  Word word;
  Rational factor{2};
};

/// sum over words of length <= depth of (d mu)^beta w(p(word)) word|lambda>.
VermaElement whittaker_expansion(const CartanData& cd, const HighestWeight& hw, int depth,
                                 const std::optional<Perturbation>& perturb = std::nullopt);

/// e_i f_{j_1}...f_{j_k}|lambda>.
VermaElement e_action(const CartanData& cd, const HighestWeight& hw, int i, const Word& w);
VermaElement e_action(const CartanData& cd, const HighestWeight& hw, int i, const VermaElement& v);

/// <lambda| e_{u_1}...e_{u_m} v, reducing right to left down to |lambda>.
Rational pairing(const CartanData& cd, const HighestWeight& hw, const Word& e_word, const VermaElement& v);

struct GramCertificate {
  RootVector beta;
  long rank = 0;
  long expected = 0;  // Kostant partition count = dim of the weight space
  [[nodiscard]] bool nonsingular() const { return rank == expected; }
};

struct PairingResidual {
  int generator = 0;
  Word e_word;
  Rational value;
};

struct WeightSpaceSummary {
  RootVector beta;
  long pairings = 0;
  long nonzero = 0;
};

struct WhittakerReport {
  bool pass = false;
  int rank = 0;
  int depth = 0;
  long pairings_checked = 0;
  long words_in_expansion = 0;
  std::vector<PairingResidual> nonzero;  // pairings that failed to vanish
  std::vector<GramCertificate> gram;
  std::vector<WeightSpaceSummary> weight_spaces;
  bool inconclusive = false;
};

/// Pairs every e-word u of length <= depth-1 against e_i v^{(depth)} - mu_i v^{(depth-1)}
/// for every i. Throws std::domain_error("verification inconclusive at this
/// lambda") if some Gram certificate fails.
WhittakerReport whittaker_defect(const CartanData& cd, const HighestWeight& hw, int depth,
                                 const std::optional<Perturbation>& perturb = std::nullopt);

}  // namespace intcomb::whittaker
