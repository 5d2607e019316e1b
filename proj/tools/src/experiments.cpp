#include "intcomb_cli/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "intcomb/asm.hpp"
#include "intcomb/geodesic.hpp"
#include "intcomb/lorentzian.hpp"
#include "intcomb/macdonald.hpp"
#include "intcomb/qdet.hpp"
#include "intcomb/qsystem.hpp"
#include "intcomb/whittaker.hpp"

namespace intcomb::cli {

namespace {

int bounded(const std::optional<int>& v, int def, int lo, int hi, const char* flag) {
  const int x = v.value_or(def);
  if (x < lo || x > hi) {
    std::ostringstream os;
    os << flag << " must be in [" << lo << ", " << hi << "], got " << x;
    throw UsageError(os.str());
  }
  return x;
}

Rational rational_flag(const std::optional<std::string>& v, const char* def, const char* flag) {
  try {
    return Rational::parse(v.value_or(def));
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": not a rational number: " + v.value_or(def));
  }
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
  const int n = num(rng);
  return Rational(sign(rng) ? -n : n, den(rng));
}

Json series_head(const geodesic::Series& s, int upto) {
  Json out = Json::array();
  for (int k = 0; k <= upto; ++k) out.push_back(s.coefficient(k).to_string());
  return out;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// --- lorentzian ---------------------------------------------------------

ExperimentReport lorentzian_genfun(const Options& o) {
  using namespace lorentzian;
  using lorentzian::to_string;
  ExperimentReport rep;
  const int order = bounded(o.order, 10, 0, 40, "--order");
  std::vector<LorentzParams> points;
  if (o.g || o.a) {
    points.push_back({rational_flag(o.g, "1/10", "--g"), rational_flag(o.a, "1/2", "--a")});
    if (points[0].a.is_zero() || points[0].g.is_zero()) throw UsageError("--g and --a must be nonzero");
  } else {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < 5; ++k) {
      const Rational g = random_nonzero_rational(rng);
      points.push_back({g, random_nonzero_rational(rng)});
    }
  }
  rep.params = {{"order", order}, {"seed", o.seed}};
  if (o.g || o.a) {
    rep.params["g"] = points[0].g.to_string();
    rep.params["a"] = points[0].a.to_string();
  }
  bool all = true;
  Json cases = Json::array();
  for (const auto& p : points) {
    const auto r = genfun_check(p, order);
    all = all && r.pass;
    Json c = {{"g", p.g.to_string()}, {"a", p.a.to_string()}, {"pass", r.pass}, {"coefficients", r.coefficients_checked}};
    if (r.first_mismatch)
      c["mismatch"] = {{"i", r.first_mismatch->first}, {"j", r.first_mismatch->second}, {"expected", r.expected}, {"actual", r.actual}};
    cases.push_back(c);
  }
  const bool control_detected = order < 2 || !genfun_check(points[0], order, GenfunVariant::FlippedCrossTerm).pass;
  rep.details = {{"cases", cases}, {"flipped_sign_control_detected", control_detected}};
  rep.status = all && control_detected ? Status::Pass : Status::Fail;
  rep.summary = std::to_string(points.size()) + " parameter pairs through total order " + std::to_string(order) +
                (all ? ", exact" : ", MISMATCH") + (control_detected ? "; control detected" : "; control NOT detected");
  return rep;
}

ExperimentReport lorentzian_commute(const Options& o) {
  using namespace lorentzian;
  using lorentzian::to_string;
  ExperimentReport rep;
  const LorentzParams p1{rational_flag(o.g, "1/10", "--g"), rational_flag(o.a, "1/2", "--a")};
  const Rational a2 = rational_flag(o.a2, "2/3", "--a2");
  const int size = bounded(o.size, 40, 2, 200, "--size");
  const int window = bounded(o.window, 10, 1, size, "--window");
  rep.params = {{"g", p1.g.to_string()}, {"a", p1.a.to_string()}, {"a2", a2.to_string()}, {"size", size}, {"window", window}};
  const auto conj = conjugate_parameter(p1, a2);
  const auto r = commutation_residual(TransferParams::from_exact(p1), conj.params(), size, window);
  const auto control = commutation_residual(TransferParams::from_exact(p1), TransferParams::from_exact({p1.g, a2}), size, window);
  const HighFloat bound = control.tolerance + control.tail_bound;
  const HighFloat ratio = control.residual / bound;
  const bool control_ok = ratio >= HighFloat(1000);
  rep.details = {
      {"conjugate_g", conj.g_exact ? conj.g_exact->to_string() : to_string(conj.g.midpoint(), 30)},
      {"conjugate_exact", conj.g_exact.has_value()},
      {"phi_mismatch", to_string(conj.phi_mismatch)},
      {"residual", to_string(r.residual)},
      {"tail_bound", to_string(r.tail_bound)},
      {"tolerance", to_string(r.tolerance)},
      {"argmax", {r.argmax.first, r.argmax.second}},
      {"control", {{"g", p1.g.to_string()}, {"a", a2.to_string()}, {"residual", to_string(control.residual)},
                   {"bound", to_string(bound)}, {"ratio", to_string(ratio)}}},
  };
  rep.status = r.pass && control_ok ? Status::Pass : Status::Fail;
  rep.summary = "residual " + to_string(r.residual) + " (tail " + to_string(r.tail_bound) + "); control ratio " +
                to_string(ratio);
  return rep;
}

// --- geodesic -----------------------------------------------------------

ExperimentReport geodesic_soliton(const Options& o) {
  using namespace geodesic;
  ExperimentReport rep;
  const int order = bounded(o.order, 20, 0, 40, "--order");
  const int nmax = bounded(o.nmax, 8, 0, 30, "--nmax");
  rep.params = {{"order", order}, {"nmax", nmax}};
  bool recursion_ok = true;
  Json residuals = Json::array();
  for (int n = 0; n <= nmax; ++n) {
    const auto res = recursion_residual(n, order).truncated(order);
    const bool zero = res.is_zero();
    recursion_ok = recursion_ok && zero;
    residuals.push_back({{"n", n}, {"zero", zero}});
  }
  const Series r = limit_gf(order);
  const bool r_oracle = !r.first_difference(limit_gf_by_iteration(order)).has_value();
  bool r_head = true;
  const long expected_head[] = {1, 3, 18, 135};
  for (int k = 0; k < 4 && k <= order; ++k) r_head = r_head && r.coefficient(k) == Rational(expected_head[k]);
  const int oracle_order = std::min(order, 12);
  const int oracle_n = std::max(nmax, oracle_order);
  const auto oracle = fixed_point_oracle(oracle_n, oracle_order);
  const auto fam = build_family(oracle_n, oracle_order);
  bool oracle_ok = true;
  for (int n = 0; n <= nmax; ++n) oracle_ok = oracle_ok && !oracle[n].first_difference(fam.at(n)).has_value();
  rep.details = {{"recursion", residuals},
                 {"r_head", series_head(r, std::min(order, 5))},
                 {"r_matches_iteration", r_oracle},
                 {"x_head", series_head(soliton_x(std::min(order, 5)), std::min(order, 5))},
                 {"fixed_point_oracle", {{"order", oracle_order}, {"match", oracle_ok}}}};
  const bool ok = recursion_ok && r_oracle && r_head && oracle_ok;
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::string("recursion ") + pass_fail(recursion_ok) + " for n<=" + std::to_string(nmax) +
                ", R head " + pass_fail(r_head && r_oracle) + ", fixed-point oracle " + pass_fail(oracle_ok);
  return rep;
}

ExperimentReport geodesic_conserve(const Options& o) {
  using namespace geodesic;
  ExperimentReport rep;
  const int order = bounded(o.order, 20, 0, 40, "--order");
  const int nmax = bounded(o.nmax, 8, 1, 30, "--nmax");
  rep.params = {{"order", order}, {"nmax", nmax}};
  const auto r = conserved_phi_check(nmax, order);
  rep.details = {{"common_value_head", series_head(r.common_value, std::min(order, 5))}};
  if (r.failing_n) rep.details["failing_n"] = *r.failing_n;
  if (r.failing_order) rep.details["failing_order"] = *r.failing_order;
  rep.status = r.pass ? Status::Pass : Status::Fail;
  rep.summary = "phi(R_n, R_{n+1}) n-independent through order " + std::to_string(order) + ": " + pass_fail(r.pass);
  return rep;
}

// --- asm ----------------------------------------------------------------

ExperimentReport asm_count(const Options& o) {
  ExperimentReport rep;
  const int size = bounded(o.size, 6, 1, asms::kMaxEnumerationSize, "--size");
  rep.params = {{"size", size}};
  Json counts = Json::array(), formula = Json::array();
  bool ok = true;
  long last = 0;
  for (int n = 1; n <= size; ++n) {
    long c = 0;
    asms::for_each_asm(n, [&](const asms::Asm&) { ++c; });
    const mpz_class f = asms::asm_count_formula(n);
    ok = ok && f == c;
    counts.push_back(c);
    formula.push_back(f.get_str());
    last = c;
  }
  rep.details = {{"counts", counts}, {"formula", formula}, {"count", last}};
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = "|ASM_" + std::to_string(size) + "| = " + std::to_string(last) + (ok ? ", matches" : ", MISMATCH") +
                " product formula";
  return rep;
}

ExperimentReport asm_bijection(const Options& o) {
  ExperimentReport rep;
  const int size = bounded(o.size, 5, 1, 6, "--size");
  rep.params = {{"size", size}};
  Json per_n = Json::array();
  bool ok = true;
  for (int n = 1; n <= size; ++n) {
    long objects = 0, bad = 0;
    std::optional<std::string> first_bad;
    asms::for_each_asm(n, [&](const asms::Asm& a) {
      ++objects;
      const auto six = asms::asm_to_sixvertex(a);
      const auto paths = asms::asm_to_osculating(a);
      const bool good = six.is_dwbc() && asms::sixvertex_to_asm(six) == a && asms::osculating_to_asm(paths) == a;
      if (!good) {
        ++bad;
        if (!first_bad) first_bad = a.to_string();
      }
    });
    ok = ok && bad == 0;
    Json row = {{"n", n}, {"objects", objects}, {"failures", bad}};
    if (first_bad) row["first_failure"] = *first_bad;
    per_n.push_back(row);
  }
  rep.details = {{"round_trips", per_n}};
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::string("ASM <-> six-vertex <-> osculating paths round trips for n<=") + std::to_string(size) + ": " +
                pass_fail(ok);
  return rep;
}

ExperimentReport asm_lambdadet(const Options& o) {
  ExperimentReport rep;
  const int size = bounded(o.size, 5, 1, 5, "--size");
  rep.params = {{"size", size}};
  Json per_n = Json::array();
  bool ok = true;
  for (int n = 1; n <= size; ++n) {
    const auto r = asms::lambda_det_identity(n);
    ok = ok && r.pass;
    Json row = {{"n", n}, {"terms", r.terms}, {"pass", r.pass}, {"min_exponent", r.min_exponent}};
    if (r.mismatch) row["mismatch"] = *r.mismatch;
    per_n.push_back(row);
  }
  rep.details = {{"sizes", per_n}};
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::string("prod (v_i - q v_j) = ASM sum for n<=") + std::to_string(size) + ": " + pass_fail(ok);
  return rep;
}

// --- whittaker ----------------------------------------------------------

ExperimentReport whittaker_verify(const Options& o) {
  using namespace whittaker;
  ExperimentReport rep;
  const std::string type = o.type.value_or("A");
  if (type.size() != 1) throw UsageError("--type must be a single letter");
  const int rank = bounded(o.rank, 2, 1, 8, "--rank");
  const int depth = bounded(o.depth, 4, 0, 8, "--depth");
  static const char* kDefaultLambda[] = {"5/7", "3/2", "2/9", "7/4", "1/11", "9/5", "4/13", "11/6"};
  std::string lambda_text, mu_text;
  for (int i = 0; i < rank; ++i) {
    lambda_text += (i ? "," : "") + std::string(kDefaultLambda[i]);
    mu_text += i ? ",1" : "1";
  }
  lambda_text = o.lambda.value_or(lambda_text);
  mu_text = o.mu.value_or(mu_text);
  HighestWeight hw;
  try {
    hw = {parse_rational_list(lambda_text), parse_rational_list(mu_text)};
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda/--mu: ") + e.what());
  }
  if (static_cast<int>(hw.lambda.size()) != rank || static_cast<int>(hw.mu.size()) != rank)
    throw UsageError("--lambda and --mu need exactly rank entries");
  for (const auto& m : hw.mu)
    if (m.is_zero()) throw UsageError("--mu entries must be nonzero");
  const CartanData cd = CartanData::of_type(type[0], rank);
  rep.params = {{"type", type}, {"rank", rank}, {"depth", depth}, {"lambda", lambda_text}, {"mu", mu_text}};
  const auto r = whittaker_defect(cd, hw, depth);
  Json spaces = Json::array();
  for (const auto& ws : r.weight_spaces) spaces.push_back({{"beta", ws.beta}, {"pairings", ws.pairings}, {"nonzero", ws.nonzero}});
  Json gram = Json::array();
  bool gram_ok = true;
  for (const auto& g : r.gram) {
    gram_ok = gram_ok && g.nonsingular();
    gram.push_back({{"beta", g.beta}, {"rank", g.rank}, {"expected", g.expected}});
  }
  Json nonzero = Json::array();
  for (const auto& p : r.nonzero)
    nonzero.push_back({{"generator", p.generator + 1}, {"e_word", word_to_string(p.e_word, 'e')}, {"value", p.value.to_string()}});
  bool control_detected = true;
  if (depth >= 1) control_detected = !whittaker_defect(cd, hw, depth, Perturbation{{0}, Rational(2)}).pass;
  rep.details = {{"pairings_checked", r.pairings_checked},
                 {"words_in_expansion", r.words_in_expansion},
                 {"weight_spaces", spaces},
                 {"gram", gram},
                 {"nonzero", nonzero},
                 {"perturbation_control_detected", control_detected}};
  const bool ok = r.pass && gram_ok && control_detected;
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = type + std::to_string(rank) + " depth " + std::to_string(depth) + ": " +
                std::to_string(r.pairings_checked) + " pairings, " + std::to_string(r.nonzero.size()) + " nonzero" +
                (control_detected ? "; control detected" : "; control NOT detected");
  return rep;
}

// --- qsystem ------------------------------------------------------------

ExperimentReport qsystem_classical(const Options& o) {
  using namespace qsystem;
  ExperimentReport rep;
  const int nvars = bounded(o.nvars, 4, 2, 4, "--nvars");
  const int nmax = bounded(o.nmax, 4, 1, 4, "--nmax");
  rep.params = {{"nvars", nvars}, {"nmax", nmax}, {"seed", o.seed}};
  bool ok = true;
  Json per_n = Json::array();
  for (int n = 2; n <= nvars; ++n) {
    const auto r = classical_qsystem_check(n, nmax);
    ok = ok && r.pass;
    Json row = {{"N", n}, {"identities", r.identities_checked}, {"pass", r.pass}};
    if (r.failing_alpha) row["failure"] = {{"alpha", *r.failing_alpha}, {"n", *r.failing_n}, {"monomial", r.first_bad_monomial}};
    per_n.push_back(row);
  }
  Json conserved = Json::array();
  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<Rational, Rational>> seeds{{Rational(1), Rational(2)}};
  for (int k = 0; k < 3; ++k) {
    const Rational q0 = random_nonzero_rational(rng);
    seeds.emplace_back(q0, random_nonzero_rational(rng));
  }
  for (const auto& [q0, q1] : seeds) {
    Json row = {{"q0", q0.to_string()}, {"q1", q1.to_string()}};
    try {
      const auto c = a1_conserved_quantity(q0, q1, 8);
      ok = ok && c.pass;
      row["constant"] = c.values.front().to_string();
      row["pass"] = c.pass;
    } catch (const std::domain_error& e) {
      row["skipped"] = e.what();
    }
    conserved.push_back(row);
  }
  rep.details = {{"q_system", per_n}, {"a1_conserved", conserved}};
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = "Q-system on rectangular Schur polynomials for N<=" + std::to_string(nvars) + ": " + pass_fail(ok);
  return rep;
}

ExperimentReport qsystem_operators(const Options& o) {
  using namespace qsystem;
  ExperimentReport rep;
  const int nvars = bounded(o.nvars, 3, 1, 3, "--nvars");
  const int cap = bounded(o.degree_cap, 4, 0, 6, "--degree-cap");
  rep.params = {{"nvars", nvars}, {"degree_cap", cap}};
  bool ok = true;
  Json per_n = Json::array();
  for (int n = 1; n <= nvars; ++n) {
    const auto r = msystem_relations_check(n, cap);
    ok = ok && r.pass;
    Json row = {{"N", n},
                {"exchange_checked", r.exchange_checked},
                {"quantum_q_checked", r.quantum_q_checked},
                {"symmetric_outputs", r.symmetric_outputs},
                {"pass", r.pass}};
    if (r.failure)
      row["failure"] = {{"relation", r.failure->relation}, {"alpha", r.failure->alpha}, {"beta", r.failure->beta},
                        {"n", r.failure->n}, {"test", partition_to_string(r.failure->test)}};
    per_n.push_back(row);
  }
  rep.details = {{"msystem", per_n}};
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = "M-system exchange and quantum Q-system relations for N<=" + std::to_string(nvars) + ", degree<=" +
                std::to_string(cap) + ": " + pass_fail(ok);
  return rep;
}

Json graded_json(const qsystem::GradedCharSpec& spec) {
  using namespace qsystem;
  const auto g = graded_character(spec);
  Json coeffs = Json::array();
  for (const auto& [lam, c] : g.schur_coefficients) coeffs.push_back({{"lambda", partition_to_string(lam)}, {"q_coefficient", c.to_string()}});
  return {{"N", spec.nvars},
          {"occupation", spec.occupation},
          {"a", g.a},
          {"schur_expansion", coeffs},
          {"q_equals_1_matches", at_q_equals_one(g.chi_q) == ungraded_character(spec)},
          {"positive", g.positive},
          {"factor_order_matters", factor_order_matters(spec)}};
}

qsystem::GradedCharSpec parse_spec(const std::string& text) {
  qsystem::GradedCharSpec spec;
  try {
    const auto j = Json::parse(text);
    spec.nvars = j.at("N").get<int>();
    spec.occupation = j.at("occupation").get<std::vector<std::vector<int>>>();
    spec.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("--spec: ") + e.what());
  }
  if (spec.nvars > 4) throw UsageError("--spec: N must be <= 4");
  return spec;
}

ExperimentReport qsystem_graded_char(const Options& o) {
  using namespace qsystem;
  ExperimentReport rep;
  if (o.spec) {
    const auto spec = parse_spec(*o.spec);
    rep.params = {{"spec", Json::parse(*o.spec)}};
    rep.details = graded_json(spec);
    const bool ok = rep.details["q_equals_1_matches"].get<bool>();
    rep.status = ok ? Status::Pass : Status::Fail;
    rep.summary = std::string("graded character a=") + std::to_string(rep.details["a"].get<long>()) +
                  ", q=1 " + pass_fail(ok) + ", positive=" + (rep.details["positive"].get<bool>() ? "yes" : "no");
    return rep;
  }
  const int nvars = bounded(o.nvars, 3, 2, 3, "--nvars");
  const int nmax = bounded(o.nmax, 3, 1, 3, "--nmax");
  rep.params = {{"nvars", nvars}, {"nmax", nmax}};
  bool single_ok = true;
  Json singles = Json::array();
  for (int a = 1; a <= std::min(2, nvars - 1); ++a) {
    for (int n = 1; n <= nmax; ++n) {
      GradedCharSpec spec{nvars, std::vector<std::vector<int>>(a)};
      spec.occupation[a - 1] = std::vector<int>(n, 0);
      spec.occupation[a - 1][n - 1] = 1;
      const auto g = graded_character(spec);
      const QPoly rect = map_coefficients<RationalFunction>(rect_char(a, n, nvars),
                                                            [](const Rational& c) { return RationalFunction(c); });
      const bool ok = g.a == 0 && g.chi_q == rect;
      single_ok = single_ok && ok;
      singles.push_back({{"alpha", a}, {"n", n}, {"pass", ok}});
    }
  }
  std::vector<GradedCharSpec> multi{{nvars, {{2}}}, {nvars, {{1, 1}}}, {nvars, {{3}}}, {nvars, {{1}, {0, 1}}},
                                    {nvars, {{2, 1}}}, {nvars, {{1, 1, 1}}}};
  if (nvars >= 3) {
    multi.push_back({nvars, {{1}, {1}}});
    multi.push_back({nvars, {{2}, {1}}});
    multi.push_back({nvars, {{1, 1}, {1}}});
  }
  bool q1_ok = true, positive = true;
  Json products = Json::array();
  for (const auto& spec : multi) {
    Json row = graded_json(spec);
    q1_ok = q1_ok && row["q_equals_1_matches"].get<bool>();
    positive = positive && row["positive"].get<bool>();
    products.push_back(row);
  }
  rep.details = {{"single_factor", singles}, {"products", products}, {"all_positive", positive}};
  const bool ok = single_ok && q1_ok;
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::string("single factors ") + pass_fail(single_ok) + ", q=1 products " + pass_fail(q1_ok) +
                ", positivity " + (positive ? "holds" : "violated (reported)");
  return rep;
}

ExperimentReport qsystem_qdet(const Options& o) {
  using namespace qsystem;
  ExperimentReport rep;
  const int nvars = bounded(o.nvars, 3, 1, 3, "--nvars");
  const int rank = bounded(o.rank, 3, 1, 3, "--rank");
  const int window = bounded(o.window, 1, 0, 2, "--window");
  const int cap = bounded(o.degree_cap, 2, 0, 4, "--degree-cap");
  rep.params = {{"nvars", nvars}, {"rank", rank}, {"window", window}, {"degree_cap", cap}};
  bool ok = true;
  long vectors = 0, constant = 0;
  Json failures = Json::array();
  for (int k = 1; k <= rank; ++k) {
    std::vector<int> a(k, -window);
    for (;;) {
      const auto r = quantum_determinant(a, nvars, cap);
      ++vectors;
      if (r.constant_case) ++constant;
      if (!r.pass) {
        ok = false;
        failures.push_back({{"a", a}, {"modes_agree", r.modes_agree}, {"matches_m", r.matches_m}});
      }
      int i = 0;
      while (i < k && a[i] == window) a[i++] = -window;
      if (i == k) break;
      ++a[i];
    }
  }
  Json words = Json::array();
  for (const auto& w : qdet_expansion(std::vector<int>(rank, 1), QdetMode::AsmSum))
    words.push_back({{"modes", w.modes}, {"coefficient", w.coefficient.to_string()}});
  rep.details = {{"vectors", vectors}, {"constant_vectors", constant}, {"failures", failures}, {"asm_expansion_at_ones", words}};
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::to_string(vectors) + " mode vectors, product = ASM sum" +
                (ok ? "; constant vectors reduce to M_{k,n}" : "; FAILURES");
  return rep;
}

ExperimentReport dim_exchange(const Options& o) {
  using namespace qsystem;
  ExperimentReport rep;
  DimOptions base;
  base.window = bounded(o.window, 2, 0, 2, "--window");
  base.nvars = bounded(o.nvars, 3, 1, 3, "--nvars");
  base.degree_cap = bounded(o.degree_cap, 3, 0, 4, "--degree-cap");
  rep.params = {{"window", base.window}, {"nvars", base.nvars}, {"degree_cap", base.degree_cap}};
  auto summarize = [](const DimReport& r) {
    Json j = {{"mode_pairs", r.mode_pairs}, {"applications", r.applications}, {"nonzero", r.nonzero_residuals}};
    if (r.first_failure) j["first_failure"] = {r.first_failure->first, r.first_failure->second};
    return j;
  };
  DimOptions e = base, f = base, tq = base, control = base;
  f.current = DimCurrent::F;
  tq.t_equals_q = true;
  control.swapped_control = true;
  control.window = std::min(base.window, 1);
  const auto re = dim_exchange_check(e), rf = dim_exchange_check(f), rt = dim_exchange_check(tq),
             rc = dim_exchange_check(control);
  Json g = Json::array();
  for (const auto& c : re.g) g.push_back(c.to_string());
  rep.details = {{"g", g}, {"e_current", summarize(re)}, {"f_current", summarize(rf)}, {"t_equals_q", summarize(rt)},
                 {"swapped_g_control", summarize(rc)}};
  const bool ok = re.pass && rf.pass && rt.pass && !rc.pass;
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::string("e ") + pass_fail(re.pass) + ", f " + pass_fail(rf.pass) + ", t=q " + pass_fail(rt.pass) +
                ", control nonzero in " + std::to_string(rc.nonzero_residuals) + " mode pairs";
  return rep;
}

ExperimentReport macdonald_eigen(const Options& o) {
  using namespace qsystem;
  ExperimentReport rep;
  const int nvars = bounded(o.nvars, 3, 1, 3, "--nvars");
  const int cap = bounded(o.degree_cap, 3, 0, 4, "--degree-cap");
  const int window = bounded(o.window, 2, 0, 2, "--window");
  rep.params = {{"nvars", nvars}, {"degree_cap", cap}, {"window", window}};
  bool ok = true;
  Json eigen = Json::array();
  for (int n = 1; n <= nvars; ++n) {
    for (int d = 0; d <= cap; ++d) {
      for (const auto& lam : partitions_of(d, n)) {
        const auto r = macdonald_eigencheck(lam, n);
        ok = ok && r.pass;
        eigen.push_back({{"N", n}, {"lambda", partition_to_string(lam)}, {"eigenvalue", r.eigenvalue.to_string()}, {"pass", r.pass}});
      }
    }
  }
  const auto tl = t_limit_check(nvars, cap, window);
  ok = ok && tl.pass;
  rep.details = {{"eigencheck", eigen}, {"t_limit", {{"cases", tl.cases}, {"pass", tl.pass}}}};
  if (tl.failure) rep.details["t_limit"]["failure"] = *tl.failure;
  rep.status = ok ? Status::Pass : Status::Fail;
  rep.summary = std::to_string(eigen.size()) + " eigenchecks, t-limit " + pass_fail(tl.pass) + " over " +
                std::to_string(tl.cases) + " cases";
  return rep;
}

Options with(const std::function<void(Options&)>& f) {
  Options o;
  f(o);
  return o;
}

std::vector<Experiment> build_registry() {
  std::vector<Experiment> r;
  r.push_back({"lorentzian-genfun", "transfer entries vs generating function", lorentzian_genfun,
               with([](Options& o) { o.order = 8; }), with([](Options& o) { o.order = 10; })});
  r.push_back({"lorentzian-commute", "commuting transfer matrices along phi", lorentzian_commute, {}, {}});
  r.push_back({"geodesic-soliton", "closed-form geodesic series and recursion", geodesic_soliton,
               with([](Options& o) { o.order = 12; o.nmax = 6; }), with([](Options& o) { o.order = 20; o.nmax = 8; })});
  r.push_back({"geodesic-conserve", "conserved quantity along the recursion", geodesic_conserve,
               with([](Options& o) { o.order = 12; o.nmax = 6; }), with([](Options& o) { o.order = 20; o.nmax = 8; })});
  r.push_back({"asm-count", "ASM enumeration vs product formula", asm_count, with([](Options& o) { o.size = 5; }),
               with([](Options& o) { o.size = 6; })});
  r.push_back({"asm-bijection", "ASM, six-vertex and osculating path round trips", asm_bijection,
               with([](Options& o) { o.size = 4; }), with([](Options& o) { o.size = 5; })});
  r.push_back({"asm-lambdadet", "lambda-determinant of the Vandermonde as an ASM sum", asm_lambdadet,
               with([](Options& o) { o.size = 4; }), with([](Options& o) { o.size = 5; })});
  r.push_back({"whittaker-verify", "path-model Whittaker vector pairings", whittaker_verify,
               with([](Options& o) { o.rank = 2; o.depth = 3; }), with([](Options& o) { o.rank = 2; o.depth = 4; })});
  r.push_back({"qsystem-classical", "classical Q-system on KR characters", qsystem_classical,
               with([](Options& o) { o.nvars = 3; }), with([](Options& o) { o.nvars = 4; })});
  r.push_back({"qsystem-operators", "M-system relations of the difference operators", qsystem_operators,
               with([](Options& o) { o.nvars = 2; o.degree_cap = 3; }), with([](Options& o) { o.nvars = 3; o.degree_cap = 4; })});
  r.push_back({"qsystem-graded-char", "graded tensor product characters", qsystem_graded_char, {}, {}});
  r.push_back({"qsystem-qdet", "quantum determinant: product vs ASM sum", qsystem_qdet,
               with([](Options& o) { o.rank = 2; }), with([](Options& o) { o.rank = 3; })});
  r.push_back({"dim-exchange", "exchange relation of the DIM currents", dim_exchange,
               with([](Options& o) { o.window = 1; o.nvars = 2; o.degree_cap = 2; }), {}});
  r.push_back({"macdonald-eigen", "Macdonald eigencheck and t -> oo limit", macdonald_eigen,
               with([](Options& o) { o.nvars = 2; }), {}});
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

Json ExperimentReport::to_json(bool with_timing) const {
  Json j = {{"experiment", experiment}, {"params", params}, {"status", to_string(status)}, {"details", details}};
  if (with_timing) j["wall_time_s"] = wall_seconds;
  return j;
}

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> r = build_registry();
  return r;
}

ExperimentReport run(const std::string& name, const Options& opt) {
  const auto& reg = registry();
  if (reg.empty()) throw std::logic_error("experiment registry is empty");
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Experiment& e) { return e.name == name; });
  if (it == reg.end()) throw UsageError("unknown experiment: " + name);
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  try {
    rep = it->run(opt);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  } catch (const std::domain_error& e) {
    rep = ExperimentReport{};
    rep.status = Status::Inconclusive;
    rep.details = {{"error", e.what()}};
    rep.summary = e.what();
  }
  rep.experiment = name;
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<ExperimentReport> run_all(Suite suite, std::uint64_t seed) {
  std::vector<ExperimentReport> out;
  for (const auto& e : registry()) {
    Options o = suite == Suite::Quick ? e.quick : e.full;
    o.seed = seed;
    out.push_back(run(e.name, o));
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_csv(const std::vector<ExperimentReport>& reports) {
  std::ostringstream os;
  os << "experiment,status,params,summary\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params.items()) {
      if (!params.empty()) params += ';';
      params += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    os << csv_field(r.experiment) << ',' << to_string(r.status) << ',' << csv_field(params) << ',' << csv_field(r.summary)
       << '\n';
  }
  return os.str();
}

}  // namespace intcomb::cli
