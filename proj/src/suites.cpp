#include "gdinv/suites.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "gdinv/ensembles.hpp"
#include "gdinv/fixtures.hpp"
#include "gdinv/oracles.hpp"
#include "gdinv/orders.hpp"
#include "gdinv/rref.hpp"
#include "gdinv/solve.hpp"

namespace gdinv {

namespace {

bool eq(const GqMatrix& a, const GqMatrix& b) { return matrix_equal(a, b); }

// ---------------------------------------------------------------------------
// Trial scaffolding

struct TrialSetup {
  EnsembleSpec spec;
  SplitMix64 rng;
};

// Dimension cycles fastest, then the feasible (r, k) combos of that
// dimension, so every combo of every dimension is hit over a long run.
TrialSetup make_setup(const SuiteOptions& opts, std::uint64_t t, int max_dim) {
  SplitMix64 rng = SplitMix64::stream(opts.seed, t);
  EnsembleSpec spec;
  if (opts.dim > 0) {
    spec.n = opts.dim;
  } else {
    spec.n = 2 + static_cast<Index>(t % static_cast<std::uint64_t>(max_dim - 1));
  }
  const auto combos = feasible_rank_index_combos(spec.n);
  const std::uint64_t pick = opts.dim > 0 ? t : t / static_cast<std::uint64_t>(max_dim - 1);
  const auto [r, k] = combos[pick % combos.size()];
  spec.r = r;
  spec.k = k;
  spec.entry_bound = opts.entry_bound;
  spec.complex_entries = opts.complex_entries;
  spec.seed = rng.next();
  return {spec, rng};
}

using TrialBody = std::function<bool(std::uint64_t, SplitMix64&)>;

SuiteResult run_trials(const std::string& name, const SuiteOptions& opts, const TrialBody& body) {
  const std::uint64_t trials = opts.trials;
  std::vector<std::uint8_t> ok(trials, 1);

  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      SplitMix64 rng = SplitMix64::stream(opts.seed, t);
      bool pass = false;
      try {
        pass = body(t, rng);
      } catch (...) {
        pass = false;
      }
      ok[t] = pass ? 1 : 0;
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || trials < 2) {
    worker(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t begin = std::min(trials, j * chunk);
      const std::uint64_t end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  SuiteResult result;
  result.suite = name;
  result.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    if (ok[t]) continue;
    ++result.failures;
    if (!result.first_failure_seed)
      result.first_failure_seed = SplitMix64::stream(opts.seed, t).state();
  }
  return result;
}

// ---------------------------------------------------------------------------
// paper-examples

SuiteResult run_paper_examples(const SuiteOptions& opts) {
  namespace fx = gdinv::fixtures;
  std::vector<bool> checks;

  const GqMatrix a1 = fx::a1();
  checks.push_back(eq(gd1(a1, fx::d1(), fx::g1()), fx::x1()));
  checks.push_back(eq(moore_penrose(a1), fx::a1_moore_penrose()));
  checks.push_back(eq(drazin(a1), fx::a1_drazin()));
  checks.push_back(eq(composite_inverse(a1, CompositeKind::Dmp), fx::a1_drazin()));
  checks.push_back(eq(composite_inverse(a1, CompositeKind::Mpd), fx::a1_drazin()));
  checks.push_back(eq(composite_inverse(a1, CompositeKind::Cmp), fx::a1_drazin()));
  const IndexedMatrix i1 = matrix_index(a1);
  checks.push_back(i1.k == 2);
  checks.push_back(i1.rank_chain == std::vector<Index>({4, 2, 1, 1}));

  const GqMatrix a2 = fx::a2();
  checks.push_back(eq(one_gd(a2, fx::g2(), fx::d2()), fx::x2()));
  checks.push_back(matrix_index(a2).k == 2);
  const GDrazinCheck gc = is_g_drazin(a2, fx::d2());
  checks.push_back(gc.three_eq && gc.two_eq);

  SuiteResult result;
  result.suite = "paper-examples";
  result.trials = checks.size();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i]) continue;
    ++result.failures;
    if (!result.first_failure_seed) result.first_failure_seed = i;
  }
  (void)opts;
  return result;
}

// ---------------------------------------------------------------------------
// gd1-characterizations / 1gd-characterizations

bool characterization_trial(Side side, const SuiteOptions& opts, std::uint64_t t,
                            SplitMix64& rng_in) {
  auto [spec, rng] = make_setup(opts, t, 6);
  (void)rng_in;
  const GqMatrix a = random_matrix_with_index(spec);
  const CoreNilpotentDecomposition cnd = core_nilpotent(a);
  const GqMatrix a_gd =
      random_g_drazin(a, cnd, rng.next(), opts.entry_bound, opts.complex_entries);
  const GqMatrix a_inner = inner_inverse(
      a, random_inner_param(a, rng.next(), opts.entry_bound, opts.complex_entries));
  const GqMatrix x = side == Side::Gd1 ? gd1(a, a_gd, a_inner) : one_gd(a, a_inner, a_gd);

  if (!check_basic(a, a_inner, a_gd, side).all_true()) return false;
  if (!eq(geometric_solve(a, a_inner, a_gd, side), x)) return false;

  const CharacterizationReport rep = characterization_report(a, x, a_inner, a_gd, side);
  if (!rep.all_equivalent || !rep.all_statements_true()) return false;

  // Uniqueness separation: a different member of A{1} must fail every
  // statement (they all characterize X exactly), keeping allEquivalent true.
  const GqMatrix x_other = inner_inverse(
      a, random_inner_param(a, rng.next(), opts.entry_bound, opts.complex_entries));
  if (!eq(x_other, x)) {
    const CharacterizationReport neg = characterization_report(a, x_other, a_inner, a_gd, side);
    if (!neg.all_equivalent) return false;
    for (const auto& s : neg.statements)
      if (s.second) return false;
  }

  if (!rank_equation_witness(a, a_inner, a_gd, side).all_true()) return false;

  const BCSpec bc = side == Side::Gd1 ? BCSpec{a_gd * a, a * a_inner}
                                      : BCSpec{a_inner * a, a * a_gd};
  if (!is_bc_inverse(a, bc, x)) return false;
  const auto solved = bc_inverse_solve(a, bc);
  if (!solved || !eq(*solved, x)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// decomposition-formulas

bool decomposition_trial(const SuiteOptions& opts, std::uint64_t t, SplitMix64& rng_in) {
  auto [spec, rng] = make_setup(opts, t, 6);
  (void)rng_in;
  const GqMatrix a = random_matrix_with_index(spec);
  const CoreNilpotentDecomposition cnd = core_nilpotent(a);
  const Index s = cnd.s;
  const Index m = cnd.n.rows();

  const InnerParam zn{random_int_matrix(rng, m, m, opts.entry_bound, opts.complex_entries)};
  const GqMatrix a_gd = g_drazin(a, GDrazinParam{cnd, zn});
  const GqMatrix n_inner = inner_inverse(cnd.n, zn);
  const GqMatrix eye_m = GqMatrix::Identity(m, m);
  const GqMatrix n_r = eye_m - cnd.n * n_inner;
  const GqMatrix n_l = eye_m - n_inner * cnd.n;

  // GD1 form: {1,2}-membership, the anchor identity, and the membership
  // corollary in both directions (V = 0 gives a G-Drazin inverse; a random V
  // gives one iff V (I - N N^-) = 0).
  {
    const GqMatrix v = random_int_matrix(rng, s, m, opts.entry_bound, opts.complex_entries);
    const GqMatrix l = random_int_matrix(rng, m, m, opts.entry_bound, opts.complex_entries);
    const GqMatrix x = gd1_from_decomposition(cnd, Gd1BlockParam{v, l, zn});
    if (!eq(a * x * a, a)) return false;
    if (!eq(x * a * x, x)) return false;
    if (!eq(x * a, a_gd * a)) return false;
    const GDrazinCheck chk = is_g_drazin(a, x);
    if (chk.three_eq != chk.two_eq) return false;
    if (chk.three_eq != is_zero_matrix<GaussianRational>(v * n_r)) return false;

    const GqMatrix x0 =
        gd1_from_decomposition(cnd, Gd1BlockParam{GqMatrix::Zero(s, m), l, zn});
    if (!is_g_drazin(a, x0).three_eq) return false;
  }

  // 1GD (dual) form.
  {
    const GqMatrix v = random_int_matrix(rng, m, s, opts.entry_bound, opts.complex_entries);
    const GqMatrix l = random_int_matrix(rng, m, m, opts.entry_bound, opts.complex_entries);
    const GqMatrix x = one_gd_from_decomposition(cnd, Gd1BlockParam{v, l, zn});
    if (!eq(a * x * a, a)) return false;
    if (!eq(x * a * x, x)) return false;
    if (!eq(a * x, a * a_gd)) return false;
    const GDrazinCheck chk = is_g_drazin(a, x);
    if (chk.three_eq != chk.two_eq) return false;
    if (chk.three_eq != is_zero_matrix<GaussianRational>(n_l * v)) return false;

    const GqMatrix x0 =
        one_gd_from_decomposition(cnd, Gd1BlockParam{GqMatrix::Zero(m, s), l, zn});
    if (!is_g_drazin(a, x0).three_eq) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// orders

bool orders_trial(const SuiteOptions& opts, std::uint64_t t, SplitMix64& rng) {
  const bool right = (t % 2) == 0;
  const Side side = right ? Side::Gd1 : Side::OneGd;
  const SharpSide sharp_side = right ? SharpSide::Right : SharpSide::Left;
  const OrderKind sharp_kind = right ? OrderKind::RightSharp : OrderKind::LeftSharp;
  const OrderKind order_kind = right ? OrderKind::Gd1Order : OrderKind::OneGdOrder;
  const OrderKind composite_kind = right ? OrderKind::DMinus : OrderKind::MinusD;

  const Index n =
      opts.dim > 0 ? opts.dim : 2 + static_cast<Index>((t / 2) % 5);
  const auto [a, b] = random_ordered_pair_sharp(n, sharp_side, rng.next(), opts.entry_bound,
                                                opts.complex_entries);

  if (!relation_holds(a, b, sharp_kind)) return false;

  // Equivalence theorem, forward: a sharp-related pair admits a witness.
  const auto witness = sharp_to_gd1_witness(a, b);
  if (!witness) return false;
  if (!relation_holds(a, b, order_kind, *witness)) return false;

  // Proposition chain: the same inner inverse drives the D,- (resp. -,D) relation.
  if (!relation_holds(a, b, composite_kind, *witness)) return false;

  const OrderReport rep = order_characterization_report(a, b, side, *witness);
  if (!rep.all_agree || !rep.all_statements_true()) return false;

  // Converse direction on an unrelated pair with a random valid witness: if
  // the GD1/1GD relation holds, the sharp relation must too, and the five
  // statements must still agree with each other.
  EnsembleSpec nspec;
  nspec.n = n;
  nspec.r = n >= 2 ? n - 1 : n;
  nspec.k = n >= 2 ? 1 : 0;
  nspec.seed = rng.next();
  nspec.entry_bound = opts.entry_bound;
  nspec.complex_entries = opts.complex_entries;
  const GqMatrix a2 = random_matrix_with_index(nspec);
  const GqMatrix b2 = random_int_matrix(rng, n, n, opts.entry_bound, opts.complex_entries);
  OrderWitness w2;
  w2.inner = inner_inverse(
      a2, random_inner_param(a2, rng.next(), opts.entry_bound, opts.complex_entries));
  w2.gd = random_g_drazin(a2, core_nilpotent(a2), rng.next(), opts.entry_bound,
                          opts.complex_entries);
  const bool related = relation_holds(a2, b2, order_kind, w2);
  if (related && !relation_holds(a2, b2, sharp_kind)) return false;
  const OrderReport rep2 = order_characterization_report(a2, b2, side, w2);
  if (!rep2.all_agree) return false;
  if (rep2.statements.front().second != related) return false;
  return true;
}

// Antisymmetry on constructed pairs: reflexive pairs are related both ways
// and equal; pairs with a nontrivial E block are related one way only.
bool antisymmetry_trial(const SuiteOptions& opts, std::uint64_t t, SplitMix64& rng) {
  const bool right = (t % 2) == 0;
  const SharpSide sharp_side = right ? SharpSide::Right : SharpSide::Left;
  const OrderKind sharp_kind = right ? OrderKind::RightSharp : OrderKind::LeftSharp;
  const Index n = opts.dim > 0 ? opts.dim : 2 + static_cast<Index>((t / 2) % 5);
  const bool reflexive = (t % 4) < 2;

  Index d;
  Index e;
  if (reflexive) {
    d = static_cast<Index>(rng.next_int(0, n));
    e = 0;
  } else {
    d = static_cast<Index>(rng.next_int(0, n - 1));
    e = static_cast<Index>(rng.next_int(1, n - d));
  }
  const auto [a, b] = sharp_pair_with_blocks(n, d, e, sharp_side, rng.next(), opts.entry_bound,
                                             opts.complex_entries);

  const bool forward = relation_holds(a, b, sharp_kind);
  const bool backward = relation_holds(b, a, sharp_kind);
  if (!forward) return false;
  if (forward && backward && !eq(a, b)) return false;  // antisymmetry
  if (reflexive && !(backward && eq(a, b))) return false;
  if (!reflexive && backward) return false;  // E invertible forces strictness
  return true;
}

// ---------------------------------------------------------------------------
// inverse-axioms (plus the Drazin linear-system cross-check)

bool inverse_axioms_trial(const SuiteOptions& opts, std::uint64_t t, SplitMix64& rng_in) {
  auto [spec, rng] = make_setup(opts, t, 5);  // n in 2..5
  // A few complex-entry trials; the theorems are field-agnostic.
  spec.complex_entries = opts.complex_entries || (t % 7) == 3;
  (void)rng_in;
  const GqMatrix a = random_matrix_with_index(spec);
  const Index n = a.rows();
  const GqMatrix eye = GqMatrix::Identity(n, n);

  const GqMatrix mp = moore_penrose(a);
  if (!eq(a * mp * a, a)) return false;
  if (!eq(mp * a * mp, mp)) return false;
  if (!eq(ctranspose(GqMatrix(a * mp)), a * mp)) return false;
  if (!eq(ctranspose(GqMatrix(mp * a)), mp * a)) return false;

  const GqMatrix xz =
      inner_inverse(a, random_inner_param(a, rng.next(), opts.entry_bound, spec.complex_entries));
  if (!eq(a * xz * a, a)) return false;
  if (!eq(inner_inverse(a, InnerParam{GqMatrix::Zero(n, n)}), mp)) return false;

  const IndexedMatrix im = matrix_index(a);
  const GqMatrix ak = pow_of(a, im.k);
  const GqMatrix d = drazin(a);
  if (!eq(d * a * d, d)) return false;
  if (!eq(a * d, d * a)) return false;
  if (!eq(d * ak * a, ak)) return false;
  if (im.k <= 1 && !eq(a * d * a, a)) return false;

  const CoreNilpotentDecomposition cnd = core_nilpotent(a);
  const GqMatrix a_gd =
      random_g_drazin(a, cnd, rng.next(), opts.entry_bound, spec.complex_entries);
  const GDrazinCheck chk = is_g_drazin(a, a_gd);
  if (!chk.three_eq || !chk.two_eq) return false;
  // The two membership definitions agree on arbitrary candidates too.
  const GqMatrix arbitrary = random_int_matrix(rng, n, n, opts.entry_bound, spec.complex_entries);
  const GDrazinCheck chk2 = is_g_drazin(a, arbitrary);
  if (chk2.three_eq != chk2.two_eq) return false;

  // Drazin inverse as the unique solution of a linear system, built from
  // subspace bases of A^k rather than the decomposition that drazin() uses.
  const GqMatrix q =
      oblique_projector<GaussianRational>(column_space_basis(ak), nullspace_basis(ak));
  MatrixEquationSystem<GaussianRational> sys;
  sys.unknown_rows = n;
  sys.unknown_cols = n;
  sys.constraints.push_back(equation<GaussianRational>(eye, ak * a, ak));
  sys.constraints.push_back(equation<GaussianRational>(eye - q, eye, GqMatrix::Zero(n, n)));
  sys.constraints.push_back(equation<GaussianRational>(eye, eye - q, GqMatrix::Zero(n, n)));
  const auto sol = solve_matrix_equations(sys);
  if (!sol || !sol->unique()) return false;
  const GqMatrix& x = sol->particular;
  if (!eq(x, d)) return false;
  // The solution satisfies the three defining Drazin equations verbatim.
  if (!eq(x * a * x, x)) return false;
  if (!eq(a * x, x * a)) return false;
  if (!eq(x * ak * a, ak)) return false;
  return true;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "paper-examples",        "gd1-characterizations", "1gd-characterizations",
      "decomposition-formulas", "orders",               "inverse-axioms",
  };
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "paper-examples") return run_paper_examples(opts);
  if (name == "gd1-characterizations")
    return run_trials(name, opts, [&opts](std::uint64_t t, SplitMix64& rng) {
      return characterization_trial(Side::Gd1, opts, t, rng);
    });
  if (name == "1gd-characterizations")
    return run_trials(name, opts, [&opts](std::uint64_t t, SplitMix64& rng) {
      return characterization_trial(Side::OneGd, opts, t, rng);
    });
  if (name == "decomposition-formulas")
    return run_trials(name, opts, [&opts](std::uint64_t t, SplitMix64& rng) {
      return decomposition_trial(opts, t, rng);
    });
  if (name == "orders") {
    // The last 100 trials of a large run exercise antisymmetry on
    // constructed pairs; the rest alternate the two sides.
    SuiteOptions main_opts = opts;
    const std::uint64_t anti = opts.trials >= 200 ? 100 : opts.trials / 5;
    main_opts.trials = opts.trials - anti;
    SuiteResult res = run_trials(name, main_opts, [&main_opts](std::uint64_t t, SplitMix64& rng) {
      return orders_trial(main_opts, t, rng);
    });
    SuiteOptions anti_opts = opts;
    anti_opts.trials = anti;
    anti_opts.seed = SplitMix64(opts.seed).next();  // disjoint stream family
    const SuiteResult anti_res =
        run_trials(name, anti_opts, [&anti_opts](std::uint64_t t, SplitMix64& rng) {
          return antisymmetry_trial(anti_opts, t, rng);
        });
    res.trials += anti_res.trials;
    res.failures += anti_res.failures;
    if (!res.first_failure_seed) res.first_failure_seed = anti_res.first_failure_seed;
    return res;
  }
  if (name == "inverse-axioms")
    return run_trials(name, opts, [&opts](std::uint64_t t, SplitMix64& rng) {
      return inverse_axioms_trial(opts, t, rng);
    });
  throw InvalidArgumentError("unknown suite '" + name + "'");
}

}  // namespace gdinv
