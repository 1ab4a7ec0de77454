#include "gdinv/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "gdinv/ensembles.hpp"
#include "gdinv/matrix_io.hpp"
#include "gdinv/suites.hpp"

namespace gdinv::cli {

namespace {

struct ComputeArgs {
  std::string kind;
  std::string matrix_path;
  std::string gd_path;
  std::string inner_path;
  std::string outer_path;
  std::string zn_path;
  std::optional<std::uint64_t> seed;
  long bound{3};
};

const std::map<std::string, CompositeKind>& composite_kinds() {
  static const std::map<std::string, CompositeKind> kinds = {
      {"dmp", CompositeKind::Dmp}, {"mpd", CompositeKind::Mpd},  {"d1", CompositeKind::D1},
      {"1d", CompositeKind::OneD}, {"1mp", CompositeKind::OneMp}, {"mp1", CompositeKind::Mp1},
      {"cmp", CompositeKind::Cmp}, {"2mp", CompositeKind::TwoMp}, {"mp2", CompositeKind::Mp2},
      {"c2mp", CompositeKind::C2Mp},
  };
  return kinds;
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const std::string& what) {
  if (!seed) throw InvalidArgumentError(what + " requires an explicit --seed");
  return *seed;
}

GqMatrix resolve_inner(const GqMatrix& a, const ComputeArgs& args) {
  if (!args.inner_path.empty()) {
    GqMatrix inner = load_matrix_file(args.inner_path);
    if (!is_inner_inverse(a, inner)) throw NotAnInnerInverseError();
    return inner;
  }
  return inner_inverse(
      a, random_inner_param(a, require_seed(args.seed, "random inner inverse"), args.bound));
}

GqMatrix resolve_outer(const GqMatrix& a, const ComputeArgs& args) {
  if (!args.outer_path.empty()) {
    GqMatrix outer = load_matrix_file(args.outer_path);
    if (!is_outer_inverse(a, outer)) throw AuxNotOuterError();
    return outer;
  }
  // Reflexive shrink of a random inner inverse: X A X is always outer.
  const GqMatrix g = inner_inverse(
      a, random_inner_param(a, require_seed(args.seed, "random outer inverse"), args.bound));
  return g * a * g;
}

GqMatrix resolve_g_drazin(const GqMatrix& a, const ComputeArgs& args) {
  if (!args.gd_path.empty()) {
    GqMatrix gd = load_matrix_file(args.gd_path);
    if (!is_g_drazin(a, gd).three_eq) throw NotAGDrazinInverseError();
    return gd;
  }
  const CoreNilpotentDecomposition cnd = core_nilpotent(a);
  if (!args.zn_path.empty()) {
    const GqMatrix zn = load_matrix_file(args.zn_path);
    return g_drazin(a, GDrazinParam{cnd, InnerParam{zn}});
  }
  return random_g_drazin(a, cnd, require_seed(args.seed, "random G-Drazin inverse"), args.bound);
}

int run_compute(const ComputeArgs& args, std::ostream& out) {
  const GqMatrix a = load_matrix_file(args.matrix_path);
  GqMatrix result;
  if (args.kind == "mp") {
    result = moore_penrose(a);
  } else if (args.kind == "drazin") {
    result = drazin(a);
  } else if (args.kind == "gdrazin") {
    result = resolve_g_drazin(a, args);
  } else if (args.kind == "gd1") {
    result = gd1(a, resolve_g_drazin(a, args), resolve_inner(a, args));
  } else if (args.kind == "1gd") {
    result = one_gd(a, resolve_inner(a, args), resolve_g_drazin(a, args));
  } else {
    const auto it = composite_kinds().find(args.kind);
    if (it == composite_kinds().end())
      throw InvalidArgumentError("unknown --kind '" + args.kind + "'");
    const CompositeKind kind = it->second;
    std::optional<GqMatrix> aux;
    switch (kind) {
      case CompositeKind::D1:
      case CompositeKind::OneD:
      case CompositeKind::OneMp:
      case CompositeKind::Mp1:
        aux = resolve_inner(a, args);
        break;
      case CompositeKind::TwoMp:
      case CompositeKind::Mp2:
      case CompositeKind::C2Mp:
        aux = resolve_outer(a, args);
        break;
      default:
        break;
    }
    result = composite_inverse(a, kind, aux);
  }
  out << matrix_to_string(result) << "\n";
  return 0;
}

int run_order(const std::string& kind_name, const std::string& a_path, const std::string& b_path,
              const std::string& inner_path, const std::string& gd_path, bool find_witness,
              bool full_report, std::ostream& out) {
  static const std::map<std::string, OrderKind> kinds = {
      {"gd1", OrderKind::Gd1Order}, {"1gd", OrderKind::OneGdOrder},
      {"dminus", OrderKind::DMinus}, {"minusd", OrderKind::MinusD},
      {"lsharp", OrderKind::LeftSharp}, {"rsharp", OrderKind::RightSharp},
  };
  const auto it = kinds.find(kind_name);
  if (it == kinds.end()) throw InvalidArgumentError("unknown order kind '" + kind_name + "'");
  const OrderKind kind = it->second;

  const GqMatrix a = load_matrix_file(a_path);
  const GqMatrix b = load_matrix_file(b_path);

  std::optional<OrderWitness> witness;
  bool witness_found = true;
  if (find_witness) {
    witness = sharp_to_gd1_witness(a, b);
    witness_found = witness.has_value();
  } else if (!inner_path.empty()) {
    OrderWitness w;
    w.inner = load_matrix_file(inner_path);
    if (!gd_path.empty())
      w.gd = load_matrix_file(gd_path);
    else if (kind == OrderKind::Gd1Order || kind == OrderKind::OneGdOrder)
      throw InvalidArgumentError("this order kind needs both --inner and --gd");
    witness = std::move(w);
  }

  const bool holds = witness_found && relation_holds(a, b, kind, witness);
  Json j;
  j["kind"] = kind_name;
  j["holds"] = holds;
  if (full_report) {
    if (kind != OrderKind::Gd1Order && kind != OrderKind::OneGdOrder)
      throw InvalidArgumentError("--report applies to the gd1 and 1gd kinds");
    if (!witness) throw InvalidArgumentError("--report needs a witness (or --find-witness)");
    const Side side = kind == OrderKind::Gd1Order ? Side::Gd1 : Side::OneGd;
    j["report"] = report_to_json(order_characterization_report(a, b, side, *witness));
  }
  out << j.dump() << "\n";
  return holds ? 0 : 1;
}

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact generalized-inverse calculus over Gaussian rationals"};
  app.require_subcommand(1);

  // index
  auto* index_cmd = app.add_subcommand("index", "index and rank chain of a matrix");
  std::string index_path;
  index_cmd->add_option("matrix", index_path, "matrix JSON file")->required();

  // decompose
  auto* deco_cmd = app.add_subcommand("decompose", "core-nilpotent decomposition");
  std::string deco_path;
  deco_cmd->add_option("matrix", deco_path, "matrix JSON file")->required();

  // compute
  auto* comp_cmd = app.add_subcommand("compute", "compute a generalized inverse");
  ComputeArgs comp;
  std::optional<std::uint64_t> comp_seed;
  comp_cmd->add_option("--kind", comp.kind,
                       "mp|drazin|gdrazin|gd1|1gd|dmp|mpd|d1|1d|1mp|mp1|cmp|2mp|mp2|c2mp")
      ->required();
  comp_cmd->add_option("--matrix", comp.matrix_path, "matrix JSON file")->required();
  comp_cmd->add_option("--gd", comp.gd_path, "G-Drazin inverse JSON file");
  comp_cmd->add_option("--inner", comp.inner_path, "inner inverse JSON file");
  comp_cmd->add_option("--outer", comp.outer_path, "outer inverse JSON file");
  comp_cmd->add_option("--zn", comp.zn_path, "inner parameter for the nilpotent block");
  comp_cmd->add_option("--seed", comp_seed, "seed for randomly drawn family members");
  comp_cmd->add_option("--bound", comp.bound, "entry bound for seeded draws");

  // order
  auto* order_cmd = app.add_subcommand("order", "evaluate an order relation");
  std::string order_kind;
  std::string order_a;
  std::string order_b;
  std::string order_inner;
  std::string order_gd;
  bool order_find_witness = false;
  bool order_report = false;
  order_cmd->add_option("--kind", order_kind, "gd1|1gd|dminus|minusd|lsharp|rsharp")->required();
  order_cmd->add_option("--a", order_a, "left matrix JSON file")->required();
  order_cmd->add_option("--b", order_b, "right matrix JSON file")->required();
  order_cmd->add_option("--inner", order_inner, "witness inner inverse");
  order_cmd->add_option("--gd", order_gd, "witness G-Drazin inverse");
  order_cmd->add_flag("--find-witness", order_find_witness,
                      "solve for a witness instead of reading one");
  order_cmd->add_flag("--report", order_report,
                      "include the five-statement characterization report (gd1/1gd)");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate seeded test matrices");
  long gen_n = 0;
  long gen_rank = -1;
  long gen_index = -1;
  std::optional<std::uint64_t> gen_seed;
  long gen_bound = 3;
  bool gen_complex = false;
  bool gen_pair = false;
  std::string gen_side = "right";
  gen_cmd->add_option("--n", gen_n, "dimension")->required();
  gen_cmd->add_option("--rank", gen_rank, "rank of the core part, rank(A^k)");
  gen_cmd->add_option("--index", gen_index, "index of the matrix");
  gen_cmd->add_option("--seed", gen_seed, "seed");
  gen_cmd->add_option("--bound", gen_bound, "entry bound");
  gen_cmd->add_flag("--complex", gen_complex, "Gaussian-rational entries");
  gen_cmd->add_flag("--pair-sharp", gen_pair, "generate a sharp-related pair (A, B)");
  gen_cmd->add_option("--side", gen_side, "left|right (pair generation)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteOptions sopts;
  std::optional<std::uint64_t> verify_seed;
  verify_cmd
      ->add_option("--suite", suite,
                   "paper-examples|gd1-characterizations|1gd-characterizations|"
                   "decomposition-formulas|orders|inverse-axioms")
      ->required();
  verify_cmd->add_option("--trials", sopts.trials, "number of trials");
  verify_cmd->add_option("--dim", sopts.dim, "fixed dimension (default cycles 2..6)");
  verify_cmd->add_option("--seed", verify_seed, "base seed");
  verify_cmd->add_option("--jobs", sopts.jobs, "worker threads");
  verify_cmd->add_option("--bound", sopts.entry_bound, "entry bound");
  verify_cmd->add_flag("--complex", sopts.complex_entries, "Gaussian-rational entries");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  }

  if (index_cmd->parsed()) {
    out << index_to_json(matrix_index(load_matrix_file(index_path))).dump() << "\n";
    return 0;
  }
  if (deco_cmd->parsed()) {
    out << decomposition_to_json(core_nilpotent(load_matrix_file(deco_path))).dump() << "\n";
    return 0;
  }
  if (comp_cmd->parsed()) {
    comp.seed = comp_seed;
    return run_compute(comp, out);
  }
  if (order_cmd->parsed())
    return run_order(order_kind, order_a, order_b, order_inner, order_gd, order_find_witness,
                     order_report, out);
  if (gen_cmd->parsed()) {
    const std::uint64_t seed = require_seed(gen_seed, "gen");
    if (gen_pair) {
      if (gen_side != "left" && gen_side != "right")
        throw InvalidArgumentError("--side must be left or right");
      const SharpSide side = gen_side == "left" ? SharpSide::Left : SharpSide::Right;
      const auto [a, b] = random_ordered_pair_sharp(gen_n, side, seed, gen_bound);
      Json j;
      j["A"] = matrix_to_json(a);
      j["B"] = matrix_to_json(b);
      out << j.dump() << "\n";
      return 0;
    }
    if (gen_rank < 0 || gen_index < 0)
      throw InvalidArgumentError("gen needs --rank and --index (or --pair-sharp)");
    EnsembleSpec spec;
    spec.n = gen_n;
    spec.r = gen_rank;
    spec.k = gen_index;
    spec.seed = seed;
    spec.entry_bound = gen_bound;
    spec.complex_entries = gen_complex;
    out << matrix_to_string(random_matrix_with_index(spec)) << "\n";
    return 0;
  }
  if (verify_cmd->parsed()) {
    if (suite != "paper-examples")
      sopts.seed = require_seed(verify_seed, "verify --suite " + suite);
    else if (verify_seed)
      sopts.seed = *verify_seed;
    const SuiteResult res = run_suite(suite, sopts);
    Json j;
    j["suite"] = res.suite;
    j["trials"] = res.trials;
    j["failures"] = res.failures;
    if (res.first_failure_seed)
      j["firstFailureSeed"] = *res.first_failure_seed;
    else
      j["firstFailureSeed"] = nullptr;
    out << j.dump() << "\n";
    return res.failures == 0 ? 0 : 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(std::move(args), out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gdinv::cli
