// Command line front end for the multigraph-to-additive-code toolkit.
//
// Exit codes are the machine contract:
//   0  positive or clean verdict
//   1  negative verdict (non-isomorphic, inequivalent, verification failed)
//   2  usage or input error
//   3  resource guard exceeded

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "addeq/addeq.hpp"

namespace {

using namespace addeq;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string strip_extension(const std::string& path) {
  auto slash = path.find_last_of('/');
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path;
  return path.substr(0, dot);
}

VertexBijection load_bijection(const std::string& path, unsigned n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bijection file: " + path);
  VertexBijection sigma;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    unsigned v;
    while (ls >> v) sigma.image.push_back(v);
  }
  if (sigma.size() != n || !sigma.is_permutation())
    throw ParseError("bijection file must hold a permutation of 1.." +
                     std::to_string(n));
  return sigma;
}

std::string format_bijection(const VertexBijection& sigma) {
  std::ostringstream out;
  for (unsigned v = 1; v <= sigma.size(); ++v) {
    if (v > 1) out << ' ';
    out << sigma(v);
  }
  out << '\n';
  return out.str();
}

int cmd_reduce(const std::string& graph_path, bool h2, const std::string& out_stem) {
  MultiGraph g = load_multigraph(graph_path);
  ReductionCode rc(g, h2 ? ReductionVariant::H2Reduced : ReductionVariant::Full);
  std::string stem = out_stem.empty() ? strip_extension(graph_path) : out_stem;
  save_code(rc.code(), stem + ".code");
  std::ofstream zones(stem + ".zones");
  if (!zones) throw ParseError("cannot write zone map: " + stem + ".zones");
  zones << format_zone_map(rc);
  std::cout << "N=" << rc.code().length() << " r=" << rc.field().degree()
            << " h=" << g.max_weight() << '\n';
  if (rc.degenerate())
    std::cout << "note: no edges, the code has zero rows\n";
  return kExitPositive;
}

int cmd_verify(const std::string& code_path, std::string zone_path) {
  if (zone_path.empty()) zone_path = strip_extension(code_path) + ".zones";
  ReductionCode rc = load_reduction(code_path, zone_path);
  auto rows = verify_row_weights(rc);
  auto low = verify_low_weight_codewords(rc);
  std::cout << "rows: " << (rows.clean() ? "ok" : "violations") << '\n';
  for (const auto& v : rows.violations)
    std::cout << "  row " << v.row + 1 << ": weight " << v.found_weight
              << " expected " << v.expected_weight
              << (v.bad_alphabet ? ", wrong symbol" : "") << '\n';
  std::cout << "low-weight codewords (bound " << low.bound
            << "): " << (low.clean() ? "ok" : "violations") << '\n';
  for (const auto& v : low.violations)
    std::cout << "  non-row codeword of weight " << v.weight << '\n';
  std::cout << "weight distribution:";
  for (std::size_t w = 0; w < low.weight_distribution.size(); ++w)
    if (low.weight_distribution[w])
      std::cout << ' ' << w << ':' << low.weight_distribution[w];
  std::cout << '\n';
  return rows.clean() && low.clean() ? kExitPositive : kExitNegative;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
  MultiGraph a = load_multigraph(a_path);
  MultiGraph b = load_multigraph(b_path);
  auto sigma = brute_force_isomorphism(a, b);
  if (!sigma) {
    std::cout << "non-isomorphic\n";
    return kExitNegative;
  }
  std::cout << format_bijection(*sigma);
  return kExitPositive;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path,
              const std::string& cls_name, std::uint64_t budget) {
  AdditiveCode a = load_code(a_path);
  AdditiveCode b = load_code(b_path);
  EquivSearchOptions opts;
  opts.budget = budget;
  if (cls_name == "identity")
    opts.cls = EquivClass::Identity;
  else if (cls_name == "additive")
    opts.cls = EquivClass::Additive;
  else if (cls_name == "zero-fixing")
    opts.cls = EquivClass::ZeroFixing;
  else if (cls_name == "all")
    opts.cls = EquivClass::All;
  else
    throw CLI::ValidationError("--class",
                               "expected identity|additive|zero-fixing|all");

  // invariant certificates are sound for zero-fixing symbol maps only
  if (opts.cls != EquivClass::All) {
    auto cert = invariant_certificate(a, b);
    if (cert.inequivalent) {
      std::cout << "inequivalent: " << cert.reason << '\n';
      return kExitNegative;
    }
  }

  try {
    auto w = brute_force_equivalence(a, b, opts);
    if (w) {
      std::cout << "equivalent (class " << to_string(opts.cls) << ")\n";
      std::cout << "columns:";
      for (std::size_t j : w->col_perm) std::cout << ' ' << j + 1;
      std::cout << '\n';
      std::cout << "symbol maps: "
                << (w->all_sigma_identity()
                        ? "identity"
                        : w->all_sigma_additive() ? "additive" : "general")
                << '\n';
      return kExitPositive;
    }
    std::cout << "inequivalent: exhaustive search found no witness (class "
              << to_string(opts.cls) << ")\n";
    return kExitNegative;
  } catch (const GuardError& e) {
    std::cout << "inconclusive: " << e.what() << '\n';
    return kExitGuard;
  }
}

int cmd_witness(const std::string& a_path, const std::string& b_path,
                const std::string& bij_path, bool h2) {
  MultiGraph a = load_multigraph(a_path);
  MultiGraph b = load_multigraph(b_path);
  VertexBijection sigma = load_bijection(bij_path, a.vertex_count());
  auto variant = h2 ? ReductionVariant::H2Reduced : ReductionVariant::Full;
  ReductionCode rca(a, variant), rcb(b, variant);
  EquivalenceWitness w;
  try {
    w = witness_from_isomorphism(rca, rcb, sigma);
  } catch (const std::invalid_argument& e) {
    std::cout << "invalid: " << e.what() << '\n';
    return kExitNegative;
  }
  VertexBijection back = isomorphism_from_witness(rca, rcb, w);
  std::cout << "witness valid: transformed generator matches row for row\n";
  std::cout << "columns:";
  for (std::size_t j : w.col_perm) std::cout << ' ' << j + 1;
  std::cout << '\n';
  std::cout << "symbol maps: identity\n";
  std::cout << "recovered bijection: " << format_bijection(back);
  return kExitPositive;
}

int cmd_signature(const std::string& code_path, int coord, std::size_t d,
                  bool show_hulls) {
  AdditiveCode c = load_code(code_path);
  std::size_t from = 0, to = c.length();
  if (coord >= 0) {
    if (static_cast<std::size_t>(coord) < 1 ||
        static_cast<std::size_t>(coord) > c.length())
      throw ParseError("--coord out of range");
    from = coord - 1;
    to = coord;
  }
  for (std::size_t i = from; i < to; ++i) {
    Signature sig = subspace_signature(c, i, d);
    std::cout << "# coordinate " << i + 1 << '\n' << sig.canonical_text();
    if (show_hulls && c.degree() > 1) {
      std::cout << "# hull observations (not additively invariant)\n";
      for (const auto& obs : sig.observations) {
        std::cout << "hull " << obs.hull_dim;
        for (auto a : obs.hull_wd) std::cout << ' ' << a;
        std::cout << '\n';
      }
    }
  }
  return kExitPositive;
}

int cmd_experiment(unsigned trials, unsigned n, unsigned h, std::uint64_t seed,
                   double density) {
  HullExperimentParams p;
  p.n_min = p.n_max = n;
  p.h = h;
  p.trials = trials;
  p.seed = seed;
  p.density = density;
  HullExperimentResult res = hull_experiment(p);
  std::cout << res.to_csv();
  std::cerr << "hull dimension histogram:\n";
  for (const auto& [dim, count] : res.histogram)
    std::cerr << "  " << dim << ": " << count << '\n';
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multigraph isomorphism via additive code equivalence"};
  app.require_subcommand(1);

  std::string graph_a, graph_b, code_a, code_b, bij_path, out_stem, zone_path;
  std::string cls_name = "zero-fixing";
  bool h2 = false, show_hulls = false;
  std::uint64_t budget = 10'000'000;
  int coord = -1;
  std::size_t dim = 0;
  unsigned trials = 10, nverts = 4, h = 1;
  std::uint64_t seed = 0;
  double density = 0.5;

  auto* reduce = app.add_subcommand("reduce", "build the code of a multigraph");
  reduce->add_option("graph", graph_a, "graph file")->required();
  reduce->add_flag("--h2-reduced", h2, "3-copy variant, h = 2 only");
  reduce->add_option("-o,--output", out_stem, "output stem (default: graph stem)");

  auto* verify = app.add_subcommand("verify", "check a stored reduction code");
  verify->add_option("code", code_a, "code file")->required();
  verify->add_option("zones", zone_path, "zone map (default: <code stem>.zones)");

  auto* iso = app.add_subcommand("iso", "brute-force multigraph isomorphism");
  iso->add_option("graph1", graph_a, "first graph")->required();
  iso->add_option("graph2", graph_b, "second graph")->required();

  auto* equiv = app.add_subcommand("equiv", "decide code equivalence at desk scale");
  equiv->add_option("code1", code_a, "first code")->required();
  equiv->add_option("code2", code_b, "second code")->required();
  equiv->add_option("--class", cls_name,
                    "witness class: identity|additive|zero-fixing|all");
  equiv->add_option("--budget", budget, "search candidate budget");

  auto* witness = app.add_subcommand(
      "witness", "build and validate the witness induced by an isomorphism");
  witness->add_option("graph1", graph_a, "first graph")->required();
  witness->add_option("graph2", graph_b, "second graph")->required();
  witness->add_option("bijection", bij_path, "file with sigma(1..n)")->required();
  witness->add_flag("--h2-reduced", h2, "3-copy variant, h = 2 only");

  auto* signature = app.add_subcommand("signature", "print coordinate signatures");
  signature->add_option("code", code_a, "code file")->required();
  signature->add_option("--coord", coord, "coordinate (1-based, default all)");
  signature->add_option("--dim", dim, "truncation subspace dimension");
  signature->add_flag("--hulls", show_hulls, "also print hull observations");

  auto* experiment = app.add_subcommand(
      "experiment", "hull dimensions of random reduction codes, CSV");
  experiment->set_help_flag("--help", "print help");  // frees -h for --h
  experiment->add_option("--trials", trials, "number of trials")->required();
  experiment->add_option("--n", nverts, "vertex count")->required();
  experiment->add_option("--h", h, "weight range")->required();
  experiment->add_option("--seed", seed, "random seed")->required();
  experiment->add_option("--density", density, "edge probability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(graph_a, h2, out_stem);
    if (verify->parsed()) return cmd_verify(code_a, zone_path);
    if (iso->parsed()) return cmd_iso(graph_a, graph_b);
    if (equiv->parsed()) return cmd_equiv(code_a, code_b, cls_name, budget);
    if (witness->parsed()) return cmd_witness(graph_a, graph_b, bij_path, h2);
    if (signature->parsed())
      return cmd_signature(code_a, coord, dim, show_hulls);
    if (experiment->parsed())
      return cmd_experiment(trials, nverts, h, seed, density);
  } catch (const addeq::GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const addeq::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.get_name() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
