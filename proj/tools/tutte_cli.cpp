// tutte: command-line front end for the core library.
//
//   tutte compute --family wheel --n 3
//   tutte compute --graph c4.edges --engine dc
//   tutte eval --matrix fano.gf --x 1 --y 1
//   tutte catalog verify all

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutte/catalog.hpp"
#include "tutte/engines.hpp"
#include "tutte/error.hpp"
#include "tutte/families.hpp"
#include "tutte/io.hpp"
#include "tutte/recipe.hpp"

namespace {

using namespace tutte;

enum Exit : int { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3, kMismatch = 4 };

struct Input {
  std::string family;
  std::string matroid_file;
  std::string graph_file;
  std::string matrix_file;
  std::string recipe;
  std::string entry;
  std::vector<std::string> poly_files;
  std::optional<unsigned> n, m, r, k, dim;
  std::optional<std::string> q, lambda;
  std::string engine = "dc";
  bool engine_given = false;
  unsigned threads = 0;
  std::uint64_t budget_nodes = kDefaultNodeBudget;
};

void add_input_options(CLI::App* cmd, Input& in) {
  auto* sources = cmd->add_option_group("input", "exactly one input source");
  sources->add_option("--family", in.family, "closed-form family (see README)");
  sources->add_option("--matroid", in.matroid_file, "matroid JSON file");
  sources->add_option("--graph", in.graph_file, "graph edge file");
  sources->add_option("--matrix", in.matrix_file, "GF(p) matrix file");
  sources->add_option("--recipe", in.recipe, "construction recipe");
  sources->add_option("--entry", in.entry, "catalog entry name");
  sources->require_option(1);

  cmd->add_option("--n", in.n, "family size parameter");
  cmd->add_option("--m", in.m, "second size parameter");
  cmd->add_option("--r", in.r, "rank parameter");
  cmd->add_option("--k", in.k, "multiplicity (thicken, stretch)");
  cmd->add_option("--dim", in.dim, "geometry dimension");
  cmd->add_option("--q", in.q, "field size");
  cmd->add_option("--lambda", in.lambda, "circuit-hyperplane count");
  cmd->add_option("--poly", in.poly_files, "polynomial file(s) for derived families");
  cmd->add_option("--engine", in.engine, "subset, dc, activities or coboundary")
      ->each([&in](const std::string&) { in.engine_given = true; });
  cmd->add_option("--threads", in.threads, "worker threads for subset expansion (0 = all)");
  cmd->add_option("--budget-nodes", in.budget_nodes, "deletion-contraction node budget");
}

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& family) {
  if (!v) fail(ErrorKind::ParseError, "family '" + family + "' needs " + flag);
  return *v;
}

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (v.set_str(text, 10) != 0) fail(ErrorKind::ParseError, std::string("bad ") + what + " '" + text + "'");
  return v;
}

Rational parse_rational(const std::string& text) {
  Rational v;
  if (text.empty() || v.set_str(text, 10) != 0 || v.get_den() == 0) {
    fail(ErrorKind::ParseError, "bad rational '" + text + "' (use p or p/q)");
  }
  v.canonicalize();
  return v;
}

BiPoly read_poly(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_json_poly(text);
  return parse_poly(text);
}

std::vector<BiPoly> polys(const Input& in, std::size_t count, const std::string& family) {
  if (in.poly_files.size() != count) {
    fail(ErrorKind::ParseError, "family '" + family + "' needs " + std::to_string(count) +
                                    " --poly file(s)");
  }
  std::vector<BiPoly> out;
  for (const auto& f : in.poly_files) out.push_back(read_poly(f));
  return out;
}

families::PavingSpec read_paving_spec(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
    families::PavingSpec spec;
    spec.r = doc.at("r").get<unsigned>();
    spec.n = doc.at("n").get<unsigned>();
    for (const auto& [size, count] : doc.at("blocks").items()) {
      spec.block_sizes[static_cast<unsigned>(std::stoul(size))] = count.get<long>();
    }
    return spec;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("paving spec: ") + ex.what());
  } catch (const std::logic_error& ex) {
    fail(ErrorKind::ParseError, std::string("paving spec: ") + ex.what());
  }
}

// Families that also have a concrete matroid, so that --engine can be used.
std::optional<std::string> family_recipe(const Input& in) {
  const std::string& f = in.family;
  auto n = [&] { return std::to_string(need(in.n, "--n", f)); };
  if (f == "uniform") return "uniform(" + std::to_string(need(in.r, "--r", f)) + ", " + n() + ")";
  if (f == "cycle") return "cyclegraph(" + n() + ")";
  if (f == "wheel") return "wheelgraph(" + n() + ")";
  if (f == "whirl") {
    std::string rim = "{";
    for (unsigned i = 0; i < need(in.n, "--n", f); ++i) rim += (i ? " " : "") + std::to_string(i);
    return "relax(wheelgraph(" + n() + "), " + rim + "})";
  }
  if (f == "complete") return "complete(" + n() + ")";
  if (f == "complete-bipartite") {
    return "bipartite(" + n() + ", " + std::to_string(need(in.m, "--m", f)) + ")";
  }
  if (f == "grid2") return "grid(2, " + n() + ")";
  if (f == "grid") return "grid(" + std::to_string(need(in.m, "--m", f)) + ", " + n() + ")";
  if (f == "catalan") return "catalan(" + n() + ")";
  return std::nullopt;
}

BiPoly family_poly(const Input& in) {
  namespace fam = families;
  const std::string& f = in.family;
  auto n = [&] { return need(in.n, "--n", f); };
  auto q = [&] { return parse_integer(need(in.q, "--q", f), "--q"); };
  if (f == "uniform") return fam::uniform(need(in.r, "--r", f), n());
  if (f == "cycle") return fam::cycle(n());
  if (f == "multilink") return fam::multilink(n());
  if (f == "sparse-paving") {
    return fam::sparse_paving(need(in.r, "--r", f), n(), parse_integer(need(in.lambda, "--lambda", f), "--lambda"));
  }
  if (f == "steiner") {
    return fam::steiner_sparse(need(in.r, "--r", f), n(),
                               parse_integer(need(in.lambda, "--lambda", f), "--lambda"));
  }
  if (f == "paving") {
    if (in.poly_files.size() != 1) fail(ErrorKind::ParseError, "paving needs one --poly spec file");
    return fam::paving(read_paving_spec(in.poly_files[0]));
  }
  if (f == "catalan") return fam::catalan(n());
  if (f == "grid2") return fam::grid2(n());
  if (f == "grid") return transfer_grid(need(in.m, "--m", f), n());
  if (f == "complete") return fam::complete_graph(n());
  if (f == "complete-bipartite") return fam::complete_bipartite(n(), need(in.m, "--m", f));
  if (f == "pg") return fam::projective(need(in.dim, "--dim", f), q());
  if (f == "ag") return fam::affine(need(in.dim, "--dim", f), q());
  if (f == "wheel") return fam::wheel(n());
  if (f == "whirl") return fam::whirl(n());
  if (f == "qcone") return fam::q_cone(polys(in, 1, f)[0], need(in.r, "--r", f), q());
  if (f == "thicken") return fam::thicken_poly(polys(in, 1, f)[0], need(in.r, "--r", f), need(in.k, "--k", f));
  if (f == "stretch") {
    return fam::stretch_poly(polys(in, 1, f)[0], need(in.r, "--r", f), need(in.k, "--k", f));
  }
  if (f == "tensor") {
    const auto p = polys(in, 3, f);
    return fam::tensor_poly({p[0], need(in.r, "--r", f), n(), p[1], p[2]});
  }
  if (f == "1sum") {
    if (in.poly_files.empty()) fail(ErrorKind::ParseError, "1sum needs --poly files");
    return fam::one_sum(polys(in, in.poly_files.size(), f));
  }
  if (f == "2sum") {
    const auto p = polys(in, 4, f);
    return fam::two_sum_poly(p[0], p[1], p[2], p[3]);
  }
  if (f == "3sum") {
    const auto p = polys(in, 10, f);
    return fam::delta_sum_poly({p[0], p[1], p[2], p[3], p[4]}, {p[5], p[6], p[7], p[8], p[9]});
  }
  fail(ErrorKind::ParseError, "unknown family '" + f + "'");
}

Matroid load_matroid(const Input& in) {
  if (!in.matroid_file.empty()) return parse_matroid_json(read_file(in.matroid_file));
  if (!in.graph_file.empty()) return graphic_matroid(parse_graph(read_file(in.graph_file)));
  if (!in.matrix_file.empty()) return linear_matroid(parse_gf_matrix(read_file(in.matrix_file)));
  if (!in.recipe.empty()) return build_recipe(in.recipe);
  if (!in.entry.empty()) return lookup(in.entry).build();
  const auto recipe = family_recipe(in);
  if (!recipe) fail(ErrorKind::UnsupportedEngine, "family '" + in.family + "' has no matroid for --engine");
  return build_recipe(*recipe);
}

BiPoly compute(const Input& in) {
  if (!in.family.empty() && !in.engine_given) return family_poly(in);
  return tutte_by_engine(load_matroid(in), in.engine, in.threads, in.budget_nodes);
}

std::string render(const BiPoly& p, const std::string& format) {
  if (format == "json") return to_json(p);
  if (format == "latex") return to_latex(p);
  return to_text(p);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kParse;
    case ErrorKind::ResourceBudgetExceeded:
    case ErrorKind::SizeBudgetExceeded:
    case ErrorKind::GroundSetTooLarge:
    case ErrorKind::GraphTooLarge: return kBudget;
    default: return kFailure;
  }
}

int run_catalog(const std::string& action, const std::string& target, const std::string& format,
                const std::vector<std::string>& engines, unsigned threads, std::uint64_t budget) {
  const bool json = format == "json";
  if (action == "list") {
    if (json) {
      std::cout << catalog_json() << '\n';
    } else {
      for (const auto& e : catalog()) std::cout << e.name << '\t' << e.provenance << '\n';
    }
    return kOk;
  }
  if (target.empty()) fail(ErrorKind::ParseError, "catalog " + action + " needs a name");
  if (action == "show") {
    const CatalogEntry& e = lookup(target);
    if (json) {
      std::cout << entry_json(e) << '\n';
    } else {
      std::cout << "name: " << e.name << "\nrecipe: " << e.recipe
                << "\npolynomial: " << to_text(e.ground_truth()) << "\nprovenance: " << e.provenance
                << "\nself-dual: " << (e.flags.self_dual ? "yes" : "no")
                << "\nsparse paving: " << (e.flags.sparse_paving ? "yes" : "no")
                << "\npaving: " << (e.flags.paving ? "yes" : "no")
                << "\nrepresentable: " << e.flags.representable << '\n';
    }
    return kOk;
  }
  if (action == "verify") {
    VerifyOptions options;
    if (!engines.empty()) options.engines = engines;
    options.threads = threads;
    options.budget_nodes = budget;
    std::vector<const CatalogEntry*> targets;
    if (target == "all") {
      for (const auto& e : catalog()) targets.push_back(&e);
    } else {
      targets.push_back(&lookup(target));
    }
    bool all_passed = true;
    for (const CatalogEntry* e : targets) {
      const VerifyReport report = verify(*e, options);
      all_passed = all_passed && report.passed();
      std::cout << (json ? report_json(report) + "\n" : report_text(report)) << std::flush;
    }
    return all_passed ? kOk : kMismatch;
  }
  fail(ErrorKind::ParseError, "unknown catalog action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tutte polynomials of graphs and matroids"};
  app.require_subcommand(1);

  Input compute_in;
  std::string compute_format = "text";
  auto* compute_cmd = app.add_subcommand("compute", "print a Tutte polynomial");
  add_input_options(compute_cmd, compute_in);
  compute_cmd->add_option("--format", compute_format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  Input eval_in;
  std::string x0 = "1";
  std::string y0 = "1";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a Tutte polynomial at a rational point");
  add_input_options(eval_cmd, eval_in);
  eval_cmd->add_option("--x", x0, "x value, p or p/q");
  eval_cmd->add_option("--y", y0, "y value, p or p/q");

  std::string action;
  std::string target;
  std::string catalog_format = "text";
  std::vector<std::string> engines;
  unsigned catalog_threads = 0;
  std::uint64_t catalog_budget = kDefaultNodeBudget;
  auto* catalog_cmd = app.add_subcommand("catalog", "list, show or verify catalog entries");
  catalog_cmd->add_option("action", action, "list, show or verify")
      ->required()
      ->check(CLI::IsMember({"list", "show", "verify"}));
  catalog_cmd->add_option("name", target, "entry name, or 'all' for verify");
  catalog_cmd->add_option("--format", catalog_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  catalog_cmd->add_option("--engine", engines, "engines to run (repeatable)");
  catalog_cmd->add_option("--threads", catalog_threads, "worker threads for subset expansion");
  catalog_cmd->add_option("--budget-nodes", catalog_budget, "deletion-contraction node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*compute_cmd) {
      std::cout << render(compute(compute_in), compute_format) << '\n';
      return kOk;
    }
    if (*eval_cmd) {
      const Rational x = parse_rational(x0);
      const Rational y = parse_rational(y0);
      std::cout << compute(eval_in).eval(x, y).get_str() << '\n';
      return kOk;
    }
    return run_catalog(action, target, catalog_format, engines, catalog_threads, catalog_budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
