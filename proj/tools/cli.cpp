#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kallen/characters.hpp"
#include "kallen/verify.hpp"

namespace kallen {

namespace {

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string lambda;
  std::string J;
  bool J_given = false;
  std::string w;
  std::string method;
  std::string kind = "K";
  int trunc = -1;
  std::string format = "text";
  int jobs = 1;
  std::string out;
  std::string suite = "all";
  std::uint64_t seed = 1;
  int max_coord = 2;
  int random_count = 100;
};

using ojson = nlohmann::ordered_json;

std::shared_ptr<const RootSystem> root_system_of(const RunConfig& cfg) {
  if (cfg.type.empty()) throw ConfigError("--type is required");
  std::string name = cfg.type;
  const bool has_rank = std::any_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  if (!has_rank) {
    if (cfg.rank <= 0) throw ConfigError("--rank is required when --type has no rank");
    name += std::to_string(cfg.rank);
  } else if (cfg.rank > 0 && name != name.substr(0, 1) + std::to_string(cfg.rank)) {
    throw ConfigError("--rank disagrees with --type " + cfg.type);
  }
  return std::make_shared<const RootSystem>(RootSystem::build(name));
}

Weight lambda_of(const RootSystem& R, const RunConfig& cfg) {
  if (cfg.lambda.empty()) throw ConfigError("--lambda is required");
  const std::vector<int> xs = parse_int_list(cfg.lambda);
  if (static_cast<int>(xs.size()) != R.rank())
    throw ConfigError("--lambda needs " + std::to_string(R.rank()) + " coordinates");
  const Weight lambda = Weight::from(xs);
  if (!R.is_dominant(lambda)) throw ConfigError("lambda " + coords_to_string(lambda) + " is not dominant");
  return lambda;
}

IndexSet J_of(const RootSystem& R, const RunConfig& cfg) {
  if (cfg.J_given) return parse_index_set(cfg.J, R.rank());
  if (!cfg.lambda.empty()) return R.j_of(lambda_of(R, cfg));
  return IndexSet();
}

/// Elements named by --w: a reduced word, or every element of `pool` for "all".
std::vector<WeylElt> elements_of(const RootSystem& R, const RunConfig& cfg, const std::vector<WeylElt>& pool) {
  if (cfg.w.empty()) throw ConfigError("--w is required");
  if (cfg.w == "all") return pool;
  return {R.from_reduced_word(parse_word(cfg.w))};
}

WeylElt coset_element(const ShapeContext& ctx, WeylElt w) {
  if (!ctx.graph().contains(w))
    throw ConfigError(elt_to_string(ctx.root_system(), w) + " is not a minimal coset representative for J = " +
                      index_set_to_string(ctx.J()));
  return w;
}

ojson word_json(const RootSystem& R, WeylElt w) { return elt_to_string(R, w); }

std::string cmd_rootsys(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const int n = R->rank();
  ojson j;
  j["type"] = R->name();
  j["rank"] = n;
  j["cartan"] = ojson::array();
  for (int a = 0; a < n; ++a) {
    std::vector<int> row;
    for (int b = 0; b < n; ++b) row.push_back(R->cartan(a, b));
    j["cartan"].push_back(row);
  }
  j["positive_roots"] = ojson::array();
  j["positive_coroots"] = ojson::array();
  for (int r = 0; r < R->num_positive(); ++r) {
    j["positive_roots"].push_back(R->root(r).to_vector());
    j["positive_coroots"].push_back(R->coroot(r).to_vector());
  }
  j["theta"] = R->theta().to_vector();
  j["rho"] = R->rho().to_vector();
  j["weyl_order"] = R->order();
  j["longest"] = word_json(*R, R->longest());
  if (cfg.format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  os << "type " << R->name() << "\ncartan";
  for (int a = 0; a < n; ++a) {
    os << "\n ";
    for (int b = 0; b < n; ++b) os << " " << R->cartan(a, b);
  }
  os << "\npositive roots (simple-root coordinates) / coroots (simple-coroot coordinates)\n";
  for (int r = 0; r < R->num_positive(); ++r)
    os << "  " << coords_to_string(R->root(r)) << "  " << coords_to_string(R->coroot(r)) << "\n";
  os << "theta " << coords_to_string(R->theta()) << "\nrho " << coords_to_string(R->rho()) << "\n|W| "
     << R->order() << "\nlongest " << elt_to_string(*R, R->longest()) << "\n";
  return os.str();
}

std::string cmd_qbg(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const QuantumBruhatGraph G(*R, J_of(*R, cfg));
  if (cfg.format == "dot") return qbg_to_dot(G);
  if (cfg.format == "json") return qbg_to_json(G) + "\n";
  std::ostringstream os;
  os << "J = " << index_set_to_string(G.J()) << ", " << G.num_vertices() << " vertices, " << G.edges().size()
     << " edges\n";
  for (const QbgEdge& e : G.edges())
    os << "  " << elt_to_string(*R, G.vertex(e.src)) << " -> " << elt_to_string(*R, G.vertex(e.dst)) << "  "
       << coords_to_string(R->root(e.root)) << (e.quantum ? "  quantum" : "  bruhat") << "\n";
  return os.str();
}

EqbMethod eqb_method_of(const std::string& m) {
  if (m.empty() || m == "recursive") return EqbMethod::Recursive;
  if (m == "label" || m == "label-increasing") return EqbMethod::LabelIncreasing;
  if (m == "brute") return EqbMethod::Brute;
  throw ConfigError("unknown eqb method: " + m + " (expected label, recursive or brute)");
}

std::string cmd_eqb(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const QuantumBruhatGraph G(*R, IndexSet());
  const EqbMethod method = eqb_method_of(cfg.method);
  ojson arr = ojson::array();
  std::ostringstream os;
  for (WeylElt w : elements_of(*R, cfg, R->elements())) {
    const std::vector<WeylElt> set = eqb(G, w, method);
    ojson j;
    j["w"] = word_json(*R, w);
    j["eqb"] = ojson::array();
    os << elt_to_string(*R, w) << ":";
    for (WeylElt u : set) {
      j["eqb"].push_back(word_json(*R, u));
      os << " [" << elt_to_string(*R, u) << "]";
    }
    os << "\n";
    arr.push_back(j);
  }
  if (cfg.format == "json") return arr.dump(2) + "\n";
  return os.str();
}

std::string cmd_kset(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const ShapeContext ctx(R, lambda_of(*R, cfg));
  ojson arr = ojson::array();
  std::ostringstream os;
  for (WeylElt w : elements_of(*R, cfg, ctx.cosets())) {
    const KParametrization kp = k_parametrize(ctx.graph(), ctx.eqb(), coset_element(ctx, w));
    ojson j;
    j["w"] = word_json(*R, w);
    j["free"] = ojson::array();
    for (int i : kp.free.members()) j["free"].push_back(i + 1);
    j["components"] = ojson::array();
    os << "K_" << elt_to_string(*R, w) << ": free " << index_set_to_string(kp.free) << "\n";
    for (std::size_t k = 0; k < kp.fins.size(); ++k) {
      ojson c;
      c["u"] = word_json(*R, kp.fins[k]);
      c["base"] = kp.base[k].to_vector();
      j["components"].push_back(c);
      os << "  u = " << elt_to_string(*R, kp.fins[k]) << ", xi >= " << coords_to_string(kp.base[k]) << "\n";
    }
    arr.push_back(j);
  }
  if (cfg.format == "json") return arr.dump(2) + "\n";
  return os.str();
}

std::string cmd_qls(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const ShapeContext ctx(R, lambda_of(*R, cfg));
  std::optional<WeylElt> w;
  std::vector<QLSPath> paths = ctx.qls();
  if (!cfg.w.empty() && cfg.w != "all") {
    w = coset_element(ctx, R->from_reduced_word(parse_word(cfg.w)));
    paths = qls_filter_winf(ctx, paths, *w);
  }
  ojson arr = ojson::array();
  std::ostringstream os;
  for (const QLSPath& eta : paths) {
    ojson j = ojson::parse(qls_to_json(*R, eta));
    j["wt"] = qls_wt(ctx, eta).to_vector();
    j["deg"] = w ? deg_at(ctx, eta, *w) : deg_lambda(ctx, eta);
    arr.push_back(j);
    os << qls_to_string(*R, eta) << "  wt " << coords_to_string(qls_wt(ctx, eta)) << "  deg "
       << (w ? deg_at(ctx, eta, *w) : deg_lambda(ctx, eta)) << "\n";
  }
  if (cfg.format == "json") return arr.dump(2) + "\n";
  return os.str() + std::to_string(paths.size()) + " paths\n";
}

MacdonaldMethod macdonald_method_of(const std::string& m) {
  if (m.empty() || m == "qls") return MacdonaldMethod::Qls;
  if (m == "recursion") return MacdonaldMethod::Recursion;
  throw ConfigError("unknown macdonald method: " + m + " (expected qls or recursion)");
}

std::string cmd_macdonald(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const ShapeContext ctx(R, lambda_of(*R, cfg));
  const CharacterTable table(ctx, macdonald_method_of(cfg.method));
  const std::vector<WeylElt> ws = elements_of(*R, cfg, ctx.cosets());
  ojson arr = ojson::array();
  std::ostringstream os;
  for (WeylElt w : ws) {
    const GroupAlgebraElt& E = table.E(coset_element(ctx, w));
    ojson j;
    j["w"] = word_json(*R, w);
    j["E"] = ojson::parse(poly_to_json(E));
    arr.push_back(j);
    if (ws.size() > 1) os << elt_to_string(*R, w) << ": ";
    os << poly_to_text(E) << "\n";
  }
  if (cfg.format == "json") return (ws.size() == 1 ? arr[0]["E"] : arr).dump(2) + "\n";
  return os.str();
}

std::string cmd_gch(const RunConfig& cfg) {
  const auto R = root_system_of(cfg);
  const ShapeContext ctx(R, lambda_of(*R, cfg));
  const CharacterTable table(ctx, macdonald_method_of(cfg.method == "direct" ? "" : cfg.method));
  if (cfg.kind != "K" && cfg.kind != "Kbar" && cfg.kind != "V")
    throw ConfigError("unknown --kind " + cfg.kind + " (expected K, Kbar or V)");
  if (cfg.method == "direct" && (cfg.kind != "K" || cfg.trunc < 0))
    throw ConfigError("--method direct needs --kind K and --trunc N");
  const std::vector<WeylElt> ws = elements_of(*R, cfg, ctx.cosets());
  ojson arr = ojson::array();
  std::ostringstream os;
  for (WeylElt w : ws) {
    coset_element(ctx, w);
    GradedChar g = cfg.kind == "K" ? table.gch_K(w) : cfg.kind == "V" ? table.gch_V(w) : GradedChar{table.E(w), {}};
    ojson j;
    j["w"] = word_json(*R, w);
    std::string text;
    if (cfg.trunc >= 0) {
      const GroupAlgebraElt f = cfg.method == "direct" ? gch_K_direct(ctx, w, cfg.trunc) : expand_truncated(g, cfg.trunc);
      j["gch"] = ojson::parse(poly_to_json(f));
      text = poly_to_text(f);
    } else {
      j["gch"] = ojson::parse(graded_to_json(g));
      text = graded_to_text(g);
    }
    arr.push_back(j);
    if (ws.size() > 1) os << elt_to_string(*R, w) << ": ";
    os << text << "\n";
  }
  if (cfg.format == "json") return (ws.size() == 1 ? arr[0]["gch"] : arr).dump(2) + "\n";
  return os.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, std::string& text) {
  SuiteConfig sc;
  if (cfg.suite != "all") sc.identities = split_list(cfg.suite);
  for (const auto& n : sc.identities)
    if (!is_identity_name(n)) throw ConfigError("unknown identity: " + n);
  if (cfg.type.empty()) {
    sc.shapes = sweep_shapes({"A1", "A2", "B2", "A3", "G2"}, cfg.max_coord);
  } else {
    const auto R = root_system_of(cfg);
    if (cfg.lambda.empty())
      sc.shapes = sweep_shapes({R->name()}, cfg.max_coord);
    else
      sc.shapes = {{R->name(), lambda_of(*R, cfg)}};
  }
  sc.options.trunc = cfg.trunc >= 0 ? cfg.trunc : 6;
  sc.options.seed = cfg.seed;
  sc.options.random_count = cfg.random_count;
  sc.jobs = cfg.jobs;
  const SuiteReport report = run_suite(sc);
  text = cfg.format == "json" ? report_to_json(report) + "\n" : report_to_text(report);
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum Bruhat graph, QLS path and graded character computations"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style key = value file mirroring the flags");
  RunConfig cfg;
  app.add_option("--type", cfg.type, "root system, e.g. A2, or a series letter with --rank");
  app.add_option("--rank", cfg.rank, "rank when --type is a series letter");
  app.add_option("--lambda", cfg.lambda, "dominant weight in fundamental coordinates, e.g. 1,0");
  auto* J_opt = app.add_option("--J", cfg.J, "parabolic index set, 1-based, e.g. \"2\" (default: J of lambda)");
  app.add_option("--w", cfg.w, "reduced word such as \"s1 s2\", or \"all\"");
  app.add_option("--method", cfg.method, "eqb: label|recursive|brute; macdonald/gch: qls|recursion (gch also direct)");
  app.add_option("--kind", cfg.kind, "gch: K, Kbar or V");
  app.add_option("--trunc", cfg.trunc, "truncation depth N (gch, verify)");
  app.add_option("--format", cfg.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--suite", cfg.suite, "verify: all, or a comma list of identity names");
  app.add_option("--seed", cfg.seed, "seed for random operator tests");
  app.add_option("--max-coord", cfg.max_coord, "verify sweep: largest lambda coordinate")->check(CLI::NonNegativeNumber);
  app.add_option("--samples", cfg.random_count, "verify: random polynomials per type")->check(CLI::NonNegativeNumber);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"rootsys", "Cartan data, roots, coroots and the Weyl group order"},
      {"qbg", "parabolic quantum Bruhat graph (text, json or dot)"},
      {"eqb", "EQB(w) for a word or all elements"},
      {"kset", "parametrization of K_w by final direction and translation"},
      {"qls", "quantum LS paths of shape lambda with weights and degrees"},
      {"macdonald", "E_{w lambda}(q, infinity)"},
      {"gch", "graded characters of K_w, Kbar_w or V_w"},
      {"verify", "identity suite over a sweep of types and weights"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.J_given = J_opt->count() > 0;
  const std::string cmd = app.get_subcommands().front()->get_name();

  std::string text;
  int code = 0;
  try {
    if (cmd == "rootsys")
      text = cmd_rootsys(cfg);
    else if (cmd == "qbg")
      text = cmd_qbg(cfg);
    else if (cmd == "eqb")
      text = cmd_eqb(cfg);
    else if (cmd == "kset")
      text = cmd_kset(cfg);
    else if (cmd == "qls")
      text = cmd_qls(cfg);
    else if (cmd == "macdonald")
      text = cmd_macdonald(cfg);
    else if (cmd == "gch")
      text = cmd_gch(cfg);
    else
      code = cmd_verify(cfg, text);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 1;
  }
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace kallen
