#include "kallen/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "kallen/parallel.hpp"

namespace kallen {

const std::vector<std::string>& shape_identities() {
  static const std::vector<std::string> names = {"dem1",    "rec1",      "co_recursion",
                                                 "lemma_F", "moebius",   "macdonald_methods",
                                                 "truncation", "degree"};
  return names;
}

const std::vector<std::string>& operator_identities() {
  static const std::vector<std::string> names = {"D_idempotent", "T_property"};
  return names;
}

bool is_identity_name(const std::string& name) {
  const auto& a = shape_identities();
  const auto& b = operator_identities();
  return std::find(a.begin(), a.end(), name) != a.end() ||
         std::find(b.begin(), b.end(), name) != b.end();
}

std::string case_label(const ShapeContext& ctx) {
  return ctx.root_system().name() + " lambda=" + coords_to_string(ctx.lambda());
}

namespace {

class CaseSink {
 public:
  CaseSink(std::string identity, std::vector<IdentityCase>& out) : identity_(std::move(identity)), out_(out) {}

  void poly(const std::string& name, const GroupAlgebraElt& lhs, const GroupAlgebraElt& rhs) {
    record(name, lhs == rhs, [&] { return poly_to_text(lhs); }, [&] { return poly_to_text(rhs); });
  }
  void graded(const std::string& name, const GradedChar& lhs, const GradedChar& rhs) {
    record(name, equal(lhs, rhs), [&] { return graded_to_text(lhs); }, [&] { return graded_to_text(rhs); });
  }
  void integer(const std::string& name, long long lhs, long long rhs) {
    record(name, lhs == rhs, [&] { return std::to_string(lhs); }, [&] { return std::to_string(rhs); });
  }
  void error(const std::string& name, const std::string& what) {
    out_.push_back({name, identity_, false, "error", what});
  }

 private:
  template <class L, class R>
  void record(const std::string& name, bool ok, L lhs, R rhs) {
    IdentityCase c{name, identity_, ok, "", ""};
    if (!ok) {
      c.lhs = lhs();
      c.rhs = rhs();
    }
    out_.push_back(std::move(c));
  }

  std::string identity_;
  std::vector<IdentityCase>& out_;
};

std::string wi_label(const ShapeContext& ctx, WeylElt w, int i) {
  return case_label(ctx) + " w=" + elt_to_string(ctx.root_system(), w) + " i=" + std::to_string(i + 1);
}

std::string w_label(const ShapeContext& ctx, WeylElt w) {
  return case_label(ctx) + " w=" + elt_to_string(ctx.root_system(), w);
}

GradedChar zero_graded() { return {}; }

void check_dem1(const ShapeContext& ctx, const CharacterTable& T, CaseSink& sink) {
  const RootSystem& R = ctx.root_system();
  for (WeylElt w : ctx.cosets()) {
    const GradedChar V = T.gch_V(w);
    const Weight wl = R.act(w, ctx.lambda());
    for (int i = 0; i < R.rank(); ++i) {
      const GradedChar lhs = demazure_T(R, i, V);
      const GradedChar rhs = wl.c[i] < 0 ? T.gch_V(R.left_mul(i, w)) - V : zero_graded();
      sink.graded(wi_label(ctx, w, i), lhs, rhs);
    }
  }
}

void check_rec1(const ShapeContext& ctx, const CharacterTable& T, CaseSink& sink) {
  const RootSystem& R = ctx.root_system();
  for (WeylElt w : ctx.cosets()) {
    const GradedChar K = T.gch_K(w);
    const Weight wl = R.act(w, ctx.lambda());
    for (int i = 0; i < R.rank(); ++i) {
      const GradedChar lhs = demazure_T(R, i, K);
      GradedChar rhs;
      if (wl.c[i] < 0)
        rhs = T.gch_K(R.left_mul(i, w));
      else if (wl.c[i] > 0)
        rhs = -K;
      sink.graded(wi_label(ctx, w, i), lhs, rhs);
    }
  }
}

void check_co_recursion(const ShapeContext& ctx, const CharacterTable& T, CaseSink& sink) {
  const RootSystem& R = ctx.root_system();
  for (WeylElt w : ctx.cosets()) {
    const Weight wl = R.act(w, ctx.lambda());
    const WeylElt top = R.max_coset_rep(w, ctx.J());
    for (int i = 0; i < R.rank(); ++i) {
      if (wl.c[i] >= 0) continue;
      const int beta = R.act_root(R.inverse(top), R.simple_root_index(i));
      const GroupAlgebraElt lhs = demazure_T(R, i, T.E(w));
      GroupAlgebraElt rhs = T.E(R.left_mul(i, w));
      if (R.root(R.negate(beta)).sum() == 1)
        rhs = one_minus_q_pow(R.rank(), R.pair(ctx.lambda(), R.coroot(beta))) * rhs;
      sink.poly(wi_label(ctx, w, i), lhs, rhs);
    }
  }
}

void check_lemma_F(const ShapeContext& ctx, const CharacterTable& T, CaseSink& sink) {
  const RootSystem& R = ctx.root_system();
  for (WeylElt w : ctx.cosets()) {
    const Weight wl = R.act(w, ctx.lambda());
    for (int i = 0; i < R.rank(); ++i) {
      if (wl.c[i] >= 0) continue;
      sink.graded(wi_label(ctx, w, i), demazure_T(R, i, T.gch_K(w)), T.gch_K(R.left_mul(i, w)));
    }
  }
}

void check_moebius(const ShapeContext& ctx, const CharacterTable& T, CaseSink& sink) {
  const RootSystem& R = ctx.root_system();
  const std::vector<WeylElt> all = R.elements();
  for (WeylElt w : ctx.cosets()) {
    GradedChar acc;
    for (WeylElt v : ctx.cosets()) {
      if (!R.bruhat_leq(w, v)) continue;
      bool inside = true;
      for (WeylElt u : all)
        if (R.bruhat_leq(w, u) && R.bruhat_leq(u, v) && !ctx.graph().contains(u)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      const GradedChar V = T.gch_V(v);
      acc = (R.length(v) - R.length(w)) % 2 == 0 ? acc + V : acc - V;
    }
    sink.graded(w_label(ctx, w), T.gch_K(w), acc);
  }
}

void check_macdonald_methods(const ShapeContext& ctx, const CharacterTable& T, CaseSink& sink) {
  const auto smallest = macdonald_table(ctx, MacdonaldMethod::Recursion, false);
  const auto largest = macdonald_table(ctx, MacdonaldMethod::Recursion, true);
  for (std::size_t k = 0; k < ctx.cosets().size(); ++k) {
    const WeylElt w = ctx.cosets()[k];
    sink.poly(w_label(ctx, w) + " recursion", T.E(w), smallest[k]);
    sink.poly(w_label(ctx, w) + " recursion-largest", T.E(w), largest[k]);
  }
}

void check_truncation(const ShapeContext& ctx, const CharacterTable& T, int N, CaseSink& sink) {
  for (WeylElt w : ctx.cosets())
    sink.poly(w_label(ctx, w) + " N=" + std::to_string(N), expand_truncated(T.gch_K(w), N),
              gch_K_direct(ctx, w, N));
}

void check_degree(const ShapeContext& ctx, CaseSink& sink) {
  const RootSystem& R = ctx.root_system();
  for (std::size_t p = 0; p < ctx.qls().size(); ++p) {
    const QLSPath& eta = ctx.qls()[p];
    const WeylElt kappa = eta.final_direction();
    const int at_kappa = deg_at(ctx, eta, kappa);
    sink.integer(case_label(ctx) + " eta=" + qls_to_string(R, eta) + " w=kappa", at_kappa,
                 deg_lambda(ctx, eta));
    for (WeylElt w : ctx.cosets()) {
      const int expected = at_kappa - R.pair(ctx.lambda(), ctx.graph().path_weight(w, kappa));
      sink.integer(case_label(ctx) + " eta=" + qls_to_string(R, eta) + " w=" + elt_to_string(R, w),
                   deg_at(ctx, eta, w), expected);
    }
  }
}

}  // namespace

std::vector<IdentityCase> verify_identity(const std::string& name, const ShapeContext& ctx,
                                          const CharacterTable& table, const VerifyOptions& opt) {
  std::vector<IdentityCase> out;
  CaseSink sink(name, out);
  try {
    if (name == "dem1")
      check_dem1(ctx, table, sink);
    else if (name == "rec1")
      check_rec1(ctx, table, sink);
    else if (name == "co_recursion")
      check_co_recursion(ctx, table, sink);
    else if (name == "lemma_F")
      check_lemma_F(ctx, table, sink);
    else if (name == "moebius")
      check_moebius(ctx, table, sink);
    else if (name == "macdonald_methods")
      check_macdonald_methods(ctx, table, sink);
    else if (name == "truncation")
      check_truncation(ctx, table, opt.trunc, sink);
    else if (name == "degree")
      check_degree(ctx, sink);
    else
      throw ConfigError("unknown identity: " + name);
  } catch (const InvariantViolation& e) {
    sink.error(case_label(ctx), e.what());
  }
  return out;
}

std::vector<IdentityCase> verify_operator_identity(const std::string& name, const RootSystem& R,
                                                   const VerifyOptions& opt) {
  std::vector<IdentityCase> out;
  CaseSink sink(name, out);
  std::mt19937_64 rng(opt.seed);
  for (int n = 0; n < opt.random_count; ++n) {
    const GroupAlgebraElt f = random_poly(R, rng);
    for (int i = 0; i < R.rank(); ++i) {
      const std::string label = R.name() + " sample=" + std::to_string(n) + " i=" + std::to_string(i + 1);
      const GroupAlgebraElt Df = demazure_D(R, i, f);
      const GroupAlgebraElt Tf = demazure_T(R, i, f);
      if (name == "D_idempotent") {
        sink.poly(label, demazure_D(R, i, Df), Df);
      } else if (name == "T_property") {
        sink.poly(label + " T^2", demazure_T(R, i, Tf), -Tf);
        sink.poly(label + " TD", demazure_T(R, i, Df), GroupAlgebraElt());
        sink.poly(label + " DT", demazure_D(R, i, Tf), GroupAlgebraElt());
      } else {
        throw ConfigError("unknown operator identity: " + name);
      }
    }
  }
  return out;
}

std::vector<SweepShape> sweep_shapes(const std::vector<std::string>& types, int max_coord) {
  std::vector<SweepShape> out;
  for (const std::string& t : types) {
    const int rank = RootSystem::build(t).rank();
    std::vector<int> coords(rank, 0);
    while (true) {
      out.push_back({t, Weight::from(coords)});
      int k = rank - 1;
      while (k >= 0 && coords[k] == max_coord) coords[k--] = 0;
      if (k < 0) break;
      ++coords[k];
    }
  }
  return out;
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const IdentityCase& c) { return !c.pass; }));
}

SuiteReport run_suite(const SuiteConfig& config) {
  std::vector<std::string> shape_ids, op_ids;
  for (const std::string& n : config.identities)
    if (!is_identity_name(n)) throw ConfigError("unknown identity: " + n);
  auto selected = [&](const std::string& n) {
    return config.identities.empty() ||
           std::find(config.identities.begin(), config.identities.end(), n) != config.identities.end();
  };
  for (const auto& n : shape_identities())
    if (selected(n)) shape_ids.push_back(n);
  for (const auto& n : operator_identities())
    if (selected(n)) op_ids.push_back(n);

  std::map<std::string, std::shared_ptr<const RootSystem>> systems;
  std::vector<std::string> type_order;
  for (const SweepShape& s : config.shapes)
    if (!systems.count(s.type)) {
      systems[s.type] = std::make_shared<const RootSystem>(RootSystem::build(s.type));
      type_order.push_back(s.type);
    }

  const int n_shape = shape_ids.empty() ? 0 : static_cast<int>(config.shapes.size());
  const int n_op = op_ids.empty() ? 0 : static_cast<int>(type_order.size());
  std::vector<std::vector<IdentityCase>> slots(n_op + n_shape);
  parallel_for(n_op + n_shape, config.jobs, [&](int k) {
    if (k < n_op) {
      const RootSystem& R = *systems.at(type_order[k]);
      VerifyOptions opt = config.options;
      opt.seed = config.options.seed + static_cast<std::uint64_t>(k);
      for (const auto& n : op_ids) {
        auto part = verify_operator_identity(n, R, opt);
        slots[k].insert(slots[k].end(), part.begin(), part.end());
      }
      return;
    }
    const SweepShape& s = config.shapes[k - n_op];
    const ShapeContext ctx(systems.at(s.type), s.lambda);
    const CharacterTable table(ctx);
    for (const auto& n : shape_ids) {
      auto part = verify_identity(n, ctx, table, config.options);
      slots[k].insert(slots[k].end(), part.begin(), part.end());
    }
  });
  SuiteReport report;
  for (auto& s : slots) report.cases.insert(report.cases.end(), s.begin(), s.end());
  return report;
}

std::string report_to_json(const SuiteReport& report, int indent) {
  nlohmann::ordered_json j;
  j["cases"] = report.cases.size();
  j["failures"] = report.failures();
  j["results"] = nlohmann::ordered_json::array();
  for (const IdentityCase& c : report.cases) {
    nlohmann::ordered_json r;
    r["case"] = c.case_name;
    r["identity"] = c.identity;
    r["status"] = c.pass ? "pass" : "fail";
    r["lhs"] = c.lhs;
    r["rhs"] = c.rhs;
    j["results"].push_back(r);
  }
  return j.dump(indent);
}

std::string report_to_text(const SuiteReport& report) {
  std::map<std::string, std::pair<int, int>> tally;
  for (const IdentityCase& c : report.cases) {
    auto& t = tally[c.identity];
    ++t.first;
    if (!c.pass) ++t.second;
  }
  std::vector<std::string> order = operator_identities();
  order.insert(order.end(), shape_identities().begin(), shape_identities().end());
  std::ostringstream os;
  for (const std::string& n : order)
    if (tally.count(n)) os << n << ": " << tally[n].first << " cases, " << tally[n].second << " failed\n";
  for (const IdentityCase& c : report.cases)
    if (!c.pass) os << "FAIL " << c.identity << " [" << c.case_name << "]\n  lhs: " << c.lhs << "\n  rhs: " << c.rhs << "\n";
  os << (report.failures() == 0 ? "all identities hold" : std::to_string(report.failures()) + " failures") << " ("
     << report.cases.size() << " cases)\n";
  return os.str();
}

}  // namespace kallen
