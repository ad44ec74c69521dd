#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "kallen/paths.hpp"

namespace kallen {

std::string rational_to_string(const Rational& a) {
  if (a.denominator() == 1) return std::to_string(a.numerator());
  return std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ConfigError("bad rational: " + text);
  }
}

namespace {

std::vector<QLSPath> enumerate_paths(const ShapeContext& ctx) {
  const std::vector<WeylElt>& verts = ctx.cosets();
  const std::vector<Rational>& breaks = ctx.break_points();
  std::vector<QLSPath> out;
  QLSPath cur;
  cur.times.push_back(Rational(0));
  std::function<void()> extend = [&] {
    const WeylElt last = cur.dirs.back();
    cur.times.push_back(Rational(1));
    out.push_back(cur);
    cur.times.pop_back();
    for (const Rational& a : breaks) {
      if (a <= cur.times.back()) continue;
      for (WeylElt next : verts) {
        if (next == last || !ctx.reachable(a, next, last)) continue;
        cur.times.push_back(a);
        cur.dirs.push_back(next);
        extend();
        cur.dirs.pop_back();
        cur.times.pop_back();
      }
    }
  };
  for (WeylElt first : verts) {
    cur.dirs = {first};
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ShapeContext::ShapeContext(std::shared_ptr<const RootSystem> R, const Weight& lambda,
                           EqbMethod eqb_method)
    : R_(std::move(R)),
      lambda_(lambda),
      J_(R_->j_of(lambda)),
      graph_J_(*R_, J_),
      graph_full_(*R_, IndexSet()),
      eqb_(graph_full_, eqb_method) {
  for (int r = 0; r < R_->num_positive(); ++r) {
    const int m = height(r);
    for (int k = 1; k < m; ++k) breaks_.push_back(Rational(k, m));
  }
  std::sort(breaks_.begin(), breaks_.end());
  breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
  for (const Rational& a : breaks_) reach_.push_back(reach_matrix(a));
  qls_ = enumerate_paths(*this);
}

int ShapeContext::height(int root) const { return R_->pair(lambda_, R_->coroot(root)); }

std::vector<char> ShapeContext::reach_matrix(const Rational& a) const {
  const int n = graph_J_.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const QbgEdge& e : graph_J_.edges()) {
    const Rational x = a * Rational(height(e.root));
    if (x.denominator() == 1) adj[e.src].push_back(e.dst);
  }
  std::vector<char> reach(n * n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    reach[s * n + s] = 1;
    stack = {s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!reach[s * n + y]) {
          reach[s * n + y] = 1;
          stack.push_back(y);
        }
    }
  }
  return reach;
}

bool ShapeContext::reachable(const Rational& a, WeylElt x, WeylElt y) const {
  const int n = graph_J_.num_vertices();
  const int ix = graph_J_.vertex_index(x), iy = graph_J_.vertex_index(y);
  if (ix < 0 || iy < 0) return false;
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), a);
  if (it != breaks_.end() && *it == a) return reach_[it - breaks_.begin()][ix * n + iy];
  return reach_matrix(a)[ix * n + iy];
}

bool operator<(const QLSPath& a, const QLSPath& b) {
  if (a.dirs.size() != b.dirs.size()) return a.dirs.size() < b.dirs.size();
  if (a.times != b.times)
    return std::lexicographical_compare(a.times.begin(), a.times.end(), b.times.begin(),
                                        b.times.end());
  return a.dirs < b.dirs;
}

std::vector<QLSPath> qls_enumerate(const ShapeContext& ctx) { return ctx.qls(); }

bool qls_is_valid(const ShapeContext& ctx, const QLSPath& eta) {
  const std::size_t s = eta.dirs.size();
  if (s == 0 || eta.times.size() != s + 1) return false;
  if (eta.times.front() != Rational(0) || eta.times.back() != Rational(1)) return false;
  for (std::size_t u = 0; u < s; ++u) {
    if (!(eta.times[u] < eta.times[u + 1])) return false;
    if (!ctx.graph().contains(eta.dirs[u])) return false;
  }
  for (std::size_t u = 0; u + 1 < s; ++u) {
    if (eta.dirs[u] == eta.dirs[u + 1]) return false;
    if (!ctx.reachable(eta.times[u + 1], eta.dirs[u + 1], eta.dirs[u])) return false;
  }
  return true;
}

Weight qls_wt(const ShapeContext& ctx, const QLSPath& eta) {
  const RootSystem& R = ctx.root_system();
  std::vector<Rational> acc(R.rank(), Rational(0));
  for (std::size_t u = 0; u < eta.dirs.size(); ++u) {
    const Weight mu = R.act(eta.dirs[u], ctx.lambda());
    const Rational len = eta.times[u + 1] - eta.times[u];
    for (int k = 0; k < R.rank(); ++k) acc[k] += len * Rational(mu.c[k]);
  }
  Weight out(R.rank());
  for (int k = 0; k < R.rank(); ++k) {
    if (acc[k].denominator() != 1)
      throw InvariantViolation("qls_wt: non-integral weight for " + qls_to_string(R, eta));
    out.c[k] = static_cast<int>(acc[k].numerator());
  }
  return out;
}

namespace {

int degree_sum(const ShapeContext& ctx, const QLSPath& eta, std::size_t upto, WeylElt tail) {
  const RootSystem& R = ctx.root_system();
  const QuantumBruhatGraph& G = ctx.graph();
  Rational acc(0);
  for (std::size_t u = 0; u < upto; ++u) {
    const WeylElt next = u + 1 < eta.dirs.size() ? eta.dirs[u + 1] : tail;
    acc += eta.times[u + 1] * Rational(R.pair(ctx.lambda(), G.path_weight(next, eta.dirs[u])));
  }
  if (acc.denominator() != 1)
    throw InvariantViolation("degree is not an integer for " + qls_to_string(R, eta));
  return static_cast<int>(-acc.numerator());
}

}  // namespace

int deg_at(const ShapeContext& ctx, const QLSPath& eta, WeylElt w) {
  if (!ctx.graph().contains(w)) throw InvariantViolation("deg_at: w is not in W^J");
  return degree_sum(ctx, eta, eta.dirs.size(), w);
}

int deg_lambda(const ShapeContext& ctx, const QLSPath& eta) {
  return degree_sum(ctx, eta, eta.dirs.size() - 1, eta.final_direction());
}

std::vector<QLSPath> qls_filter_winf(const ShapeContext& ctx, const std::vector<QLSPath>& paths,
                                     WeylElt w) {
  const RootSystem& R = ctx.root_system();
  const IndexSet J = ctx.J();
  if (!ctx.graph().contains(w)) throw InvariantViolation("qls_filter_winf: w is not in W^J");
  std::vector<char> allowed(R.order(), 0);
  for (WeylElt u : ctx.eqb().of(R.max_coset_rep(w, J))) allowed[R.min_coset_rep(u, J).id] = 1;
  std::vector<QLSPath> out;
  for (const QLSPath& eta : paths)
    if (allowed[eta.final_direction().id]) out.push_back(eta);
  return out;
}

std::string qls_to_json(const RootSystem& R, const QLSPath& eta) {
  nlohmann::ordered_json j;
  j["dirs"] = nlohmann::json::array();
  for (WeylElt w : eta.dirs) j["dirs"].push_back(elt_to_string(R, w));
  j["times"] = nlohmann::json::array();
  for (const Rational& a : eta.times) j["times"].push_back(rational_to_string(a));
  return j.dump();
}

std::string qls_to_string(const RootSystem& R, const QLSPath& eta) {
  std::ostringstream os;
  os << "(";
  for (std::size_t u = 0; u < eta.dirs.size(); ++u) os << (u ? ", " : "") << elt_to_string(R, eta.dirs[u]);
  os << "; ";
  for (std::size_t u = 0; u < eta.times.size(); ++u) os << (u ? ", " : "") << rational_to_string(eta.times[u]);
  os << ")";
  return os.str();
}

}  // namespace kallen
