#include "kallen/qbg.hpp"

#include <algorithm>
#include <deque>
#include "json.hpp"
#include <sstream>

#include "kallen/parallel.hpp"

namespace kallen {

QuantumBruhatGraph::QuantumBruhatGraph(const RootSystem& R, IndexSet J) : R_(&R), J_(J) {
  if (!J.subset_of(R.all_indices())) throw ConfigError("J is not a subset of I");
  vertices_ = R.min_coset_reps(J);
  index_.assign(R.order(), -1);
  for (int k = 0; k < num_vertices(); ++k) index_[vertices_[k].id] = k;

  std::vector<char> in_J(R.num_positive(), 0);
  for (int r : R.positive_roots_in(J)) in_J[r] = 1;

  out_.assign(num_vertices(), {});
  for (int k = 0; k < num_vertices(); ++k) {
    const WeylElt u = vertices_[k];
    for (int r = 0; r < R.num_positive(); ++r) {
      if (in_J[r]) continue;
      const WeylElt v = R.min_coset_rep(R.mul(u, R.reflection(r)), J);
      const int dl = R.length(v) - R.length(u);
      const Coroot& cb = R.coroot(r);
      const int two_rho_gap = 2 * R.pair(R.rho(), cb) - R.pair_two_rho(J, cb);
      bool quantum;
      if (dl == 1)
        quantum = false;
      else if (dl == 1 - two_rho_gap)
        quantum = true;
      else
        continue;
      out_[k].push_back(static_cast<int>(edges_.size()));
      edges_.push_back({k, index_[v.id], r, quantum});
    }
  }

  const int n = num_vertices();
  dist_.assign(n * n, -1);
  weight_.assign(n * n, R.zero_coroot());
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    int head = 0, tail = 0;
    queue[tail++] = s;
    dist_[s * n + s] = 0;
    while (head < tail) {
      const int x = queue[head++];
      for (int e : out_[x]) {
        const QbgEdge& ed = edges_[e];
        if (dist_[s * n + ed.dst] >= 0) continue;
        dist_[s * n + ed.dst] = dist_[s * n + x] + 1;
        Coroot wt = weight_[s * n + x];
        if (ed.quantum) wt += coroot_class(R.coroot(ed.root), J);
        weight_[s * n + ed.dst] = wt;
        queue[tail++] = ed.dst;
      }
    }
  }
}

int QuantumBruhatGraph::checked(WeylElt w) const {
  const int k = (w.id >= 0 && w.id < static_cast<int>(index_.size())) ? index_[w.id] : -1;
  if (k < 0) throw InvariantViolation("element is not a vertex of the quantum Bruhat graph");
  return k;
}

int QuantumBruhatGraph::distance(WeylElt u, WeylElt v) const {
  return dist_[checked(u) * num_vertices() + checked(v)];
}

const Coroot& QuantumBruhatGraph::path_weight(WeylElt u, WeylElt v) const {
  const int k = checked(u) * num_vertices() + checked(v);
  if (dist_[k] < 0) throw InvariantViolation("quantum Bruhat graph is not strongly connected");
  return weight_[k];
}

PathData QuantumBruhatGraph::shortest_data(WeylElt u, WeylElt v) const {
  return {distance(u, v), path_weight(u, v)};
}

bool QuantumBruhatGraph::tilted_leq(WeylElt w, WeylElt u, WeylElt v) const {
  return distance(w, v) == distance(w, u) + distance(u, v);
}

bool QuantumBruhatGraph::strongly_connected() const {
  return std::find(dist_.begin(), dist_.end(), -1) == dist_.end();
}

bool si_geq(const QuantumBruhatGraph& G, WeylElt u, const Coroot& cls_x, WeylElt v,
            const Coroot& cls_y) {
  return (cls_x - cls_y - G.path_weight(v, u)).nonneg();
}

bool si_geq(const QuantumBruhatGraph& G, const AffineElt& x, const AffineElt& y) {
  const RootSystem& R = G.root_system();
  const IndexSet J = G.J();
  return si_geq(G, cl_affine(R, x, J), coroot_class(x.trans, J), cl_affine(R, y, J),
                coroot_class(y.trans, J));
}

ReflectionOrder reflection_order(const RootSystem& R, WeylElt w, WordChoice choice) {
  const WeylElt rest = R.mul(R.longest(), R.inverse(w));
  auto pick = [&](WeylElt x) {
    return choice == WordChoice::LexMin ? R.word(x) : R.word_lexmax(x);
  };
  ReflectionOrder ord;
  ord.word = pick(rest);
  ord.split = static_cast<int>(ord.word.size());
  for (int i : pick(w)) ord.word.push_back(i);
  const int N = static_cast<int>(ord.word.size());
  if (N != R.num_positive()) throw InvariantViolation("reflection order: extension is not reduced");

  ord.labels.assign(N, -1);
  ord.position.assign(R.num_positive(), -1);
  WeylElt P = R.identity();  // s_{j_N} ... s_{j_{m+1}}
  for (int m = N - 1; m >= 0; --m) {
    const int r = R.act_root(P, R.simple_root_index(ord.word[m]));
    if (!R.is_positive(r) || ord.position[r] >= 0)
      throw InvariantViolation("reflection order: labels are not distinct positive roots");
    ord.labels[m] = r;
    ord.position[r] = m;
    P = R.right_mul(P, ord.word[m]);
  }
  return ord;
}

std::vector<int> label_increasing_path(const QuantumBruhatGraph& G, const ReflectionOrder& order,
                                       WeylElt w, WeylElt u) {
  const int target = G.vertex_index(u);
  if (G.vertex_index(w) < 0 || target < 0) throw InvariantViolation("label path: not a vertex");
  std::vector<int> current, found;
  int count = 0;
  auto dfs = [&](auto&& self, int x, int last_pos, int remaining) -> void {
    if (count >= 2) return;
    if (remaining == 0) {
      if (x == target) {
        if (count == 0) found = current;
        ++count;
      }
      return;
    }
    for (int e : G.out_edges(x)) {
      const QbgEdge& ed = G.edges()[e];
      const int pos = order.position[ed.root];
      if (pos <= last_pos) continue;
      if (G.distance(G.vertex(ed.dst), u) != remaining - 1) continue;
      current.push_back(e);
      self(self, ed.dst, pos, remaining - 1);
      current.pop_back();
    }
  };
  dfs(dfs, G.vertex_index(w), -1, G.distance(w, u));
  if (count != 1)
    throw InvariantViolation("label-increasing path is not unique (found " + std::to_string(count) +
                             ")");
  return found;
}

namespace {

std::vector<WeylElt> eqb_label_increasing(const QuantumBruhatGraph& G, WeylElt w, WordChoice choice) {
  const RootSystem& R = G.root_system();
  const ReflectionOrder order = reflection_order(R, w, choice);
  std::vector<WeylElt> out;
  for (WeylElt u : R.elements()) {
    auto path = label_increasing_path(G, order, w, u);
    if (path.empty() || order.label_index(order.position[G.edges()[path.front()].root]) >= 1)
      out.push_back(u);
  }
  return out;
}

std::vector<WeylElt> eqb_brute(const QuantumBruhatGraph& G, WeylElt w) {
  const RootSystem& R = G.root_system();
  std::vector<WeylElt> above;
  for (WeylElt z : R.elements())
    if (z != w && R.bruhat_leq(w, z)) above.push_back(z);
  std::vector<WeylElt> out;
  for (WeylElt u : R.elements()) {
    bool blocked = false;
    for (WeylElt z : above)
      if (G.tilted_leq(w, z, u)) {
        blocked = true;
        break;
      }
    if (!blocked) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<std::vector<WeylElt>> eqb_recursive_all(const QuantumBruhatGraph& G, bool largest_index) {
  const RootSystem& R = G.root_system();
  if (!G.J().empty()) throw InvariantViolation("EQB needs the J = empty quantum Bruhat graph");
  const int N = R.order();
  std::vector<std::vector<WeylElt>> table(N);
  const WeylElt top = R.longest();
  table[top.id] = R.elements();
  // Ids are ordered by length, so every s_i v > v has a larger id.
  for (int id = N - 1; id >= 0; --id) {
    const WeylElt v{id};
    if (v == top) continue;
    int i = -1;
    for (int k = 0; k < R.rank(); ++k) {
      const int cand = largest_index ? R.rank() - 1 - k : k;
      if (!R.is_left_descent(cand, v)) {
        i = cand;
        break;
      }
    }
    const WeylElt w = R.left_mul(i, v);  // s_i w = v < w
    const std::vector<WeylElt>& prev = table[w.id];
    std::vector<char> in_prev(N, 0);
    for (WeylElt x : prev) in_prev[x.id] = 1;
    const int neg = R.negate(R.act_root(R.inverse(w), R.simple_root_index(i)));
    const bool simple = R.root(neg).sum() == 1;
    std::vector<WeylElt> next;
    if (!simple) {
      std::vector<char> mark(N, 0);
      for (WeylElt x : prev) {
        const WeylElt y = R.left_mul(i, x);
        if (!in_prev[y.id]) mark[y.id] = 1;
      }
      for (int k = 0; k < N; ++k)
        if (mark[k]) next.push_back(WeylElt{k});
    } else {
      for (WeylElt x : prev)
        if (G.tilted_leq(w, v, x)) next.push_back(x);
    }
    table[id] = std::move(next);
  }
  return table;
}

std::vector<WeylElt> eqb(const QuantumBruhatGraph& G, WeylElt w, EqbMethod method, WordChoice choice) {
  if (!G.J().empty()) throw InvariantViolation("EQB needs the J = empty quantum Bruhat graph");
  switch (method) {
    case EqbMethod::LabelIncreasing: return eqb_label_increasing(G, w, choice);
    case EqbMethod::Brute: return eqb_brute(G, w);
    case EqbMethod::Recursive: return eqb_recursive_all(G)[w.id];
  }
  return {};
}

EqbTable::EqbTable(const QuantumBruhatGraph& G, EqbMethod method) {
  const RootSystem& R = G.root_system();
  if (method == EqbMethod::Recursive) {
    sets_ = eqb_recursive_all(G);
  } else {
    for (WeylElt w : R.elements()) sets_.push_back(eqb(G, w, method));
  }
  member_.assign(R.order(), std::vector<char>(R.order(), 0));
  for (int w = 0; w < R.order(); ++w)
    for (WeylElt u : sets_[w]) member_[w][u.id] = 1;
}

KParametrization k_parametrize(const QuantumBruhatGraph& GJ, const EqbTable& eqb, WeylElt w) {
  const RootSystem& R = GJ.root_system();
  const IndexSet J = GJ.J();
  if (!GJ.contains(w)) throw InvariantViolation("k_parametrize: w is not in W^J");
  const WeylElt top = R.max_coset_rep(w, J);
  KParametrization out;
  out.free = R.right_descents(top).minus(J);
  for (WeylElt u : eqb.of(top)) out.fins.push_back(R.min_coset_rep(u, J));
  std::sort(out.fins.begin(), out.fins.end());
  out.fins.erase(std::unique(out.fins.begin(), out.fins.end()), out.fins.end());
  for (WeylElt u : out.fins) out.base.push_back(GJ.path_weight(w, u));
  return out;
}

bool k_membership(const QuantumBruhatGraph& GJ, const EqbTable& eqb, WeylElt u, const Coroot& cls,
                  WeylElt w) {
  const RootSystem& R = GJ.root_system();
  const IndexSet J = GJ.J();
  if (!GJ.contains(w) || !GJ.contains(u)) throw InvariantViolation("k_membership: not in W^J");
  const WeylElt top = R.max_coset_rep(w, J);
  bool fin_ok = false;
  for (WeylElt v : eqb.of(top))
    if (R.min_coset_rep(v, J) == u) {
      fin_ok = true;
      break;
    }
  if (!fin_ok) return false;
  const Coroot rest = coroot_class(cls, J) - GJ.path_weight(w, u);
  const IndexSet free = R.right_descents(top).minus(J);
  for (int i = 0; i < R.rank(); ++i) {
    if (rest.c[i] < 0) return false;
    if (rest.c[i] > 0 && !free.contains(i)) return false;
  }
  return true;
}

bool k_membership(const QuantumBruhatGraph& GJ, const EqbTable& eqb, const AffineElt& x, WeylElt w) {
  const RootSystem& R = GJ.root_system();
  return k_membership(GJ, eqb, cl_affine(R, x, GJ.J()), coroot_class(x.trans, GJ.J()), w);
}

bool k_membership_definition(const QuantumBruhatGraph& GJ, WeylElt u, const Coroot& cls, WeylElt w) {
  const RootSystem& R = GJ.root_system();
  const Coroot zero = R.zero_coroot();
  if (!si_geq(GJ, u, cls, w, zero)) return false;
  for (WeylElt z : GJ.vertices())
    if (z != w && R.bruhat_leq(w, z) && si_geq(GJ, u, cls, z, zero)) return false;
  return true;
}

WeylElt max_below(const QuantumBruhatGraph& GJ, const AffineElt& x) {
  const RootSystem& R = GJ.root_system();
  const WeylElt u = cl_affine(R, x, GJ.J());
  const Coroot cls = coroot_class(x.trans, GJ.J());
  if (!cls.nonneg()) throw InvariantViolation("max_below: translation class is not in Q^vee+");
  std::vector<WeylElt> below;
  for (WeylElt v : GJ.vertices())
    if (si_geq(GJ, u, cls, v, R.zero_coroot())) below.push_back(v);
  for (WeylElt m : below) {
    bool is_max = true;
    for (WeylElt v : below)
      if (!R.bruhat_leq(v, m)) {
        is_max = false;
        break;
      }
    if (is_max) return m;
  }
  throw InvariantViolation("max_below: no unique maximum below " + affine_to_string(R, x));
}

PartitionReport check_partition(const QuantumBruhatGraph& GJ, const EqbTable& eqb, WeylElt w,
                                int box, int jobs) {
  const RootSystem& R = GJ.root_system();
  const IndexSet J = GJ.J();
  if (!GJ.contains(w)) throw InvariantViolation("check_partition: w is not in W^J");
  const std::vector<int> free = R.all_indices().minus(J).members();

  std::vector<WeylElt> cells;
  for (WeylElt v : GJ.vertices())
    if (R.bruhat_leq(w, v)) cells.push_back(v);

  std::vector<Coroot> classes;
  {
    std::vector<int> c(free.size(), -box);
    while (true) {
      Coroot xi = R.zero_coroot();
      for (std::size_t k = 0; k < free.size(); ++k) xi.c[free[k]] = c[k];
      classes.push_back(xi);
      std::size_t k = 0;
      while (k < c.size() && c[k] == box) c[k++] = -box;
      if (k == c.size()) break;
      ++c[k];
    }
    std::sort(classes.begin(), classes.end());
  }

  const int nv = GJ.num_vertices();
  const int nc = static_cast<int>(classes.size());
  std::vector<std::vector<PartitionViolation>> found(nv * nc);
  std::vector<char> above(nv * nc, 0);
  parallel_for(nv * nc, jobs, [&](int k) {
    const WeylElt u = GJ.vertex(k / nc);
    const Coroot& cls = classes[k % nc];
    const AffineElt x = parabolic_affine(R, u, cls, J);
    if (!is_min_in_coset_af(R, x, J) || cl_affine(R, x, J) != u || coroot_class(x.trans, J) != cls)
      found[k].push_back({u, cls, "Pi^J produced an element outside the expected class"});
    const bool geq = si_geq(GJ, u, cls, w, R.zero_coroot());
    above[k] = geq;
    int hits = 0;
    for (WeylElt v : cells) {
      const bool param = k_membership(GJ, eqb, u, cls, v);
      const bool defn = k_membership_definition(GJ, u, cls, v);
      if (param != defn)
        found[k].push_back({u, cls, "parametrized and definitional K^J_" + elt_to_string(R, v) +
                                        " disagree"});
      hits += param;
    }
    if (geq && hits != 1)
      found[k].push_back({u, cls, "element above w lies in " + std::to_string(hits) + " cells"});
    if (!geq && hits != 0) found[k].push_back({u, cls, "element not above w lies in a cell"});
  });

  PartitionReport rep;
  rep.checked = nv * nc;
  for (int k = 0; k < nv * nc; ++k) {
    rep.above += above[k];
    for (auto& v : found[k]) rep.violations.push_back(std::move(v));
  }
  return rep;
}

std::string qbg_to_json(const QuantumBruhatGraph& G, int indent) {
  const RootSystem& R = G.root_system();
  nlohmann::ordered_json j;
  j["type"] = R.name();
  j["J"] = nlohmann::json::array();
  for (int i : G.J().members()) j["J"].push_back(i + 1);
  j["vertices"] = nlohmann::json::array();
  for (WeylElt v : G.vertices()) j["vertices"].push_back(elt_to_string(R, v));
  j["edges"] = nlohmann::json::array();
  for (const QbgEdge& e : G.edges()) {
    nlohmann::ordered_json ej;
    ej["src"] = elt_to_string(R, G.vertex(e.src));
    ej["dst"] = elt_to_string(R, G.vertex(e.dst));
    ej["label"] = R.root(e.root).to_vector();
    ej["kind"] = e.quantum ? "quantum" : "bruhat";
    j["edges"].push_back(ej);
  }
  return j.dump(indent);
}

std::string qbg_to_dot(const QuantumBruhatGraph& G) {
  const RootSystem& R = G.root_system();
  std::ostringstream os;
  os << "digraph QBG {\n";
  for (int k = 0; k < G.num_vertices(); ++k)
    os << "  v" << k << " [label=\"" << elt_to_string(R, G.vertex(k)) << "\"];\n";
  for (const QbgEdge& e : G.edges()) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << coords_to_string(R.root(e.root))
       << "\"" << (e.quantum ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kallen
