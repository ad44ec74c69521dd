#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <set>
#include <tuple>

#include "json.hpp"
#include "kallen/qbg.hpp"

using namespace kallen;

namespace {

struct OracleEdge {
  WeylElt src, dst;
  int root;
  bool quantum;
  auto operator<=>(const OracleEdge& o) const {
    return std::tie(src.id, dst.id, root, quantum) <=> std::tie(o.src.id, o.dst.id, o.root, o.quantum);
  }
  bool operator==(const OracleEdge&) const = default;
};

/// Edges straight from the definition: w -> floor(w s_beta) for beta in
/// Delta^+ \ Delta_J^+, Bruhat when the length goes up by one, quantum when it
/// equals l(w) + 1 - <2rho - 2rho_J, beta^vee>.
std::set<OracleEdge> oracle_edges(const RootSystem& R, IndexSet J) {
  std::set<int> in_J;
  for (int r : R.positive_roots_in(J)) in_J.insert(r);
  std::set<OracleEdge> out;
  for (WeylElt w : R.min_coset_reps(J))
    for (int r = 0; r < R.num_positive(); ++r) {
      if (in_J.count(r)) continue;
      const WeylElt y = R.min_coset_rep(R.mul(w, R.reflection(r)), J);
      const Coroot& b = R.coroot(r);
      // <2rho, b> minus <2rho_J, b>, with 2rho_J the sum of the positive roots of Delta_J.
      int pairing = 2 * R.pair(R.rho(), b);
      for (int s : in_J) pairing -= R.pair(R.root(s), b);
      if (R.length(y) == R.length(w) + 1) out.insert({w, y, r, false});
      else if (R.length(y) == R.length(w) + 1 - pairing) out.insert({w, y, r, true});
    }
  return out;
}

std::vector<IndexSet> all_subsets(int rank) {
  std::vector<IndexSet> out;
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits) {
    IndexSet J;
    for (int i = 0; i < rank; ++i)
      if (bits >> i & 1u) J.insert(i);
    out.push_back(J);
  }
  return out;
}

}  // namespace

TEST_CASE("A1 quantum Bruhat graph") {
  const RootSystem R = RootSystem::build("A1");
  const QuantumBruhatGraph G(R, IndexSet());
  CHECK(G.num_vertices() == 2);
  REQUIRE(G.edges().size() == 2);
  int quantum = 0;
  for (const QbgEdge& e : G.edges()) quantum += e.quantum;
  CHECK(quantum == 1);
  CHECK(G.path_weight(R.simple(0), R.identity()) == Coroot{1});
  CHECK(G.path_weight(R.identity(), R.simple(0)) == Coroot{0});
}

TEST_CASE("vertex counts") {
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(QuantumBruhatGraph(A2, IndexSet()).num_vertices() == 6);
  CHECK(QuantumBruhatGraph(A2, IndexSet::single(1)).num_vertices() == 3);
  CHECK(QuantumBruhatGraph(RootSystem::build("B3"), IndexSet::single(0)).num_vertices() == 24);
}

TEST_CASE("edges, distances and weights match a definitional oracle") {
  for (const std::string name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const RootSystem R = RootSystem::build(name);
    for (IndexSet J : all_subsets(R.rank())) {
      CAPTURE(name);
      CAPTURE(index_set_to_string(J));
      const QuantumBruhatGraph G(R, J);
      std::set<OracleEdge> mine;
      for (const QbgEdge& e : G.edges()) mine.insert({G.vertex(e.src), G.vertex(e.dst), e.root, e.quantum});
      const std::set<OracleEdge> expected = oracle_edges(R, J);
      CHECK(mine == expected);
      CHECK(G.strongly_connected());

      // BFS distances, and the projected weight of every shortest path must agree.
      const std::vector<WeylElt> verts = R.min_coset_reps(J);
      for (WeylElt s : verts) {
        std::map<int, int> dist{{s.id, 0}};
        std::map<int, std::set<std::vector<int>>> weights{{s.id, {std::vector<int>(R.rank(), 0)}}};
        std::deque<WeylElt> queue{s};
        std::vector<WeylElt> order;
        while (!queue.empty()) {
          const WeylElt x = queue.front();
          queue.pop_front();
          order.push_back(x);
          for (const OracleEdge& e : expected)
            if (e.src == x && !dist.count(e.dst.id)) {
              dist[e.dst.id] = dist[x.id] + 1;
              queue.push_back(e.dst);
            }
        }
        for (WeylElt x : order)
          for (const OracleEdge& e : expected)
            if (e.src == x && dist[e.dst.id] == dist[x.id] + 1)
              for (std::vector<int> wt : weights[x.id]) {
                if (e.quantum)
                  for (int k = 0; k < R.rank(); ++k)
                    if (!J.contains(k)) wt[k] += R.coroot(e.root).c[k];
                weights[e.dst.id].insert(wt);
              }
        for (WeylElt t : verts) {
          REQUIRE(dist.count(t.id));
          CHECK(G.distance(s, t) == dist[t.id]);
          CHECK(weights[t.id].size() == 1);
          CHECK(G.path_weight(s, t).to_vector() == *weights[t.id].begin());
        }
      }
    }
  }
}

TEST_CASE("tilted order basics") {
  const RootSystem R = RootSystem::build("A2");
  const QuantumBruhatGraph G(R, IndexSet());
  for (WeylElt w : R.elements())
    for (WeylElt u : R.elements()) {
      CHECK(G.tilted_leq(w, w, u));
      CHECK(G.tilted_leq(w, u, u));
    }
}

TEST_CASE("semi-infinite order orientation in A1") {
  const RootSystem R = RootSystem::build("A1");
  const QuantumBruhatGraph G(R, IndexSet());
  const AffineElt t{R.identity(), Coroot{1}};
  const AffineElt s{R.simple(0), Coroot{0}};
  CHECK(si_geq(G, t, s));
  CHECK_FALSE(si_geq(G, s, t));
  CHECK(si_geq(G, s, affine_identity(R)));
  CHECK(si_leq(G, affine_identity(R), s));
}

TEST_CASE("EQB methods agree on rank three") {
  for (const std::string name : {"B3", "C3"}) {
    const RootSystem R = RootSystem::build(name);
    const QuantumBruhatGraph G(R, IndexSet());
    for (WeylElt w : R.elements()) {
      const auto a = eqb(G, w, EqbMethod::LabelIncreasing);
      CHECK(a == eqb(G, w, EqbMethod::Recursive));
      CHECK(a == eqb(G, w, EqbMethod::Brute));
      CHECK(std::find(a.begin(), a.end(), w) != a.end());
    }
    const auto smallest = eqb_recursive_all(G, false);
    const auto largest = eqb_recursive_all(G, true);
    CHECK(smallest == largest);
  }
}

TEST_CASE("EQB extremes and table") {
  const RootSystem R = RootSystem::build("A2");
  const QuantumBruhatGraph G(R, IndexSet());
  const EqbTable T(G);
  CHECK(T.of(R.longest()) == R.elements());
  CHECK(T.of(R.identity()) == std::vector<WeylElt>{R.identity()});
  for (WeylElt w : R.elements())
    for (WeylElt u : R.elements())
      CHECK(T.contains(w, u) == (std::find(T.of(w).begin(), T.of(w).end(), u) != T.of(w).end()));
  CHECK_THROWS_AS(eqb(QuantumBruhatGraph(R, IndexSet::single(0)), R.identity(), EqbMethod::Brute),
                  InvariantViolation);
}

TEST_CASE("reflection orders") {
  for (const std::string name : {"A3", "B3", "G2"}) {
    const RootSystem R = RootSystem::build(name);
    for (WeylElt w : R.elements()) {
      const ReflectionOrder o = reflection_order(R, w);
      std::set<int> labels(o.labels.begin(), o.labels.end());
      CHECK(static_cast<int>(labels.size()) == R.num_positive());
      CHECK(o.split == R.num_positive() - R.length(w));
      CHECK(o.label_index(o.split) == 1);
    }
  }
}

TEST_CASE("label-increasing paths are unique shortest paths") {
  const RootSystem R = RootSystem::build("B2");
  const QuantumBruhatGraph G(R, IndexSet());
  for (WeylElt w : R.elements()) {
    const ReflectionOrder o = reflection_order(R, w);
    for (WeylElt u : R.elements()) {
      const std::vector<int> path = label_increasing_path(G, o, w, u);
      CHECK(static_cast<int>(path.size()) == G.distance(w, u));
      int at = G.vertex_index(w), last = -1;
      for (int e : path) {
        CHECK(G.edges()[e].src == at);
        CHECK(o.position[G.edges()[e].root] > last);
        last = o.position[G.edges()[e].root];
        at = G.edges()[e].dst;
      }
      CHECK(at == G.vertex_index(u));
    }
  }
}

TEST_CASE("K-set parametrization") {
  const RootSystem R = RootSystem::build("A2");
  const QuantumBruhatGraph G_empty(R, IndexSet());
  const EqbTable T(G_empty);
  const QuantumBruhatGraph G(R, IndexSet());
  const KParametrization top = k_parametrize(G, T, R.longest());
  CHECK(top.fins.size() == 6);
  CHECK(top.free == IndexSet::full(2));
  const KParametrization bottom = k_parametrize(G, T, R.identity());
  CHECK(bottom.fins == std::vector<WeylElt>{R.identity()});
  CHECK(bottom.free.empty());
  CHECK(k_membership(G, T, affine_identity(R), R.identity()));
  CHECK_FALSE(k_membership(G, T, translation(R, Coroot{1, 0}), R.identity()));
}

TEST_CASE("partition check is independent of worker count") {
  const RootSystem R = RootSystem::build("B2");
  const QuantumBruhatGraph G_empty(R, IndexSet());
  const EqbTable T(G_empty);
  const QuantumBruhatGraph G(R, IndexSet::single(1));
  for (WeylElt w : G.vertices()) {
    const PartitionReport a = check_partition(G, T, w, 2, 1);
    const PartitionReport b = check_partition(G, T, w, 2, 3);
    CHECK(a.checked == b.checked);
    CHECK(a.above == b.above);
    CHECK(a.violations.empty());
    CHECK(b.violations.empty());
    CHECK(a.above > 0);
    CHECK(a.above < a.checked);
  }
}

TEST_CASE("max_below") {
  const RootSystem R = RootSystem::build("A2");
  const QuantumBruhatGraph G(R, IndexSet());
  for (WeylElt w : R.elements()) CHECK(max_below(G, affine_from_fin(R, w)) == w);
  CHECK(max_below(G, translation(R, Coroot{1, 1})) == R.longest());
}

TEST_CASE("graph export") {
  const RootSystem R = RootSystem::build("A2");
  const QuantumBruhatGraph G(R, IndexSet::single(1));
  const auto j = nlohmann::json::parse(qbg_to_json(G));
  CHECK(j["type"] == "A2");
  CHECK(j["J"] == nlohmann::json::array({2}));
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].size() == G.edges().size());
  for (const auto& e : j["edges"]) CHECK((e["kind"] == "quantum" || e["kind"] == "bruhat"));
  const std::string dot = qbg_to_dot(G);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(G.edges().size()));
}
