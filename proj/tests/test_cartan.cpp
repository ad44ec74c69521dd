#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "kallen/cartan.hpp"

using namespace kallen;

namespace {

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "B3", "C3", "G2"};

/// Positive roots by reflection closure of the simple roots, using only the
/// Cartan matrix: s_i beta = beta - <beta, alpha_i^vee> alpha_i.
std::set<std::vector<int>> closure_positive_roots(const RootSystem& R) {
  const int n = R.rank();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> stack;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    const std::vector<int> b = stack.back();
    stack.pop_back();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * R.cartan(i, j);
      std::vector<int> c = b;
      c[i] -= p;
      if (all.insert(c).second) stack.push_back(c);
    }
  }
  std::set<std::vector<int>> pos;
  for (const auto& b : all)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.insert(b);
  return pos;
}

/// Group order by closure of the simple reflections acting on fundamental weight coordinates.
int closure_group_order(const RootSystem& R) {
  const int n = R.rank();
  using Mat = std::vector<int>;
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) {
    Mat m(n * n, 0);
    for (int a = 0; a < n; ++a) m[a * n + a] = 1;
    // mu -> mu - mu_i alpha_i, alpha_i has fundamental coordinates A[j][i].
    for (int j = 0; j < n; ++j) m[j * n + i] -= R.cartan(j, i);
    gens.push_back(m);
  }
  auto mul = [n](const Mat& x, const Mat& y) {
    Mat z(n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) z[a * n + c] += x[a * n + b] * y[b * n + c];
    return z;
  };
  Mat id(n * n, 0);
  for (int a = 0; a < n; ++a) id[a * n + a] = 1;
  std::set<Mat> seen = {id};
  std::vector<Mat> stack = {id};
  while (!stack.empty()) {
    Mat x = stack.back();
    stack.pop_back();
    for (const Mat& g : gens) {
      Mat y = mul(x, g);
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("positive roots match reflection closure and standard counts") {
  const std::map<std::string, int> counts = {{"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4},
                                             {"B3", 9}, {"B4", 16}, {"C3", 9}, {"C4", 16}, {"D4", 12},
                                             {"G2", 6}};
  for (const auto& [name, count] : counts) {
    CAPTURE(name);
    const RootSystem R = RootSystem::build(name);
    CHECK(R.num_positive() == count);
    std::set<std::vector<int>> mine;
    for (int r = 0; r < R.num_positive(); ++r) mine.insert(R.root(r).to_vector());
    CHECK(mine == closure_positive_roots(R));
  }
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::build("A1").theta() == Root{1});
  CHECK(RootSystem::build("A2").theta() == Root{1, 1});
  CHECK(RootSystem::build("G2").theta() == Root{3, 2});
  CHECK(RootSystem::build("B3").theta() == Root{1, 2, 2});
  CHECK(RootSystem::build("C3").theta() == Root{2, 2, 1});
  CHECK(RootSystem::build("D4").theta() == Root{1, 2, 1, 1});
  for (const auto& name : kSmallTypes) {
    const RootSystem R = RootSystem::build(name);
    const int t = R.theta_index();
    for (int i = 0; i < R.rank(); ++i) CHECK(R.pair_simple(R.root(t), i) >= 0);
    for (int r = 0; r < R.num_positive(); ++r) CHECK(R.root(r).sum() <= R.theta().sum());
  }
}

TEST_CASE("Cartan conventions") {
  const RootSystem G = RootSystem::build("G2");
  CHECK(G.cartan(0, 1) == -3);
  CHECK(G.cartan(1, 0) == -1);
  const RootSystem B = RootSystem::build("B3");
  CHECK(B.cartan(2, 1) == -2);
  const RootSystem C = RootSystem::build("C3");
  CHECK(C.cartan(1, 2) == -2);
  for (const auto& name : kSmallTypes) {
    const RootSystem R = RootSystem::build(name);
    for (int i = 0; i < R.rank(); ++i)
      for (int j = 0; j < R.rank(); ++j)
        CHECK(R.cartan(i, j) == R.pair(R.root(R.simple_root_index(j)), R.coroot(R.simple_root_index(i))));
  }
}

TEST_CASE("coroots are dual and W-equivariant") {
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(A2.coroot_of(Root{1, 1}) == Coroot{1, 1});
  const RootSystem G2 = RootSystem::build("G2");
  CHECK(G2.coroot_of(Root{3, 2}) == Coroot{1, 2});
  for (const auto& name : kSmallTypes) {
    const RootSystem R = RootSystem::build(name);
    for (int r = 0; r < R.num_roots(); ++r) {
      CHECK(R.pair(R.root(r), R.coroot(r)) == 2);
      for (WeylElt w : R.elements()) {
        const int s = R.act_root(w, r);
        CHECK(R.act(w, R.root(r)) == R.root(s));
        CHECK(R.act(w, R.coroot(r)) == R.coroot(s));
      }
    }
  }
  CHECK_THROWS_AS(A2.coroot_of(Root{2, 1}), ConfigError);
}

TEST_CASE("pairing") {
  const RootSystem R = RootSystem::build("A2");
  CHECK(R.pair(R.fundamental(0), R.coroot(R.simple_root_index(0))) == 1);
  CHECK(R.pair(R.fundamental(0), R.coroot(R.simple_root_index(1))) == 0);
  CHECK(R.pair(R.zero_weight(), Coroot{3, -1}) == 0);
  CHECK(R.pair(R.rho(), Coroot{1, 1}) == 2);
}

TEST_CASE("Weyl group orders match matrix closure") {
  const std::map<std::string, int> orders = {{"A1", 2},  {"A2", 6},  {"A3", 24}, {"A4", 120}, {"B2", 8},
                                             {"B3", 48}, {"C3", 48}, {"D4", 192}, {"G2", 12}};
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    const RootSystem R = RootSystem::build(name);
    CHECK(R.order() == order);
    CHECK(closure_group_order(R) == order);
  }
}

TEST_CASE("element identity is action-matrix identity") {
  const RootSystem R = RootSystem::build("A3");
  for (WeylElt x : R.elements())
    for (WeylElt y : R.elements()) CHECK((x == y) == (R.weight_matrix(x) == R.weight_matrix(y)));
  for (WeylElt x : R.elements()) CHECK(R.from_matrix(R.weight_matrix(x)) == x);
}

TEST_CASE("length equals inversion count and words are reduced") {
  for (const auto& name : kSmallTypes) {
    const RootSystem R = RootSystem::build(name);
    for (WeylElt w : R.elements()) {
      int inv = 0;
      for (int r = 0; r < R.num_positive(); ++r) inv += !R.is_positive(R.act_root(w, r));
      CHECK(R.length(w) == inv);
      CHECK(static_cast<int>(R.word(w).size()) == R.length(w));
      CHECK(R.from_word(R.word(w)) == w);
      CHECK(R.from_word(R.word_lexmax(w)) == w);
    }
  }
}

TEST_CASE("group law") {
  const RootSystem R = RootSystem::build("B3");
  const Weight mu{2, -1, 3};
  for (WeylElt x : R.elements()) {
    CHECK(R.mul(x, R.inverse(x)) == R.identity());
    CHECK(R.act(R.identity(), mu) == mu);
    for (int i = 0; i < R.rank(); ++i) CHECK(R.act(R.right_mul(x, i), mu) == R.act(x, R.act(R.simple(i), mu)));
  }
  const RootSystem A1 = RootSystem::build("A1");
  CHECK(A1.act(A1.simple(0), A1.fundamental(0)) == Weight{-1});
}

TEST_CASE("Bruhat order matches covering-relation closure") {
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    const RootSystem R = RootSystem::build(name);
    const int n = R.order();
    std::vector<char> leq(n * n, 0);
    for (int a = 0; a < n; ++a) leq[a * n + a] = 1;
    // v covers u when v = s_beta u with length one more.
    for (int a = 0; a < n; ++a)
      for (int r = 0; r < R.num_positive(); ++r) {
        const WeylElt v = R.mul(R.reflection(r), R.elt(a));
        if (R.length(v) == R.length(R.elt(a)) + 1) leq[a * n + v.id] = 1;
      }
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        if (leq[a * n + k])
          for (int b = 0; b < n; ++b)
            if (leq[k * n + b]) leq[a * n + b] = 1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(R.bruhat_leq(R.elt(a), R.elt(b)) == static_cast<bool>(leq[a * n + b]));
  }
  const RootSystem A2 = RootSystem::build("A2");
  CHECK_FALSE(A2.bruhat_leq(A2.simple(0), A2.simple(1)));
  for (WeylElt w : A2.elements()) CHECK(A2.bruhat_leq(A2.identity(), w));
}

TEST_CASE("descents and longest elements") {
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(A2.right_descents(A2.longest()) == IndexSet::full(2));
  CHECK(A2.right_descents(A2.identity()).empty());
  CHECK(A2.weyl_group(IndexSet()).size() == 1);
  CHECK(A2.weyl_group(IndexSet::full(2)).size() == 6);
  CHECK(RootSystem::build("B2").weyl_group(IndexSet::full(2)).size() == 8);
  CHECK(A2.longest(IndexSet::single(1)) == A2.simple(1));
  for (const auto& name : kSmallTypes) {
    const RootSystem R = RootSystem::build(name);
    CHECK(R.length(R.longest()) == R.num_positive());
    for (WeylElt w : R.elements()) {
      for (int j = 0; j < R.rank(); ++j)
        CHECK(R.is_right_descent(w, j) == (R.length(R.right_mul(w, j)) < R.length(w)));
    }
  }
}

TEST_CASE("coset representatives by scanning the coset") {
  for (const auto& name : kSmallTypes) {
    const RootSystem R = RootSystem::build(name);
    for (std::uint32_t bits = 0; bits < (1u << R.rank()); ++bits) {
      IndexSet J;
      for (int i = 0; i < R.rank(); ++i)
        if (bits >> i & 1u) J.insert(i);
      const std::vector<WeylElt> WJ = R.weyl_group(J);
      const WeylElt w0J = R.longest(J);
      for (WeylElt w : R.elements()) {
        WeylElt best = w;
        for (WeylElt v : WJ) {
          const WeylElt x = R.mul(w, v);
          if (R.length(x) < R.length(best)) best = x;
        }
        CHECK(R.min_coset_rep(w, J) == best);
        CHECK(R.max_coset_rep(w, J) == R.mul(best, w0J));
        CHECK(R.length(R.max_coset_rep(w, J)) == R.length(best) + R.length(w0J));
        CHECK(R.is_min_coset_rep(w, J) == (w == best));
      }
    }
  }
  const RootSystem A2 = RootSystem::build("A2");
  const IndexSet J = IndexSet::single(1);
  CHECK(A2.min_coset_rep(A2.simple(1), J) == A2.identity());
  CHECK(A2.max_coset_rep(A2.simple(1), J) == A2.simple(1));
  CHECK(A2.min_coset_rep(A2.longest(), J) == A2.from_word(std::vector<int>{1, 0}));
  CHECK(A2.max_coset_rep(A2.longest(), J) == A2.longest());
  CHECK(A2.min_coset_reps(J).size() == 3);
}

TEST_CASE("J of a dominant weight") {
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(A2.j_of(Weight{1, 1}).empty());
  CHECK(A2.j_of(Weight{1, 0}) == IndexSet::single(1));
  CHECK(A2.j_of(Weight{0, 0}) == IndexSet::full(2));
  CHECK_THROWS_AS(A2.j_of(Weight{1, -1}), ConfigError);
}

TEST_CASE("unsupported types and bad words") {
  CHECK_THROWS_AS(RootSystem::build("A0"), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("B1"), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("D3"), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("G3"), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("E6"), ConfigError);
  const RootSystem A2 = RootSystem::build("A2");
  CHECK_THROWS_AS(A2.from_reduced_word(std::vector<int>{0, 0}), ConfigError);
  CHECK_THROWS_AS(A2.from_word(std::vector<int>{2}), ConfigError);
}

TEST_CASE("text helpers") {
  CHECK(parse_word("s1 s2 s1") == std::vector<int>{0, 1, 0});
  CHECK(parse_word("s1s2") == std::vector<int>{0, 1});
  CHECK(parse_word("1 2") == std::vector<int>{0, 1});
  CHECK(parse_word("e").empty());
  CHECK(parse_word("").empty());
  CHECK(word_to_string(std::vector<int>{}) == "e");
  CHECK(word_to_string(std::vector<int>{0, 1}) == "s1 s2");
  CHECK(parse_int_list("1,0, 2") == std::vector<int>{1, 0, 2});
  CHECK(parse_index_set("2", 2) == IndexSet::single(1));
  CHECK(parse_index_set("", 2).empty());
  CHECK(index_set_to_string(IndexSet::of({0, 1})) == "{1,2}");
  CHECK(coords_to_string(Weight{1, 0}) == "(1,0)");
  CHECK_THROWS_AS(parse_index_set("3", 2), ConfigError);
}
