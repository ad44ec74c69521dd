#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kallen/affine.hpp"

using namespace kallen;

namespace {

Coroot random_coroot(const RootSystem& R, std::mt19937& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  Coroot xi = R.zero_coroot();
  for (int k = 0; k < R.rank(); ++k) xi.c[k] = d(rng);
  return xi;
}

AffineElt random_affine(const RootSystem& R, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, R.order() - 1);
  return {R.elt(pick(rng)), random_coroot(R, rng, 3)};
}

/// x beta > 0 for every positive affine root beta = alpha + n delta with
/// alpha in Delta_J, checked for n up to a margin beyond the translation size.
bool min_in_coset_by_definition(const RootSystem& R, const AffineElt& x, IndexSet J) {
  int margin = 2;
  for (int k = 0; k < R.rank(); ++k) margin += std::abs(x.trans.c[k]) * 4;
  for (int r : R.positive_roots_in(J))
    for (int root : {r, R.negate(r)})
      for (int n = 0; n <= margin; ++n) {
        const AffineRoot beta{root, n};
        if (!is_positive(R, beta)) continue;
        if (!is_positive(R, act(R, x, beta))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("affine group laws") {
  std::mt19937 rng(7);
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem R = RootSystem::build(name);
    for (int trial = 0; trial < 200; ++trial) {
      const AffineElt x = random_affine(R, rng), y = random_affine(R, rng), z = random_affine(R, rng);
      CHECK(multiply(R, multiply(R, x, y), z) == multiply(R, x, multiply(R, y, z)));
      CHECK(multiply(R, x, inverse(R, x)) == affine_identity(R));
      const AffineWeight mu{Weight::from(random_coroot(R, rng, 4).to_vector()), 2};
      CHECK(act(R, multiply(R, x, y), mu) == act(R, x, act(R, y, mu)));
      std::uniform_int_distribution<int> pick(0, R.num_roots() - 1);
      const AffineRoot beta{pick(rng), trial % 5 - 2};
      CHECK(act(R, multiply(R, x, y), beta) == act(R, x, act(R, y, beta)));
    }
  }
}

TEST_CASE("translation action") {
  const RootSystem R = RootSystem::build("A1");
  const AffineElt t = translation(R, Coroot{1});
  const AffineWeight mu{Weight{1}, 0};
  CHECK(act(R, t, mu) == AffineWeight{Weight{1}, -1});
  CHECK(act(R, t, AffineRoot{0, 0}) == AffineRoot{0, -2});
}

TEST_CASE("affine reflections") {
  for (const std::string name : {"A1", "A2", "B2", "G2"}) {
    const RootSystem R = RootSystem::build(name);
    for (int r = 0; r < R.num_roots(); ++r)
      for (int n = -2; n <= 2; ++n) {
        const AffineElt s = affine_reflection(R, {r, n});
        CHECK(multiply(R, s, s) == affine_identity(R));
        CHECK(act(R, s, AffineRoot{r, n}) == AffineRoot{R.negate(r), -n});
      }
    const AffineElt s0 = simple_affine_reflection(R, kAffineNode);
    CHECK(multiply(R, s0, s0) == affine_identity(R));
    CHECK(s0.fin == R.reflection(R.theta_index()));
    // alpha_0 = -theta + delta is sent to theta - delta.
    CHECK(act(R, s0, AffineRoot{R.negate(R.theta_index()), 1}) == AffineRoot{R.theta_index(), -1});
    const Weight rho = R.rho();
    CHECK(pair_affine_simple(R, rho, kAffineNode) == -R.pair(rho, R.coroot(R.theta_index())));
    CHECK(affine_simple_root(R, kAffineNode).delta == 1);
    CHECK(affine_simple_root(R, kAffineNode).fin == -R.root_to_weight(R.theta()));
  }
}

TEST_CASE("semi-infinite length") {
  std::mt19937 rng(11);
  const RootSystem R = RootSystem::build("B2");
  const AffineElt t = translation(R, Coroot{1, 0});
  CHECK(sil(R, t) == 2 * R.pair(R.rho(), Coroot{1, 0}));
  for (int trial = 0; trial < 300; ++trial) {
    const AffineElt x = random_affine(R, rng);
    for (int i = kAffineNode; i < R.rank(); ++i) {
      const int d = sil(R, multiply(R, simple_affine_reflection(R, i), x)) - sil(R, x);
      CHECK((d == 1 || d == -1));
    }
  }
}

TEST_CASE("(W^J)_af membership matches the defining condition") {
  std::mt19937 rng(3);
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem R = RootSystem::build(name);
    for (std::uint32_t bits = 0; bits < (1u << R.rank()); ++bits) {
      IndexSet J;
      for (int i = 0; i < R.rank(); ++i)
        if (bits >> i & 1u) J.insert(i);
      int members = 0;
      for (int trial = 0; trial < 150; ++trial) {
        AffineElt x = random_affine(R, rng);
        if (trial % 2) x = pi_J(R, x, J);
        const bool mine = is_min_in_coset_af(R, x, J);
        members += mine;
        CHECK(mine == min_in_coset_by_definition(R, x, J));
      }
      CHECK(members > 0);
    }
  }
}

TEST_CASE("projection onto (W^J)_af stays in the coset") {
  std::mt19937 rng(5);
  for (const std::string name : {"A2", "B2", "G2", "A3"}) {
    const RootSystem R = RootSystem::build(name);
    for (int i = 0; i < R.rank(); ++i) {
      const IndexSet J = IndexSet::single(i);
      for (int trial = 0; trial < 100; ++trial) {
        const AffineElt x = random_affine(R, rng);
        const AffineElt p = pi_J(R, x, J);
        CHECK(is_min_in_coset_af(R, p, J));
        // x^{-1} p lies in (W_J)_af = W_J x| Q_J^vee.
        const AffineElt d = multiply(R, inverse(R, x), p);
        CHECK(R.in_parabolic(d.fin, J));
        CHECK(coroot_class(d.trans, J).is_zero());
        CHECK(pi_J(R, p, J) == p);
        CHECK(cl_affine(R, p, J) == R.min_coset_rep(x.fin, J));
      }
    }
  }
  const RootSystem A2 = RootSystem::build("A2");
  CHECK(pi_J_trans(A2, A2.zero_coroot(), IndexSet::single(1)) == affine_identity(A2));
  CHECK_THROWS_AS(cl_affine(A2, {A2.simple(1), A2.zero_coroot()}, IndexSet::single(1)), InvariantViolation);
}

TEST_CASE("affine positivity") {
  const RootSystem R = RootSystem::build("A2");
  CHECK(is_positive(R, {0, 0}));
  CHECK_FALSE(is_positive(R, {R.negate(0), 0}));
  CHECK(is_positive(R, {R.negate(0), 1}));
  CHECK_FALSE(is_positive(R, {0, -1}));
}

TEST_CASE("affine text round trip") {
  const RootSystem R = RootSystem::build("A2");
  const AffineElt x{R.from_word(std::vector<int>{0, 1}), Coroot{1, -2}};
  CHECK(affine_to_string(R, x) == "s1 s2 | (1,-2)");
  CHECK(parse_affine(R, affine_to_string(R, x)) == x);
  CHECK(parse_affine(R, "e | (0,0)") == affine_identity(R));
  CHECK_THROWS_AS(parse_affine(R, "s1 | (1)"), ConfigError);
}
