#include "kallen/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace kallen {

AffineElt affine_identity(const RootSystem& R) { return {R.identity(), R.zero_coroot()}; }

AffineElt affine_from_fin(const RootSystem& R, WeylElt w) { return {w, R.zero_coroot()}; }

AffineElt translation(const RootSystem& R, const Coroot& xi) { return {R.identity(), xi}; }

AffineElt multiply(const RootSystem& R, const AffineElt& x, const AffineElt& y) {
  return {R.mul(x.fin, y.fin), R.act(R.inverse(y.fin), x.trans) + y.trans};
}

AffineElt inverse(const RootSystem& R, const AffineElt& x) {
  return {R.inverse(x.fin), -R.act(x.fin, x.trans)};
}

AffineWeight act(const RootSystem& R, const AffineElt& x, const AffineWeight& mu) {
  return {R.act(x.fin, mu.fin), mu.delta - R.pair(mu.fin, x.trans)};
}

AffineRoot act(const RootSystem& R, const AffineElt& x, const AffineRoot& beta) {
  return {R.act_root(x.fin, beta.root), beta.n - R.pair(R.root(beta.root), x.trans)};
}

bool is_positive(const RootSystem& R, const AffineRoot& beta) {
  return beta.n > 0 || (beta.n == 0 && R.is_positive(beta.root));
}

AffineElt affine_reflection(const RootSystem& R, const AffineRoot& beta) {
  return {R.reflection(beta.root), beta.n * R.coroot(beta.root)};
}

AffineElt simple_affine_reflection(const RootSystem& R, int i) {
  if (i == kAffineNode) return affine_reflection(R, {R.negate(R.theta_index()), 1});
  return affine_from_fin(R, R.simple(i));
}

int pair_affine_simple(const RootSystem& R, const Weight& mu, int i) {
  if (i == kAffineNode) return -R.pair(mu, R.coroot(R.theta_index()));
  return mu.c[i];
}

AffineWeight affine_simple_root(const RootSystem& R, int i) {
  if (i == kAffineNode) return {-R.root_to_weight(R.theta()), 1};
  return {R.simple_root_weight(i), 0};
}

int sil(const RootSystem& R, const AffineElt& x) {
  return R.length(x.fin) + 2 * R.pair(R.rho(), x.trans);
}

bool is_min_in_coset_af(const RootSystem& R, const AffineElt& x, IndexSet J) {
  for (int r : R.positive_roots_in(J)) {
    const int p = R.pair(R.root(r), x.trans);
    const bool image_positive = R.is_positive(R.act_root(x.fin, r));
    if (p == 0 && !image_positive) return false;
    if (p == -1 && image_positive) return false;
    if (p != 0 && p != -1) return false;
  }
  return true;
}

AffineElt pi_J_trans(const RootSystem& R, const Coroot& xi, IndexSet J) {
  if (J.empty()) return translation(R, xi);
  const std::vector<int> posJ = R.positive_roots_in(J);
  const std::vector<int> coords = J.members();
  const std::vector<WeylElt> WJ = R.weyl_group(J);

  int B = 0;
  for (int r : posJ) B = std::max(B, std::abs(R.pair(R.root(r), xi)));
  B += 1;
  for (;; B *= 2) {
    std::vector<int> off(coords.size(), -B);
    while (true) {
      Coroot zeta = xi;
      for (std::size_t k = 0; k < coords.size(); ++k) zeta.c[coords[k]] += off[k];
      bool pairings_ok = true;
      for (int r : posJ) {
        int p = R.pair(R.root(r), zeta);
        if (p != 0 && p != -1) {
          pairings_ok = false;
          break;
        }
      }
      if (pairings_ok)
        for (WeylElt u : WJ) {
          AffineElt cand{u, zeta};
          if (is_min_in_coset_af(R, cand, J)) return cand;
        }
      std::size_t k = 0;
      while (k < off.size() && off[k] == B) off[k++] = -B;
      if (k == off.size()) break;
      ++off[k];
    }
    if (B >= 64) break;
  }
  throw InvariantViolation("pi_J search box exhausted for translation " + coords_to_string(xi) +
                           " and J = " + index_set_to_string(J));
}

AffineElt pi_J(const RootSystem& R, const AffineElt& x, IndexSet J) {
  if (J.empty()) return x;
  AffineElt t = pi_J_trans(R, x.trans, J);
  return {R.mul(R.min_coset_rep(x.fin, J), t.fin), t.trans};
}

Coroot coroot_class(const Coroot& xi, IndexSet J) {
  Coroot out = xi;
  for (int j : J.members()) out.c[j] = 0;
  return out;
}

WeylElt cl_affine(const RootSystem& R, const AffineElt& x, IndexSet J) {
  if (!is_min_in_coset_af(R, x, J))
    throw InvariantViolation("cl: element " + affine_to_string(R, x) + " is not in (W^J)_af");
  return R.min_coset_rep(x.fin, J);
}

AffineElt parabolic_affine(const RootSystem& R, WeylElt u, const Coroot& xi, IndexSet J) {
  AffineElt t = pi_J_trans(R, xi, J);
  return {R.mul(u, t.fin), t.trans};
}

std::string affine_to_string(const RootSystem& R, const AffineElt& x) {
  return elt_to_string(R, x.fin) + " | " + coords_to_string(x.trans);
}

AffineElt parse_affine(const RootSystem& R, const std::string& text) {
  auto bar = text.find('|');
  std::string word = bar == std::string::npos ? text : text.substr(0, bar);
  Coroot xi = R.zero_coroot();
  if (bar != std::string::npos) {
    auto vals = parse_int_list(text.substr(bar + 1));
    if (static_cast<int>(vals.size()) != R.rank()) throw ConfigError("bad translation in: " + text);
    xi = Coroot::from(vals);
  }
  return {R.from_word(parse_word(word)), xi};
}

}  // namespace kallen
