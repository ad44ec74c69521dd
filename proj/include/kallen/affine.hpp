#pragma once

#include <string>

#include "kallen/cartan.hpp"

namespace kallen {

/// Index of the affine simple reflection s_0 in operator arguments; the
/// finite simple reflections keep their 0-based indices.
inline constexpr int kAffineNode = -1;

/// x = fin * t_trans in W_af = W x| Q^vee.
struct AffineElt {
  WeylElt fin;
  Coroot trans;
  bool operator==(const AffineElt&) const = default;
  auto operator<=>(const AffineElt&) const = default;
};

/// Level-zero affine weight mu + delta_coeff * delta.
struct AffineWeight {
  Weight fin;
  int delta = 0;
  bool operator==(const AffineWeight&) const = default;
};

/// Real affine root alpha + n delta, alpha given by its root index.
struct AffineRoot {
  int root = 0;
  int n = 0;
  bool operator==(const AffineRoot&) const = default;
};

AffineElt affine_identity(const RootSystem& R);
AffineElt affine_from_fin(const RootSystem& R, WeylElt w);
AffineElt translation(const RootSystem& R, const Coroot& xi);

/// (w t_xi)(v t_zeta) = wv t_{v^{-1} xi + zeta}.
AffineElt multiply(const RootSystem& R, const AffineElt& x, const AffineElt& y);
AffineElt inverse(const RootSystem& R, const AffineElt& x);

/// x(mu + k delta) = w mu + (k - <mu, xi>) delta for x = w t_xi.
AffineWeight act(const RootSystem& R, const AffineElt& x, const AffineWeight& mu);
AffineRoot act(const RootSystem& R, const AffineElt& x, const AffineRoot& beta);
bool is_positive(const RootSystem& R, const AffineRoot& beta);

/// s_{alpha + n delta} = s_alpha t_{n alpha^vee}.
AffineElt affine_reflection(const RootSystem& R, const AffineRoot& beta);
/// s_i for i in I, or s_0 = s_theta t_{-theta^vee} for i == kAffineNode.
AffineElt simple_affine_reflection(const RootSystem& R, int i);
/// <mu, alpha_i^vee> for i in I, and <mu, alpha_0^vee> = -<mu, theta^vee>.
int pair_affine_simple(const RootSystem& R, const Weight& mu, int i);
/// alpha_i as an affine weight; alpha_0 = delta - theta.
AffineWeight affine_simple_root(const RootSystem& R, int i);

/// Semi-infinite length l(w) + 2 <rho, xi>.
int sil(const RootSystem& R, const AffineElt& x);

/// Membership of x = v t_zeta in (W^J)_af. The defining condition asks
/// x beta > 0 for every beta = alpha + n delta in (Delta_J)_af^+. Since
/// x(alpha + n delta) = v alpha + (n - <alpha, zeta>) delta, the binding
/// cases are n = 0 for alpha in Delta_J^+ and n = 1 for -alpha; all larger n
/// only raise the delta coefficient. Together they say <alpha, zeta> is 0
/// (with v alpha > 0) or -1 (with v alpha < 0) for every alpha in Delta_J^+.
bool is_min_in_coset_af(const RootSystem& R, const AffineElt& x, IndexSet J);

/// Pi^J(t_xi) = u t_{xi + xi_1} with u in W_J and xi_1 in Q_J^vee, found by
/// searching a coordinate box for xi_1 that grows until success.
AffineElt pi_J_trans(const RootSystem& R, const Coroot& xi, IndexSet J);
/// Pi^J(w t_xi) = floor(w) Pi^J(t_xi).
AffineElt pi_J(const RootSystem& R, const AffineElt& x, IndexSet J);

/// [xi]^J: drop the Q_J^vee coordinates.
Coroot coroot_class(const Coroot& xi, IndexSet J);
/// cl(x) = floor(fin x) for x in (W^J)_af; throws if x is not in (W^J)_af.
WeylElt cl_affine(const RootSystem& R, const AffineElt& x, IndexSet J);
/// u Pi^J(t_xi) for u in W^J.
AffineElt parabolic_affine(const RootSystem& R, WeylElt u, const Coroot& xi, IndexSet J);

/// "s1 s2 | (1,0)".
std::string affine_to_string(const RootSystem& R, const AffineElt& x);
AffineElt parse_affine(const RootSystem& R, const std::string& text);

}  // namespace kallen
