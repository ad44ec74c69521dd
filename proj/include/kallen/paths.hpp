#pragma once

#include <boost/rational.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kallen/affine.hpp"
#include "kallen/cartan.hpp"
#include "kallen/qbg.hpp"

namespace kallen {

using Rational = boost::rational<long long>;

std::string rational_to_string(const Rational& a);
Rational parse_rational(const std::string& text);

struct QLSPath {
  std::vector<WeylElt> dirs;
  std::vector<Rational> times;  // a_0 = 0 < ... < a_s = 1

  WeylElt final_direction() const { return dirs.back(); }
  bool operator==(const QLSPath&) const = default;
};
/// By number of directions, then times, then directions.
bool operator<(const QLSPath& a, const QLSPath& b);

/// Data shared by every computation for one dominant weight lambda:
/// J = J_lambda, QBG(W^J), QBG(W), the EQB table and QLS(lambda).
class ShapeContext {
 public:
  ShapeContext(std::shared_ptr<const RootSystem> R, const Weight& lambda,
               EqbMethod eqb_method = EqbMethod::Recursive);

  const RootSystem& root_system() const { return *R_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return R_; }
  const Weight& lambda() const { return lambda_; }
  IndexSet J() const { return J_; }
  const QuantumBruhatGraph& graph() const { return graph_J_; }
  const QuantumBruhatGraph& full_graph() const { return graph_full_; }
  const EqbTable& eqb() const { return eqb_; }
  /// W^J in enumeration order.
  const std::vector<WeylElt>& cosets() const { return graph_J_.vertices(); }
  /// <lambda, beta^vee> for a positive root index.
  int height(int root) const;
  /// Whether the QBG_{a lambda} edge set allows a path from x to y.
  bool reachable(const Rational& a, WeylElt x, WeylElt y) const;
  /// Interior break points k/m allowed by the values <lambda, beta^vee>.
  const std::vector<Rational>& break_points() const { return breaks_; }
  /// QLS(lambda) in canonical order, enumerated at construction.
  const std::vector<QLSPath>& qls() const { return qls_; }

 private:
  std::vector<char> reach_matrix(const Rational& a) const;

  std::shared_ptr<const RootSystem> R_;
  Weight lambda_;
  IndexSet J_;
  QuantumBruhatGraph graph_J_;
  QuantumBruhatGraph graph_full_;
  EqbTable eqb_;
  std::vector<Rational> breaks_;
  std::vector<std::vector<char>> reach_;  // aligned with breaks_
  std::vector<QLSPath> qls_;
};

/// QLS(lambda) in canonical order.
std::vector<QLSPath> qls_enumerate(const ShapeContext& ctx);
bool qls_is_valid(const ShapeContext& ctx, const QLSPath& eta);
Weight qls_wt(const ShapeContext& ctx, const QLSPath& eta);
/// -sum_{u=1}^{s} a_u <lambda, wt^J(w_{u+1} => w_u)> with w_{s+1} = w.
int deg_at(const ShapeContext& ctx, const QLSPath& eta, WeylElt w);
/// -sum_{u=1}^{s-1} a_u <lambda, wt^J(w_{u+1} => w_u)>.
int deg_lambda(const ShapeContext& ctx, const QLSPath& eta);
/// Paths whose final direction lies in floor(EQB(ceil w)).
std::vector<QLSPath> qls_filter_winf(const ShapeContext& ctx, const std::vector<QLSPath>& paths,
                                     WeylElt w);

struct SLSPath {
  std::vector<AffineElt> dirs;
  std::vector<Rational> times;
  bool operator==(const SLSPath&) const = default;
};
bool operator<(const SLSPath& a, const SLSPath& b);

/// pi_lambda = (e; 0, 1).
SLSPath sls_initial(const ShapeContext& ctx);

enum class Validity { Valid, Invalid, BoundExceeded };
const char* validity_name(Validity v);

/// Default bound on |n| for affine roots alpha + n delta in the path search.
int default_n_bound(const ShapeContext& ctx, const SLSPath& pi);
/// Checks the strict semi-infinite chain and, for each break point a, a
/// path x_{u+1} -> x_u in the semi-infinite Bruhat graph restricted to
/// a<x lambda, beta^vee> in Z. n_bound < 0 selects the default.
Validity sls_validate(const ShapeContext& ctx, const SLSPath& pi, int n_bound = -1);

/// pi-bar(t) with exact rational coordinates.
struct PiecewiseWeight {
  std::vector<Rational> fin;
  Rational delta;
};
PiecewiseWeight sls_evaluate(const ShapeContext& ctx, const SLSPath& pi, const Rational& t);
AffineWeight sls_wt(const ShapeContext& ctx, const SLSPath& pi);

/// Root operators for i in I or i == kAffineNode; nullopt encodes 0.
std::optional<SLSPath> sls_root_e(const ShapeContext& ctx, const SLSPath& pi, int i);
std::optional<SLSPath> sls_root_f(const ShapeContext& ctx, const SLSPath& pi, int i);
int sls_eps(const ShapeContext& ctx, const SLSPath& pi, int i);
int sls_phi(const ShapeContext& ctx, const SLSPath& pi, int i);
SLSPath weyl_act_sls(const ShapeContext& ctx, int i, const SLSPath& pi);
QLSPath sls_cl(const ShapeContext& ctx, const SLSPath& pi);

std::string qls_to_json(const RootSystem& R, const QLSPath& eta);
std::string sls_to_json(const RootSystem& R, const SLSPath& pi);
std::string qls_to_string(const RootSystem& R, const QLSPath& eta);
std::string sls_to_string(const RootSystem& R, const SLSPath& pi);

}  // namespace kallen
