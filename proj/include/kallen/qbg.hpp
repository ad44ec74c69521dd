#pragma once

#include <string>
#include <vector>

#include "kallen/affine.hpp"
#include "kallen/cartan.hpp"

namespace kallen {

struct QbgEdge {
  int src = 0;  // vertex indices
  int dst = 0;
  int root = 0;  // positive root index of the label
  bool quantum = false;
};

struct PathData {
  int length = 0;
  Coroot weight;
};

/// Parabolic quantum Bruhat graph on W^J with all-pairs shortest-path
/// lengths and projected weights computed at construction. The RootSystem
/// must outlive the graph.
class QuantumBruhatGraph {
 public:
  QuantumBruhatGraph(const RootSystem& R, IndexSet J);

  const RootSystem& root_system() const { return *R_; }
  IndexSet J() const { return J_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<WeylElt>& vertices() const { return vertices_; }
  WeylElt vertex(int k) const { return vertices_[k]; }
  /// -1 when w is not in W^J.
  int vertex_index(WeylElt w) const { return index_[w.id]; }
  bool contains(WeylElt w) const { return index_[w.id] >= 0; }
  const std::vector<QbgEdge>& edges() const { return edges_; }
  const std::vector<int>& out_edges(int k) const { return out_[k]; }

  /// l(u => v); -1 if unreachable.
  int distance(WeylElt u, WeylElt v) const;
  /// wt^J(u => v), already projected to Q^vee_{I \ J}.
  const Coroot& path_weight(WeylElt u, WeylElt v) const;
  PathData shortest_data(WeylElt u, WeylElt v) const;
  /// u <=_w v: l(w => v) = l(w => u) + l(u => v).
  bool tilted_leq(WeylElt w, WeylElt u, WeylElt v) const;
  bool strongly_connected() const;

 private:
  int checked(WeylElt w) const;

  const RootSystem* R_;
  IndexSet J_;
  std::vector<WeylElt> vertices_;
  std::vector<int> index_;
  std::vector<QbgEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<int> dist_;
  std::vector<Coroot> weight_;
};

/// x >= y in the semi-infinite order, for x = u Pi^J(t_xi), y = v Pi^J(t_zeta)
/// in (W^J)_af: [xi]^J >= wt^J(v => u) + [zeta]^J. In A1, t_{alpha^vee} >= s_1.
bool si_geq(const QuantumBruhatGraph& G, const AffineElt& x, const AffineElt& y);
inline bool si_leq(const QuantumBruhatGraph& G, const AffineElt& x, const AffineElt& y) {
  return si_geq(G, y, x);
}
/// Same comparison on (cl, class) pairs.
bool si_geq(const QuantumBruhatGraph& G, WeylElt u, const Coroot& cls_x, WeylElt v,
            const Coroot& cls_y);

enum class WordChoice { LexMin, LexMax };

/// Reflection order beta_{-q} < ... < beta_p from a reduced word of w
/// extended on the left to a reduced word of the longest element.
struct ReflectionOrder {
  std::vector<int> word;      // full reduced word of w_0
  std::vector<int> labels;    // positive root index at each position
  int split = 0;              // number of prefix letters
  std::vector<int> position;  // positive root index -> position
  /// The signed index k of eq. beta_k: positions from `split` on are >= 1.
  int label_index(int pos) const { return pos - split + 1; }
};

ReflectionOrder reflection_order(const RootSystem& R, WeylElt w,
                                 WordChoice choice = WordChoice::LexMin);

/// Edge indices of the unique shortest path from w to u with strictly
/// increasing labels. Throws InvariantViolation if it is not unique.
std::vector<int> label_increasing_path(const QuantumBruhatGraph& G, const ReflectionOrder& order,
                                       WeylElt w, WeylElt u);

enum class EqbMethod { LabelIncreasing, Recursive, Brute };

/// EQB(w) sorted in enumeration order; G must be the J = empty graph.
std::vector<WeylElt> eqb(const QuantumBruhatGraph& G, WeylElt w, EqbMethod method,
                         WordChoice choice = WordChoice::LexMin);
/// EQB for every element by descending induction from EQB(w_0) = W.
/// `largest_index` switches the choice of s_i at each step.
std::vector<std::vector<WeylElt>> eqb_recursive_all(const QuantumBruhatGraph& G,
                                                    bool largest_index = false);

/// EQB(w) for all w, as membership bitmaps.
class EqbTable {
 public:
  EqbTable(const QuantumBruhatGraph& G_empty, EqbMethod method = EqbMethod::Recursive);
  const std::vector<WeylElt>& of(WeylElt w) const { return sets_[w.id]; }
  bool contains(WeylElt w, WeylElt u) const { return member_[w.id][u.id]; }

 private:
  std::vector<std::vector<WeylElt>> sets_;
  std::vector<std::vector<char>> member_;
};

struct KParametrization {
  std::vector<WeylElt> fins;   // floor(EQB(ceil w)) in W^J, sorted
  std::vector<Coroot> base;    // wt^J(w => u) aligned with fins
  IndexSet free;               // I_{ceil w} \ J
};

KParametrization k_parametrize(const QuantumBruhatGraph& GJ, const EqbTable& eqb, WeylElt w);
/// x in K^J_w, tested by the finite-part and translation conditions.
bool k_membership(const QuantumBruhatGraph& GJ, const EqbTable& eqb, const AffineElt& x, WeylElt w);
/// Same test on the pair (cl x, [xi]^J).
bool k_membership(const QuantumBruhatGraph& GJ, const EqbTable& eqb, WeylElt u, const Coroot& cls,
                  WeylElt w);
/// x in K^J_w by definition: x >= w and not x >= z for any z > w in W^J.
bool k_membership_definition(const QuantumBruhatGraph& GJ, WeylElt u, const Coroot& cls, WeylElt w);

/// Bruhat-maximum of {v in W^J : v <= x}; throws if there is none.
WeylElt max_below(const QuantumBruhatGraph& GJ, const AffineElt& x);

struct PartitionViolation {
  WeylElt u;
  Coroot cls;
  std::string reason;
};

struct PartitionReport {
  int checked = 0;
  int above = 0;  // elements with x >= w
  std::vector<PartitionViolation> violations;
};

/// For x = u Pi^J(t_xi), u in W^J, xi in [-box, box] on I \ J: x >= w iff x lies
/// in exactly one K^J_v with v >= w; the parametrized and definitional forms
/// of K^J_v are also compared.
PartitionReport check_partition(const QuantumBruhatGraph& GJ, const EqbTable& eqb, WeylElt w,
                                int box, int jobs = 1);

std::string qbg_to_json(const QuantumBruhatGraph& G, int indent = 2);
std::string qbg_to_dot(const QuantumBruhatGraph& G);

}  // namespace kallen
