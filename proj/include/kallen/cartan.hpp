#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kallen {

inline constexpr int kMaxRank = 8;

/// Raised for unsupported types, malformed input and similar user errors.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a property guaranteed by the theory fails to hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Integer vector in a fixed basis of a rank-r lattice; coordinates past the
/// rank are kept at zero so that defaulted comparison is lexicographic.
template <class Tag>
struct LatticeVec {
  std::array<int, kMaxRank> c{};
  int rank = 0;

  LatticeVec() = default;
  explicit LatticeVec(int r) : rank(r) {}
  LatticeVec(std::initializer_list<int> xs) : rank(static_cast<int>(xs.size())) {
    int k = 0;
    for (int x : xs) c[k++] = x;
  }
  static LatticeVec from(std::span<const int> xs) {
    LatticeVec v(static_cast<int>(xs.size()));
    for (std::size_t k = 0; k < xs.size(); ++k) v.c[k] = xs[k];
    return v;
  }
  static LatticeVec unit(int r, int i) {
    LatticeVec v(r);
    v.c[i] = 1;
    return v;
  }

  int& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }

  LatticeVec& operator+=(const LatticeVec& o) {
    for (int k = 0; k < kMaxRank; ++k) c[k] += o.c[k];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    for (int k = 0; k < kMaxRank; ++k) c[k] -= o.c[k];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(LatticeVec a) {
    for (int& x : a.c) x = -x;
    return a;
  }
  friend LatticeVec operator*(int s, LatticeVec a) {
    for (int& x : a.c) x *= s;
    return a;
  }

  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  /// Componentwise >= 0.
  bool nonneg() const {
    for (int x : c)
      if (x < 0) return false;
    return true;
  }
  int sum() const {
    int s = 0;
    for (int x : c) s += x;
    return s;
  }
  std::vector<int> to_vector() const { return {c.begin(), c.begin() + rank}; }

  auto operator<=>(const LatticeVec&) const = default;
  bool operator==(const LatticeVec&) const = default;
};

struct WeightTag {};
struct RootTag {};
struct CorootTag {};
/// Fundamental-weight coordinates.
using Weight = LatticeVec<WeightTag>;
/// Simple-root coordinates.
using Root = LatticeVec<RootTag>;
/// Simple-coroot coordinates.
using Coroot = LatticeVec<CorootTag>;

/// Subset of the simple index set {0, ..., rank-1}.
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet full(int rank) { return IndexSet((1u << rank) - 1u); }
  static IndexSet single(int i) { return IndexSet(1u << i); }
  static IndexSet of(std::initializer_list<int> xs) {
    IndexSet s;
    for (int x : xs) s.insert(x);
    return s;
  }

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= (1u << i); }
  void erase(int i) { bits_ &= ~(1u << i); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }
  bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  auto operator<=>(const IndexSet&) const = default;
  bool operator==(const IndexSet&) const = default;

 private:
  explicit IndexSet(std::uint32_t b) : bits_(b) {}
  std::uint32_t bits_ = 0;
};

enum class Series { A, B, C, D, G };

/// Element of the finite Weyl group. The id indexes the canonical element
/// table of the owning RootSystem, which is keyed by the action matrix on
/// fundamental weights; ids are assigned in enumeration order (length, then
/// lexicographically smallest reduced word), so `<` is that order.
struct WeylElt {
  int id = 0;
  auto operator<=>(const WeylElt&) const = default;
  bool operator==(const WeylElt&) const = default;
};

class RootSystem {
 public:
  static RootSystem build(Series series, int rank);
  /// Parses names like "A2", "G2", "D4".
  static RootSystem build(const std::string& name);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;
  /// cartan(i, j) = <alpha_j, alpha_i^vee>.
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  IndexSet all_indices() const { return IndexSet::full(rank_); }

  // Roots. Indices [0, N) are positive roots ordered by height then
  // coordinates; index r + N is the negative of root r.
  int num_positive() const { return num_pos_; }
  int num_roots() const { return 2 * num_pos_; }
  const Root& root(int r) const { return roots_[r]; }
  const Coroot& coroot(int r) const { return coroots_[r]; }
  bool is_positive(int r) const { return r < num_pos_; }
  int negate(int r) const { return r < num_pos_ ? r + num_pos_ : r - num_pos_; }
  int simple_root_index(int i) const { return simple_idx_[i]; }
  /// -1 when the vector is not a root.
  int root_index(const Root& beta) const;
  Coroot coroot_of(const Root& beta) const;
  /// Positive roots with support inside S.
  std::vector<int> positive_roots_in(IndexSet S) const;

  const Root& theta() const { return roots_[theta_idx_]; }
  int theta_index() const { return theta_idx_; }
  Weight rho() const;
  Weight zero_weight() const { return Weight(rank_); }
  Coroot zero_coroot() const { return Coroot(rank_); }
  Weight fundamental(int i) const { return Weight::unit(rank_, i); }
  /// Simple root in fundamental-weight coordinates (Cartan column).
  Weight simple_root_weight(int i) const;
  Weight root_to_weight(const Root& beta) const;

  int pair(const Weight& mu, const Coroot& xi) const;
  int pair(const Root& beta, const Coroot& xi) const;
  /// Pairing with alpha_i^vee.
  int pair_simple(const Root& beta, int i) const;
  /// <2 rho_S, xi> where rho_S is half the sum of positive roots in W_S.
  int pair_two_rho(IndexSet S, const Coroot& xi) const;
  int coxeter_number() const { return num_roots() / rank_; }

  // Finite Weyl group, enumerated eagerly.
  int order() const { return static_cast<int>(words_.size()); }
  WeylElt identity() const { return WeylElt{0}; }
  WeylElt simple(int i) const { return right_mul(identity(), i); }
  WeylElt elt(int id) const { return WeylElt{id}; }
  std::vector<WeylElt> elements() const;
  int length(WeylElt w) const { return lengths_[w.id]; }
  /// Lexicographically smallest reduced word (0-based letters).
  const std::vector<int>& word(WeylElt w) const { return words_[w.id]; }
  /// Lexicographically largest reduced word.
  std::vector<int> word_lexmax(WeylElt w) const;
  WeylElt from_word(std::span<const int> letters) const;
  /// Throws ConfigError unless the word is reduced.
  WeylElt from_reduced_word(std::span<const int> letters) const;
  WeylElt right_mul(WeylElt w, int i) const { return WeylElt{rmul_[w.id * rank_ + i]}; }
  WeylElt left_mul(int i, WeylElt w) const { return WeylElt{lmul_[w.id * rank_ + i]}; }
  WeylElt mul(WeylElt x, WeylElt y) const;
  WeylElt inverse(WeylElt w) const { return WeylElt{inv_[w.id]}; }
  /// Element whose weight action is the given row-major matrix; -1 id if none.
  WeylElt from_matrix(const std::vector<int>& m) const;
  std::vector<int> weight_matrix(WeylElt w) const;
  /// Reflection s_beta for the root with index r.
  WeylElt reflection(int r) const { return WeylElt{refl_[r]}; }

  Weight act(WeylElt w, const Weight& mu) const;
  Root act(WeylElt w, const Root& beta) const;
  Coroot act(WeylElt w, const Coroot& xi) const;
  int act_root(WeylElt w, int r) const { return perm_[w.id * num_roots() + r]; }

  bool is_right_descent(WeylElt w, int j) const {
    return !is_positive(act_root(w, simple_idx_[j]));
  }
  bool is_left_descent(int i, WeylElt w) const {
    return !is_positive(act_root(inverse(w), simple_idx_[i]));
  }
  IndexSet right_descents(WeylElt w) const;
  bool bruhat_leq(WeylElt u, WeylElt v) const;

  /// W_S in enumeration order.
  std::vector<WeylElt> weyl_group(IndexSet S) const;
  WeylElt longest(IndexSet S) const;
  WeylElt longest() const { return longest(all_indices()); }
  bool in_parabolic(WeylElt w, IndexSet S) const;

  bool is_min_coset_rep(WeylElt w, IndexSet J) const;
  WeylElt min_coset_rep(WeylElt w, IndexSet J) const;
  WeylElt max_coset_rep(WeylElt w, IndexSet J) const;
  /// W^J in enumeration order.
  std::vector<WeylElt> min_coset_reps(IndexSet J) const;

  IndexSet j_of(const Weight& lambda) const;
  bool is_dominant(const Weight& lambda) const;

 private:
  RootSystem() = default;
  void build_roots();
  void build_group();

  Series series_ = Series::A;
  int rank_ = 0;
  std::vector<int> cartan_;

  int num_pos_ = 0;
  std::vector<Root> roots_;
  std::vector<Coroot> coroots_;
  std::map<Root, int> root_lookup_;
  std::vector<int> simple_idx_;
  int theta_idx_ = 0;

  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> wmat_, rmat_, cmat_;  // weight/root/coroot actions
  std::vector<int> perm_;  // |W| x |roots|
  std::vector<int> rmul_, lmul_, inv_, refl_;
  std::map<std::vector<int>, int> matrix_lookup_;
};

std::string word_to_string(std::span<const int> letters);
std::string elt_to_string(const RootSystem& R, WeylElt w);
/// Accepts "s1 s2", "s1s2", "1 2", "1,2", "e" or "".
std::vector<int> parse_word(const std::string& text);
/// Parses "1,0,2" (separators: comma or whitespace).
std::vector<int> parse_int_list(const std::string& text);
/// Parses a 1-based index list like "1,3" into an IndexSet.
IndexSet parse_index_set(const std::string& text, int rank);
std::string index_set_to_string(IndexSet S);

template <class Tag>
std::string coords_to_string(const LatticeVec<Tag>& v) {
  std::string s = "(";
  for (int k = 0; k < v.rank; ++k) {
    if (k) s += ",";
    s += std::to_string(v.c[k]);
  }
  return s + ")";
}

}  // namespace kallen
