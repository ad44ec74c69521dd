#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kallen/cartan.hpp"
#include "kallen/paths.hpp"

namespace kallen {

/// e^weight q^q.
struct Monomial {
  Weight weight;
  int q = 0;
  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: q descending, then weight lexicographic.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.q != b.q) return a.q > b.q;
    return a.weight < b.weight;
  }
};

/// Sparse integer combination of e^mu q^k.
class GroupAlgebraElt {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  GroupAlgebraElt() = default;
  static GroupAlgebraElt monomial(const Weight& mu, int q = 0, Coeff c = 1);
  /// Pure power q^k times e^0.
  static GroupAlgebraElt q_power(int rank, int k, Coeff c = 1);

  void add_term(const Weight& mu, int q, Coeff c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coeff(const Weight& mu, int q) const;
  int max_q() const;
  int min_q() const;

  GroupAlgebraElt& operator+=(const GroupAlgebraElt& o);
  GroupAlgebraElt& operator-=(const GroupAlgebraElt& o);
  friend GroupAlgebraElt operator+(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a += b; }
  friend GroupAlgebraElt operator-(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a -= b; }
  friend GroupAlgebraElt operator-(const GroupAlgebraElt& a) { return a.scaled(-1); }
  friend GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b);
  GroupAlgebraElt scaled(Coeff s) const;
  GroupAlgebraElt shift_q(int k) const;
  /// Keeps the terms with q exponent >= -N.
  GroupAlgebraElt truncated(int N) const;
  bool operator==(const GroupAlgebraElt& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// (1 - q^c) as a polynomial.
GroupAlgebraElt one_minus_q_pow(int rank, int c);
/// Exact quotient by (1 - q^c), c != 0; throws InvariantViolation on a
/// nonzero remainder.
GroupAlgebraElt divide_one_minus_q_pow(const GroupAlgebraElt& f, int c);

GroupAlgebraElt demazure_D(const RootSystem& R, int i, const GroupAlgebraElt& f);
GroupAlgebraElt demazure_T(const RootSystem& R, int i, const GroupAlgebraElt& f);

/// numerator * prod_{r in denom} 1/(1 - q^{-r}).
struct GradedChar {
  GroupAlgebraElt num;
  std::vector<int> denom;  // sorted multiset of positive r
};

GradedChar operator+(const GradedChar& a, const GradedChar& b);
GradedChar operator-(const GradedChar& a, const GradedChar& b);
GradedChar operator-(const GradedChar& a);
/// Equality by cross-multiplication against the other denominator.
bool equal(const GradedChar& a, const GradedChar& b);
GradedChar demazure_T(const RootSystem& R, int i, const GradedChar& g);
GroupAlgebraElt expand_truncated(const GradedChar& g, int N);

enum class MacdonaldMethod { Qls, Recursion };

/// E_{w lambda}(q, infinity) for every w in W^J (aligned with ctx.cosets()).
/// For the recursion method `largest_index` picks the largest valid s_i at
/// each ascent step instead of the smallest.
std::vector<GroupAlgebraElt> macdonald_table(const ShapeContext& ctx, MacdonaldMethod method,
                                             bool largest_index = false);
GroupAlgebraElt macdonald_E_inf(const ShapeContext& ctx, WeylElt w,
                                MacdonaldMethod method = MacdonaldMethod::Qls);

/// epsilon_i = 1 iff ceil(w) s_i > ceil(w).
std::vector<int> eps_vector(const ShapeContext& ctx, WeylElt w);
std::vector<int> c_denominator(const ShapeContext& ctx, WeylElt w);

/// Caches E for all of W^J and assembles the graded characters from it.
class CharacterTable {
 public:
  explicit CharacterTable(const ShapeContext& ctx, MacdonaldMethod method = MacdonaldMethod::Qls);
  const ShapeContext& context() const { return *ctx_; }
  const GroupAlgebraElt& E(WeylElt w) const;
  GradedChar gch_K(WeylElt w) const;
  GroupAlgebraElt gch_Kbar(WeylElt w) const { return E(w); }
  GradedChar gch_V(WeylElt w) const;

 private:
  const ShapeContext* ctx_;
  std::vector<GroupAlgebraElt> E_;
};

GradedChar gch_K(const ShapeContext& ctx, WeylElt w);
GroupAlgebraElt gch_Kbar(const ShapeContext& ctx, WeylElt w);
GradedChar gch_V(const ShapeContext& ctx, WeylElt w);
/// Truncated graded character of K^J_w summed over final directions and
/// translation parameters, keeping q exponents >= -N.
GroupAlgebraElt gch_K_direct(const ShapeContext& ctx, WeylElt w, int N);

/// Random polynomial with small weights, q exponents and coefficients.
GroupAlgebraElt random_poly(const RootSystem& R, std::mt19937_64& rng, int terms = 4,
                            int weight_range = 3);

std::string poly_to_text(const GroupAlgebraElt& f);
std::string graded_to_text(const GradedChar& g);
std::string poly_to_json(const GroupAlgebraElt& f, int indent = -1);
std::string graded_to_json(const GradedChar& g, int indent = -1);
GroupAlgebraElt poly_from_json(const std::string& text, int rank);

}  // namespace kallen
