#include "kallen/characters.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace kallen {

namespace {

using Coeff = GroupAlgebraElt::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("coefficient overflow");
  return r;
}

}  // namespace

GroupAlgebraElt GroupAlgebraElt::monomial(const Weight& mu, int q, Coeff c) {
  GroupAlgebraElt f;
  f.add_term(mu, q, c);
  return f;
}

GroupAlgebraElt GroupAlgebraElt::q_power(int rank, int k, Coeff c) {
  return monomial(Weight(rank), k, c);
}

void GroupAlgebraElt::add_term(const Weight& mu, int q, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{mu, q}, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

GroupAlgebraElt::Coeff GroupAlgebraElt::coeff(const Weight& mu, int q) const {
  auto it = terms_.find(Monomial{mu, q});
  return it == terms_.end() ? 0 : it->second;
}

int GroupAlgebraElt::max_q() const {
  if (terms_.empty()) throw InvariantViolation("max_q of zero polynomial");
  return terms_.begin()->first.q;
}

int GroupAlgebraElt::min_q() const {
  if (terms_.empty()) throw InvariantViolation("min_q of zero polynomial");
  return terms_.rbegin()->first.q;
}

GroupAlgebraElt& GroupAlgebraElt::operator+=(const GroupAlgebraElt& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.weight, m.q, c);
  return *this;
}

GroupAlgebraElt& GroupAlgebraElt::operator-=(const GroupAlgebraElt& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.weight, m.q, -c);
  return *this;
}

GroupAlgebraElt operator*(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
  GroupAlgebraElt out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma.weight + mb.weight, ma.q + mb.q, checked_mul(ca, cb));
  return out;
}

GroupAlgebraElt GroupAlgebraElt::scaled(Coeff s) const {
  GroupAlgebraElt out;
  if (s == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, checked_mul(c, s));
  return out;
}

GroupAlgebraElt GroupAlgebraElt::shift_q(int k) const {
  GroupAlgebraElt out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.weight, m.q + k}, c);
  return out;
}

GroupAlgebraElt GroupAlgebraElt::truncated(int N) const {
  GroupAlgebraElt out;
  for (const auto& [m, c] : terms_)
    if (m.q >= -N) out.terms_.emplace(m, c);
  return out;
}

GroupAlgebraElt one_minus_q_pow(int rank, int c) {
  return GroupAlgebraElt::q_power(rank, 0) - GroupAlgebraElt::q_power(rank, c);
}

GroupAlgebraElt divide_one_minus_q_pow(const GroupAlgebraElt& f, int c) {
  if (c == 0) throw InvariantViolation("division by 1 - q^0");
  GroupAlgebraElt quot;
  if (f.is_zero()) return quot;
  GroupAlgebraElt rem = f;
  // The constant 1 of the divisor sits at the top end for c < 0 and at the
  // bottom end for c > 0; peel terms from that end.
  const int lo = f.min_q(), hi = f.max_q();
  while (!rem.is_zero()) {
    const int d = c < 0 ? rem.max_q() : rem.min_q();
    if (c < 0 ? d < lo - c : d > hi - c) break;
    GroupAlgebraElt layer;
    for (const auto& [m, k] : rem.terms())
      if (m.q == d) layer.add_term(m.weight, m.q, k);
    quot += layer;
    rem -= layer;
    rem += layer.shift_q(c);
  }
  if (!rem.is_zero())
    throw InvariantViolation("inexact division by 1 - q^" + std::to_string(c) + ": remainder " +
                             poly_to_text(rem));
  return quot;
}

GroupAlgebraElt demazure_D(const RootSystem& R, int i, const GroupAlgebraElt& f) {
  const Weight a = R.simple_root_weight(i);
  GroupAlgebraElt out;
  for (const auto& [m, c] : f.terms()) {
    const int p = m.weight.c[i];
    if (p <= 0) {
      for (int k = 0; k <= -p; ++k) out.add_term(m.weight + k * a, m.q, c);
    } else if (p >= 2) {
      for (int k = 1; k <= p - 1; ++k) out.add_term(m.weight - k * a, m.q, -c);
    }
  }
  return out;
}

GroupAlgebraElt demazure_T(const RootSystem& R, int i, const GroupAlgebraElt& f) {
  return demazure_D(R, i, f) - f;
}

namespace {

GroupAlgebraElt denominator_product(int rank, const std::vector<int>& rs) {
  GroupAlgebraElt p = GroupAlgebraElt::q_power(rank, 0);
  for (int r : rs) p = p * one_minus_q_pow(rank, -r);
  return p;
}

/// Multiset difference a \ b for sorted inputs.
std::vector<int> multiset_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int rank_of(const GradedChar& a, const GradedChar& b) {
  if (!a.num.is_zero()) return a.num.terms().begin()->first.weight.rank;
  if (!b.num.is_zero()) return b.num.terms().begin()->first.weight.rank;
  return 0;
}

}  // namespace

GradedChar operator+(const GradedChar& a, const GradedChar& b) {
  std::vector<int> common;
  std::set_union(a.denom.begin(), a.denom.end(), b.denom.begin(), b.denom.end(),
                 std::back_inserter(common));
  const int rank = rank_of(a, b);
  GradedChar out;
  out.denom = common;
  out.num = a.num * denominator_product(rank, multiset_minus(common, a.denom)) +
            b.num * denominator_product(rank, multiset_minus(common, b.denom));
  return out;
}

GradedChar operator-(const GradedChar& a) { return {a.num.scaled(-1), a.denom}; }

GradedChar operator-(const GradedChar& a, const GradedChar& b) { return a + (-b); }

bool equal(const GradedChar& a, const GradedChar& b) {
  const int rank = rank_of(a, b);
  return a.num * denominator_product(rank, multiset_minus(b.denom, a.denom)) ==
         b.num * denominator_product(rank, multiset_minus(a.denom, b.denom));
}

GradedChar demazure_T(const RootSystem& R, int i, const GradedChar& g) {
  return {demazure_T(R, i, g.num), g.denom};
}

GroupAlgebraElt expand_truncated(const GradedChar& g, int N) {
  GroupAlgebraElt acc = g.num.truncated(N);
  for (int r : g.denom) {
    GroupAlgebraElt next;
    for (int k = 0; !acc.is_zero() && acc.max_q() - r * k >= -N; ++k) next += acc.shift_q(-r * k);
    acc = next.truncated(N);
  }
  return acc;
}

std::vector<int> eps_vector(const ShapeContext& ctx, WeylElt w) {
  const RootSystem& R = ctx.root_system();
  const WeylElt top = R.max_coset_rep(w, ctx.J());
  std::vector<int> eps(R.rank(), 0);
  for (int i = 0; i < R.rank(); ++i) eps[i] = R.is_right_descent(top, i) ? 0 : 1;
  return eps;
}

std::vector<int> c_denominator(const ShapeContext& ctx, WeylElt w) {
  if (!ctx.graph().contains(w)) throw InvariantViolation("c_denominator: w is not in W^J");
  const std::vector<int> eps = eps_vector(ctx, w);
  std::vector<int> out;
  for (int i = 0; i < ctx.root_system().rank(); ++i)
    for (int r = 1; r <= ctx.lambda().c[i] - eps[i]; ++r) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

GroupAlgebraElt macdonald_by_qls(const ShapeContext& ctx, WeylElt w) {
  const RootSystem& R = ctx.root_system();
  GroupAlgebraElt out;
  for (const QLSPath& eta : qls_filter_winf(ctx, ctx.qls(), w))
    out.add_term(qls_wt(ctx, eta), deg_at(ctx, eta, w), 1);
  (void)R;
  return out;
}

}  // namespace

std::vector<GroupAlgebraElt> macdonald_table(const ShapeContext& ctx, MacdonaldMethod method,
                                             bool largest_index) {
  const RootSystem& R = ctx.root_system();
  const QuantumBruhatGraph& G = ctx.graph();
  const std::vector<WeylElt>& cos = ctx.cosets();
  std::vector<GroupAlgebraElt> table(cos.size());
  if (method == MacdonaldMethod::Qls) {
    for (std::size_t k = 0; k < cos.size(); ++k) table[k] = macdonald_by_qls(ctx, cos[k]);
    return table;
  }
  const WeylElt bottom = R.min_coset_rep(R.longest(), ctx.J());
  std::vector<char> done(cos.size(), 0);
  table[G.vertex_index(bottom)] = macdonald_by_qls(ctx, bottom);
  done[G.vertex_index(bottom)] = 1;
  // Cosets are in length order; each ascent s_i w has larger length.
  for (int k = static_cast<int>(cos.size()) - 1; k >= 0; --k) {
    if (done[k]) continue;
    const WeylElt w = cos[k];
    const Weight wl = R.act(w, ctx.lambda());
    int i = -1;
    for (int t = 0; t < R.rank(); ++t) {
      const int cand = largest_index ? R.rank() - 1 - t : t;
      if (wl.c[cand] > 0) {
        i = cand;
        break;
      }
    }
    if (i < 0) throw InvariantViolation("recursion: no ascent from a non-bottom coset");
    const WeylElt up = R.left_mul(i, w);
    const int ku = G.vertex_index(up);
    if (ku < 0 || !done[ku]) throw InvariantViolation("recursion: ascent is not a processed coset");
    const WeylElt top = R.max_coset_rep(up, ctx.J());
    const int beta = R.act_root(R.inverse(top), R.simple_root_index(i));  // ceil(up)^{-1} alpha_i
    const GroupAlgebraElt Ti = demazure_T(R, i, table[ku]);
    if (R.root(R.negate(beta)).sum() != 1) {
      table[k] = Ti;
    } else {
      table[k] = divide_one_minus_q_pow(Ti, R.pair(ctx.lambda(), R.coroot(beta)));
    }
    done[k] = 1;
  }
  return table;
}

GroupAlgebraElt macdonald_E_inf(const ShapeContext& ctx, WeylElt w, MacdonaldMethod method) {
  const int k = ctx.graph().vertex_index(w);
  if (k < 0) throw ConfigError("w is not a minimal coset representative for J_lambda");
  if (method == MacdonaldMethod::Qls) return macdonald_by_qls(ctx, w);
  return macdonald_table(ctx, method)[k];
}

CharacterTable::CharacterTable(const ShapeContext& ctx, MacdonaldMethod method)
    : ctx_(&ctx), E_(macdonald_table(ctx, method)) {}

const GroupAlgebraElt& CharacterTable::E(WeylElt w) const {
  const int k = ctx_->graph().vertex_index(w);
  if (k < 0) throw InvariantViolation("CharacterTable: w is not in W^J");
  return E_[k];
}

GradedChar CharacterTable::gch_K(WeylElt w) const { return {E(w), c_denominator(*ctx_, w)}; }

GradedChar CharacterTable::gch_V(WeylElt w) const {
  const RootSystem& R = ctx_->root_system();
  GradedChar acc;
  for (WeylElt v : ctx_->cosets())
    if (R.bruhat_leq(w, v)) acc = acc + gch_K(v);
  return acc;
}

GradedChar gch_K(const ShapeContext& ctx, WeylElt w) {
  return {macdonald_E_inf(ctx, w), c_denominator(ctx, w)};
}

GroupAlgebraElt gch_Kbar(const ShapeContext& ctx, WeylElt w) { return macdonald_E_inf(ctx, w); }

GradedChar gch_V(const ShapeContext& ctx, WeylElt w) { return CharacterTable(ctx).gch_V(w); }

namespace {

/// Calls visit(size) for every partition with at most max_len parts and
/// size at most budget.
void for_each_partition(int max_len, int budget, const std::function<void(int)>& visit) {
  std::function<void(int, int, int, int)> rec = [&](int len, int largest, int size, int left) {
    visit(size);
    if (len == max_len) return;
    for (int part = 1; part <= std::min(largest, left); ++part) rec(len + 1, part, size + part, left - part);
  };
  if (max_len <= 0) {
    visit(0);
    return;
  }
  rec(0, budget, 0, budget);
}

}  // namespace

GroupAlgebraElt gch_K_direct(const ShapeContext& ctx, WeylElt w, int N) {
  const RootSystem& R = ctx.root_system();
  const QuantumBruhatGraph& G = ctx.graph();
  const KParametrization kp = k_parametrize(G, ctx.eqb(), w);
  std::vector<char> allowed(R.order(), 0);
  for (WeylElt u : kp.fins) allowed[u.id] = 1;

  // counts[t] = number of (C, xi) pairs whose rho-tilde has total size t:
  // partitions of length < m_i for every i, plus c_i >= 0 on the free
  // indices contributing c_i * m_i.
  std::vector<Coeff> counts(N + 1, 0);
  counts[0] = 1;
  for (int i = 0; i < R.rank(); ++i) {
    const int m = ctx.lambda().c[i];
    std::vector<Coeff> factor(N + 1, 0);
    for_each_partition(m - 1, N, [&](int size) {
      if (size <= N) ++factor[size];
    });
    if (kp.free.contains(i) && m > 0) {
      std::vector<Coeff> shifted(N + 1, 0);
      for (int s = 0; s <= N; ++s)
        for (int c = 0; s + c * m <= N; ++c) shifted[s + c * m] += factor[s];
      factor = shifted;
    }
    std::vector<Coeff> next(N + 1, 0);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; a + b <= N; ++b) next[a + b] = checked_add(next[a + b], checked_mul(counts[a], factor[b]));
    counts = next;
  }

  GroupAlgebraElt out;
  for (const QLSPath& eta : ctx.qls()) {
    const WeylElt kappa = eta.final_direction();
    if (!allowed[kappa.id]) continue;
    const int base = deg_lambda(ctx, eta) - R.pair(ctx.lambda(), G.path_weight(w, kappa));
    const Weight wt = qls_wt(ctx, eta);
    for (int t = 0; base - t >= -N; ++t)
      if (t <= N) out.add_term(wt, base - t, counts[t]);
  }
  return out;
}

GroupAlgebraElt random_poly(const RootSystem& R, std::mt19937_64& rng, int terms, int weight_range) {
  std::uniform_int_distribution<int> coord(-weight_range, weight_range);
  std::uniform_int_distribution<int> qexp(-3, 0);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupAlgebraElt f;
  for (int t = 0; t < terms; ++t) {
    Weight mu(R.rank());
    for (int k = 0; k < R.rank(); ++k) mu.c[k] = coord(rng);
    f.add_term(mu, qexp(rng), coeff(rng));
  }
  return f;
}

namespace {

std::string weight_exponent(const Weight& mu) {
  std::string s;
  for (int k = 0; k < mu.rank; ++k) {
    const int c = mu.c[k];
    if (c == 0) continue;
    const std::string var = "w" + std::to_string(k + 1);
    const int a = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    s += (a == 1 ? "" : std::to_string(a) + " ") + var;
  }
  return "e^(" + (s.empty() ? std::string("0") : s) + ")";
}

}  // namespace

std::string poly_to_text(const GroupAlgebraElt& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    const Coeff a = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1) s += std::to_string(a) + " ";
    if (m.q != 0) s += "q^" + std::to_string(m.q) + " ";
    s += weight_exponent(m.weight);
  }
  return s;
}

std::string graded_to_text(const GradedChar& g) {
  if (g.denom.empty()) return poly_to_text(g.num);
  std::string s = "(" + poly_to_text(g.num) + ") / ";
  for (int r : g.denom) s += "(1 - q^-" + std::to_string(r) + ")";
  return s;
}

namespace {

nlohmann::ordered_json poly_json(const GroupAlgebraElt& f) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["weight"] = m.weight.to_vector();
    t["q"] = m.q;
    t["coeff"] = c;
    arr.push_back(t);
  }
  return arr;
}

}  // namespace

std::string poly_to_json(const GroupAlgebraElt& f, int indent) { return poly_json(f).dump(indent); }

std::string graded_to_json(const GradedChar& g, int indent) {
  nlohmann::ordered_json j;
  j["numerator"] = poly_json(g.num);
  j["denom"] = g.denom;
  return j.dump(indent);
}

GroupAlgebraElt poly_from_json(const std::string& text, int rank) {
  GroupAlgebraElt f;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& t : j) {
      const auto w = t.at("weight").get<std::vector<int>>();
      if (static_cast<int>(w.size()) != rank) throw ConfigError("polynomial JSON: weight rank");
      f.add_term(Weight::from(w), t.at("q").get<int>(), t.at("coeff").get<Coeff>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("polynomial JSON: ") + e.what());
  }
  return f;
}

}  // namespace kallen
