#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kallen/paths.hpp"

namespace kallen {

bool operator<(const SLSPath& a, const SLSPath& b) {
  if (a.dirs.size() != b.dirs.size()) return a.dirs.size() < b.dirs.size();
  if (a.times != b.times)
    return std::lexicographical_compare(a.times.begin(), a.times.end(), b.times.begin(),
                                        b.times.end());
  return a.dirs < b.dirs;
}

SLSPath sls_initial(const ShapeContext& ctx) {
  return {{affine_identity(ctx.root_system())}, {Rational(0), Rational(1)}};
}

const char* validity_name(Validity v) {
  switch (v) {
    case Validity::Valid: return "valid";
    case Validity::Invalid: return "invalid";
    case Validity::BoundExceeded: return "bound-exceeded";
  }
  return "?";
}

int default_n_bound(const ShapeContext& ctx, const SLSPath& pi) {
  int m = 0;
  for (const AffineElt& x : pi.dirs)
    for (int k = 0; k < x.trans.rank; ++k) m = std::max(m, std::abs(x.trans.c[k]));
  return 2 * (1 + m) + ctx.root_system().coxeter_number();
}

namespace {

enum class Search { Found, NotFound, BoundHit };

/// Layered search from `from` to `to` through x -> s_beta x with sil + 1,
/// both ends in (W^J)_af and a <x lambda, beta^vee> integral. Every vertex
/// on such a path lies below `to`, which keeps the frontier finite.
Search sb_path(const ShapeContext& ctx, const AffineElt& from, const AffineElt& to,
               const Rational& a, int n_bound) {
  const RootSystem& R = ctx.root_system();
  const IndexSet J = ctx.J();
  const QuantumBruhatGraph& G = ctx.graph();
  const int steps = sil(R, to) - sil(R, from);
  if (steps <= 0) return Search::NotFound;
  const WeylElt to_cl = cl_affine(R, to, J);
  const Coroot to_cls = coroot_class(to.trans, J);
  bool bound_hit = false;

  std::set<AffineElt> frontier{from};
  for (int level = 1; level <= steps && !frontier.empty(); ++level) {
    std::set<AffineElt> next;
    for (const AffineElt& x : frontier) {
      const WeylElt winv = R.inverse(x.fin);
      const Weight xl = R.act(x.fin, ctx.lambda());
      for (int r = 0; r < R.num_roots(); ++r) {
        if ((a * Rational(R.pair(xl, R.coroot(r)))).denominator() != 1) continue;
        // sil(s_beta x) - sil(x) = l(s_alpha w) - l(w) + 2n <rho, w^{-1} alpha^vee>.
        const int dl = R.length(R.mul(R.reflection(r), x.fin)) - R.length(x.fin);
        const int d = 2 * R.pair(R.rho(), R.coroot(R.act_root(winv, r)));
        if ((1 - dl) % d != 0) continue;
        const int n = (1 - dl) / d;
        if (n < 0 || (n == 0 && !R.is_positive(r))) continue;
        const AffineElt y = multiply(R, affine_reflection(R, {r, n}), x);
        if (!is_min_in_coset_af(R, y, J)) continue;
        if (!si_geq(G, to_cl, to_cls, cl_affine(R, y, J), coroot_class(y.trans, J))) continue;
        if (n > n_bound) {
          bound_hit = true;
          continue;
        }
        next.insert(y);
      }
    }
    frontier = std::move(next);
  }
  if (frontier.count(to)) return Search::Found;
  return bound_hit ? Search::BoundHit : Search::NotFound;
}

/// Breakpoint values H(a_0), ..., H(a_s) and the slopes of H_i.
struct HData {
  std::vector<Rational> values;
  std::vector<int> slopes;
  Rational min;
};

HData h_function(const ShapeContext& ctx, const SLSPath& pi, int i) {
  const RootSystem& R = ctx.root_system();
  HData h;
  h.values.push_back(Rational(0));
  for (std::size_t u = 0; u < pi.dirs.size(); ++u) {
    const int slope = pair_affine_simple(R, R.act(pi.dirs[u].fin, ctx.lambda()), i);
    h.slopes.push_back(slope);
    h.values.push_back(h.values.back() + Rational(slope) * (pi.times[u + 1] - pi.times[u]));
  }
  h.min = *std::min_element(h.values.begin(), h.values.end());
  if (h.min.denominator() != 1)
    throw InvariantViolation("H function has a non-integral minimum on " + sls_to_string(R, pi));
  return h;
}

AffineElt reflect(const ShapeContext& ctx, int i, const AffineElt& x) {
  const RootSystem& R = ctx.root_system();
  AffineElt y = multiply(R, simple_affine_reflection(R, i), x);
  if (!is_min_in_coset_af(R, y, ctx.J()))
    throw InvariantViolation("reflected direction left (W^J)_af");
  return y;
}

/// Replaces directions on [t0, t1] by s_i x, then drops empty segments and
/// merges equal neighbours (the drop rules of the root operators).
SLSPath reflect_interval(const ShapeContext& ctx, const SLSPath& pi, int i, const Rational& t0,
                         const Rational& t1) {
  std::vector<std::pair<AffineElt, std::pair<Rational, Rational>>> segs;
  for (std::size_t u = 0; u < pi.dirs.size(); ++u) {
    const Rational lo = pi.times[u], hi = pi.times[u + 1];
    const Rational cuts[] = {lo, std::clamp(t0, lo, hi), std::clamp(t1, lo, hi), hi};
    for (int k = 0; k < 3; ++k) {
      if (!(cuts[k] < cuts[k + 1])) continue;
      const bool inside = k == 1;
      segs.push_back({inside ? reflect(ctx, i, pi.dirs[u]) : pi.dirs[u], {cuts[k], cuts[k + 1]}});
    }
  }
  SLSPath out;
  out.times.push_back(Rational(0));
  for (auto& [x, span] : segs) {
    if (!out.dirs.empty() && out.dirs.back() == x) {
      out.times.back() = span.second;
      continue;
    }
    out.dirs.push_back(x);
    out.times.push_back(span.second);
  }
  return out;
}

}  // namespace

Validity sls_validate(const ShapeContext& ctx, const SLSPath& pi, int n_bound) {
  const RootSystem& R = ctx.root_system();
  const IndexSet J = ctx.J();
  const std::size_t s = pi.dirs.size();
  if (s == 0 || pi.times.size() != s + 1) return Validity::Invalid;
  if (pi.times.front() != Rational(0) || pi.times.back() != Rational(1)) return Validity::Invalid;
  for (std::size_t u = 0; u < s; ++u) {
    if (!(pi.times[u] < pi.times[u + 1])) return Validity::Invalid;
    if (!is_min_in_coset_af(R, pi.dirs[u], J)) return Validity::Invalid;
  }
  for (std::size_t u = 0; u + 1 < s; ++u)
    if (pi.dirs[u] == pi.dirs[u + 1] || !si_geq(ctx.graph(), pi.dirs[u], pi.dirs[u + 1]))
      return Validity::Invalid;
  if (n_bound < 0) n_bound = default_n_bound(ctx, pi);
  bool bound_hit = false;
  for (std::size_t u = 0; u + 1 < s; ++u) {
    switch (sb_path(ctx, pi.dirs[u + 1], pi.dirs[u], pi.times[u + 1], n_bound)) {
      case Search::Found: break;
      case Search::NotFound: return Validity::Invalid;
      case Search::BoundHit: bound_hit = true; break;
    }
  }
  return bound_hit ? Validity::BoundExceeded : Validity::Valid;
}

PiecewiseWeight sls_evaluate(const ShapeContext& ctx, const SLSPath& pi, const Rational& t) {
  const RootSystem& R = ctx.root_system();
  PiecewiseWeight out{std::vector<Rational>(R.rank(), Rational(0)), Rational(0)};
  for (std::size_t u = 0; u < pi.dirs.size(); ++u) {
    const Rational lo = pi.times[u];
    const Rational hi = std::min(pi.times[u + 1], t);
    if (!(lo < hi)) break;
    const AffineWeight xl = act(R, pi.dirs[u], AffineWeight{ctx.lambda(), 0});
    for (int k = 0; k < R.rank(); ++k) out.fin[k] += (hi - lo) * Rational(xl.fin.c[k]);
    out.delta += (hi - lo) * Rational(xl.delta);
  }
  return out;
}

AffineWeight sls_wt(const ShapeContext& ctx, const SLSPath& pi) {
  const RootSystem& R = ctx.root_system();
  const PiecewiseWeight p = sls_evaluate(ctx, pi, Rational(1));
  AffineWeight out{R.zero_weight(), 0};
  for (int k = 0; k < R.rank(); ++k) {
    if (p.fin[k].denominator() != 1)
      throw InvariantViolation("sls_wt: non-integral weight for " + sls_to_string(R, pi));
    out.fin.c[k] = static_cast<int>(p.fin[k].numerator());
  }
  if (p.delta.denominator() != 1)
    throw InvariantViolation("sls_wt: non-integral delta part for " + sls_to_string(R, pi));
  out.delta = static_cast<int>(p.delta.numerator());
  return out;
}

std::optional<SLSPath> sls_root_e(const ShapeContext& ctx, const SLSPath& pi, int i) {
  const HData h = h_function(ctx, pi, i);
  if (h.min == Rational(0)) return std::nullopt;
  std::size_t q = 0;
  while (h.values[q] != h.min) ++q;
  const Rational target = h.min + 1;
  // Last t <= t1 with H(t) = m + 1, scanning segments right to left.
  std::optional<Rational> t0;
  for (std::size_t u = q; u >= 1 && !t0; --u) {
    const Rational hs = h.values[u - 1], he = h.values[u];
    if (std::min(hs, he) <= target && target <= std::max(hs, he)) {
      if (h.slopes[u - 1] == 0)
        t0 = pi.times[u];
      else
        t0 = pi.times[u - 1] + (target - hs) / Rational(h.slopes[u - 1]);
    }
  }
  if (!t0) throw InvariantViolation("e_i: no crossing of m + 1 before the minimum");
  return reflect_interval(ctx, pi, i, *t0, pi.times[q]);
}

std::optional<SLSPath> sls_root_f(const ShapeContext& ctx, const SLSPath& pi, int i) {
  const HData h = h_function(ctx, pi, i);
  if (h.values.back() == h.min) return std::nullopt;
  std::size_t p = h.values.size() - 1;
  while (h.values[p] != h.min) --p;
  const Rational target = h.min + 1;
  std::optional<Rational> t1;
  for (std::size_t u = p + 1; u < h.values.size() && !t1; ++u) {
    const Rational hs = h.values[u - 1], he = h.values[u];
    if (std::min(hs, he) <= target && target <= std::max(hs, he)) {
      if (h.slopes[u - 1] == 0)
        t1 = pi.times[u - 1];
      else
        t1 = pi.times[u - 1] + (target - hs) / Rational(h.slopes[u - 1]);
    }
  }
  if (!t1) throw InvariantViolation("f_i: no crossing of m + 1 after the last minimum");
  return reflect_interval(ctx, pi, i, pi.times[p], *t1);
}

int sls_eps(const ShapeContext& ctx, const SLSPath& pi, int i) {
  int n = 0;
  std::optional<SLSPath> cur = pi;
  while ((cur = sls_root_e(ctx, *cur, i))) ++n;
  return n;
}

int sls_phi(const ShapeContext& ctx, const SLSPath& pi, int i) {
  int n = 0;
  std::optional<SLSPath> cur = pi;
  while ((cur = sls_root_f(ctx, *cur, i))) ++n;
  return n;
}

SLSPath weyl_act_sls(const ShapeContext& ctx, int i, const SLSPath& pi) {
  const RootSystem& R = ctx.root_system();
  const int n = pair_affine_simple(R, sls_wt(ctx, pi).fin, i);
  SLSPath cur = pi;
  for (int k = 0; k < std::abs(n); ++k) {
    auto next = n > 0 ? sls_root_f(ctx, cur, i) : sls_root_e(ctx, cur, i);
    if (!next) throw InvariantViolation("Weyl group action: root operator vanished early");
    cur = std::move(*next);
  }
  return cur;
}

QLSPath sls_cl(const ShapeContext& ctx, const SLSPath& pi) {
  const RootSystem& R = ctx.root_system();
  QLSPath eta;
  eta.times.push_back(Rational(0));
  for (std::size_t u = 0; u < pi.dirs.size(); ++u) {
    const WeylElt w = cl_affine(R, pi.dirs[u], ctx.J());
    if (!eta.dirs.empty() && eta.dirs.back() == w) {
      eta.times.back() = pi.times[u + 1];
      continue;
    }
    eta.dirs.push_back(w);
    eta.times.push_back(pi.times[u + 1]);
  }
  if (!qls_is_valid(ctx, eta))
    throw InvariantViolation("cl produced an invalid QLS path: " + qls_to_string(R, eta));
  return eta;
}

std::string sls_to_json(const RootSystem& R, const SLSPath& pi) {
  nlohmann::ordered_json j;
  j["dirs"] = nlohmann::json::array();
  for (const AffineElt& x : pi.dirs) j["dirs"].push_back(affine_to_string(R, x));
  j["times"] = nlohmann::json::array();
  for (const Rational& a : pi.times) j["times"].push_back(rational_to_string(a));
  return j.dump();
}

std::string sls_to_string(const RootSystem& R, const SLSPath& pi) {
  std::ostringstream os;
  os << "(";
  for (std::size_t u = 0; u < pi.dirs.size(); ++u) os << (u ? ", " : "") << affine_to_string(R, pi.dirs[u]);
  os << "; ";
  for (std::size_t u = 0; u < pi.times.size(); ++u) os << (u ? ", " : "") << rational_to_string(pi.times[u]);
  os << ")";
  return os.str();
}

}  // namespace kallen
