#include "kallen/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace kallen {

namespace {

std::vector<int> cartan_matrix(Series s, int n) {
  std::vector<int> a(n * n, 0);
  auto at = [&](int i, int j) -> int& { return a[i * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  switch (s) {
    case Series::A:
    case Series::B:
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      if (s == Series::B) at(n - 1, n - 2) = -2;  // alpha_n short
      if (s == Series::C) at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n - 1; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 3, n - 2) = at(n - 2, n - 3) = -1;
      at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
      break;
    case Series::G:
      at(0, 1) = -3;  // alpha_1 short
      at(1, 0) = -1;
      break;
  }
  return a;
}

long long expected_order(Series s, int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  switch (s) {
    case Series::A: return f * (n + 1);
    case Series::B:
    case Series::C: return f << n;
    case Series::D: return f << (n - 1);
    case Series::G: return 12;
  }
  return 0;
}

constexpr long long kMaxGroupOrder = 50000;

std::vector<int> mat_mul(const std::vector<int>& x, const std::vector<int>& y, int n) {
  std::vector<int> z(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int a = x[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) z[i * n + j] += a * y[k * n + j];
    }
  return z;
}

std::vector<int> mat_identity(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

template <class Tag>
LatticeVec<Tag> mat_apply(const std::vector<int>& m, const LatticeVec<Tag>& v) {
  LatticeVec<Tag> out(v.rank);
  const int n = v.rank;
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int k = 0; k < n; ++k) s += m[i * n + k] * v.c[k];
    out.c[i] = s;
  }
  return out;
}

}  // namespace

RootSystem RootSystem::build(Series series, int rank) {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B:
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok || rank > kMaxRank) throw ConfigError("unsupported root system type/rank");
  if (expected_order(series, rank) > kMaxGroupOrder)
    throw ConfigError("Weyl group too large for eager enumeration");
  RootSystem R;
  R.series_ = series;
  R.rank_ = rank;
  R.cartan_ = cartan_matrix(series, rank);
  R.build_roots();
  R.build_group();
  return R;
}

RootSystem RootSystem::build(const std::string& name) {
  if (name.size() < 2) throw ConfigError("bad type name: " + name);
  Series s;
  switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'G': s = Series::G; break;
    default: throw ConfigError("unsupported root system series: " + name);
  }
  int rank = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k])))
      throw ConfigError("bad type name: " + name);
    rank = rank * 10 + (name[k] - '0');
    if (rank > 99) throw ConfigError("bad type name: " + name);
  }
  return build(s, rank);
}

std::string RootSystem::name() const {
  static const char letters[] = {'A', 'B', 'C', 'D', 'G'};
  return std::string(1, letters[static_cast<int>(series_)]) + std::to_string(rank_);
}

void RootSystem::build_roots() {
  const int n = rank_;
  // Closure of the simple roots under simple reflections, carrying coroots
  // along: s_j(beta)^vee = s_j(beta^vee).
  std::map<Root, Coroot> found;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root a = Root::unit(n, i);
    found.emplace(a, Coroot::unit(n, i));
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    Coroot cb = found.at(beta);
    for (int j = 0; j < n; ++j) {
      Root b2 = beta;
      b2.c[j] -= pair_simple(beta, j);
      if (found.count(b2)) continue;
      int p = 0;  // <alpha_j, beta^vee>
      for (int k = 0; k < n; ++k) p += cb.c[k] * cartan(k, j);
      Coroot c2 = cb;
      c2.c[j] -= p;
      found.emplace(b2, c2);
      queue.push_back(b2);
    }
  }
  std::vector<Root> pos;
  for (auto& [r, c] : found)
    if (r.nonneg()) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return a < b;
  });
  num_pos_ = static_cast<int>(pos.size());
  if (2 * num_pos_ != static_cast<int>(found.size()))
    throw InvariantViolation("root closure is not symmetric");
  roots_.clear();
  coroots_.clear();
  for (auto& r : pos) {
    roots_.push_back(r);
    coroots_.push_back(found.at(r));
  }
  for (auto& r : pos) {
    roots_.push_back(-r);
    coroots_.push_back(found.at(-r));
  }
  root_lookup_.clear();
  for (int r = 0; r < num_roots(); ++r) root_lookup_.emplace(roots_[r], r);
  simple_idx_.assign(n, -1);
  for (int i = 0; i < n; ++i) simple_idx_[i] = root_lookup_.at(Root::unit(n, i));

  int best = 0;
  for (int r = 1; r < num_pos_; ++r)
    if (roots_[r].sum() > roots_[best].sum()) best = r;
  for (int r = 0; r < num_pos_; ++r)
    if (r != best && roots_[r].sum() == roots_[best].sum())
      throw InvariantViolation("highest root is not unique");
  theta_idx_ = best;
}

void RootSystem::build_group() {
  const int n = rank_;
  const int nr = num_roots();
  std::vector<std::vector<int>> gw(n), gr(n), gc(n);
  std::vector<std::vector<int>> gperm(n, std::vector<int>(nr));
  for (int i = 0; i < n; ++i) {
    gw[i] = gr[i] = gc[i] = mat_identity(n);
    for (int j = 0; j < n; ++j) gw[i][j * n + i] -= cartan(j, i);
    for (int k = 0; k < n; ++k) gr[i][i * n + k] -= cartan(i, k);
    for (int k = 0; k < n; ++k) gc[i][i * n + k] -= cartan(k, i);
    for (int r = 0; r < nr; ++r) {
      Root b = roots_[r];
      b.c[i] -= pair_simple(roots_[r], i);
      gperm[i][r] = root_lookup_.at(b);
    }
  }

  words_ = {{}};
  lengths_ = {0};
  wmat_ = {mat_identity(n)};
  rmat_ = {mat_identity(n)};
  cmat_ = {mat_identity(n)};
  perm_.resize(nr);
  for (int r = 0; r < nr; ++r) perm_[r] = r;
  matrix_lookup_.clear();
  matrix_lookup_.emplace(wmat_[0], 0);

  for (std::size_t x = 0; x < words_.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      if (!is_positive(perm_[x * nr + simple_idx_[i]])) continue;  // x s_i < x
      std::vector<int> m = mat_mul(wmat_[x], gw[i], n);
      if (matrix_lookup_.count(m)) continue;
      const int id = static_cast<int>(words_.size());
      if (id >= kMaxGroupOrder) throw ConfigError("Weyl group too large");
      matrix_lookup_.emplace(m, id);
      auto w = words_[x];
      w.push_back(i);
      words_.push_back(std::move(w));
      lengths_.push_back(lengths_[x] + 1);
      wmat_.push_back(std::move(m));
      rmat_.push_back(mat_mul(rmat_[x], gr[i], n));
      cmat_.push_back(mat_mul(cmat_[x], gc[i], n));
      for (int r = 0; r < nr; ++r) perm_.push_back(perm_[x * nr + gperm[i][r]]);
    }
  }
  if (static_cast<long long>(words_.size()) != expected_order(series_, n))
    throw InvariantViolation("Weyl group enumeration has the wrong order");

  const int N = order();
  rmul_.assign(N * n, 0);
  lmul_.assign(N * n, 0);
  inv_.assign(N, 0);
  for (int x = 0; x < N; ++x) {
    for (int i = 0; i < n; ++i) {
      rmul_[x * n + i] = matrix_lookup_.at(mat_mul(wmat_[x], gw[i], n));
      lmul_[x * n + i] = matrix_lookup_.at(mat_mul(gw[i], wmat_[x], n));
    }
  }
  for (int x = 0; x < N; ++x) {
    int y = 0;
    const auto& w = words_[x];
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = rmul_[y * n + *it];
    inv_[x] = y;
  }
  refl_.assign(nr, 0);
  for (int r = 0; r < nr; ++r) {
    Weight b = root_to_weight(roots_[r]);
    std::vector<int> m = mat_identity(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m[j * n + k] -= b.c[j] * coroots_[r].c[k];
    refl_[r] = matrix_lookup_.at(m);
  }
}

int RootSystem::root_index(const Root& beta) const {
  auto it = root_lookup_.find(beta);
  return it == root_lookup_.end() ? -1 : it->second;
}

Coroot RootSystem::coroot_of(const Root& beta) const {
  int r = root_index(beta);
  if (r < 0) throw ConfigError("not a root: " + coords_to_string(beta));
  return coroots_[r];
}

std::vector<int> RootSystem::positive_roots_in(IndexSet S) const {
  std::vector<int> out;
  for (int r = 0; r < num_pos_; ++r) {
    bool inside = true;
    for (int k = 0; k < rank_; ++k)
      if (roots_[r].c[k] != 0 && !S.contains(k)) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

Weight RootSystem::rho() const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w.c[i] = 1;
  return w;
}

Weight RootSystem::simple_root_weight(int i) const {
  Weight w(rank_);
  for (int j = 0; j < rank_; ++j) w.c[j] = cartan(j, i);
  return w;
}

Weight RootSystem::root_to_weight(const Root& beta) const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w.c[i] = pair_simple(beta, i);
  return w;
}

int RootSystem::pair(const Weight& mu, const Coroot& xi) const {
  if (mu.rank != rank_ || xi.rank != rank_) throw ConfigError("pairing: dimension mismatch");
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += mu.c[i] * xi.c[i];
  return s;
}

int RootSystem::pair(const Root& beta, const Coroot& xi) const {
  if (beta.rank != rank_ || xi.rank != rank_) throw ConfigError("pairing: dimension mismatch");
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    if (xi.c[i]) s += xi.c[i] * pair_simple(beta, i);
  return s;
}

int RootSystem::pair_simple(const Root& beta, int i) const {
  int s = 0;
  for (int k = 0; k < rank_; ++k) s += cartan(i, k) * beta.c[k];
  return s;
}

int RootSystem::pair_two_rho(IndexSet S, const Coroot& xi) const {
  int s = 0;
  for (int r : positive_roots_in(S)) s += pair(roots_[r], xi);
  return s;
}

std::vector<WeylElt> RootSystem::elements() const {
  std::vector<WeylElt> out(order());
  for (int k = 0; k < order(); ++k) out[k] = WeylElt{k};
  return out;
}

std::vector<int> RootSystem::word_lexmax(WeylElt w) const {
  std::vector<int> out;
  while (length(w) > 0) {
    for (int i = rank_ - 1; i >= 0; --i) {
      if (is_left_descent(i, w)) {
        out.push_back(i);
        w = left_mul(i, w);
        break;
      }
    }
  }
  return out;
}

WeylElt RootSystem::from_word(std::span<const int> letters) const {
  WeylElt w = identity();
  for (int i : letters) {
    if (i < 0 || i >= rank_) throw ConfigError("letter out of range in Weyl word");
    w = right_mul(w, i);
  }
  return w;
}

WeylElt RootSystem::from_reduced_word(std::span<const int> letters) const {
  WeylElt w = from_word(letters);
  if (length(w) != static_cast<int>(letters.size()))
    throw ConfigError("word is not reduced: " + word_to_string(letters));
  return w;
}

WeylElt RootSystem::mul(WeylElt x, WeylElt y) const {
  for (int i : words_[y.id]) x = right_mul(x, i);
  return x;
}

WeylElt RootSystem::from_matrix(const std::vector<int>& m) const {
  auto it = matrix_lookup_.find(m);
  return WeylElt{it == matrix_lookup_.end() ? -1 : it->second};
}

std::vector<int> RootSystem::weight_matrix(WeylElt w) const { return wmat_[w.id]; }

Weight RootSystem::act(WeylElt w, const Weight& mu) const { return mat_apply(wmat_[w.id], mu); }
Root RootSystem::act(WeylElt w, const Root& beta) const { return mat_apply(rmat_[w.id], beta); }
Coroot RootSystem::act(WeylElt w, const Coroot& xi) const { return mat_apply(cmat_[w.id], xi); }

IndexSet RootSystem::right_descents(WeylElt w) const {
  IndexSet s;
  for (int j = 0; j < rank_; ++j)
    if (is_right_descent(w, j)) s.insert(j);
  return s;
}

bool RootSystem::bruhat_leq(WeylElt u, WeylElt v) const {
  if (length(u) > length(v)) return false;
  // Peel the fixed reduced word of v from the right: for a right descent s
  // of v, u <= v iff min(u, us) <= vs.
  const auto& w = words_[v.id];
  int remaining = length(v);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (length(u) > remaining) return false;
    if (is_right_descent(u, *it)) u = right_mul(u, *it);
    --remaining;
  }
  return u.id == 0;
}

std::vector<WeylElt> RootSystem::weyl_group(IndexSet S) const {
  std::vector<char> seen(order(), 0);
  std::vector<WeylElt> out{identity()};
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : S.members()) {
      WeylElt y = right_mul(out[k], i);
      if (!seen[y.id]) {
        seen[y.id] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

WeylElt RootSystem::longest(IndexSet S) const {
  WeylElt w = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : S.members())
      if (!is_right_descent(w, i)) {
        w = right_mul(w, i);
        grew = true;
        break;
      }
  }
  return w;
}

bool RootSystem::in_parabolic(WeylElt w, IndexSet S) const {
  for (int i : words_[w.id])
    if (!S.contains(i)) return false;
  return true;
}

bool RootSystem::is_min_coset_rep(WeylElt w, IndexSet J) const {
  for (int j : J.members())
    if (is_right_descent(w, j)) return false;
  return true;
}

WeylElt RootSystem::min_coset_rep(WeylElt w, IndexSet J) const {
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : J.members())
      if (is_right_descent(w, j)) {
        w = right_mul(w, j);
        moved = true;
      }
  }
  return w;
}

WeylElt RootSystem::max_coset_rep(WeylElt w, IndexSet J) const {
  return mul(min_coset_rep(w, J), longest(J));
}

std::vector<WeylElt> RootSystem::min_coset_reps(IndexSet J) const {
  std::vector<WeylElt> out;
  for (int k = 0; k < order(); ++k)
    if (is_min_coset_rep(WeylElt{k}, J)) out.push_back(WeylElt{k});
  return out;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  if (lambda.rank != rank_) return false;
  for (int i = 0; i < rank_; ++i)
    if (lambda.c[i] < 0) return false;
  return true;
}

IndexSet RootSystem::j_of(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw ConfigError("weight is not dominant: " + coords_to_string(lambda));
  IndexSet J;
  for (int i = 0; i < rank_; ++i)
    if (lambda.c[i] == 0) J.insert(i);
  return J;
}

std::string word_to_string(std::span<const int> letters) {
  if (letters.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ' ';
    s += 's' + std::to_string(letters[k] + 1);
  }
  return s;
}

std::string elt_to_string(const RootSystem& R, WeylElt w) { return word_to_string(R.word(w)); }

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  const std::string& t = text;
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty() || compact == "e") return out;
  std::size_t k = 0;
  while (k < t.size()) {
    char ch = t[k];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == 's' || ch == 'S' || ch == ',' || ch == '*' ||
        ch == '.') {
      ++k;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ConfigError("bad Weyl word: " + text);
    int v = 0;
    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) v = v * 10 + (t[k++] - '0');
    if (v < 1) throw ConfigError("Weyl word letters are 1-based: " + text);
    out.push_back(v - 1);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad integer list: " + text);
    }
    if (used != tok.size()) throw ConfigError("bad integer list: " + text);
    out.push_back(v);
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' ||
        ch == '[' || ch == ']')
      flush();
    else
      tok += ch;
  }
  flush();
  return out;
}

IndexSet parse_index_set(const std::string& text, int rank) {
  IndexSet S;
  for (int v : parse_int_list(text)) {
    if (v < 1 || v > rank) throw ConfigError("index out of range in set: " + text);
    S.insert(v - 1);
  }
  return S;
}

std::string index_set_to_string(IndexSet S) {
  std::string s = "{";
  bool first = true;
  for (int i : S.members()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i + 1);
  }
  return s + "}";
}

}  // namespace kallen
