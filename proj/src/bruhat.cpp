#include "schubert/bruhat.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "schubert/schubert_basis.hpp"

namespace schubert {

Transposition::Transposition(int a_, int b_) : a(a_), b(b_) {
  if (a < 1 || a >= b) throw std::invalid_argument("transposition requires 1 <= a < b");
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  int n = std::max(u.degree(), w.degree());
  // u <= w iff every northwest rectangle of u's matrix holds at least as
  // many dots as w's.
  for (int i = 1; i < n; ++i) {
    std::vector<int> diff(n + 2, 0);
    for (int a = 1; a <= i; ++a) {
      diff[u(a)]++;
      diff[w(a)]--;
    }
    int run = 0;
    for (int j = 1; j < n; ++j) {
      run += diff[j];
      if (run < 0) return false;
    }
  }
  return true;
}

namespace {

Permutation swap_positions(const Permutation& u, int a, int b, int n) {
  std::vector<int> win(std::max(n, b));
  for (int i = 1; i <= static_cast<int>(win.size()); ++i) win[i - 1] = u(i);
  std::swap(win[a - 1], win[b - 1]);
  return Permutation::from_window(std::move(win));
}

bool is_cover_pair(const Permutation& u, int a, int b) {
  if (u(a) >= u(b)) return false;
  for (int c = a + 1; c < b; ++c)
    if (u(a) < u(c) && u(c) < u(b)) return false;
  return true;
}

}  // namespace

std::vector<std::pair<Transposition, Permutation>> bruhat_covers(const Permutation& u, int n) {
  std::vector<std::pair<Transposition, Permutation>> out;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (is_cover_pair(u, a, b)) out.emplace_back(Transposition(a, b), swap_positions(u, a, b, n));
  return out;
}

std::vector<std::pair<Transposition, Permutation>> k_bruhat_covers(const Permutation& u, int k,
                                                                   int n) {
  std::vector<std::pair<Transposition, Permutation>> out;
  for (int a = 1; a <= std::min(k, n - 1); ++a)
    for (int b = k + 1; b <= n; ++b)
      if (is_cover_pair(u, a, b)) out.emplace_back(Transposition(a, b), swap_positions(u, a, b, n));
  return out;
}

bool k_bruhat_leq(const Permutation& u, const Permutation& w, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  int n = std::max(u.degree(), w.degree());
  for (int a = 1; a <= std::min(k, n); ++a)
    if (u(a) > w(a)) return false;
  for (int b = k + 1; b <= n; ++b)
    if (u(b) < w(b)) return false;
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (u(a) < u(b) && w(a) > w(b) && !(a <= k && k < b)) return false;
  return true;
}

std::vector<Permutation> greedy_chain(const Permutation& u, const Permutation& w, int k) {
  if (!k_bruhat_leq(u, w, k))
    throw std::invalid_argument("greedy_chain requires u <=_k w");
  int n = std::max(u.degree(), w.degree());
  std::vector<Permutation> chain{w};
  Permutation cur = w;
  while (cur != u) {
    int a = 0;
    for (int i = 1; i <= std::min(k, n); ++i)
      if (u(i) < cur(i) && (a == 0 || u(i) < u(a))) a = i;
    if (a == 0) throw std::logic_error("greedy chain failed to find a column");
    int b = 0;
    for (int j = k + 1; j <= n; ++j)
      if (cur(j) < cur(a) && cur(a) <= u(j) && (b == 0 || u(j) > u(b))) b = j;
    if (b == 0) throw std::logic_error("greedy chain failed to find a row");
    cur = swap_positions(cur, a, b, n);
    chain.push_back(cur);
  }
  return chain;
}

std::vector<Permutation> greedy_chain_zeta(const Permutation& zeta) {
  std::vector<Permutation> chain{zeta};
  Permutation cur = zeta;
  while (!cur.is_identity()) {
    int alpha = 0;
    for (int a = 1; a <= cur.degree(); ++a)
      if (a < cur(a)) {
        alpha = a;
        break;
      }
    int beta = 0;
    for (int b = cur.degree(); b > alpha; --b)
      if (cur(b) < cur(alpha) && cur(alpha) <= b) {
        beta = b;
        break;
      }
    if (alpha == 0 || beta == 0) throw std::logic_error("zeta chain failed to find a step");
    cur = swap_positions(cur, alpha, beta, cur.degree());
    chain.push_back(cur);
  }
  return chain;
}

namespace {

// Lexicographically first u in S_n with u <=_k zeta*u, by DFS with
// prefix-monotone pruning.  Constraints: positions <= k never hold a point
// moved down by zeta, positions > k never hold a point moved up, and within
// each block the values must appear so that zeta-images of increasing values
// increase.
std::optional<Permutation> lex_first_witness(const Permutation& zeta, int k, int n) {
  std::vector<int> win(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos > n) return true;
    for (int x = 1; x <= n; ++x) {
      if (used[x]) continue;
      int zx = zeta(x);
      if (pos <= k ? x > zx : x < zx) continue;
      bool ok = true;
      int lo = pos <= k ? 1 : k + 1;
      for (int a = lo; a < pos && ok; ++a)
        if (win[a] < x && zeta(win[a]) > zx) ok = false;
      if (!ok) continue;
      used[x] = true;
      win[pos] = x;
      if (rec(pos + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (!rec(1)) return std::nullopt;
  return Permutation::from_window(std::vector<int>(win.begin() + 1, win.end()));
}

}  // namespace

std::optional<KWitness> find_k_witness(const Permutation& zeta, int min_k) {
  min_k = std::max(min_k, 1);
  int ndown = 0;
  for (int a = 1; a <= zeta.degree(); ++a)
    if (zeta(a) < a) ++ndown;
  int lo = std::max(zeta.degree(), min_k + 1);
  int hi = zeta.degree() + min_k + ndown + 2;
  for (int n = lo; n <= hi; ++n)
    for (int k = min_k; k < n; ++k)
      if (auto u = lex_first_witness(zeta, k, n)) return KWitness{*u, k};
  return std::nullopt;
}

LabeledInterval LabeledInterval::from_parts(OrderKind kind, int k, Permutation bottom,
                                            Permutation top, std::vector<Permutation> nodes,
                                            std::vector<Cover> covers, std::vector<int> ranks) {
  LabeledInterval iv;
  iv.kind_ = kind;
  iv.k_ = k;
  iv.bottom_ = std::move(bottom);
  iv.top_ = std::move(top);
  // Sort nodes by (rank, window); remap covers accordingly.
  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return nodes[a] < nodes[b];
  });
  std::vector<int> pos(nodes.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  iv.nodes_.reserve(nodes.size());
  iv.ranks_.reserve(nodes.size());
  for (int idx : order) {
    iv.nodes_.push_back(std::move(nodes[idx]));
    iv.ranks_.push_back(ranks[idx]);
  }
  for (auto& c : covers) iv.covers_.push_back({pos[c.lower], pos[c.upper], c.label});
  std::sort(iv.covers_.begin(), iv.covers_.end(), [](const Cover& a, const Cover& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  return iv;
}

namespace {

LabeledInterval build_cover_interval(OrderKind kind, const Permutation& u, const Permutation& w,
                                     int k) {
  bool comparable = kind == OrderKind::Bruhat ? bruhat_leq(u, w) : k_bruhat_leq(u, w, k);
  if (!comparable) throw std::invalid_argument("interval endpoints are incomparable");
  int n = std::max(u.degree(), w.degree());
  std::unordered_map<Permutation, int> index{{u, 0}};
  std::vector<Permutation> nodes{u};
  std::vector<LabeledInterval::Cover> covers;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int vi = queue.front();
    queue.pop_front();
    Permutation v = nodes[vi];
    auto cands = kind == OrderKind::KBruhat ? k_bruhat_covers(v, k, n) : bruhat_covers(v, n);
    for (const auto& [t, v2] : cands) {
      bool inside = kind == OrderKind::Bruhat ? bruhat_leq(v2, w) : k_bruhat_leq(v2, w, k);
      if (!inside) continue;
      if (v2.degree() > n)
        throw std::logic_error("interval cover escaped the joint support");
      auto [it, inserted] = index.emplace(v2, static_cast<int>(nodes.size()));
      if (inserted) {
        nodes.push_back(v2);
        queue.push_back(it->second);
      }
      covers.push_back({vi, it->second, kind == OrderKind::KBruhat ? v(t.b) : -1});
    }
  }
  std::vector<int> ranks;
  ranks.reserve(nodes.size());
  int base = u.length();
  for (const auto& v : nodes) ranks.push_back(v.length() - base);
  return LabeledInterval::from_parts(kind, kind == OrderKind::KBruhat ? k : 0, u, w,
                                     std::move(nodes), std::move(covers), std::move(ranks));
}

}  // namespace

LabeledInterval LabeledInterval::bruhat(const Permutation& u, const Permutation& w) {
  return build_cover_interval(OrderKind::Bruhat, u, w, 0);
}

LabeledInterval LabeledInterval::k_bruhat(const Permutation& u, const Permutation& w, int k) {
  return build_cover_interval(OrderKind::KBruhat, u, w, k);
}

int LabeledInterval::height() const { return ranks_.empty() ? 0 : ranks_.back(); }

int LabeledInterval::index_of(const Permutation& w) const {
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i] == w) return static_cast<int>(i);
  return -1;
}

Int LabeledInterval::maximal_chain_count() const {
  std::vector<Int> cnt(nodes_.size(), 0);
  int bi = index_of(bottom_), ti = index_of(top_);
  if (bi < 0 || ti < 0) throw std::logic_error("interval endpoints missing");
  cnt[bi] = 1;
  // nodes_ is sorted by rank, and covers go up one rank, so a single sweep
  // over covers sorted by lower index is a valid topological order.
  for (const auto& c : covers_) cnt[c.upper] += cnt[c.lower];
  return cnt[ti];
}

std::vector<std::vector<int>> LabeledInterval::maximal_chains() const {
  std::vector<std::vector<int>> adj(nodes_.size());
  for (const auto& c : covers_) adj[c.lower].push_back(c.upper);
  int bi = index_of(bottom_), ti = index_of(top_);
  std::vector<std::vector<int>> out;
  std::vector<int> path{bi};
  std::function<void()> rec = [&] {
    int v = path.back();
    if (v == ti) {
      out.push_back(path);
      return;
    }
    for (int nxt : adj[v]) {
      path.push_back(nxt);
      rec();
      path.pop_back();
    }
  };
  rec();
  return out;
}

bool LabeledInterval::is_graded() const {
  for (const auto& c : covers_)
    if (ranks_[c.upper] != ranks_[c.lower] + 1) return false;
  int bi = index_of(bottom_), ti = index_of(top_);
  if (bi < 0 || ti < 0) return false;
  std::vector<char> down(nodes_.size(), 0), up(nodes_.size(), 0);
  down[bi] = 1;
  for (const auto& c : covers_)
    if (down[c.lower]) down[c.upper] = 1;
  up[ti] = 1;
  for (auto it = covers_.rbegin(); it != covers_.rend(); ++it)
    if (up[it->upper]) up[it->lower] = 1;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (!down[i] || !up[i]) return false;
  return true;
}

namespace {

struct Adjacency {
  std::vector<std::vector<int>> out, in;
};

Adjacency adjacency(const LabeledInterval& iv) {
  Adjacency a;
  a.out.resize(iv.nodes().size());
  a.in.resize(iv.nodes().size());
  for (const auto& c : iv.covers()) {
    a.out[c.lower].push_back(c.upper);
    a.in[c.upper].push_back(c.lower);
  }
  return a;
}

}  // namespace

bool isomorphic(const LabeledInterval& a, const LabeledInterval& b) {
  size_t n = a.nodes().size();
  if (n != b.nodes().size() || a.covers().size() != b.covers().size()) return false;
  Adjacency adjA = adjacency(a), adjB = adjacency(b);
  // Joint refinement so colour ids are comparable across the two posets.
  std::vector<int> colorA(n), colorB(n);
  for (size_t i = 0; i < n; ++i) {
    colorA[i] = a.node_rank(static_cast<int>(i));
    colorB[i] = b.node_rank(static_cast<int>(i));
  }
  for (size_t round = 0; round < n; ++round) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> ids;
    auto signature = [&](const Adjacency& adj, const std::vector<int>& color, size_t i) {
      std::vector<int> oc, ic;
      for (int j : adj.out[i]) oc.push_back(color[j]);
      for (int j : adj.in[i]) ic.push_back(color[j]);
      std::sort(oc.begin(), oc.end());
      std::sort(ic.begin(), ic.end());
      return std::make_tuple(color[i], std::move(oc), std::move(ic));
    };
    std::vector<int> nextA(n), nextB(n);
    for (size_t i = 0; i < n; ++i) {
      auto key = signature(adjA, colorA, i);
      auto [it, ins] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
      nextA[i] = it->second;
    }
    for (size_t i = 0; i < n; ++i) {
      auto key = signature(adjB, colorB, i);
      auto [it, ins] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
      nextB[i] = it->second;
    }
    if (nextA == colorA && nextB == colorB) break;
    colorA = std::move(nextA);
    colorB = std::move(nextB);
  }
  {
    std::vector<int> ca = colorA, cb = colorB;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  // Backtracking search for a colour-respecting cover-preserving bijection.
  std::vector<std::vector<int>> candidates(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (colorA[i] == colorB[j]) candidates[i].push_back(static_cast<int>(j));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (candidates[x].size() != candidates[y].size())
      return candidates[x].size() < candidates[y].size();
    return x < y;
  });
  std::set<std::pair<int, int>> edgesB;
  for (const auto& c : b.covers()) edgesB.emplace(c.lower, c.upper);
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(size_t)> rec = [&](size_t step) -> bool {
    if (step == n) return true;
    int v = order[step];
    for (int cand : candidates[v]) {
      if (used[cand]) continue;
      bool ok = true;
      for (int j : adjA.out[v]) {
        if (image[j] >= 0 && !edgesB.count({cand, image[j]})) { ok = false; break; }
      }
      if (ok)
        for (int j : adjA.in[v]) {
          if (image[j] >= 0 && !edgesB.count({image[j], cand})) { ok = false; break; }
        }
      if (!ok) continue;
      image[v] = cand;
      used[cand] = 1;
      if (rec(step + 1)) return true;
      image[v] = -1;
      used[cand] = 0;
    }
    return false;
  };
  return rec(0);
}

namespace {

int colors_in_range(const std::vector<int>& sorted_colors, int a, int b) {
  // |colors in [a, b-1]|
  auto lo = std::lower_bound(sorted_colors.begin(), sorted_colors.end(), a);
  auto hi = std::lower_bound(sorted_colors.begin(), sorted_colors.end(), b);
  return static_cast<int>(hi - lo);
}

}  // namespace

Int count_colored_chains(const Permutation& u, const Permutation& w,
                         const std::vector<int>& colors, int ambient) {
  if (u == w) return 1;
  if (!bruhat_leq(u, w)) return 0;
  int n = std::max({u.degree(), w.degree(), ambient});
  std::vector<int> cs = colors;
  std::sort(cs.begin(), cs.end());
  int steps = w.length() - u.length();
  std::map<Permutation, Int> cur{{u, 1}};
  for (int s = 0; s < steps; ++s) {
    std::map<Permutation, Int> next;
    for (const auto& [v, cnt] : cur) {
      for (const auto& [t, v2] : bruhat_covers(v, n)) {
        if (!bruhat_leq(v2, w)) continue;
        int m = colors_in_range(cs, t.a, t.b);
        if (m == 0) continue;
        next[v2] += cnt * m;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(w);
  return it == cur.end() ? Int(0) : it->second;
}

Int count_colored_chains_monk(const Permutation& u, const Permutation& w,
                              const std::vector<int>& colors) {
  int m = w.length() - u.length();
  if (m < 0) return 0;
  SparsePolynomial op;
  for (int c : colors) op += monk_sum(c);
  SparsePolynomial f = schubert_polynomial(u);
  for (int s = 0; s < m; ++s) f = f * op;
  return expand_in_schubert(std::move(f)).coefficient(w);
}

std::vector<ColoredChain> enumerate_colored_chains(const Permutation& u, const Permutation& w,
                                                   const std::vector<int>& colors, int ambient) {
  int n = std::max({u.degree(), w.degree(), ambient});
  std::vector<int> cs = colors;
  std::sort(cs.begin(), cs.end());
  std::vector<ColoredChain> out;
  if (!bruhat_leq(u, w)) return out;
  ColoredChain cur;
  std::function<void(const Permutation&)> rec = [&](const Permutation& v) {
    if (v == w) {
      out.push_back(cur);
      return;
    }
    for (const auto& [t, v2] : bruhat_covers(v, n)) {
      if (!bruhat_leq(v2, w)) continue;
      for (int c : cs) {
        if (c < t.a || c >= t.b) continue;
        cur.steps.push_back({v, t, c});
        rec(v2);
        cur.steps.pop_back();
      }
    }
  };
  rec(u);
  return out;
}

bool is_minimal_coset_rep(const Permutation& v, const std::vector<int>& colors) {
  for (int d : v.descents())
    if (std::find(colors.begin(), colors.end(), d) == colors.end()) return false;
  return true;
}

std::set<Permutation> pieri_targets(const Permutation& v, int p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  std::set<Permutation> out;
  int k = p - 1;
  int n = v.degree() + p;
  std::function<void(const Permutation&, int, int)> rec = [&](const Permutation& cur, int depth,
                                                              int last_beta) {
    if (depth == k) {
      out.insert(cur);
      return;
    }
    for (const auto& [t, nxt] : k_bruhat_covers(cur, k, n)) {
      int beta = cur(t.b);
      if (beta >= last_beta) continue;
      rec(nxt, depth + 1, beta);
    }
  };
  rec(v, 0, std::numeric_limits<int>::max());
  return out;
}

std::set<Permutation> pieri_targets_poly(const Permutation& v, int p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  auto exp = expand_in_schubert(schubert_polynomial(v) * x_prefix_product(p - 1));
  std::set<Permutation> out;
  for (const auto& [w, c] : exp.coefficients()) {
    if (c != 1) throw std::logic_error("pieri expansion is not multiplicity free");
    out.insert(w);
  }
  return out;
}

std::vector<int> chain_word(const std::vector<Permutation>& ascending, int k) {
  std::vector<int> word;
  for (size_t s = 0; s + 1 < ascending.size(); ++s) {
    const Permutation& x = ascending[s];
    const Permutation& y = ascending[s + 1];
    int n = std::max(x.degree(), y.degree());
    std::vector<int> diff;
    for (int i = 1; i <= n; ++i)
      if (x(i) != y(i)) diff.push_back(i);
    if (diff.size() != 2 || y.length() != x.length() + 1)
      throw std::invalid_argument("chain step is not a cover");
    int a = diff[0], b = diff[1];
    if (!(x(a) == y(b) && x(b) == y(a) && a <= k && k < b && x(a) < x(b)))
      throw std::invalid_argument("chain step is not a k-Bruhat cover");
    word.push_back(x(b));
  }
  return word;
}

}  // namespace schubert
