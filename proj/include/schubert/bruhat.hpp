#ifndef SCHUBERT_BRUHAT_HPP
#define SCHUBERT_BRUHAT_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// Transposition (a,b) interchanging a < b.
struct Transposition {
  int a;
  int b;
  Transposition(int a_, int b_);
  bool operator==(const Transposition& o) const { return a == o.a && b == o.b; }
};

/// Bruhat order comparison via the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Covers u <. u(a,b) inside S_n, i.e. position swaps raising length by 1.
std::vector<std::pair<Transposition, Permutation>> bruhat_covers(const Permutation& u, int n);

/// Covers with a <= k < b.
std::vector<std::pair<Transposition, Permutation>> k_bruhat_covers(const Permutation& u, int k,
                                                                   int n);

/// k-Bruhat comparison by the two-condition characterization:
///   I.  a <= k < b implies u(a) <= w(a) and u(b) >= w(b);
///   II. a < b, u(a) < u(b), w(a) > w(b) implies a <= k < b.
bool k_bruhat_leq(const Permutation& u, const Permutation& w, int k);

/// Greedy saturated chain in the k-Bruhat order, listed from w down to u.
/// Throws if u <=_k w fails.
std::vector<Permutation> greedy_chain(const Permutation& u, const Permutation& w, int k);

/// Left-factor form of the greedy chain: returns zeta, zeta_1, ..., e such
/// that whenever u <=_k zeta*u, composing each element with u yields the
/// greedy chain from zeta*u down to u.
std::vector<Permutation> greedy_chain_zeta(const Permutation& zeta);

/// A pair (u, k) with u <=_k zeta*u.
struct KWitness {
  Permutation u;
  int k = 0;
};

/// Deterministic witness search: smallest ambient n, then smallest k >= min_k,
/// then lexicographically first u.
std::optional<KWitness> find_k_witness(const Permutation& zeta, int min_k = 1);

enum class OrderKind { Bruhat, KBruhat, QOrder };

/// An interval in one of the three orders, materialized as a graded DAG.
/// Cover edges carry the label u(b) in the k-Bruhat case (-1 otherwise).
class LabeledInterval {
 public:
  struct Cover {
    int lower;
    int upper;
    int label;  // -1 when the order kind carries no labels
  };

  static LabeledInterval bruhat(const Permutation& u, const Permutation& w);
  static LabeledInterval k_bruhat(const Permutation& u, const Permutation& w, int k);
  static LabeledInterval from_parts(OrderKind kind, int k, Permutation bottom, Permutation top,
                                    std::vector<Permutation> nodes, std::vector<Cover> covers,
                                    std::vector<int> ranks);

  OrderKind kind() const { return kind_; }
  int k() const { return k_; }
  const Permutation& bottom() const { return bottom_; }
  const Permutation& top() const { return top_; }
  const std::vector<Permutation>& nodes() const { return nodes_; }
  const std::vector<Cover>& covers() const { return covers_; }
  int node_rank(int idx) const { return ranks_[idx]; }
  int height() const;
  int index_of(const Permutation& w) const;  // -1 if absent

  Int maximal_chain_count() const;
  /// All bottom-to-top saturated chains as node index paths.
  std::vector<std::vector<int>> maximal_chains() const;
  /// True if every node lies on some bottom-to-top chain and all covers
  /// raise rank by exactly one.
  bool is_graded() const;

 private:
  OrderKind kind_ = OrderKind::Bruhat;
  int k_ = 0;
  Permutation bottom_, top_;
  std::vector<Permutation> nodes_;
  std::vector<Cover> covers_;
  std::vector<int> ranks_;
};

/// Poset isomorphism (edge labels ignored): iterated degree-sequence
/// refinement followed by backtracking.
bool isomorphic(const LabeledInterval& a, const LabeledInterval& b);

/// Number of saturated Bruhat chains from u to w with a colour chosen from
/// the intersection of colors with {a,...,b-1} at every cover, counted by
/// dynamic programming over the interval DAG.
Int count_colored_chains(const Permutation& u, const Permutation& w,
                         const std::vector<int>& colors, int ambient = 0);

/// Same count extracted from iterated multiplication by sum_{i in colors}
/// (x1+...+xi) in the Schubert basis; independent of the chain route.
Int count_colored_chains_monk(const Permutation& u, const Permutation& w,
                              const std::vector<int>& colors);

/// A saturated chain with an explicit colour per cover (small cases only).
struct ColoredChain {
  struct Step {
    Permutation lower;
    Transposition t;
    int color;
  };
  std::vector<Step> steps;
};

std::vector<ColoredChain> enumerate_colored_chains(const Permutation& u, const Permutation& w,
                                                   const std::vector<int>& colors,
                                                   int ambient = 0);

/// True iff the descent set of v is contained in colors.
bool is_minimal_coset_rep(const Permutation& v, const std::vector<int>& colors);

/// All w reachable from v by a (p-1)-Bruhat chain of p-1 covers whose value
/// transpositions (alpha_i, beta_i) have strictly decreasing beta_i.
std::set<Permutation> pieri_targets(const Permutation& v, int p);

/// Same set as the support of the expansion of S_v * x1*...*x_{p-1}.
std::set<Permutation> pieri_targets_poly(const Permutation& v, int p);

/// Edge labels x(b) of an ascending k-Bruhat chain, bottom to top.
/// Throws if a step is not a k-Bruhat cover.
std::vector<int> chain_word(const std::vector<Permutation>& ascending, int k);

}  // namespace schubert

#endif
