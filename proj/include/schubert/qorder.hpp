#ifndef SCHUBERT_QORDER_HPP
#define SCHUBERT_QORDER_HPP

#include <vector>

#include "schubert/bruhat.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// Points moved up and down by a permutation.
struct UpDownProfile {
  std::vector<int> up;    // { a : zeta(a) > a }, increasing
  std::vector<int> down;  // { a : zeta(a) < a }, increasing

  static UpDownProfile of(const Permutation& zeta);
  std::vector<int> support() const;  // sorted union
};

/// Relabel the support of zeta order-isomorphically onto 1..m.  Canonical
/// representative of the shape-equivalence class.
Permutation compress(const Permutation& zeta);

/// Two permutations are shape equivalent when they act identically after
/// compressing their supports.
bool shape_equivalent(const Permutation& a, const Permutation& b);

/// The graded order on S_infinity: eta precedes zeta iff some u, k give
/// u <=_k eta*u <=_k zeta*u.  Decided by the three support conditions
/// (cross-checked against the witness definition in tests, not assumed).
bool q_leq(const Permutation& eta, const Permutation& zeta);

/// Rank |zeta| = l(zeta*u) - l(u) for any witness, computed by the closed
/// counting formula over the up/down profile.
int q_rank(const Permutation& zeta);

/// Interval [e, zeta] in the graded order.
LabeledInterval q_interval(const Permutation& zeta);

/// Interval [eta, zeta]; throws if eta does not precede zeta.
LabeledInterval q_interval(const Permutation& eta, const Permutation& zeta);

/// Disjoint supports and additive rank.
bool is_disjoint_product(const Permutation& zeta, const Permutation& eta);

}  // namespace schubert

#endif
