#ifndef SCHUBERT_VERIFY_HPP
#define SCHUBERT_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Outcome of one checker run.  Deterministic: instances are visited in a
/// fixed order and failures carry a minimal witness.  `to_json(false)` omits
/// the elapsed time so reports of identical runs are byte-identical.
struct Report {
  std::string checker;
  nlohmann::json params = nlohmann::json::object();
  long long instances = 0;
  nlohmann::json failures = nlohmann::json::array();
  long long failure_count = 0;
  std::vector<std::string> notes;
  long long elapsed_ms = 0;

  bool ok() const { return failure_count == 0; }
  void fail(nlohmann::json witness);
  nlohmann::json to_json(bool include_elapsed = true) const;
  static constexpr int kMaxStoredFailures = 50;
};

/// f^w_u(I) = sum_v c^w_{u v} f^v_e(I) for all u <= w in S_n, with f
/// computed both by chain enumeration and by Monk-operator iteration.
Report check_chain_identity(int n, const std::vector<int>& colors);

/// Conditions I/II test for u <=_k w coincides with reachability through
/// k-Bruhat covers, for all pairs in S_n and all k < n.
Report check_k_bruhat_equiv(int n);

/// Shape-equivalent quotients give isomorphic labeled intervals and equal
/// Grassmannian coefficient vectors; includes the pinned seven-point witness
/// pair and relabeled images of every zeta supported on [bound].
Report check_skew_invariance(int bound);

/// Chain counting by recording tableau: when w u^{-1} is shape equivalent to
/// a Grassmannian quotient v(mu,l) v(nu,l)^{-1}, the number of chains in
/// [u,w]_k whose word records to T equals c^w_{u v(shape(T),k)}.  Without
/// such a quotient the report carries both sides but asserts nothing.
Report check_schensted_counting(const Permutation& u, const Permutation& w, int k);

/// For a disjoint product: interval factorization and the convolution
/// c^{zeta eta}_lambda = sum c^lambda_{mu nu} c^zeta_mu c^eta_nu.
Report check_disjointness(const Permutation& zeta, const Permutation& eta);

/// Skew coefficients are invariant under conjugation by the n-cycle, for all
/// zeta in S_n; witness intervals get equal maximal-chain counts.
Report check_cyclic_shift(int n);

/// Deletion/insertion: interval isomorphism, the structure-constant
/// recursion through pieri targets, and the variable-elimination identity
/// for Schubert polynomials, on all applicable (u,w,p) in S_n.
Report check_deletion_theorem(int n);

/// Two-alphabet substitution: the expansion of the split image of S_w is
/// exact (reconstructs the image), and nonnegative when P = [n].
Report check_psi_P(int n, const VariableSplit& split);

}  // namespace schubert

#endif
