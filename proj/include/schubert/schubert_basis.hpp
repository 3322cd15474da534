#ifndef SCHUBERT_SCHUBERT_BASIS_HPP
#define SCHUBERT_SCHUBERT_BASIS_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "schubert/partition.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Schubert polynomial of w, built by divided differences descending from
/// the staircase monomial of the longest element of S_n, n = w.degree().
/// Results are memoized; the returned reference stays valid for the process
/// lifetime.  Concurrent readers are fine; writes are serialized.
const SparsePolynomial& schubert_polynomial(const Permutation& w);

/// Same construction run inside an explicit ambient S_n (n >= w.degree());
/// not memoized.  The result is independent of n, which is tested rather
/// than assumed.
SparsePolynomial schubert_polynomial_in(const Permutation& w, int n);

/// Schur polynomial S_lambda(x1..xk) as the Schubert polynomial of the
/// Grassmannian permutation v(lambda,k).  Throws if lambda has > k parts.
SparsePolynomial schur_polynomial(const Partition& lambda, int k);

/// Finitely supported integer combination of Schubert basis elements.
class SchubertExpansion {
 public:
  using Map = std::map<Permutation, Int>;

  void add(const Permutation& w, const Int& c);
  Int coefficient(const Permutation& w) const;
  const Map& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  size_t size() const { return coeffs_.size(); }
  bool operator==(const SchubertExpansion& o) const { return coeffs_ == o.coeffs_; }

  /// Sum of c_w * schubert_polynomial(w); inverse of expand_in_schubert.
  SparsePolynomial reconstruct() const;
  std::string to_string() const;

 private:
  Map coeffs_;
};

/// Expand an integer polynomial in the Schubert basis.  Greedy algorithm on
/// the colex-leading monomial: read it as a Lehmer code, subtract that
/// Schubert polynomial, repeat.  Guarded against a failure of the
/// leading-monomial law (x^code(w) is the colex-maximal monomial of S_w,
/// with coefficient 1) by an iteration bound and a strict-decrease check.
SchubertExpansion expand_in_schubert(SparsePolynomial f);

/// Expansion of S_u * S_v, i.e. the structure constants c^w_{u v}.  Memoized.
/// Every w in the support is checked to satisfy l(w) = l(u) + l(v).
const SchubertExpansion& structure_constants(const Permutation& u, const Permutation& v);

/// Single coefficient c^w_{u v}.
Int structure_constant(const Permutation& u, const Permutation& v, const Permutation& w);

/// c^w_{u v(lambda,k)}, with the convention that the coefficient vanishes
/// when lambda has more than k parts (S_lambda in k variables is 0).
Int grassmannian_constant(const Permutation& u, const Partition& lambda, int k,
                          const Permutation& w);

/// Skew coefficient c^zeta_lambda := c^{zeta u}_{u, v(lambda,k)} computed
/// through a deterministically chosen witness u <=_k zeta*u; returns 0 when
/// |lambda| differs from the rank of zeta.
Int skew_coefficient(const Permutation& zeta, const Partition& lambda);

/// Coefficients d_{u,v} with g = sum d_{u,v} S_u(y) S_v(z): expand in the
/// y-Schubert basis with z-polynomial coefficients, then expand each
/// z-coefficient.
std::map<std::pair<Permutation, Permutation>, Int> expand_two_alphabet(TwoAlphabetPolynomial g);

TwoAlphabetPolynomial reconstruct_two_alphabet(
    const std::map<std::pair<Permutation, Permutation>, Int>& coeffs);

// --- memo table management (used by the persistent cache and the CLI) ---

struct MemoStats {
  size_t schubert_entries = 0;
  size_t product_entries = 0;
};
MemoStats memo_stats();
void memo_clear();

/// Pre-seed memo entries (e.g. from the on-disk cache).  Entries are trusted.
void memo_preload_schubert(const Permutation& w, SparsePolynomial f);
void memo_preload_product(const Permutation& u, const Permutation& v, SchubertExpansion e);

/// Observers fire once per freshly computed (not preloaded) entry.
using SchubertObserver = std::function<void(const Permutation&, const SparsePolynomial&)>;
using ProductObserver =
    std::function<void(const Permutation&, const Permutation&, const SchubertExpansion&)>;
void set_compute_observers(SchubertObserver on_schubert, ProductObserver on_product);

}  // namespace schubert

#endif
