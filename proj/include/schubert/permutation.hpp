#ifndef SCHUBERT_PERMUTATION_HPP
#define SCHUBERT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/partition.hpp"

namespace schubert {

/// Permutation of {1,2,...} moving finitely many points, stored in one-line
/// notation with trailing fixed points trimmed.  The identity has an empty
/// window.  Equality and ordering are on the canonical (trimmed) window, so
/// the same element of S_infinity compares equal regardless of the ambient
/// S_n it was produced in.  Values are immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  static Permutation from_window(std::vector<int> window);
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int a, int b);
  static Permutation adjacent_transposition(int i) { return transposition(i, i + 1); }
  static Permutation longest_element(int n);  // n, n-1, ..., 1
  static Permutation from_code(const std::vector<int>& code);
  /// Accepts "413652" (single digits), "[4,1,3,6,5,2]", cycle notation
  /// "(2,4)(1,5,3)", and "e"/"()" for the identity.
  static Permutation parse(std::string_view text);

  /// Image of i (1-based); i beyond the window is fixed.
  int operator()(int i) const {
    return (i >= 1 && i <= static_cast<int>(window_.size())) ? window_[i - 1] : i;
  }
  const std::vector<int>& window() const { return window_; }
  /// Canonical window size; 0 for the identity, else the largest moved point.
  int degree() const { return static_cast<int>(window_.size()); }
  bool is_identity() const { return window_.empty(); }
  /// Moved points, increasing.
  std::vector<int> support() const;

  Permutation inverse() const;
  int length() const;                // inversion count
  std::vector<int> code() const;     // Lehmer code, trailing zeros trimmed
  std::vector<int> descents() const; // { i : w(i) > w(i+1) }

  std::string to_oneline() const;          // "413652", "[10,1,...]", "e"
  std::string to_oneline(int width) const; // padded with fixed points up to width
  std::string to_cycles() const;           // "(1,5,3)(2,4)", "()" for identity

  bool operator==(const Permutation& o) const { return window_ == o.window_; }
  auto operator<=>(const Permutation& o) const { return window_ <=> o.window_; }

 private:
  std::vector<int> window_;
  void trim();
};

/// Composition: result(i) = s(t(i))  (apply t first, then s).
Permutation compose(const Permutation& s, const Permutation& t);

/// Grassmannian permutation v(lambda,k): v(j) = j + lambda_{k+1-j} for j <= k,
/// remaining values in increasing order; unique descent at k (if any).
Permutation grassmannian(const Partition& lambda, int k);

/// Inverse of the above: the (lambda, k) with grassmannian(lambda,k) == w when
/// w has at most one descent.  The identity reports (empty, 0) where 0 stands
/// for "any k".  Returns nullopt when w has two or more descents.
std::optional<std::pair<Partition, int>> grassmannian_shape(const Permutation& w);

/// Delete row p and column w(p) from the permutation matrix.
Permutation delete_entry(const Permutation& w, int p);

/// Inverse insertion: the unique y' with delete_entry(y',p) == y and y'(p) == q.
Permutation insert_entry(const Permutation& y, int p, int q);

/// Relabel zeta's letters into the point set P = {p_1 < p_2 < ...}:
/// result(p_i) = p_{zeta(i)}, identity off P.  Requires P.size() >= degree.
Permutation embed_support(const Permutation& zeta, const std::vector<int>& P);

/// Conjugation by the longest element of S_n: i -> n+1 - zeta(n+1-i).
Permutation conjugate_by_longest(const Permutation& zeta, int n);

/// Conjugation by the n-cycle (1 2 ... n): sigma zeta sigma^{-1}.
Permutation conjugate_by_cycle(const Permutation& zeta, int n);

/// All n! permutations with support in [n], in lexicographic window order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubert

template <>
struct std::hash<schubert::Permutation> {
  size_t operator()(const schubert::Permutation& w) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : w.window()) h = h * 1099511628211ull + static_cast<size_t>(v);
    return h;
  }
};

#endif
