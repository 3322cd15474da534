#ifndef SCHUBERT_POLYNOMIAL_HPP
#define SCHUBERT_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"

namespace schubert {

/// Exponent vector of a monomial, trailing zeros trimmed.
using Exponents = std::vector<int>;

Exponents trim_exponents(Exponents e);
int total_degree(const Exponents& e);

/// Colex order: compare exponent vectors at the largest index where they
/// differ (missing entries count as 0).
bool colex_less(const Exponents& a, const Exponents& b);

struct ColexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return colex_less(a, b); }
};

/// Integer-coefficient sparse polynomial in x1, x2, ...  Terms are kept in
/// colex order so the leading (colex-maximal) monomial is the last entry.
/// No zero coefficients are stored.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponents, Int, ColexLess>;

  SparsePolynomial() = default;
  static SparsePolynomial constant(Int c);
  static SparsePolynomial monomial(Exponents e, Int c = 1);
  static SparsePolynomial variable(int i);  // x_i

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Int coefficient(const Exponents& e) const;
  /// Leading term under colex; polynomial must be nonzero.
  const std::pair<const Exponents, Int>& leading_term() const;
  /// Total degree when homogeneous, -1 for 0; throws if inhomogeneous.
  int homogeneous_degree() const;

  void add_term(const Exponents& e, const Int& c);

  SparsePolynomial& operator+=(const SparsePolynomial& o);
  SparsePolynomial& operator-=(const SparsePolynomial& o);
  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const Int& c) const;
  bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

  /// "x1^4*x2*x3 + 2*x2^2", "-" separating negative terms, "0" for zero.
  std::string to_string(char letter = 'x') const;
  static SparsePolynomial parse(std::string_view text, char letter = 'x');

 private:
  TermMap terms_;
};

/// x1 + x2 + ... + xk  (the degree-1 Schubert polynomial indexed by s_k).
SparsePolynomial monk_sum(int k);

/// x1 * x2 * ... * xk; the empty product (k = 0) is 1.
SparsePolynomial x_prefix_product(int k);

/// Divided difference (f - s_i f) / (x_i - x_{i+1}), computed exactly
/// monomial by monomial.
SparsePolynomial divided_difference(const SparsePolynomial& f, int i);

/// Substitute x_p -> 0 and x_j -> x_{j-1} for j > p.
SparsePolynomial drop_variable(const SparsePolynomial& f, int p);

/// Describes a split of the variable indices into a set P and its
/// complement.  P consists of `listed` (strictly increasing) plus, depending
/// on `tail`, either every integer above `boundary`, none of them, or an
/// unspecified region that must not be touched.
struct VariableSplit {
  enum class Tail { InP, NotInP, Unspecified };
  std::vector<int> listed;
  Tail tail = Tail::NotInP;
  int boundary = 0;  // classification is defined for j <= boundary and by `tail` above it

  static VariableSplit finite(std::vector<int> listed);
  static VariableSplit with_tail(std::vector<int> listed, int boundary);
  static VariableSplit prefix(int n);  // P = [n] = {1,...,n}

  /// True if x_j belongs to P; throws if the descriptor does not classify j.
  bool in_p(int j) const;
  /// y-index of x_j (number of elements of P that are <= j); requires in_p(j).
  int p_index(int j) const;
  /// z-index of x_j; requires !in_p(j).
  int pc_index(int j) const;
  std::string to_string() const;
};

/// Monomial over the pair of alphabets (y, z).
struct PairExponents {
  Exponents y;
  Exponents z;
  bool operator==(const PairExponents& o) const { return y == o.y && z == o.z; }
};

struct PairColexLess {
  bool operator()(const PairExponents& a, const PairExponents& b) const {
    if (a.y != b.y) return colex_less(a.y, b.y);
    return colex_less(a.z, b.z);
  }
};

/// Integer polynomial in two alphabets y and z.
class TwoAlphabetPolynomial {
 public:
  using TermMap = std::map<PairExponents, Int, PairColexLess>;

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  void add_term(const PairExponents& e, const Int& c);

  TwoAlphabetPolynomial& operator+=(const TwoAlphabetPolynomial& o);
  TwoAlphabetPolynomial& operator-=(const TwoAlphabetPolynomial& o);
  bool operator==(const TwoAlphabetPolynomial& o) const { return terms_ == o.terms_; }

  /// Product of a y-polynomial and a z-polynomial.
  static TwoAlphabetPolynomial product(const SparsePolynomial& fy, const SparsePolynomial& fz);

  std::string to_string() const;  // terms like "2*y1^2*z3"
  static TwoAlphabetPolynomial parse(std::string_view text);

 private:
  TermMap terms_;
};

/// Apply the substitution x_{p_j} -> y_j, x_{p^c_j} -> z_j to f.
TwoAlphabetPolynomial split_alphabet(const SparsePolynomial& f, const VariableSplit& split);

}  // namespace schubert

#endif
