#ifndef SCHUBERT_TABLEAUX_HPP
#define SCHUBERT_TABLEAUX_HPP

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/partition.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

using Word = std::vector<int>;

/// Straight-shape filling with positive entries; rows weakly decrease in
/// length.  Semistandard/standard are predicates, not separate types.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int entry(int row, int col) const;  // 1-based

  bool is_semistandard() const;
  bool is_standard() const;

  std::string to_string() const;  // rows joined by ';', entries by ','
  static Tableau parse(std::string_view text);

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  auto operator<=>(const Tableau& o) const { return rows_ <=> o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Row insertion: P semistandard with the word's letters as content, Q the
/// standard recording tableau of the same shape.
std::pair<Tableau, Tableau> schensted(const Word& word);

/// Number of standard Young tableaux of the given shape, by enumeration of
/// chains in Young's lattice (memoized); small shapes only.
Int syt_count(const Partition& shape);

/// Littlewood-Richardson coefficient c^nu_{mu lambda} extracted from the
/// exact Schur polynomial product in k variables.  All three partitions must
/// have at most k parts.
Int lr_coefficient(const Partition& mu, const Partition& lambda, const Partition& nu, int k);

/// Rows bottom-to-top, each left-to-right.
Word reading_word(const Tableau& t);

/// Entries grouped by diagonal j - i, most negative diagonal first,
/// increasing within each diagonal.
Word diagonal_word(const Tableau& t);

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry);
std::vector<Tableau> standard_tableaux(const Partition& shape);

/// Generating sum over semistandard tableaux of shape lambda with entries
/// <= k; equals schur_polynomial by a route independent of divided
/// differences (used as a cross-check).
SparsePolynomial schur_via_tableaux(const Partition& lambda, int k);

}  // namespace schubert

#endif
