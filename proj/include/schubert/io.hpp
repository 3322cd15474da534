#ifndef SCHUBERT_IO_HPP
#define SCHUBERT_IO_HPP

#include <string>

#include <json.hpp>

#include "schubert/bruhat.hpp"
#include "schubert/partition.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/schubert_basis.hpp"
#include "schubert/tableaux.hpp"

namespace schubert {

// Integers serialize as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings; readers accept both.  All round-trips are bit-exact.

nlohmann::json to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Permutation& w);  // {"window":[...]}
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& p);  // [parts...]
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SparsePolynomial& f);  // [{"coeff":c,"exps":[...]},...]
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TwoAlphabetPolynomial& f);  // [{"coeff":c,"y":[...],"z":[...]}]
TwoAlphabetPolynomial two_alphabet_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SchubertExpansion& e);  // [[perm, coeff], ...]
SchubertExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Tableau& t);  // ragged array
Tableau tableau_from_json(const nlohmann::json& j);

/// {"kind":..., "k":..., "nodes":[...], "covers":[[lo,hi,label?],...]}
nlohmann::json to_json(const LabeledInterval& iv);

std::string to_dot(const LabeledInterval& iv);

}  // namespace schubert

#endif
