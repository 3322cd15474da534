#include "schubert/io.hpp"

#include <stdexcept>

namespace schubert {

using nlohmann::json;

json to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return int_from_string(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

json to_json(const Permutation& w) { return json{{"window", w.window()}}; }

Permutation permutation_from_json(const json& j) {
  return Permutation::from_window(j.at("window").get<std::vector<int>>());
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

json to_json(const SparsePolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json{{"coeff", to_json(c)}, {"exps", e}});
  return terms;
}

SparsePolynomial polynomial_from_json(const json& j) {
  SparsePolynomial f;
  for (const auto& term : j)
    f.add_term(term.at("exps").get<Exponents>(), int_from_json(term.at("coeff")));
  return f;
}

json to_json(const TwoAlphabetPolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(json{{"coeff", to_json(c)}, {"y", e.y}, {"z", e.z}});
  return terms;
}

TwoAlphabetPolynomial two_alphabet_from_json(const json& j) {
  TwoAlphabetPolynomial f;
  for (const auto& term : j)
    f.add_term({term.at("y").get<Exponents>(), term.at("z").get<Exponents>()},
               int_from_json(term.at("coeff")));
  return f;
}

json to_json(const SchubertExpansion& e) {
  json out = json::array();
  for (const auto& [w, c] : e.coefficients()) out.push_back(json::array({w.window(), to_json(c)}));
  return out;
}

SchubertExpansion expansion_from_json(const json& j) {
  SchubertExpansion e;
  for (const auto& entry : j)
    e.add(Permutation::from_window(entry.at(0).get<std::vector<int>>()),
          int_from_json(entry.at(1)));
  return e;
}

json to_json(const Tableau& t) { return json(t.rows()); }

Tableau tableau_from_json(const json& j) {
  return Tableau(j.get<std::vector<std::vector<int>>>());
}

namespace {

const char* kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Bruhat: return "bruhat";
    case OrderKind::KBruhat: return "k-bruhat";
    case OrderKind::QOrder: return "graded";
  }
  return "?";
}

}  // namespace

json to_json(const LabeledInterval& iv) {
  json nodes = json::array();
  for (const auto& v : iv.nodes()) nodes.push_back(v.to_oneline());
  json covers = json::array();
  for (const auto& c : iv.covers()) {
    if (c.label >= 0)
      covers.push_back(json::array({c.lower, c.upper, c.label}));
    else
      covers.push_back(json::array({c.lower, c.upper}));
  }
  json out{{"kind", kind_name(iv.kind())},
           {"bottom", iv.bottom().to_oneline()},
           {"top", iv.top().to_oneline()},
           {"nodes", nodes},
           {"covers", covers}};
  if (iv.kind() == OrderKind::KBruhat) out["k"] = iv.k();
  return out;
}

std::string to_dot(const LabeledInterval& iv) {
  std::string s = "digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& v : iv.nodes()) s += "  \"" + v.to_oneline() + "\";\n";
  for (const auto& c : iv.covers()) {
    s += "  \"" + iv.nodes()[c.lower].to_oneline() + "\" -> \"" +
         iv.nodes()[c.upper].to_oneline() + "\"";
    if (c.label >= 0) s += " [label=\"" + std::to_string(c.label) + "\"]";
    s += ";\n";
  }
  s += "}\n";
  return s;
}

}  // namespace schubert
