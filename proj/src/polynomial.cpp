#include "schubert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schubert {

Exponents trim_exponents(Exponents e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool colex_less(const Exponents& a, const Exponents& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = n; i-- > 0;) {
    int av = i < a.size() ? a[i] : 0;
    int bv = i < b.size() ? b[i] : 0;
    if (av != bv) return av < bv;
  }
  return false;
}

SparsePolynomial SparsePolynomial::constant(Int c) {
  SparsePolynomial f;
  f.add_term({}, c);
  return f;
}

SparsePolynomial SparsePolynomial::monomial(Exponents e, Int c) {
  SparsePolynomial f;
  f.add_term(trim_exponents(std::move(e)), c);
  return f;
}

SparsePolynomial SparsePolynomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("variable index is 1-based");
  Exponents e(i, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

Int SparsePolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(trim_exponents(e));
  return it == terms_.end() ? Int(0) : it->second;
}

const std::pair<const Exponents, Int>& SparsePolynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

int SparsePolynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) throw std::logic_error("polynomial is not homogeneous");
  return d;
}

void SparsePolynomial::add_term(const Exponents& e, const Int& c) {
  if (c == 0) return;
  Exponents key = trim_exponents(e);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial f = *this;
  f += o;
  return f;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial f = *this;
  f -= o;
  return f;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  SparsePolynomial prod;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      prod.add_term(e, ca * cb);
    }
  }
  return prod;
}

SparsePolynomial SparsePolynomial::operator*(const Int& c) const {
  SparsePolynomial f;
  if (c == 0) return f;
  for (const auto& [e, coeff] : terms_) f.terms_.emplace(e, coeff * c);
  return f;
}

namespace {

std::string monomial_string(const Exponents& e, const Int& c, char letter) {
  std::string s;
  Int a = c < 0 ? Int(-c) : c;
  bool coeff_shown = a != 1 || e.empty();
  if (coeff_shown) s += a.get_str();
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += letter;
    s += std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string SparsePolynomial::to_string(char letter) const {
  if (terms_.empty()) return "0";
  std::string s;
  // Leading (colex-maximal) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    s += monomial_string(e, c, letter);
  }
  return s;
}

namespace {

// Splits "c*x1^3*y2" into a coefficient and (letter, index, exponent)
// factors, restricted to the allowed alphabet letters.
struct ParsedTerm {
  Int coeff = 1;
  struct Power {
    char letter;
    int index;
    int exp;
  };
  std::vector<Power> powers;
};

ParsedTerm parse_term(std::string_view term, std::string_view letters) {
  ParsedTerm out;
  size_t pos = 0;
  bool saw_factor = false;
  while (pos < term.size()) {
    if (term[pos] == '*') {
      ++pos;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(term[pos]))) {
      size_t end = pos;
      while (end < term.size() && isdigit(static_cast<unsigned char>(term[end]))) ++end;
      if (saw_factor) throw std::invalid_argument("misplaced coefficient in term");
      out.coeff = int_from_string(std::string(term.substr(pos, end - pos)));
      saw_factor = true;
      pos = end;
      continue;
    }
    char letter = term[pos];
    if (letters.find(letter) == std::string_view::npos)
      throw std::invalid_argument(std::string("unexpected letter '") + letter + "' in polynomial");
    ++pos;
    size_t end = pos;
    while (end < term.size() && isdigit(static_cast<unsigned char>(term[end]))) ++end;
    if (end == pos) throw std::invalid_argument("variable without index");
    int index = std::stoi(std::string(term.substr(pos, end - pos)));
    pos = end;
    int exp = 1;
    if (pos < term.size() && term[pos] == '^') {
      ++pos;
      end = pos;
      while (end < term.size() && isdigit(static_cast<unsigned char>(term[end]))) ++end;
      if (end == pos) throw std::invalid_argument("'^' without exponent");
      exp = std::stoi(std::string(term.substr(pos, end - pos)));
      pos = end;
    }
    out.powers.push_back({letter, index, exp});
    saw_factor = true;
  }
  // Pure coefficient terms ("3") are fine; letter-only terms keep coeff 1.
  return out;
}

std::vector<std::pair<ParsedTerm, int>> parse_terms(std::string_view text,
                                                    std::string_view letters) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<std::pair<ParsedTerm, int>> result;
  size_t pos = 0;
  int sign = 1;
  if (s[0] == '-') {
    sign = -1;
    pos = 1;
  } else if (s[0] == '+') {
    pos = 1;
  }
  size_t start = pos;
  auto flush = [&](size_t end) {
    if (end == start) throw std::invalid_argument("empty term in polynomial");
    result.emplace_back(parse_term(std::string_view(s).substr(start, end - start), letters), sign);
  };
  while (pos < s.size()) {
    if (s[pos] == '+' || s[pos] == '-') {
      flush(pos);
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      start = pos;
    } else {
      ++pos;
    }
  }
  flush(pos);
  return result;
}

}  // namespace

SparsePolynomial SparsePolynomial::parse(std::string_view text, char letter) {
  if (text == "0") return {};
  SparsePolynomial f;
  for (const auto& [term, sign] : parse_terms(text, std::string_view(&letter, 1))) {
    Exponents e;
    for (const auto& p : term.powers) {
      if (static_cast<size_t>(p.index) > e.size()) e.resize(p.index, 0);
      e[p.index - 1] += p.exp;
    }
    f.add_term(e, sign < 0 ? Int(-term.coeff) : term.coeff);
  }
  return f;
}

SparsePolynomial monk_sum(int k) {
  SparsePolynomial f;
  for (int i = 1; i <= k; ++i) f += SparsePolynomial::variable(i);
  return f;
}

SparsePolynomial x_prefix_product(int k) {
  Exponents e(k, 1);
  return SparsePolynomial::monomial(std::move(e));
}

SparsePolynomial divided_difference(const SparsePolynomial& f, int i) {
  if (i < 1) throw std::invalid_argument("divided difference index is 1-based");
  SparsePolynomial out;
  for (const auto& [e, c] : f.terms()) {
    int p = i - 1 < static_cast<int>(e.size()) ? e[i - 1] : 0;
    int q = i < static_cast<int>(e.size()) ? e[i] : 0;
    if (p == q) continue;
    Exponents base = e;
    if (static_cast<size_t>(i + 1) > base.size()) base.resize(i + 1, 0);
    // (x^p y^q - x^q y^p) / (x - y) expands into |p-q| monomials.
    int lo = std::min(p, q), hi = std::max(p, q);
    Int coeff = p > q ? c : -c;
    for (int r = lo; r < hi; ++r) {
      base[i - 1] = r;
      base[i] = p + q - 1 - r;
      out.add_term(base, coeff);
    }
  }
  return out;
}

SparsePolynomial drop_variable(const SparsePolynomial& f, int p) {
  if (p < 1) throw std::invalid_argument("variable index is 1-based");
  SparsePolynomial out;
  for (const auto& [e, c] : f.terms()) {
    if (p - 1 < static_cast<int>(e.size()) && e[p - 1] > 0) continue;
    // erasing index p-1 shifts everything above p down by one
    Exponents img;
    img.reserve(e.size());
    for (size_t j = 0; j < e.size(); ++j) {
      if (static_cast<int>(j) == p - 1) continue;
      img.push_back(e[j]);
    }
    out.add_term(img, c);
  }
  return out;
}

VariableSplit VariableSplit::finite(std::vector<int> listed) {
  VariableSplit s;
  s.boundary = listed.empty() ? 0 : listed.back();
  s.listed = std::move(listed);
  s.tail = Tail::NotInP;
  return s;
}

VariableSplit VariableSplit::with_tail(std::vector<int> listed, int boundary) {
  VariableSplit s;
  s.listed = std::move(listed);
  if (!s.listed.empty() && boundary < s.listed.back())
    throw std::invalid_argument("tail boundary below listed elements");
  s.boundary = boundary;
  s.tail = Tail::InP;
  return s;
}

VariableSplit VariableSplit::prefix(int n) {
  std::vector<int> listed(n);
  std::iota(listed.begin(), listed.end(), 1);
  return finite(std::move(listed));
}

bool VariableSplit::in_p(int j) const {
  if (j < 1) throw std::invalid_argument("variable index is 1-based");
  if (j > boundary) {
    switch (tail) {
      case Tail::InP: return true;
      case Tail::NotInP: return false;
      case Tail::Unspecified:
        throw std::invalid_argument("variable split does not classify x" + std::to_string(j));
    }
  }
  return std::binary_search(listed.begin(), listed.end(), j);
}

int VariableSplit::p_index(int j) const {
  int below = static_cast<int>(std::upper_bound(listed.begin(), listed.end(), j) - listed.begin());
  if (j > boundary && tail == Tail::InP) below += j - boundary;
  return below;
}

int VariableSplit::pc_index(int j) const { return j - p_index(j); }

std::string VariableSplit::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < listed.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(listed[i]);
  }
  if (tail == Tail::InP) s += (listed.empty() ? "" : ",") + std::string(">") + std::to_string(boundary);
  return s + "}";
}

void TwoAlphabetPolynomial::add_term(const PairExponents& e, const Int& c) {
  if (c == 0) return;
  PairExponents key{trim_exponents(e.y), trim_exponents(e.z)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoAlphabetPolynomial& TwoAlphabetPolynomial::operator+=(const TwoAlphabetPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TwoAlphabetPolynomial& TwoAlphabetPolynomial::operator-=(const TwoAlphabetPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TwoAlphabetPolynomial TwoAlphabetPolynomial::product(const SparsePolynomial& fy,
                                                     const SparsePolynomial& fz) {
  TwoAlphabetPolynomial prod;
  for (const auto& [ey, cy] : fy.terms())
    for (const auto& [ez, cz] : fz.terms()) prod.add_term({ey, ez}, cy * cz);
  return prod;
}

std::string TwoAlphabetPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Int a = c < 0 ? Int(-c) : c;
    std::string term;
    if (a != 1 || (e.y.empty() && e.z.empty())) term = a.get_str();
    auto append = [&term](const Exponents& exps, char letter) {
      for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!term.empty()) term += '*';
        term += letter;
        term += std::to_string(i + 1);
        if (exps[i] > 1) term += '^' + std::to_string(exps[i]);
      }
    };
    append(e.y, 'y');
    append(e.z, 'z');
    s += term;
  }
  return s;
}

TwoAlphabetPolynomial TwoAlphabetPolynomial::parse(std::string_view text) {
  TwoAlphabetPolynomial f;
  if (text == "0") return f;
  for (const auto& [term, sign] : parse_terms(text, "yz")) {
    PairExponents e;
    for (const auto& p : term.powers) {
      Exponents& target = p.letter == 'y' ? e.y : e.z;
      if (static_cast<size_t>(p.index) > target.size()) target.resize(p.index, 0);
      target[p.index - 1] += p.exp;
    }
    f.add_term(e, sign < 0 ? Int(-term.coeff) : term.coeff);
  }
  return f;
}

TwoAlphabetPolynomial split_alphabet(const SparsePolynomial& f, const VariableSplit& split) {
  TwoAlphabetPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    PairExponents img;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      int var = static_cast<int>(j) + 1;
      if (split.in_p(var)) {
        int idx = split.p_index(var);
        if (static_cast<size_t>(idx) > img.y.size()) img.y.resize(idx, 0);
        img.y[idx - 1] += e[j];
      } else {
        int idx = split.pc_index(var);
        if (static_cast<size_t>(idx) > img.z.size()) img.z.resize(idx, 0);
        img.z[idx - 1] += e[j];
      }
    }
    out.add_term(img, c);
  }
  return out;
}

}  // namespace schubert
