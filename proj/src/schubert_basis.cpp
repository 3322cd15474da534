#include "schubert/schubert_basis.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "schubert/bruhat.hpp"
#include "schubert/qorder.hpp"

namespace schubert {

namespace {

struct PermPairHash {
  size_t operator()(const std::pair<Permutation, Permutation>& p) const {
    std::hash<Permutation> h;
    return h(p.first) * 0x100000001b3ull ^ h(p.second);
  }
};

std::shared_mutex& schubert_mutex() {
  static std::shared_mutex m;
  return m;
}

std::unordered_map<Permutation, SparsePolynomial>& schubert_memo() {
  static std::unordered_map<Permutation, SparsePolynomial> memo;
  return memo;
}

std::shared_mutex& product_mutex() {
  static std::shared_mutex m;
  return m;
}

std::unordered_map<std::pair<Permutation, Permutation>, SchubertExpansion, PermPairHash>&
product_memo() {
  static std::unordered_map<std::pair<Permutation, Permutation>, SchubertExpansion, PermPairHash>
      memo;
  return memo;
}

SchubertObserver& schubert_observer() {
  static SchubertObserver obs;
  return obs;
}

ProductObserver& product_observer() {
  static ProductObserver obs;
  return obs;
}

SparsePolynomial staircase(int n) {
  Exponents e;
  for (int i = 0; i < n; ++i) e.push_back(n - 1 - i);
  return SparsePolynomial::monomial(std::move(e));
}

// First ascent of w, or 0 if w is decreasing (i.e. the longest element).
int first_ascent(const Permutation& w, int n) {
  for (int i = 1; i < n; ++i)
    if (w(i) < w(i + 1)) return i;
  return 0;
}

}  // namespace

SparsePolynomial schubert_polynomial_in(const Permutation& w, int n) {
  if (n < w.degree()) throw std::invalid_argument("ambient too small for permutation");
  int i = first_ascent(w, n);
  if (i == 0) return staircase(n);
  SparsePolynomial parent = schubert_polynomial_in(compose(w, Permutation::adjacent_transposition(i)), n);
  return divided_difference(parent, i);
}

const SparsePolynomial& schubert_polynomial(const Permutation& w) {
  {
    std::shared_lock lock(schubert_mutex());
    auto it = schubert_memo().find(w);
    if (it != schubert_memo().end()) return it->second;
  }
  SparsePolynomial result;
  int n = w.degree();
  int i = first_ascent(w, n);
  if (w.is_identity()) {
    result = SparsePolynomial::constant(1);
  } else if (i == 0) {
    result = staircase(n);
  } else {
    // Memoize the whole ascent path: each parent is one divided difference up.
    const SparsePolynomial& parent =
        schubert_polynomial(compose(w, Permutation::adjacent_transposition(i)));
    result = divided_difference(parent, i);
  }
  const SparsePolynomial* stored = nullptr;
  bool fresh = false;
  {
    std::unique_lock lock(schubert_mutex());
    auto [it, inserted] = schubert_memo().emplace(w, std::move(result));
    stored = &it->second;
    fresh = inserted;
  }
  if (fresh && schubert_observer()) schubert_observer()(w, *stored);
  return *stored;
}

SparsePolynomial schur_polynomial(const Partition& lambda, int k) {
  return schubert_polynomial(grassmannian(lambda, k));
}

void SchubertExpansion::add(const Permutation& w, const Int& c) {
  if (c == 0) return;
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    coeffs_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Int SchubertExpansion::coefficient(const Permutation& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Int(0) : it->second;
}

SparsePolynomial SchubertExpansion::reconstruct() const {
  SparsePolynomial f;
  for (const auto& [w, c] : coeffs_) f += schubert_polynomial(w) * c;
  return f;
}

std::string SchubertExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : coeffs_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1) s += a.get_str() + "*";
    s += "S[" + w.to_oneline() + "]";
  }
  return s;
}

SchubertExpansion expand_in_schubert(SparsePolynomial f) {
  SchubertExpansion out;
  // Every monomial of the input or of a subtracted Schubert polynomial
  // accounts for at most one iteration; exceeding that means the
  // leading-monomial law failed.
  size_t budget = f.term_count();
  size_t iterations = 0;
  const Exponents* prev = nullptr;
  Exponents prev_store;
  while (!f.is_zero()) {
    const auto& [lead, c] = f.leading_term();
    if (prev && !colex_less(lead, *prev))
      throw std::logic_error("schubert expansion: leading monomial failed to decrease");
    prev_store = lead;
    prev = &prev_store;
    Permutation w = Permutation::from_code(lead);
    const SparsePolynomial& basis = schubert_polynomial(w);
    out.add(w, c);
    f -= basis * c;
    budget += basis.term_count();
    if (++iterations > budget)
      throw std::logic_error("schubert expansion: iteration bound exceeded");
  }
  return out;
}

const SchubertExpansion& structure_constants(const Permutation& u, const Permutation& v) {
  auto key = std::make_pair(u, v);
  {
    std::shared_lock lock(product_mutex());
    auto it = product_memo().find(key);
    if (it != product_memo().end()) return it->second;
  }
  SchubertExpansion exp = expand_in_schubert(schubert_polynomial(u) * schubert_polynomial(v));
  int target = u.length() + v.length();
  for (const auto& [w, c] : exp.coefficients())
    if (w.length() != target)
      throw std::logic_error("structure constants: support is not homogeneous of length l(u)+l(v)");
  const SchubertExpansion* stored = nullptr;
  bool fresh = false;
  {
    std::unique_lock lock(product_mutex());
    auto [it, inserted] = product_memo().emplace(std::move(key), std::move(exp));
    stored = &it->second;
    fresh = inserted;
  }
  if (fresh && product_observer()) product_observer()(u, v, *stored);
  return *stored;
}

Int structure_constant(const Permutation& u, const Permutation& v, const Permutation& w) {
  return structure_constants(u, v).coefficient(w);
}

Int grassmannian_constant(const Permutation& u, const Partition& lambda, int k,
                          const Permutation& w) {
  if (lambda.num_parts() > k) return 0;
  return structure_constant(u, grassmannian(lambda, k), w);
}

Int skew_coefficient(const Permutation& zeta, const Partition& lambda) {
  if (lambda.size() != q_rank(zeta)) return 0;
  int min_k = std::max(1, lambda.num_parts());
  auto witness = find_k_witness(zeta, min_k);
  if (!witness) throw std::logic_error("no k-Bruhat witness found for " + zeta.to_oneline());
  const Permutation& u = witness->u;
  return structure_constant(u, grassmannian(lambda, witness->k), compose(zeta, u));
}

std::map<std::pair<Permutation, Permutation>, Int> expand_two_alphabet(TwoAlphabetPolynomial g) {
  // First pass: peel off y-Schubert polynomials with z-polynomial
  // coefficients, largest y-monomial (colex) first.
  std::map<Permutation, SparsePolynomial> z_coeffs;
  size_t budget = g.term_count();
  size_t iterations = 0;
  while (!g.is_zero()) {
    Exponents ymax = g.terms().rbegin()->first.y;
    SparsePolynomial zc;
    for (auto it = g.terms().rbegin(); it != g.terms().rend() && it->first.y == ymax; ++it)
      zc.add_term(it->first.z, it->second);
    Permutation u = Permutation::from_code(ymax);
    const SparsePolynomial& basis = schubert_polynomial(u);
    g -= TwoAlphabetPolynomial::product(basis, zc);
    if (!g.is_zero() && !colex_less(g.terms().rbegin()->first.y, ymax))
      throw std::logic_error("two-alphabet expansion: y-leading monomial failed to decrease");
    z_coeffs[u] = std::move(zc);
    budget += basis.term_count() * z_coeffs[u].term_count();
    if (++iterations > budget)
      throw std::logic_error("two-alphabet expansion: iteration bound exceeded");
  }
  // Second pass: expand each z-coefficient.
  std::map<std::pair<Permutation, Permutation>, Int> out;
  for (auto& [u, zc] : z_coeffs) {
    SchubertExpansion expanded = expand_in_schubert(std::move(zc));
    for (const auto& [v, d] : expanded.coefficients()) out[{u, v}] = d;
  }
  return out;
}

TwoAlphabetPolynomial reconstruct_two_alphabet(
    const std::map<std::pair<Permutation, Permutation>, Int>& coeffs) {
  TwoAlphabetPolynomial g;
  for (const auto& [uv, d] : coeffs) {
    TwoAlphabetPolynomial term =
        TwoAlphabetPolynomial::product(schubert_polynomial(uv.first),
                                       schubert_polynomial(uv.second));
    for (const auto& [e, c] : term.terms()) g.add_term(e, c * d);
  }
  return g;
}

MemoStats memo_stats() {
  MemoStats s;
  {
    std::shared_lock lock(schubert_mutex());
    s.schubert_entries = schubert_memo().size();
  }
  {
    std::shared_lock lock(product_mutex());
    s.product_entries = product_memo().size();
  }
  return s;
}

void memo_clear() {
  std::unique_lock l1(schubert_mutex());
  std::unique_lock l2(product_mutex());
  schubert_memo().clear();
  product_memo().clear();
}

void memo_preload_schubert(const Permutation& w, SparsePolynomial f) {
  std::unique_lock lock(schubert_mutex());
  schubert_memo().emplace(w, std::move(f));
}

void memo_preload_product(const Permutation& u, const Permutation& v, SchubertExpansion e) {
  std::unique_lock lock(product_mutex());
  product_memo().emplace(std::make_pair(u, v), std::move(e));
}

void set_compute_observers(SchubertObserver on_schubert, ProductObserver on_product) {
  schubert_observer() = std::move(on_schubert);
  product_observer() = std::move(on_product);
}

}  // namespace schubert
