#include "schubert/qorder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubert {

UpDownProfile UpDownProfile::of(const Permutation& zeta) {
  UpDownProfile p;
  for (int a = 1; a <= zeta.degree(); ++a) {
    if (zeta(a) > a) p.up.push_back(a);
    else if (zeta(a) < a) p.down.push_back(a);
  }
  return p;
}

std::vector<int> UpDownProfile::support() const {
  std::vector<int> s;
  std::merge(up.begin(), up.end(), down.begin(), down.end(), std::back_inserter(s));
  return s;
}

Permutation compress(const Permutation& zeta) {
  std::vector<int> supp = zeta.support();
  int m = static_cast<int>(supp.size());
  std::vector<int> rank_of(zeta.degree() + 1, 0);
  for (int i = 0; i < m; ++i) rank_of[supp[i]] = i + 1;
  std::vector<int> win(m);
  for (int i = 0; i < m; ++i) win[i] = rank_of[zeta(supp[i])];
  return Permutation::from_window(std::move(win));
}

bool shape_equivalent(const Permutation& a, const Permutation& b) {
  return compress(a) == compress(b);
}

bool q_leq(const Permutation& eta, const Permutation& zeta) {
  int n = std::max(eta.degree(), zeta.degree());
  for (int a = 1; a <= n; ++a) {
    int ea = eta(a), za = zeta(a);
    if (a < ea && ea > za) return false;
    if (a > ea && ea < za) return false;
  }
  auto prof = UpDownProfile::of(zeta);
  auto block_ok = [&](const std::vector<int>& block) {
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j) {
        int a = block[i], b = block[j];  // a < b
        if (zeta(a) < zeta(b) && !(eta(a) < eta(b))) return false;
      }
    return true;
  };
  return block_ok(prof.up) && block_ok(prof.down);
}

int q_rank(const Permutation& zeta) {
  auto prof = UpDownProfile::of(zeta);
  std::vector<int> zup, zdown;
  for (int a : prof.up) zup.push_back(zeta(a));
  for (int a : prof.down) zdown.push_back(zeta(a));
  int pos = 0;
  for (int alpha : zup)
    for (int beta : zdown)
      if (alpha > beta) ++pos;
  int neg = 0;
  for (int a : prof.up)
    for (int b : prof.down)
      if (a > b) ++neg;
  auto inversions_with_increasing_image = [&](const std::vector<int>& block) {
    int c = 0;
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j)
        // pairs (a,b) with a > b: take a = block[j], b = block[i]
        if (zeta(block[j]) < zeta(block[i])) ++c;
    return c;
  };
  neg += inversions_with_increasing_image(prof.up);
  neg += inversions_with_increasing_image(prof.down);
  return pos - neg;
}

namespace {

std::vector<Permutation> candidates_on_support(const Permutation& zeta) {
  std::vector<int> supp = zeta.support();
  int m = static_cast<int>(supp.size());
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Permutation> out;
  int n = supp.empty() ? 0 : supp.back();
  do {
    std::vector<int> win(n);
    std::iota(win.begin(), win.end(), 1);
    for (int i = 0; i < m; ++i) win[supp[i] - 1] = supp[idx[i]];
    out.push_back(Permutation::from_window(std::move(win)));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

LabeledInterval q_interval(const Permutation& eta, const Permutation& zeta) {
  if (!q_leq(eta, zeta)) throw std::invalid_argument("interval endpoints are incomparable");
  std::vector<Permutation> nodes;
  std::vector<int> ranks;
  int base = q_rank(eta);
  for (const auto& cand : candidates_on_support(zeta))
    if (q_leq(eta, cand) && q_leq(cand, zeta)) {
      nodes.push_back(cand);
      ranks.push_back(q_rank(cand) - base);
    }
  std::vector<LabeledInterval::Cover> covers;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j)
      if (ranks[j] == ranks[i] + 1 && q_leq(nodes[i], nodes[j]))
        covers.push_back({static_cast<int>(i), static_cast<int>(j), -1});
  return LabeledInterval::from_parts(OrderKind::QOrder, 0, eta, zeta, std::move(nodes),
                                     std::move(covers), std::move(ranks));
}

LabeledInterval q_interval(const Permutation& zeta) { return q_interval(Permutation{}, zeta); }

bool is_disjoint_product(const Permutation& zeta, const Permutation& eta) {
  std::vector<int> sa = zeta.support(), sb = eta.support();
  std::vector<int> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (!common.empty()) return false;
  return q_rank(compose(zeta, eta)) == q_rank(zeta) + q_rank(eta);
}

}  // namespace schubert
