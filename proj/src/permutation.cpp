#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace schubert {

void Permutation::trim() {
  while (!window_.empty() && window_.back() == static_cast<int>(window_.size()))
    window_.pop_back();
}

Permutation Permutation::from_window(std::vector<int> window) {
  std::vector<int> sorted = window;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("window is not a rearrangement of 1..n");
  Permutation w;
  w.window_ = std::move(window);
  w.trim();
  return w;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles) {
  int n = 0;
  for (const auto& c : cycles)
    for (int v : c) {
      if (v < 1) throw std::invalid_argument("cycle entries must be positive");
      n = std::max(n, v);
    }
  Permutation result;  // identity
  // Rightmost cycle acts first, as in function composition.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    if (c.empty()) continue;
    std::vector<int> win(n);
    std::iota(win.begin(), win.end(), 1);
    std::vector<bool> seen(n + 1, false);
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (seen[from]) throw std::invalid_argument("repeated entry in cycle");
      seen[from] = true;
      win[from - 1] = to;
    }
    result = compose(from_window(std::move(win)), result);
  }
  return result;
}

Permutation Permutation::transposition(int a, int b) {
  if (a >= b || a < 1) throw std::invalid_argument("transposition requires 1 <= a < b");
  std::vector<int> win(b);
  std::iota(win.begin(), win.end(), 1);
  std::swap(win[a - 1], win[b - 1]);
  return from_window(std::move(win));
}

Permutation Permutation::longest_element(int n) {
  std::vector<int> win(n);
  for (int i = 0; i < n; ++i) win[i] = n - i;
  return from_window(std::move(win));
}

Permutation Permutation::from_code(const std::vector<int>& code) {
  int n = 0;
  for (size_t i = 0; i < code.size(); ++i) {
    if (code[i] < 0) throw std::invalid_argument("code entries must be nonnegative");
    n = std::max(n, static_cast<int>(i) + 1 + code[i]);
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> win;
  win.reserve(n);
  for (size_t i = 0; i < code.size(); ++i) {
    win.push_back(pool[code[i]]);
    pool.erase(pool.begin() + code[i]);
  }
  for (int v : pool) win.push_back(v);
  return from_window(std::move(win));
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) s.push_back(i);
  return s;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (size_t i = 0; i < window_.size(); ++i) inv[window_[i] - 1] = static_cast<int>(i) + 1;
  Permutation w;
  w.window_ = std::move(inv);
  w.trim();
  return w;
}

int Permutation::length() const {
  int n = degree(), count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (window_[i] > window_[j]) ++count;
  return count;
}

std::vector<int> Permutation::code() const {
  int n = degree();
  std::vector<int> c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (window_[j] < window_[i]) ++c[i];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < degree(); ++i)
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  return d;
}

std::string Permutation::to_oneline() const { return to_oneline(0); }

std::string Permutation::to_oneline(int width) const {
  int n = std::max(degree(), width);
  if (n == 0) return "e";
  bool compact = n <= 9;
  std::string s = compact ? "" : "[";
  for (int i = 1; i <= n; ++i) {
    if (!compact && i > 1) s += ',';
    s += std::to_string((*this)(i));
  }
  if (!compact) s += ']';
  return s;
}

std::string Permutation::to_cycles() const {
  std::vector<bool> seen(degree() + 1, false);
  std::string s;
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    s += '(';
    int i = start;
    bool first = true;
    do {
      if (!first) s += ',';
      s += std::to_string(i);
      seen[i] = true;
      i = (*this)(i);
      first = false;
    } while (i != start);
    s += ')';
  }
  return s.empty() ? "()" : s;
}

namespace {

std::vector<int> parse_int_list(std::string_view body, char sep) {
  std::vector<int> vals;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) {
      vals.push_back(std::stoi(tok));
      tok.clear();
    }
  };
  for (char c : body) {
    if (c == sep || isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (isdigit(static_cast<unsigned char>(c))) {
      tok += c;
    } else {
      throw std::invalid_argument("unexpected character in permutation");
    }
  }
  flush();
  return vals;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty permutation");
  if (s == "e" || s == "()") return {};
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unbalanced brackets");
    return from_window(parse_int_list(std::string_view(s).substr(1, s.size() - 2), ','));
  }
  if (s.front() == '(') {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
      size_t close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses");
      cycles.push_back(parse_int_list(std::string_view(s).substr(pos + 1, close - pos - 1), ','));
      pos = close + 1;
    }
    return from_cycles(cycles);
  }
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed permutation: " + s);
  std::vector<int> win;
  for (char c : s) win.push_back(c - '0');
  return from_window(std::move(win));
}

Permutation compose(const Permutation& s, const Permutation& t) {
  int n = std::max(s.degree(), t.degree());
  std::vector<int> win(n);
  for (int i = 1; i <= n; ++i) win[i - 1] = s(t(i));
  return Permutation::from_window(std::move(win));
}

Permutation grassmannian(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("grassmannian requires k >= 1");
  if (lambda.num_parts() > k)
    throw std::invalid_argument("partition has more than k parts");
  int n = k + lambda.part(1);
  std::vector<int> win;
  std::vector<bool> used(n + 1, false);
  for (int j = 1; j <= k; ++j) {
    int v = j + lambda.part(k + 1 - j);
    win.push_back(v);
    used[v] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) win.push_back(v);
  return Permutation::from_window(std::move(win));
}

std::optional<std::pair<Partition, int>> grassmannian_shape(const Permutation& w) {
  auto des = w.descents();
  if (des.empty()) return std::make_pair(Partition{}, 0);
  if (des.size() > 1) return std::nullopt;
  int k = des[0];
  std::vector<int> parts;
  for (int j = k; j >= 1; --j) {
    int p = w(j) - j;
    if (p < 0) return std::nullopt;
    parts.push_back(p);
  }
  return std::make_pair(Partition(std::move(parts)), k);
}

Permutation delete_entry(const Permutation& w, int p) {
  if (p < 1) throw std::invalid_argument("position must be positive");
  int n = std::max(w.degree(), p);
  int removed = w(p);
  std::vector<int> win;
  win.reserve(n - 1);
  for (int i = 1; i <= n; ++i) {
    if (i == p) continue;
    int v = w(i);
    win.push_back(v > removed ? v - 1 : v);
  }
  return Permutation::from_window(std::move(win));
}

Permutation insert_entry(const Permutation& y, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("position and value must be positive");
  int n = std::max({y.degree() + 1, p, q});
  std::vector<int> win;
  win.reserve(n);
  auto shifted = [&](int v) { return v >= q ? v + 1 : v; };
  for (int i = 1; i <= n; ++i) {
    if (i == p)
      win.push_back(q);
    else
      win.push_back(shifted(y(i < p ? i : i - 1)));
  }
  return Permutation::from_window(std::move(win));
}

Permutation embed_support(const Permutation& zeta, const std::vector<int>& P) {
  for (size_t i = 0; i < P.size(); ++i) {
    if (P[i] < 1) throw std::invalid_argument("P must consist of positive integers");
    if (i > 0 && P[i] <= P[i - 1])
      throw std::invalid_argument("P must be strictly increasing");
  }
  if (static_cast<int>(P.size()) < zeta.degree())
    throw std::invalid_argument("P is too short to cover the support");
  int n = zeta.degree() == 0 ? 0 : P[zeta.degree() - 1];
  std::vector<int> win(n);
  std::iota(win.begin(), win.end(), 1);
  for (int i = 1; i <= zeta.degree(); ++i) win[P[i - 1] - 1] = P[zeta(i) - 1];
  return Permutation::from_window(std::move(win));
}

Permutation conjugate_by_longest(const Permutation& zeta, int n) {
  if (zeta.degree() > n) throw std::invalid_argument("support exceeds ambient n");
  std::vector<int> win(n);
  for (int i = 1; i <= n; ++i) win[i - 1] = n + 1 - zeta(n + 1 - i);
  return Permutation::from_window(std::move(win));
}

Permutation conjugate_by_cycle(const Permutation& zeta, int n) {
  if (zeta.degree() > n) throw std::invalid_argument("support exceeds ambient n");
  std::vector<int> sigma_win(n);
  for (int i = 1; i <= n; ++i) sigma_win[i - 1] = i % n + 1;
  Permutation sigma = Permutation::from_window(std::move(sigma_win));
  return compose(compose(sigma, zeta), sigma.inverse());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> win(n);
  std::iota(win.begin(), win.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_window(win));
  } while (std::next_permutation(win.begin(), win.end()));
  return out;
}

}  // namespace schubert
