#include "schubert/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

#include "schubert/permutation.hpp"
#include "schubert/schubert_basis.hpp"

namespace schubert {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("empty row inside tableau");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size())
      throw std::invalid_argument("row lengths must weakly decrease");
    for (int v : rows_[i])
      if (v < 1) throw std::invalid_argument("tableau entries must be positive");
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

int Tableau::entry(int row, int col) const {
  if (row < 1 || row > static_cast<int>(rows_.size()) || col < 1 ||
      col > static_cast<int>(rows_[row - 1].size()))
    throw std::out_of_range("tableau cell out of range");
  return rows_[row - 1][col - 1];
}

bool Tableau::is_semistandard() const {
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
      if (i > 0 && rows_[i - 1][j] >= rows_[i][j]) return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  int n = size();
  std::vector<bool> seen(n + 1, false);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      int v = rows_[i][j];
      if (v > n || seen[v]) return false;
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v) return false;
      if (i > 0 && rows_[i - 1][j] >= v) return false;
    }
  return true;
}

std::string Tableau::to_string() const {
  std::string s;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ';';
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row;
  std::string tok;
  auto flush_tok = [&] {
    if (!tok.empty()) {
      row.push_back(std::stoi(tok));
      tok.clear();
    }
  };
  for (char c : text) {
    if (isdigit(static_cast<unsigned char>(c))) {
      tok += c;
    } else if (c == ',') {
      flush_tok();
    } else if (c == ';') {
      flush_tok();
      rows.push_back(std::move(row));
      row.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("unexpected character in tableau");
    }
  }
  flush_tok();
  if (!row.empty()) rows.push_back(std::move(row));
  return Tableau(std::move(rows));
}

std::pair<Tableau, Tableau> schensted(const Word& word) {
  std::vector<std::vector<int>> p, q;
  for (size_t step = 0; step < word.size(); ++step) {
    int x = word[step];
    if (x < 1) throw std::invalid_argument("word letters must be positive");
    size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(*it, x);  // bump and continue one row down
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

Int syt_count(const Partition& shape) {
  static std::map<Partition, Int> memo;
  if (shape.empty()) return 1;
  auto it = memo.find(shape);
  if (it != memo.end()) return it->second;
  Int total = 0;
  const auto& parts = shape.parts();
  for (int i = 0; i < shape.num_parts(); ++i) {
    bool removable = (i + 1 == shape.num_parts()) || parts[i] > parts[i + 1];
    if (!removable) continue;
    std::vector<int> smaller = parts;
    smaller[i] -= 1;
    total += syt_count(Partition(std::move(smaller)));
  }
  memo.emplace(shape, total);
  return total;
}

Int lr_coefficient(const Partition& mu, const Partition& lambda, const Partition& nu, int k) {
  if (mu.num_parts() > k || lambda.num_parts() > k || nu.num_parts() > k)
    throw std::invalid_argument("partition has more than k parts");
  if (nu.size() != mu.size() + lambda.size()) return 0;
  return structure_constant(grassmannian(mu, k), grassmannian(lambda, k), grassmannian(nu, k));
}

Word reading_word(const Tableau& t) {
  Word w;
  const auto& rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    for (int v : *it) w.push_back(v);
  return w;
}

Word diagonal_word(const Tableau& t) {
  const auto& rows = t.rows();
  if (rows.empty()) return {};
  int min_d = 1 - static_cast<int>(rows.size());
  int max_d = static_cast<int>(rows[0].size()) - 1;
  Word w;
  for (int d = min_d; d <= max_d; ++d) {
    std::vector<int> diag;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      int j = i + d;
      if (j >= 0 && j < static_cast<int>(rows[i].size())) diag.push_back(rows[i][j]);
    }
    std::sort(diag.begin(), diag.end());
    for (int v : diag) w.push_back(v);
  }
  return w;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  int nrows = shape.num_parts();
  std::vector<std::vector<int>> rows(nrows);
  for (int i = 0; i < nrows; ++i) rows[i].assign(shape.part(i + 1), 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == nrows) {
      out.emplace_back(rows);
      return;
    }
    int next_r = r, next_c = c + 1;
    if (next_c == static_cast<int>(rows[r].size())) {
      next_r = r + 1;
      next_c = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < static_cast<int>(rows[r - 1].size())) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[r][c] = v;
      rec(next_r, next_c);
    }
    rows[r][c] = 0;
  };
  if (nrows == 0) {
    out.emplace_back();
    return out;
  }
  rec(0, 0);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  int n = shape.size();
  int nrows = shape.num_parts();
  std::vector<std::vector<int>> rows(nrows);
  std::vector<int> filled(nrows, 0);  // cells filled per row
  for (int i = 0; i < nrows; ++i) rows[i].reserve(shape.part(i + 1));
  std::function<void(int)> rec = [&](int value) {
    if (value > n) {
      out.emplace_back(rows);
      return;
    }
    for (int r = 0; r < nrows; ++r) {
      if (filled[r] == shape.part(r + 1)) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column would break
      rows[r].push_back(value);
      filled[r]++;
      rec(value + 1);
      rows[r].pop_back();
      filled[r]--;
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  rec(1);
  return out;
}

SparsePolynomial schur_via_tableaux(const Partition& lambda, int k) {
  if (lambda.num_parts() > k) throw std::invalid_argument("partition has more than k parts");
  SparsePolynomial f;
  for (const auto& t : semistandard_tableaux(lambda, k)) {
    Exponents e(k, 0);
    for (const auto& row : t.rows())
      for (int v : row) e[v - 1]++;
    f.add_term(e, 1);
  }
  return f;
}

}  // namespace schubert
