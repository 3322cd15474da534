#include "schubert/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition part index is 1-based");
  return i <= num_parts() ? parts_[i - 1] : 0;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.num_parts() > num_parts()) return false;
  for (int i = 0; i < mu.num_parts(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) conj[j]++;
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in partition");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty() || s == "-") return {};
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string tok = s.substr(pos, next - pos);
    if (tok.empty()) throw std::invalid_argument("empty partition entry");
    parts.push_back(std::stoi(tok));
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int max_part) -> void {
    out.emplace_back(cur);
    if (row == rows) return;
    for (int p = max_part; p >= 1; --p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, cols);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner)) throw std::invalid_argument("skew shape requires inner <= outer");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
  std::vector<std::pair<int, int>> cs;
  for (int i = 1; i <= outer.num_parts(); ++i)
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cs.emplace_back(i, j);
  return cs;
}

}  // namespace schubert
