#ifndef SCHUBERT_PARTITION_HPP
#define SCHUBERT_PARTITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-based part access; parts beyond the last are 0.
  int part(int i) const;
  /// |lambda|, the number of cells.
  int size() const;

  /// Componentwise containment mu <= lambda.
  bool contains(const Partition& mu) const;
  Partition conjugate() const;

  std::string to_string() const;  // "(2,1)", "()" for empty
  static Partition parse(std::string_view text);

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in a deterministic order.
std::vector<Partition> partitions_of(int n);

/// All partitions fitting in a rows x cols box (including the empty one).
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Skew shape outer/inner with inner contained in outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition out, Partition in);
  int size() const { return outer.size() - inner.size(); }
  /// Cells (row, col), 1-based, row-major.
  std::vector<std::pair<int, int>> cells() const;
};

}  // namespace schubert

#endif
