#ifndef SCHUBERT_CACHE_HPP
#define SCHUBERT_CACHE_HPP

#include <filesystem>
#include <string>

namespace schubert {

/// Append-only JSON-lines store of computed Schubert polynomials and product
/// expansions.  A pure accelerator: results are identical with the cache
/// disabled.  Malformed lines are skipped with a warning.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  /// $SCHUBERT_CACHE_DIR, or ".schubert-cache" when unset.
  static std::filesystem::path default_dir();

  /// Preload valid records into the in-memory memo tables.
  /// Returns the number of records loaded.
  size_t load();

  /// Register write-through observers so fresh computations are appended.
  /// If the directory is not writable, warns and leaves caching off.
  void install();
  static void uninstall();

  struct Stats {
    size_t schubert_records = 0;
    size_t product_records = 0;
    size_t malformed = 0;
  };
  Stats stats() const;

  void clear();
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path dir_;
  std::filesystem::path file_;
  void append_line(const std::string& line);
};

}  // namespace schubert

#endif
