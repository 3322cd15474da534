#include "schubert/cache.hpp"

#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "schubert/io.hpp"
#include "schubert/schubert_basis.hpp"

namespace schubert {

using nlohmann::json;

DiskCache::DiskCache(std::filesystem::path dir)
    : dir_(std::move(dir)), file_(dir_ / "cache.jsonl") {}

std::filesystem::path DiskCache::default_dir() {
  if (const char* env = std::getenv("SCHUBERT_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".schubert-cache");
}

size_t DiskCache::load() {
  std::ifstream in(file_);
  if (!in) return 0;
  size_t loaded = 0;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json rec = json::parse(line);
      std::string type = rec.at("type").get<std::string>();
      if (type == "schubert") {
        Permutation w = Permutation::parse(rec.at("perm").get<std::string>());
        memo_preload_schubert(w, polynomial_from_json(rec.at("poly")));
      } else if (type == "product") {
        Permutation u = Permutation::parse(rec.at("u").get<std::string>());
        Permutation v = Permutation::parse(rec.at("v").get<std::string>());
        memo_preload_product(u, v, expansion_from_json(rec.at("expansion")));
      } else {
        throw std::invalid_argument("unknown record type");
      }
      ++loaded;
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping corrupt cache record at " << file_.string() << ":" << lineno
                << " (" << e.what() << ")\n";
    }
  }
  return loaded;
}

void DiskCache::append_line(const std::string& line) {
  std::FILE* f = std::fopen(file_.string().c_str(), "a");
  if (!f) return;
  flock(fileno(f), LOCK_EX);
  std::fwrite(line.data(), 1, line.size(), f);
  std::fputc('\n', f);
  std::fflush(f);
  flock(fileno(f), LOCK_UN);
  std::fclose(f);
}

void DiskCache::install() {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  {
    std::FILE* probe = std::fopen(file_.string().c_str(), "a");
    if (!probe) {
      std::cerr << "warning: cache directory " << dir_.string()
                << " is not writable; running without a cache\n";
      return;
    }
    std::fclose(probe);
  }
  auto file = file_;
  set_compute_observers(
      [file](const Permutation& w, const SparsePolynomial& f) {
        json rec{{"type", "schubert"}, {"perm", w.to_oneline()}, {"poly", to_json(f)}};
        DiskCache cache(file.parent_path());
        cache.append_line(rec.dump());
      },
      [file](const Permutation& u, const Permutation& v, const SchubertExpansion& e) {
        json rec{{"type", "product"},
                 {"u", u.to_oneline()},
                 {"v", v.to_oneline()},
                 {"expansion", to_json(e)}};
        DiskCache cache(file.parent_path());
        cache.append_line(rec.dump());
      });
}

void DiskCache::uninstall() { set_compute_observers(nullptr, nullptr); }

DiskCache::Stats DiskCache::stats() const {
  Stats s;
  std::ifstream in(file_);
  if (!in) return s;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      json rec = json::parse(line);
      std::string type = rec.at("type").get<std::string>();
      if (type == "schubert")
        ++s.schubert_records;
      else if (type == "product")
        ++s.product_records;
      else
        ++s.malformed;
    } catch (const std::exception&) {
      ++s.malformed;
    }
  }
  return s;
}

void DiskCache::clear() {
  std::error_code ec;
  std::filesystem::remove(file_, ec);
}

}  // namespace schubert
