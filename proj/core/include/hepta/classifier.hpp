#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "hepta/catalog.hpp"
#include "hepta/small_graph.hpp"

namespace hepta {

inline constexpr std::uint8_t kNoClass = 0xFF;
inline constexpr int kClassifierOrder = 7;
inline constexpr std::size_t kClassifierSize = std::size_t{1} << pair_count(kClassifierOrder);

/// Lookup table from every labeled 7-vertex code to a catalog id or kNoClass.
class Classifier {
 public:
  Classifier(std::uint64_t catalog_hash, int class_count, std::vector<std::uint8_t> table);

  int order() const { return kClassifierOrder; }
  std::uint64_t catalog_hash() const { return catalog_hash_; }
  int class_count() const { return class_count_; }
  std::span<const std::uint8_t> table() const { return table_; }
  std::uint8_t lookup(Code code) const noexcept { return table_[code]; }

  /// Persisted layout, little-endian: "HEPTACLS", u32 version, u32 order,
  /// u64 catalog hash, u32 class count, u64 table length, then one byte per code.
  void save(const std::filesystem::path& path) const;
  /// Empty when the file is missing, malformed or built for another catalog.
  static std::optional<Classifier> load(const std::filesystem::path& path,
                                        std::uint64_t expected_hash);

 private:
  std::uint64_t catalog_hash_;
  int class_count_;
  std::vector<std::uint8_t> table_;
};

/// Fills the table by marking every relabeling of each catalog entry.
/// The catalog must be the order-7 Hamiltonian catalog.
Classifier build_classifier(const Catalog& catalog);

/// Reuses a cached table keyed by catalog content hash, rebuilding and
/// re-saving on a miss. Cache write failures are ignored.
Classifier load_or_build_classifier(const Catalog& catalog, const std::filesystem::path& cache_dir);

/// $HEPTA_CACHE_DIR, else $XDG_CACHE_HOME/hepta, else $HOME/.cache/hepta.
std::filesystem::path default_cache_dir();

std::optional<int> classify(const Classifier& classifier, const SmallGraph& g);

}  // namespace hepta
