#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hepta/canon.hpp"
#include "hepta/small_graph.hpp"

namespace hepta {

struct CatalogEntry {
  int id = 0;
  SmallGraph graph{1};
  CanonKey canon;
  int edge_count = 0;
  bool hamiltonian = false;
  std::uint64_t automorphism_count = 0;
};

/// Isomorphism classes of admissible graphs of one order, sorted by
/// (edge_count, canon.bits); an entry's id is its position.
class Catalog {
 public:
  Catalog(int order, bool hamiltonian_only, std::vector<CatalogEntry> entries);

  int order() const { return order_; }
  bool hamiltonian_only() const { return hamiltonian_only_; }
  std::span<const CatalogEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const CatalogEntry& operator[](int id) const { return entries_.at(id); }

  std::optional<int> find(const CanonKey& key) const;
  /// Id of the cycle through all `order` vertices, if catalogued.
  std::optional<int> cycle_id() const;

  /// FNV-1a over order, filter flag and the sorted canonical keys.
  std::uint64_t content_hash() const { return hash_; }

 private:
  int order_;
  bool hamiltonian_only_;
  std::vector<CatalogEntry> entries_;
  std::uint64_t hash_;
};

/// Exhaustive sweep over all labeled graphs of `order` (3..7), keeping one
/// representative per isomorphism class of admissible (and, if requested,
/// Hamiltonian) graphs.
Catalog generate_catalog(int order, bool hamiltonian_only);

}  // namespace hepta
