#include "hepta/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hepta/properties.hpp"

namespace hepta {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

void fnv_mix(std::uint64_t& h, std::uint32_t value) {
  for (int b = 0; b < 4; ++b) {
    h ^= (value >> (8 * b)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

Catalog::Catalog(int order, bool hamiltonian_only, std::vector<CatalogEntry> entries)
    : order_(order), hamiltonian_only_(hamiltonian_only), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;
    return a.canon.bits < b.canon.bits;
  });
  hash_ = kFnvOffset;
  fnv_mix(hash_, static_cast<std::uint32_t>(order_));
  fnv_mix(hash_, hamiltonian_only_ ? 1u : 0u);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i].id = static_cast<int>(i);
    fnv_mix(hash_, entries_[i].canon.bits);
  }
}

std::optional<int> Catalog::find(const CanonKey& key) const {
  for (const auto& e : entries_)
    if (e.canon == key) return e.id;
  return std::nullopt;
}

std::optional<int> Catalog::cycle_id() const {
  if (order_ < 3) return std::nullopt;
  return find(canonical_form(cycle_graph(order_)));
}

Catalog generate_catalog(int order, bool hamiltonian_only) {
  if (order < 3 || order > 7)
    throw std::out_of_range("catalog order must be in [3,7], got " + std::to_string(order));

  const Code code_count = Code{1} << pair_count(order);
  std::vector<bool> seen(code_count, false);
  const auto perms = permutations(order);
  std::vector<CatalogEntry> entries;

  for (Code code = 0; code < code_count; ++code) {
    if (seen[code]) continue;
    const SmallGraph g = SmallGraph::from_code(order, code);
    if (!admissible(g)) continue;
    const bool ham = is_hamiltonian(g);
    if (hamiltonian_only && !ham) continue;

    for (const auto& p : perms) seen[relabel_code(order, code, p)] = true;

    const CanonKey key = canonical_form(g);
    entries.push_back(CatalogEntry{
        .id = 0,
        .graph = key.graph(),
        .canon = key,
        .edge_count = g.edge_count(),
        .hamiltonian = ham,
        .automorphism_count = automorphism_count(g),
    });
  }
  return Catalog(order, hamiltonian_only, std::move(entries));
}

}  // namespace hepta
