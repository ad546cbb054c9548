#include "hepta/properties.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace hepta {

bool is_hamiltonian(const SmallGraph& g) {
  const int n = g.order();
  if (n < 3) throw std::domain_error("Hamiltonicity needs at least 3 vertices");
  // ends[mask]: vertices v such that some path from 0 visits exactly `mask` and stops at v.
  std::array<std::uint8_t, 1u << kMaxSmallOrder> ends{};
  ends[1] = 1;
  const unsigned full = (1u << n) - 1u;
  for (unsigned mask = 1; mask <= full; mask += 2) {
    const unsigned e = ends[mask];
    if (!e) continue;
    for (int v = 0; v < n; ++v) {
      if (!((e >> v) & 1u)) continue;
      unsigned next = g.row(v) & ~mask;
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ends[mask | (1u << w)] |= static_cast<std::uint8_t>(1u << w);
      }
    }
  }
  return (ends[full] & g.row(0)) != 0;
}

bool admissible(const SmallGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const int common = std::popcount(static_cast<unsigned>(g.row(u) & g.row(v)));
      if (common > (g.adjacent(u, v) ? kLambda : kMu)) return false;
    }
  }
  return true;
}

bool is_connected(const SmallGraph& g) {
  unsigned seen = 1;
  unsigned frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (unsigned f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.order()) - 1u;
}

}  // namespace hepta
