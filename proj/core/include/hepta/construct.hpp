#pragma once

#include <cstdint>
#include <string_view>

#include "hepta/host_graph.hpp"

namespace hepta {

/// Builds a named graph with a fixed labeling:
///   rook3x3      cell (r, c) of the 3x3 grid is vertex 3r + c
///   paley9       element a + b*i of GF(9) = GF(3)[i]/(i^2 + 1) is vertex a + 3b
///   paley5       residue r mod 5 is vertex r (also accepted: paley(5), paley(9))
///   cycle(m)     vertex v adjacent to v +- 1 mod m, m >= 3
///   complete(m)  K_m, m >= 1
/// Throws std::invalid_argument for anything else.
HostGraph construct(std::string_view name);

struct EdgeProbability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Independent-edge random graph. Pairs (i, j), i < j, are visited row-major;
/// each draws one raw 64-bit output u of std::mt19937_64 seeded with `seed`
/// and becomes an edge iff u * den < num * 2^64. The raw engine sequence is
/// fixed by the C++ standard, so output is identical on every platform.
HostGraph random_graph(int order, EdgeProbability p, std::uint64_t seed);

/// Seeded random `degree`-regular graph: the circulant with offsets
/// 1..degree/2 (plus n/2 for odd degree), randomized by 20 * |E| attempted
/// degree-preserving double-edge swaps driven by std::mt19937_64.
HostGraph random_regular(int order, int degree, std::uint64_t seed);

}  // namespace hepta
