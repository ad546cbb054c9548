#pragma once

#include "hepta/small_graph.hpp"

namespace hepta {

// Common-neighbor bounds an induced subgraph of an srg(n,k,1,2) must respect.
inline constexpr int kLambda = 1;
inline constexpr int kMu = 2;

/// True iff g has a spanning cycle. Throws std::domain_error for order < 3.
bool is_hamiltonian(const SmallGraph& g);

/// Adjacent pairs share at most one neighbor inside g, non-adjacent pairs at most two.
bool admissible(const SmallGraph& g);

bool is_connected(const SmallGraph& g);

}  // namespace hepta
