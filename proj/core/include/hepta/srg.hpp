#pragma once

#include <optional>
#include <string>

#include "hepta/formulas.hpp"
#include "hepta/host_graph.hpp"

namespace hepta {

struct SrgSignature {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
  bool operator==(const SrgSignature&) const = default;
};

enum class SrgFailure {
  none,
  too_small,
  edgeless,
  complete,
  not_regular,
  lambda_mismatch,
  mu_mismatch,
};

std::string to_string(SrgFailure f);

/// Outcome of verify_srg. On failure the witness names the offending vertex
/// (not_regular: u with degree `observed`, `expected` is the maximum degree) or
/// pair (lambda/mu mismatch: u, v with `observed` common neighbors where
/// `expected` were required).
struct SrgVerdict {
  bool is_srg = false;
  std::optional<SrgSignature> params;
  SrgFailure reason = SrgFailure::none;
  int witness_u = -1;
  int witness_v = -1;
  int observed = 0;
  int expected = 0;

  /// Set when the host belongs to the srg(n,k,1,2) family.
  std::optional<SrgParams> family_params() const;
  std::string describe() const;
};

SrgVerdict verify_srg(const HostGraph& host);

}  // namespace hepta
