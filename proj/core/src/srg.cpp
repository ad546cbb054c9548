#include "hepta/srg.hpp"

#include <algorithm>

#include "hepta/properties.hpp"

namespace hepta {

std::string to_string(SrgFailure f) {
  switch (f) {
    case SrgFailure::none: return "none";
    case SrgFailure::too_small: return "too_small";
    case SrgFailure::edgeless: return "edgeless";
    case SrgFailure::complete: return "complete";
    case SrgFailure::not_regular: return "not_regular";
    case SrgFailure::lambda_mismatch: return "lambda_mismatch";
    case SrgFailure::mu_mismatch: return "mu_mismatch";
  }
  return "unknown";
}

std::optional<SrgParams> SrgVerdict::family_params() const {
  if (!is_srg || !params || params->lambda != kLambda || params->mu != kMu) return std::nullopt;
  return SrgParams::make(params->n, params->k);
}

std::string SrgVerdict::describe() const {
  if (is_srg)
    return "srg(" + std::to_string(params->n) + "," + std::to_string(params->k) + "," +
           std::to_string(params->lambda) + "," + std::to_string(params->mu) + ")";
  switch (reason) {
    case SrgFailure::not_regular:
      return "vertex " + std::to_string(witness_u) + " has degree " + std::to_string(observed) +
             " != " + std::to_string(expected);
    case SrgFailure::lambda_mismatch:
      return "adjacent pair (" + std::to_string(witness_u) + "," + std::to_string(witness_v) +
             ") has " + std::to_string(observed) + " common neighbors, expected " +
             std::to_string(expected);
    case SrgFailure::mu_mismatch:
      return "non-adjacent pair (" + std::to_string(witness_u) + "," + std::to_string(witness_v) +
             ") has " + std::to_string(observed) + " common neighbors, expected " +
             std::to_string(expected);
    default:
      return to_string(reason);
  }
}

SrgVerdict verify_srg(const HostGraph& host) {
  SrgVerdict v;
  const int n = host.order();
  if (n < 2) {
    v.reason = SrgFailure::too_small;
    return v;
  }

  int max_degree = 0;
  for (int u = 0; u < n; ++u) max_degree = std::max(max_degree, host.degree(u));
  for (int u = 0; u < n; ++u) {
    const int d = host.degree(u);
    if (d != max_degree) {
      v.reason = SrgFailure::not_regular;
      v.witness_u = u;
      v.observed = d;
      v.expected = max_degree;
      return v;
    }
  }
  const int k = max_degree;
  if (k == 0) {
    v.reason = SrgFailure::edgeless;
    return v;
  }
  if (k == n - 1) {
    v.reason = SrgFailure::complete;
    return v;
  }

  std::optional<int> lambda;
  std::optional<int> mu;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int common = host.common_neighbors(a, b);
      const bool adj = host.adjacent(a, b);
      auto& want = adj ? lambda : mu;
      if (!want) want = common;
      if (common != *want) {
        v.reason = adj ? SrgFailure::lambda_mismatch : SrgFailure::mu_mismatch;
        v.witness_u = a;
        v.witness_v = b;
        v.observed = common;
        v.expected = *want;
        return v;
      }
    }
  }
  v.is_srg = true;
  v.params = SrgSignature{n, k, lambda.value_or(0), mu.value_or(0)};
  return v;
}

}  // namespace hepta
