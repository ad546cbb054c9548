#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hepta/catalog.hpp"
#include "hepta/census.hpp"

namespace hepta {

using Rational = mpq_class;

inline constexpr int kFormulaCount = 19;

/// Parameters of an srg(n, k, 1, 2); construction enforces k(k-2) = 2(n-k-1) and n > k > 2.
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;

  static SrgParams make(std::int64_t n, std::int64_t k);
  bool operator==(const SrgParams&) const = default;
};

/// The two counts the closed forms leave undetermined.
struct FreeVars {
  std::uint64_t n3 = 0;
  std::uint64_t h11 = 0;

  bool operator==(const FreeVars&) const = default;
  auto operator<=>(const FreeVars&) const = default;
};

struct FormulaTable {
  std::array<Rational, kFormulaCount> h;
  Rational p3, p4, p5, p6_lower, p7_upper;
  std::vector<int> negative;      // indices i with h_i < 0
  std::vector<int> non_integral;  // indices i with h_i not an integer
};

struct PolygonFormulas {
  Rational p3, p4, p5, p6_lower, p7_upper;
};

struct IntegralityViolation {
  std::string formula;  // "h_12", "p_5", ...
  Rational value;
};

struct IndexMatch {
  int formula_index = 0;
  int catalog_id = 0;
  Rational predicted;
  std::uint64_t measured = 0;
};

struct FitResult {
  bool matched = false;
  /// Smallest matching candidate; when nothing matches, the candidate closest
  /// to the measurement (or (0,0) if none survived filtering).
  std::optional<FreeVars> fitted;
  std::vector<FreeVars> matching_candidates;
  std::size_t candidates_tried = 0;
  /// Bijection formula index <-> catalog id used for the residual report;
  /// index 0 is always the cycle class.
  std::vector<IndexMatch> per_index;
  bool bounds_ok = false;
  std::vector<IntegralityViolation> integrality;
};

/// n = 1 + k + k(k-2)/2. Throws std::domain_error for odd k or k < 3.
std::int64_t n_of_k(std::int64_t k);

/// Every k in [3, k_max] with integral eigenvalue sqrt(4k-7) and integral,
/// nonnegative multiplicities.
std::vector<SrgParams> feasible_params(std::int64_t k_max);

FormulaTable evaluate_h(const SrgParams& params, const FreeVars& fv);
PolygonFormulas evaluate_p(const SrgParams& params);

/// 2*n3 <= h11 <= 4*n3.
bool check_bounds(const FreeVars& fv);

/// Non-integral values among h_0..h_18 and p_3..p_5.
std::vector<IntegralityViolation> check_integrality(const SrgParams& params, const FreeVars& fv);

/// Fits (n3, h11) to a measured order-7 Hamiltonian census and checks the
/// multiset of all 19 closed forms against it. Throws std::invalid_argument
/// when the census does not belong to `catalog` or its host disagrees with
/// `params`.
FitResult fit_and_verify(const CountVector& measured, const Catalog& catalog,
                         const SrgParams& params);

std::string to_string(const Rational& q);

}  // namespace hepta
