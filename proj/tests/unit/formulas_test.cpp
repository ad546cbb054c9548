#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hepta/catalog.hpp"
#include "hepta/census.hpp"
#include "hepta/classifier.hpp"
#include "hepta/construct.hpp"
#include "hepta/formulas.hpp"

namespace hepta {
namespace {

const SrgParams kRook = SrgParams::make(9, 4);
const SrgParams kConway = SrgParams::make(99, 14);

// Feasibility through the textbook multiplicity formula
// f = -k(s+1)(k-s) / ((k+rs)(r-s)) with eigenvalues r, s = (-1 +- t)/2.
std::vector<std::pair<std::int64_t, std::int64_t>> feasible_by_eigenvalues(std::int64_t k_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = 3; k <= k_max; ++k) {
    if (k % 2) continue;
    const std::int64_t n = 1 + k + k * (k - 2) / 2;
    std::int64_t t = 0;
    while (t * t < 4 * k - 7) ++t;
    if (t * t != 4 * k - 7) continue;
    const Rational r(-1 + t, 2), s(-1 - t, 2), kk(k);
    const Rational f = -kk * (s + 1) * (kk - s) / ((kk + r * s) * (r - s));
    const Rational g = Rational(n - 1) - f;
    if (f.get_den() == 1 && g.get_den() == 1 && f >= 0 && g >= 0) out.emplace_back(n, k);
  }
  return out;
}

TEST(Params, NOfK) {
  EXPECT_EQ(n_of_k(4), 9);
  EXPECT_EQ(n_of_k(14), 99);
  EXPECT_EQ(n_of_k(22), 243);
  EXPECT_THROW(n_of_k(5), std::domain_error);
  EXPECT_THROW(n_of_k(2), std::domain_error);
}

TEST(Params, MakeValidates) {
  EXPECT_NO_THROW(SrgParams::make(243, 22));
  EXPECT_THROW(SrgParams::make(10, 4), std::invalid_argument);
  EXPECT_THROW(SrgParams::make(3, 2), std::invalid_argument);
}

TEST(Params, FeasibleUpToThousand) {
  std::vector<std::pair<std::int64_t, std::int64_t>> got;
  for (const auto& p : feasible_params(1000)) {
    got.emplace_back(p.n, p.k);
    EXPECT_EQ(n_of_k(p.k), p.n);
  }
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {
      {9, 4}, {99, 14}, {243, 22}, {6273, 112}, {494019, 994}};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got, feasible_by_eigenvalues(1000));
}

TEST(Params, EightIsExcluded) {
  // 4k - 7 = 25 is square but the multiplicities (32 +- 16/5)/2 are not integers.
  for (const auto& p : feasible_params(20)) EXPECT_NE(p.k, 8);
}

TEST(EvaluateH, RookAtZero) {
  const FormulaTable t = evaluate_h(kRook, {0, 0});
  for (int i = 0; i < kFormulaCount; ++i) {
    const Rational expected = (i == 12 || i == 17) ? 18 : 0;
    EXPECT_EQ(t.h[i], expected) << "h_" << i;
  }
  EXPECT_TRUE(t.negative.empty());
  EXPECT_TRUE(t.non_integral.empty());
  Rational sum = 0;
  for (const auto& v : t.h) sum += v;
  EXPECT_EQ(sum, 36);
}

TEST(EvaluateH, ConwaySeventeen) {
  for (std::uint64_t n3 : {0u, 1u, 17u, 4158u})
    EXPECT_EQ(evaluate_h(kConway, {n3, 2 * n3}).h[17], Rational(4158) - Rational(n3));
}

TEST(EvaluateH, FlagsNegativeAndFractional) {
  const FormulaTable t = evaluate_h(kRook, {0, 2});
  EXPECT_EQ(t.h[18], Rational(-1, 2));
  EXPECT_EQ(t.h[12], Rational(37, 2));
  EXPECT_EQ(t.non_integral, (std::vector<int>{12, 18}));
  EXPECT_FALSE(t.negative.empty());
}

TEST(EvaluateH, EncodedTableIdentities) {
  const auto feasible = feasible_params(1000);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const SrgParams p = feasible[rng() % feasible.size()];
    const std::uint64_t n3 = rng() % 1'000'001;
    // h11 in [2 n3, 4 n3] and divisible by 4.
    const std::uint64_t lo = (2 * n3 + 3) / 4, hi = n3;
    const std::uint64_t h11 = 4 * (lo + (hi >= lo ? rng() % (hi - lo + 1) : 0));
    ASSERT_TRUE(check_bounds({n3, h11}));
    const FormulaTable t = evaluate_h(p, {n3, h11});
    const Rational q3(mpz_class(static_cast<unsigned long>(n3)));
    const Rational q11(mpz_class(static_cast<unsigned long>(h11)));
    EXPECT_EQ(t.h[10], 2 * q3);
    EXPECT_EQ(t.h[14], 2 * t.h[10]);
    EXPECT_EQ(t.h[15], t.h[10]);
    EXPECT_EQ(t.h[13], q11 / 2);
    EXPECT_EQ(t.h[16] + 2 * t.h[18], q11 / 2);
    EXPECT_EQ(t.h[11], q11);
    EXPECT_TRUE(check_integrality(p, {n3, h11}).empty());
  }
}

TEST(EvaluateP, Rook) {
  const PolygonFormulas p = evaluate_p(kRook);
  EXPECT_EQ(p.p3, 6);
  EXPECT_EQ(p.p4, 9);
  EXPECT_EQ(p.p5, 0);
  EXPECT_EQ(p.p6_lower, 6);
  EXPECT_EQ(p.p7_upper, 0);
}

TEST(EvaluateP, ConwayTriangles) { EXPECT_EQ(evaluate_p(kConway).p3, 231); }

TEST(EvaluateP, SevenGonBoundIsHZeroAtZero) {
  for (const auto& p : feasible_params(1000))
    EXPECT_EQ(evaluate_p(p).p7_upper, evaluate_h(p, {0, 0}).h[0]) << p.k;
}

TEST(Bounds, Examples) {
  EXPECT_TRUE(check_bounds({0, 0}));
  EXPECT_FALSE(check_bounds({1, 1}));
  EXPECT_FALSE(check_bounds({1, 5}));
  EXPECT_TRUE(check_bounds({1, 2}));
  EXPECT_TRUE(check_bounds({1, 4}));
  EXPECT_TRUE(check_bounds({UINT64_MAX / 2, UINT64_MAX}));
}

TEST(Integrality, Examples) {
  const auto bad = check_integrality(kRook, {0, 2});
  std::set<std::string> names;
  for (const auto& v : bad) names.insert(v.formula);
  EXPECT_EQ(names, (std::set<std::string>{"h_12", "h_18"}));
  for (const auto& v : bad) {
    if (v.formula == "h_12") EXPECT_EQ(v.value, Rational(37, 2));
    if (v.formula == "h_18") EXPECT_EQ(v.value, Rational(-1, 2));
  }
  EXPECT_TRUE(check_integrality(kRook, {0, 0}).empty());
  EXPECT_TRUE(check_integrality(kConway, {1, 4}).empty());
}

class Fit : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    catalog_ = new Catalog(generate_catalog(7, true));
    const Classifier classifier = build_classifier(*catalog_);
    rook_ = new CountVector(census_subsets(construct("rook3x3"), classifier));
  }
  static void TearDownTestSuite() {
    delete rook_;
    delete catalog_;
  }
  static inline Catalog* catalog_ = nullptr;
  static inline CountVector* rook_ = nullptr;
};

TEST_F(Fit, RookMatchesAtZero) {
  const FitResult fit = fit_and_verify(*rook_, *catalog_, kRook);
  EXPECT_TRUE(fit.matched);
  ASSERT_TRUE(fit.fitted);
  EXPECT_EQ(*fit.fitted, (FreeVars{0, 0}));
  EXPECT_EQ(fit.matching_candidates, (std::vector<FreeVars>{FreeVars{0, 0}}));
  EXPECT_TRUE(fit.bounds_ok);
  EXPECT_TRUE(fit.integrality.empty());
  ASSERT_EQ(fit.per_index.size(), 19u);
  EXPECT_EQ(fit.per_index[0].catalog_id, *catalog_->cycle_id());
  std::set<int> ids;
  for (const auto& m : fit.per_index) {
    EXPECT_EQ(m.predicted, Rational(mpz_class(static_cast<unsigned long>(m.measured))));
    ids.insert(m.catalog_id);
  }
  EXPECT_EQ(ids.size(), 19u);
  EXPECT_EQ(fit.per_index[12].measured, 18u);
  EXPECT_EQ(fit.per_index[17].measured, 18u);
}

TEST_F(Fit, PerturbedCountFails) {
  CountVector bumped = *rook_;
  ++bumped.counts[3];
  EXPECT_FALSE(fit_and_verify(bumped, *catalog_, kRook).matched);
}

TEST_F(Fit, AllZeroFails) {
  CountVector zero = *rook_;
  std::fill(zero.counts.begin(), zero.counts.end(), 0);
  const FitResult fit = fit_and_verify(zero, *catalog_, kRook);
  EXPECT_FALSE(fit.matched);
  EXPECT_TRUE(fit.matching_candidates.empty());
}

TEST_F(Fit, RejectsForeignInputs) {
  EXPECT_THROW(fit_and_verify(*rook_, *catalog_, kConway), std::invalid_argument);
  CountVector other = *rook_;
  other.catalog_hash ^= 1;
  EXPECT_THROW(fit_and_verify(other, *catalog_, kRook), std::invalid_argument);
}

TEST_F(Fit, SyntheticCensusFromTheTableIsRecovered) {
  // A census built from the table itself, with the classes assigned in a
  // shuffled order, must be recovered whenever the free variables are in range.
  const FreeVars truth{3, 8};
  const FormulaTable t = evaluate_h(kConway, truth);
  ASSERT_TRUE(t.negative.empty());
  CountVector v = *rook_;
  v.host_order = 99;
  v.host_degree = 14;
  const int cycle = *catalog_->cycle_id();
  std::vector<int> ids;
  for (int id = 0; id < 19; ++id)
    if (id != cycle) ids.push_back(id);
  std::mt19937_64 rng(8);
  std::shuffle(ids.begin(), ids.end(), rng);
  v.counts[cycle] = t.h[0].get_num().get_ui();
  for (int i = 1; i < kFormulaCount; ++i) v.counts[ids[i - 1]] = t.h[i].get_num().get_ui();
  const FitResult fit = fit_and_verify(v, *catalog_, kConway);
  EXPECT_TRUE(fit.matched);
  EXPECT_NE(std::find(fit.matching_candidates.begin(), fit.matching_candidates.end(), truth),
            fit.matching_candidates.end());
}

}  // namespace
}  // namespace hepta
