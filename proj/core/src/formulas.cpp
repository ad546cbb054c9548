#include "hepta/formulas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hepta {
namespace {

Rational from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Rational(mpz_class(static_cast<unsigned long>(v)));
}

Rational from_i64(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return Rational(mpz_class(static_cast<long>(v)));
}

std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

SrgParams SrgParams::make(std::int64_t n, std::int64_t k) {
  if (!(n > k && k > 2))
    throw std::invalid_argument("srg(n,k,1,2) needs n > k > 2");
  if (k * (k - 2) != 2 * (n - k - 1))
    throw std::invalid_argument("srg(n,k,1,2) needs k(k-2) = 2(n-k-1); got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  return SrgParams{n, k};
}

std::int64_t n_of_k(std::int64_t k) {
  if (k < 3) throw std::domain_error("k must be at least 3");
  if ((k * (k - 2)) % 2 != 0)
    throw std::domain_error("k(k-2) is odd for k=" + std::to_string(k) + "; no integer n");
  return 1 + k + k * (k - 2) / 2;
}

std::vector<SrgParams> feasible_params(std::int64_t k_max) {
  std::vector<SrgParams> out;
  for (std::int64_t k = 3; k <= k_max; ++k) {
    const std::int64_t disc = 4 * k - 7;
    const std::int64_t s = isqrt(disc);
    if (s * s != disc || k % 2 != 0) continue;
    const std::int64_t n = n_of_k(k);
    const std::int64_t shift = (n - 1) - 2 * k;
    if (shift % s != 0) continue;
    const std::int64_t t = shift / s;
    const std::int64_t f = (n - 1) + t;
    const std::int64_t g = (n - 1) - t;
    if (f % 2 != 0 || g % 2 != 0 || f < 0 || g < 0) continue;
    out.push_back(SrgParams::make(n, k));
  }
  return out;
}

FormulaTable evaluate_h(const SrgParams& params, const FreeVars& fv) {
  const Rational n = from_i64(params.n);
  const Rational k = from_i64(params.k);
  const Rational n3 = from_u64(fv.n3);
  const Rational h11 = from_u64(fv.h11);
  const Rational a = n * k * (k - 2);  // nk(k-2)
  const Rational b = a * (k - 4);      // nk(k-2)(k-4)
  const Rational half(1, 2);
  const Rational quarter(1, 4);

  FormulaTable t;
  auto& h = t.h;
  h[0] = b * (2 * k * k - 30 * k + 133) / 14 - 10 * n3 - h11;
  h[1] = a * (2 * k * k - 25 * k + 68) / 2 + 16 * n3 + Rational(3, 2) * h11;
  h[2] = b * (k - 8) + 12 * n3 + Rational(5, 2) * h11;
  h[3] = b - 2 * n3 - half * h11;
  h[4] = b - 4 * n3;
  h[5] = half * b - half * h11;
  h[6] = b - 8 * n3;
  h[7] = half * b - Rational(3, 2) * h11;
  h[8] = 2 * b - 8 * n3 - 2 * h11;
  h[9] = b - 2 * n3 - Rational(3, 2) * h11;
  h[10] = 2 * n3;
  h[11] = h11;
  h[12] = quarter * a - n3 + quarter * h11;
  h[13] = half * h11;
  h[14] = 4 * n3;
  h[15] = 2 * n3;
  h[16] = h11 - 2 * n3;
  h[17] = quarter * a - n3;
  h[18] = n3 - quarter * h11;
  for (auto& v : h) v.canonicalize();

  for (int i = 0; i < kFormulaCount; ++i) {
    if (h[i] < 0) t.negative.push_back(i);
    if (!is_integer(h[i])) t.non_integral.push_back(i);
  }

  const PolygonFormulas p = evaluate_p(params);
  t.p3 = p.p3;
  t.p4 = p.p4;
  t.p5 = p.p5;
  t.p6_lower = p.p6_lower;
  t.p7_upper = p.p7_upper;
  return t;
}

PolygonFormulas evaluate_p(const SrgParams& params) {
  const Rational n = from_i64(params.n);
  const Rational k = from_i64(params.k);
  const Rational a = n * k * (k - 2);
  PolygonFormulas p;
  p.p3 = n * k / 6;
  p.p4 = a / 8;
  p.p5 = a * (k - 4) / 5;
  p.p6_lower = a * (2 * k * k - 21 * k + 53) / 12;
  p.p7_upper = a * (k - 4) * (2 * k * k - 30 * k + 133) / 14;
  for (Rational* q : {&p.p3, &p.p4, &p.p5, &p.p6_lower, &p.p7_upper}) q->canonicalize();
  return p;
}

bool check_bounds(const FreeVars& fv) {
  // Compare in 128 bits so 4*n3 cannot wrap.
  const unsigned __int128 n3 = fv.n3;
  const unsigned __int128 h11 = fv.h11;
  return 2 * n3 <= h11 && h11 <= 4 * n3;
}

std::vector<IntegralityViolation> check_integrality(const SrgParams& params, const FreeVars& fv) {
  const FormulaTable t = evaluate_h(params, fv);
  std::vector<IntegralityViolation> out;
  for (int i : t.non_integral) out.push_back({"h_" + std::to_string(i), t.h[i]});
  if (!is_integer(t.p3)) out.push_back({"p_3", t.p3});
  if (!is_integer(t.p4)) out.push_back({"p_4", t.p4});
  if (!is_integer(t.p5)) out.push_back({"p_5", t.p5});
  return out;
}

FitResult fit_and_verify(const CountVector& measured, const Catalog& catalog,
                         const SrgParams& params) {
  if (measured.catalog_hash != catalog.content_hash() ||
      measured.counts.size() != catalog.size())
    throw std::invalid_argument("count vector was not produced for this catalog");
  if (measured.host_order != params.n || !measured.host_degree ||
      *measured.host_degree != params.k)
    throw std::invalid_argument("host does not match srg(" + std::to_string(params.n) + "," +
                                std::to_string(params.k) + ",1,2)");
  const auto cycle = catalog.cycle_id();
  if (!cycle) throw std::invalid_argument("catalog has no cycle class");

  std::set<FreeVars> candidates{{0, 0}};
  for (auto c : measured.counts) {
    if (c % 2 != 0) continue;
    for (auto h : measured.counts) candidates.insert({c / 2, h});
  }

  std::vector<Rational> sorted_measured;
  for (auto c : measured.counts) sorted_measured.push_back(from_u64(c));
  std::sort(sorted_measured.begin(), sorted_measured.end());

  FitResult result;
  std::optional<FreeVars> closest;
  Rational closest_gap;
  for (const auto& fv : candidates) {
    if (!check_bounds(fv) || !check_integrality(params, fv).empty()) continue;
    ++result.candidates_tried;
    const FormulaTable t = evaluate_h(params, fv);
    std::vector<Rational> predicted(t.h.begin(), t.h.end());
    std::sort(predicted.begin(), predicted.end());

    Rational gap = 0;
    if (predicted.size() == sorted_measured.size()) {
      for (std::size_t i = 0; i < predicted.size(); ++i)
        gap += abs(predicted[i] - sorted_measured[i]);
    } else {
      gap = -1;
    }
    const bool multiset_equal = gap == 0;
    if (multiset_equal && t.h[0] == from_u64(measured.counts[*cycle]))
      result.matching_candidates.push_back(fv);
    if (gap >= 0 && (!closest || gap < closest_gap)) {
      closest = fv;
      closest_gap = gap;
    }
  }

  result.matched = !result.matching_candidates.empty();
  result.fitted = result.matched ? std::optional(result.matching_candidates.front()) : closest;
  const FreeVars report = result.fitted.value_or(FreeVars{0, 0});
  result.bounds_ok = check_bounds(report);
  result.integrality = check_integrality(params, report);

  // Pair formula indices with catalog ids: the cycle class is pinned to index
  // 0, then each index takes the lowest unused id with an equal count, and
  // any leftovers are paired in order.
  const FormulaTable t = evaluate_h(params, report);
  std::vector<int> id_for(kFormulaCount, -1);
  std::vector<bool> used(catalog.size(), false);
  id_for[0] = *cycle;
  used[*cycle] = true;
  for (int i = 1; i < kFormulaCount; ++i) {
    for (std::size_t id = 0; id < catalog.size(); ++id) {
      if (!used[id] && from_u64(measured.counts[id]) == t.h[i]) {
        id_for[i] = static_cast<int>(id);
        used[id] = true;
        break;
      }
    }
  }
  std::size_t spare = 0;
  for (int i = 1; i < kFormulaCount; ++i) {
    if (id_for[i] >= 0) continue;
    while (spare < catalog.size() && used[spare]) ++spare;
    if (spare == catalog.size()) break;
    id_for[i] = static_cast<int>(spare);
    used[spare] = true;
  }
  for (int i = 0; i < kFormulaCount; ++i) {
    IndexMatch m;
    m.formula_index = i;
    m.catalog_id = id_for[i];
    m.predicted = t.h[i];
    m.measured = id_for[i] >= 0 ? measured.counts[id_for[i]] : 0;
    result.per_index.push_back(m);
  }
  return result;
}

}  // namespace hepta
