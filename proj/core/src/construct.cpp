#include "hepta/construct.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hepta {
namespace {

HostGraph rook3x3() {
  HostGraph g(9, "rook3x3");
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
  return g;
}

// GF(9) as pairs (a, b) meaning a + b*i with i^2 = -1.
HostGraph paley9() {
  auto mul = [](int x, int y) {
    const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    const int re = ((a * c - b * d) % 3 + 3) % 3;
    const int im = (a * d + b * c) % 3;
    return re + 3 * im;
  };
  auto sub = [](int x, int y) {
    const int re = ((x % 3) - (y % 3) + 3) % 3;
    const int im = ((x / 3) - (y / 3) + 3) % 3;
    return re + 3 * im;
  };
  std::array<bool, 9> square{};
  for (int x = 1; x < 9; ++x) square[mul(x, x)] = true;
  HostGraph g(9, "paley9");
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (square[sub(u, v)]) g.add_edge(u, v);
  return g;
}

HostGraph paley_prime(int p) {
  std::vector<bool> square(p, false);
  for (int x = 1; x < p; ++x) square[(x * x) % p] = true;
  HostGraph g(p, "paley" + std::to_string(p));
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v)
      if (square[(v - u) % p]) g.add_edge(u, v);
  return g;
}

// "family(m)" -> m, or nullopt when `name` does not have that shape.
std::optional<int> parenthesized(std::string_view name, std::string_view family) {
  if (!name.starts_with(family)) return std::nullopt;
  name.remove_prefix(family.size());
  if (name.size() < 3 || name.front() != '(' || name.back() != ')')
    throw std::invalid_argument("expected " + std::string(family) + "(m)");
  name = name.substr(1, name.size() - 2);
  int m = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), m);
  if (ec != std::errc{} || ptr != name.data() + name.size())
    throw std::invalid_argument("bad size in " + std::string(family) + "(...)");
  return m;
}

}  // namespace

HostGraph construct(std::string_view name) {
  if (name == "rook3x3") return rook3x3();
  if (name == "paley9" || name == "paley(9)") return paley9();
  if (name == "paley5" || name == "paley(5)") return paley_prime(5);
  if (auto m = parenthesized(name, "cycle")) {
    if (*m < 3 || *m > 4096) throw std::invalid_argument("cycle(m) needs 3 <= m <= 4096");
    HostGraph g(*m, "cycle(" + std::to_string(*m) + ")");
    for (int v = 0; v < *m; ++v) g.add_edge(v, (v + 1) % *m);
    return g;
  }
  if (auto m = parenthesized(name, "complete")) {
    if (*m < 1 || *m > 4096) throw std::invalid_argument("complete(m) needs 1 <= m <= 4096");
    HostGraph g(*m, "complete(" + std::to_string(*m) + ")");
    for (int u = 0; u < *m; ++u)
      for (int v = u + 1; v < *m; ++v) g.add_edge(u, v);
    return g;
  }
  throw std::invalid_argument("unknown construction: " + std::string(name));
}

HostGraph random_graph(int order, EdgeProbability p, std::uint64_t seed) {
  if (p.den == 0 || p.num > p.den) throw std::invalid_argument("edge probability must be in [0,1]");
  HostGraph g(order);
  std::mt19937_64 engine(seed);
  const unsigned __int128 threshold = static_cast<unsigned __int128>(p.num) << 64;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) {
      const unsigned __int128 u = engine();
      if (u * p.den < threshold) g.add_edge(i, j);
    }
  }
  return g;
}

HostGraph random_regular(int order, int degree, std::uint64_t seed) {
  if (degree < 0 || degree >= order) throw std::invalid_argument("degree must be in [0, order)");
  if ((static_cast<long>(order) * degree) % 2 != 0)
    throw std::invalid_argument("order * degree must be even");

  std::vector<std::pair<int, int>> edges;
  HostGraph g(order);
  auto add = [&](int u, int v) {
    g.add_edge(u, v);
    edges.emplace_back(u, v);
  };
  for (int d = 1; d <= degree / 2; ++d)
    for (int v = 0; v < order; ++v) add(v, (v + d) % order);
  if (degree % 2 == 1)
    for (int v = 0; v < order / 2; ++v) add(v, v + order / 2);

  std::mt19937_64 engine(seed);
  const std::size_t m = edges.size();
  const std::size_t attempts = 20 * m;
  for (std::size_t t = 0; t < attempts && m >= 2; ++t) {
    auto& e1 = edges[engine() % m];
    auto& e2 = edges[engine() % m];
    auto [a, b] = e1;
    auto [c, d] = e2;
    if (engine() & 1u) std::swap(c, d);
    // (a,b),(c,d) -> (a,c),(b,d)
    if (a == c || b == d || a == d || b == c) continue;
    if (g.adjacent(a, c) || g.adjacent(b, d)) continue;
    g.remove_edge(a, b);
    g.remove_edge(c, d);
    g.add_edge(a, c);
    g.add_edge(b, d);
    e1 = {a, c};
    e2 = {b, d};
  }
  g.set_name("random_regular(" + std::to_string(order) + "," + std::to_string(degree) + "," +
             std::to_string(seed) + ")");
  return g;
}

}  // namespace hepta
