#include "hepta/graph6.hpp"

#include <fstream>

namespace hepta {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw Graph6Error("graph6 character out of range [63,126]: code " + std::to_string(u));
  return u - kBias;
}

std::string_view strip(std::string_view s) {
  if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
}

template <typename Graph>
std::string emit_impl(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace

HostGraph parse_graph6(std::string_view record) {
  std::string_view s = strip(record);
  if (s.empty()) throw Graph6Error("empty graph6 record");

  std::size_t pos = 0;
  long n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() < 4) throw Graph6Error("truncated graph6 order field");
    if (static_cast<unsigned char>(s[1]) == 126)
      throw Graph6Error("graph6 orders above 258047 are not supported");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | decode_char(s[pos]);
    if (n <= 62) throw Graph6Error("malformed graph6 order field: long form used for n <= 62");
  } else {
    n = decode_char(s[0]);
    pos = 1;
  }
  if (n < 1) throw Graph6Error("graph6 record with zero vertices");
  if (n > HostGraph::kMaxOrder)
    throw Graph6Error("graph order " + std::to_string(n) + " exceeds the 4096-vertex cap");

  const long bit_count = n * (n - 1) / 2;
  const long expected_chars = (bit_count + 5) / 6;
  if (static_cast<long>(s.size() - pos) != expected_chars)
    throw Graph6Error("graph6 record length mismatch: expected " +
                      std::to_string(expected_chars) + " data characters, got " +
                      std::to_string(s.size() - pos));

  HostGraph g(static_cast<int>(n));
  long bit = 0;
  int i = 0;
  int j = 1;
  for (long c = 0; c < expected_chars; ++c) {
    const int group = decode_char(s[pos + c]);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1;
      if (bit >= bit_count) {
        if (set) throw Graph6Error("graph6 padding bits are nonzero");
        continue;
      }
      if (set) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

SmallGraph parse_graph6_small(std::string_view record) {
  HostGraph h = parse_graph6(record);
  if (h.order() > kMaxSmallOrder)
    throw Graph6Error("expected a graph on at most 8 vertices, got " + std::to_string(h.order()));
  std::vector<int> all(h.order());
  for (int v = 0; v < h.order(); ++v) all[v] = v;
  return h.induced(all);
}

std::string emit_graph6(const HostGraph& g) { return emit_impl(g); }
std::string emit_graph6(const SmallGraph& g) { return emit_impl(g); }

std::vector<HostGraph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Graph6Error("cannot open graph6 file: " + path.string());
  std::vector<HostGraph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = strip(line);
    if (s.empty()) continue;
    graphs.push_back(parse_graph6(s));
  }
  return graphs;
}

void write_graph6_file(const std::filesystem::path& path, const HostGraph& g) {
  std::ofstream out(path);
  if (!out) throw Graph6Error("cannot write graph6 file: " + path.string());
  out << emit_graph6(g) << '\n';
}

}  // namespace hepta
