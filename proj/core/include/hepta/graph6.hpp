#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hepta/host_graph.hpp"
#include "hepta/small_graph.hpp"

namespace hepta {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 record layout: N(n) followed by R(x), where x is the upper triangle
// in column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit
// groups, each stored as group + 63. N(n) is chr(n + 63) for n <= 62 and
// chr(126) followed by 18 bits in three groups for 63 <= n <= 258047.
//
// The parser accepts only the shortest order field and zero padding so that
// emit(parse(s)) == s for every accepted record.

/// Decodes one record; a leading ">>graph6<<" header and a trailing newline are skipped.
HostGraph parse_graph6(std::string_view record);
/// Same as parse_graph6 but requires order <= 8.
SmallGraph parse_graph6_small(std::string_view record);

std::string emit_graph6(const HostGraph& g);
std::string emit_graph6(const SmallGraph& g);

/// Every non-empty record in a graph6 file, in file order.
std::vector<HostGraph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const HostGraph& g);

}  // namespace hepta
