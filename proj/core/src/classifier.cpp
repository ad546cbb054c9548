#include "hepta/classifier.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace hepta {
namespace {

constexpr std::array<char, 8> kMagic = {'H', 'E', 'P', 'T', 'A', 'C', 'L', 'S'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put_le(std::ostream& out, T value) {
  for (std::size_t b = 0; b < sizeof(T); ++b)
    out.put(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * b)) & 0xffu));
}

template <typename T>
bool get_le(std::istream& in, T& value) {
  std::uint64_t v = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) {
    const int c = in.get();
    if (c == EOF) return false;
    v |= static_cast<std::uint64_t>(c & 0xff) << (8 * b);
  }
  value = static_cast<T>(v);
  return true;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Classifier::Classifier(std::uint64_t catalog_hash, int class_count, std::vector<std::uint8_t> table)
    : catalog_hash_(catalog_hash), class_count_(class_count), table_(std::move(table)) {
  if (table_.size() != kClassifierSize)
    throw std::invalid_argument("classifier table must have 2^21 entries");
  if (class_count_ < 0 || class_count_ >= kNoClass)
    throw std::invalid_argument("classifier class count out of range");
}

void Classifier::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write classifier cache: " + path.string());
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint32_t>(out, kClassifierOrder);
  put_le<std::uint64_t>(out, catalog_hash_);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(class_count_));
  put_le<std::uint64_t>(out, table_.size());
  out.write(reinterpret_cast<const char*>(table_.data()), static_cast<std::streamsize>(table_.size()));
  if (!out) throw std::runtime_error("short write to classifier cache: " + path.string());
}

std::optional<Classifier> Classifier::load(const std::filesystem::path& path,
                                           std::uint64_t expected_hash) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) return std::nullopt;
  std::uint32_t version = 0, order = 0, classes = 0;
  std::uint64_t hash = 0, length = 0;
  if (!get_le(in, version) || !get_le(in, order) || !get_le(in, hash) || !get_le(in, classes) ||
      !get_le(in, length))
    return std::nullopt;
  if (version != kVersion || order != kClassifierOrder || hash != expected_hash ||
      length != kClassifierSize || classes >= kNoClass)
    return std::nullopt;
  std::vector<std::uint8_t> table(kClassifierSize);
  in.read(reinterpret_cast<char*>(table.data()), static_cast<std::streamsize>(table.size()));
  if (in.gcount() != static_cast<std::streamsize>(table.size())) return std::nullopt;
  for (auto v : table)
    if (v != kNoClass && v >= classes) return std::nullopt;
  return Classifier(hash, static_cast<int>(classes), std::move(table));
}

Classifier build_classifier(const Catalog& catalog) {
  if (catalog.order() != kClassifierOrder || !catalog.hamiltonian_only())
    throw std::invalid_argument("classifier needs the order-7 Hamiltonian catalog");
  if (catalog.size() >= kNoClass) throw std::invalid_argument("catalog too large for byte ids");

  std::vector<std::uint8_t> table(kClassifierSize, kNoClass);
  for (const auto& entry : catalog.entries()) {
    const Code base = entry.graph.code();
    for (const auto& p : permutations(kClassifierOrder))
      table[relabel_code(kClassifierOrder, base, p)] = static_cast<std::uint8_t>(entry.id);
  }
  return Classifier(catalog.content_hash(), static_cast<int>(catalog.size()), std::move(table));
}

Classifier load_or_build_classifier(const Catalog& catalog, const std::filesystem::path& cache_dir) {
  const auto path = cache_dir / ("classifier-o7-" + hex(catalog.content_hash()) + ".bin");
  if (auto cached = Classifier::load(path, catalog.content_hash())) return std::move(*cached);

  Classifier built = build_classifier(catalog);
  try {
    std::filesystem::create_directories(cache_dir);
    const auto tmp = path.string() + ".tmp";
    built.save(tmp);
    std::filesystem::rename(tmp, path);
  } catch (const std::exception&) {
  }
  return built;
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("HEPTA_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "hepta";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "hepta";
  return std::filesystem::temp_directory_path() / "hepta-cache";
}

std::optional<int> classify(const Classifier& classifier, const SmallGraph& g) {
  if (g.order() != kClassifierOrder)
    throw std::invalid_argument("classify expects a 7-vertex graph, got order " +
                                std::to_string(g.order()));
  const auto id = classifier.lookup(g.code());
  if (id == kNoClass) return std::nullopt;
  return id;
}

}  // namespace hepta
