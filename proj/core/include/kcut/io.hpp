#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "kcut/complex.hpp"
#include "kcut/graph.hpp"
#include "kcut/homology.hpp"

namespace kcut {

// Text graph format: first line "n <count>", then one "u v" per edge.
// Blank lines and lines starting with '#' are skipped.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

// JSON graph: {"n": int, "edges": [[u,v],...], "label"?: string}.
Graph graph_from_json(const std::string& json_text);
std::string graph_to_json(const Graph& g);

// JSON complex: {"n": int, "facets": [[v,...],...]}; [] facet list means
// void, [[]] the empty-face complex.
Complex complex_from_json(const std::string& json_text);
std::string complex_to_json(const Complex& c);

std::string homology_to_json(const HomologyProfile& h);

std::uint64_t fnv1a64(std::string_view s);

// One JSON file per record under the cache directory, keyed by the
// FNV-1a hash of the canonical request string. Writes go to a temp file
// first and are renamed into place, so a cache hit is always a complete
// record. Records carry the library version and are ignored on mismatch.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<std::string> load(const std::string& request) const;
  void store(const std::string& request, const std::string& payload_json,
             double runtime_ms) const;
  std::filesystem::path path_for(const std::string& request) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace kcut
