#include "kcut/io.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "kcut/version.hpp"

namespace kcut {

using nlohmann::json;

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t at = line.find_first_not_of(" \t\r");
    if (at == std::string::npos || line[at] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string head;
      fields >> head >> n;
      if (head != "n" || fields.fail() || n < 0)
        throw std::invalid_argument("graph text: line " + std::to_string(lineno) +
                                    ": expected header \"n <count>\"");
      continue;
    }
    int u = 0, v = 0;
    fields >> u >> v;
    std::string trailing;
    if (fields.fail() || (fields >> trailing))
      throw std::invalid_argument("graph text: line " + std::to_string(lineno) +
                                  ": expected \"u v\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("graph text: missing \"n <count>\" header");
  return make_graph(n, edges);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

Graph graph_from_json(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph json: each edge is a two-element array");
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return make_graph(n, edges, j.value("label", std::string()));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
  if (!g.label.empty()) j["label"] = g.label;
  return j.dump();
}

Complex complex_from_json(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    int n = j.at("n").get<int>();
    std::vector<Mask> facets;
    for (const auto& f : j.at("facets")) {
      std::vector<int> verts;
      for (const auto& v : f) verts.push_back(v.get<int>());
      facets.push_back(vertices_to_mask(verts));
    }
    if (j.at("facets").empty()) return Complex::void_complex(n);
    return Complex::from_facets(n, facets);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("complex json: ") + e.what());
  }
}

std::string complex_to_json(const Complex& c) {
  json j;
  j["n"] = c.universe();
  j["facets"] = json::array();
  if (!c.is_void())
    for (Mask f : c.facets()) j["facets"].push_back(mask_to_vertices(f));
  return j.dump();
}

std::string homology_to_json(const HomologyProfile& h) {
  json j;
  j["betti"] = json::object();
  for (const auto& [dim, rank] : h.betti) j["betti"][std::to_string(dim)] = rank;
  j["torsion"] = json::object();
  if (h.torsion_computed)
    for (const auto& [dim, factors] : h.torsion)
      if (!factors.empty()) j["torsion"][std::to_string(dim)] = factors;
  j["euler_reduced"] = h.euler_reduced;
  return j.dump();
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& request) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(request) << ".json";
  return dir_ / name.str();
}

std::optional<std::string> ResultCache::load(const std::string& request) const {
  std::ifstream in(path_for(request));
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
  if (j.value("version", std::string()) != kVersion) return std::nullopt;
  if (j.value("request", std::string()) != request) return std::nullopt;  // hash collision
  if (!j.contains("payload")) return std::nullopt;
  return j.at("payload").dump();
}

void ResultCache::store(const std::string& request, const std::string& payload_json,
                        double runtime_ms) const {
  json j;
  j["version"] = kVersion;
  j["request"] = request;
  j["payload"] = json::parse(payload_json);
  j["runtime_ms"] = runtime_ms;
  j["stored_at"] = static_cast<long long>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  auto final_path = path_for(request);
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << j.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace kcut
