#include "kcut/golden.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace kcut {

namespace {

using nlohmann::json;

struct GoldenStore {
  std::vector<std::string> table_names;
  std::map<std::string, GoldenTable> tables;
  std::vector<GoldenFigure> figures;
};

GoldenStore parse_store() {
  GoldenStore store;
  json root = json::parse(golden_json_text());
  for (auto& [name, jt] : root.at("tables").items()) {
    GoldenTable t;
    t.name = name;
    t.family = jt.at("family").get<std::string>();
    t.fixed_m = jt.value("fixed_m", 0);
    for (const auto& cell : jt.at("cells")) {
      int k = cell.at("k").get<int>();
      int n = cell.at("n").get<int>();
      GoldenCell g;
      if (cell.value("void", false))
        g.is_void = true;
      else
        g.betti = cell.at("betti").get<long long>();
      t.cells[{k, n}] = g;
    }
    if (jt.contains("euler_pred"))
      for (const auto& e : jt.at("euler_pred"))
        t.euler_pred[{e.at("k").get<int>(), e.at("n").get<int>()}] =
            e.at("value").get<long long>();
    store.table_names.push_back(name);
    store.tables[name] = std::move(t);
  }
  for (const auto& jf : root.at("figures")) {
    GoldenFigure f;
    f.name = jf.at("name").get<std::string>();
    int n = jf.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : jf.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    f.graph = make_graph(n, edges, f.name);
    f.k = jf.at("k").get<int>();
    for (const auto& fac : jf.at("facets")) {
      std::vector<int> verts;
      for (const auto& v : fac) verts.push_back(v.get<int>());
      f.facets.push_back(vertices_to_mask(verts));
    }
    if (jf.contains("betti"))
      for (auto& [dim, val] : jf.at("betti").items())
        f.betti[std::stoi(dim)] = val.get<long long>();
    if (jf.contains("f_vector"))
      for (const auto& v : jf.at("f_vector")) f.f_vector.push_back(v.get<long long>());
    if (jf.contains("chordal")) f.chordal = jf.at("chordal").get<bool>();
    if (jf.contains("shellable")) f.shellable = jf.at("shellable").get<bool>();
    store.figures.push_back(std::move(f));
  }
  return store;
}

const GoldenStore& store() {
  static const GoldenStore s = parse_store();
  return s;
}

}  // namespace

const GoldenTable& golden_table(const std::string& name) {
  const auto& tabs = store().tables;
  auto it = tabs.find(name);
  if (it == tabs.end()) throw std::invalid_argument("unknown reference table: " + name);
  return it->second;
}

const std::vector<std::string>& golden_table_names() { return store().table_names; }

const std::vector<GoldenFigure>& golden_figures() { return store().figures; }

const GoldenFigure& golden_figure(const std::string& name) {
  for (const auto& f : store().figures)
    if (f.name == name) return f;
  throw std::invalid_argument("unknown reference figure: " + name);
}

}  // namespace kcut
