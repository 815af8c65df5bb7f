// Command line front end for the cut-complex library: build complexes from
// graph families or files, compute homology and face data, run shelling and
// Morse machinery, and drive the verification harness against the compiled-in
// reference tables.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcut/characters.hpp"
#include "kcut/formulas.hpp"
#include "kcut/harness.hpp"
#include "kcut/homology.hpp"
#include "kcut/io.hpp"
#include "kcut/morse.hpp"
#include "kcut/shelling.hpp"
#include "kcut/version.hpp"

using json = nlohmann::json;
using namespace kcut;

namespace {

struct GlobalOpts {
  bool json_out = false;
  bool csv_out = false;
  std::string cache_dir;
  int jobs = 1;
  double budget_seconds = 600;
  bool conjecture = false;

  std::unique_ptr<ResultCache> cache;
  const ResultCache* cache_ptr() {
    if (cache_dir.empty()) return nullptr;
    if (!cache) cache = std::make_unique<ResultCache>(cache_dir);
    return cache.get();
  }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphInput {
  std::string family;
  std::string path;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* f = cmd->add_option("--family", in.family,
                            "family descriptor, e.g. path(6), grid(3,4), "
                            "disjoint-union(complete(3),complete(4))");
  cmd->add_option("--graph", in.path, "graph file, text or JSON; - reads stdin")
      ->excludes(f);
}

Graph load_graph(const GraphInput& in) {
  if (!in.family.empty()) return make_family(in.family);
  if (in.path.empty()) throw std::runtime_error("need --family or --graph");
  std::string text = slurp(in.path);
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && text[at] == '{') return graph_from_json(text);
  return parse_graph_text(text);
}

struct ComplexInput {
  GraphInput graph;
  std::string complex_path;
  int k = 0;
};

void add_complex_options(CLI::App* cmd, ComplexInput& in) {
  add_graph_options(cmd, in.graph);
  auto* kopt = cmd->add_option("-k,--k", in.k, "cut parameter");
  cmd->add_option("--complex", in.complex_path, "complex JSON file; - reads stdin")
      ->excludes(kopt);
}

Complex load_complex(const ComplexInput& in) {
  if (!in.complex_path.empty()) return complex_from_json(slurp(in.complex_path));
  if (in.k == 0) throw std::runtime_error("need -k with a graph, or --complex");
  return cut_complex(load_graph(in.graph), in.k);
}

void print_facets_text(std::ostream& os, const Complex& c) {
  os << "n " << c.universe() << "\n";
  if (c.is_void()) {
    os << "void\n";
    return;
  }
  for (Mask f : c.facets()) {
    bool first = true;
    for (int v : mask_to_vertices(f)) {
      if (!first) os << " ";
      os << v;
      first = false;
    }
    os << "\n";
  }
}

std::string join_vertices(Mask f) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_vertices(f)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<Mask> parse_order_file(const std::string& path) {
  json j = json::parse(slurp(path));
  const json* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.contains("order"))
    arr = &j.at("order");
  else if (j.contains("facets"))
    arr = &j.at("facets");
  else
    throw std::runtime_error("order file: expected an array, or an object with "
                             "\"order\" or \"facets\"");
  std::vector<Mask> out;
  for (const auto& f : *arr) {
    std::vector<int> verts;
    for (const auto& v : f) verts.push_back(v.get<int>());
    out.push_back(vertices_to_mask(verts));
  }
  return out;
}

int print_table_report(const TableReport& rep, const GlobalOpts& g) {
  if (g.json_out) {
    json j;
    j["table"] = rep.table;
    j["matches"] = rep.matches;
    j["mismatches"] = rep.mismatches;
    j["skipped"] = rep.skipped;
    j["cells"] = json::array();
    for (const auto& c : rep.cells) {
      json jc{{"k", c.k},          {"n", c.n},           {"status", to_string(c.status)},
              {"expected", c.expected}, {"computed", c.computed}, {"ms", c.ms}};
      if (!c.note.empty()) jc["note"] = c.note;
      j["cells"].push_back(jc);
    }
    std::cout << j.dump(2) << "\n";
  } else if (g.csv_out) {
    std::cout << "table,k,n,status,expected,computed,ms,note\n";
    for (const auto& c : rep.cells)
      std::cout << rep.table << "," << c.k << "," << c.n << "," << to_string(c.status) << ","
                << c.expected << "," << c.computed << "," << c.ms << ",\"" << c.note << "\"\n";
  } else {
    std::cout << "table " << rep.table << ": " << rep.matches << " match, " << rep.mismatches
              << " mismatch, " << rep.skipped << " skipped\n";
    for (const auto& c : rep.cells) {
      if (c.status == CheckStatus::Match) continue;
      std::cout << "  k=" << c.k << " n=" << c.n << ": " << to_string(c.status);
      if (c.status == CheckStatus::Mismatch)
        std::cout << " (expected " << c.expected << ", computed " << c.computed << ")";
      if (!c.note.empty()) std::cout << " " << c.note;
      std::cout << "\n";
    }
  }
  return exit_code_for(rep);
}

int print_suite_report(const SuiteReport& rep, const GlobalOpts& g) {
  if (g.json_out) {
    json j;
    j["failed"] = rep.failed;
    j["undecided"] = rep.undecided;
    j["total_ms"] = rep.total_ms;
    j["checks"] = json::array();
    for (const auto& c : rep.checks)
      j["checks"].push_back({{"name", c.name},
                             {"status", to_string(c.status)},
                             {"conjectural", c.conjectural},
                             {"ms", c.ms},
                             {"detail", c.detail}});
    std::cout << j.dump(2) << "\n";
  } else if (g.csv_out) {
    std::cout << "name,status,conjectural,ms,detail\n";
    for (const auto& c : rep.checks)
      std::cout << c.name << "," << to_string(c.status) << "," << (c.conjectural ? 1 : 0) << ","
                << c.ms << ",\"" << c.detail << "\"\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << "[" << to_string(c.status) << "] " << c.name;
      if (c.conjectural) std::cout << " (conjectural)";
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
    std::cout << rep.checks.size() << " checks, " << rep.failed << " failed, " << rep.undecided
              << " undecided\n";
  }
  return exit_code_for(rep);
}

int worst_exit(int a, int b) {
  if (a == 1 || b == 1) return 1;
  if (a == 2 || b == 2) return 2;
  return a == 0 && b == 0 ? 0 : std::max(a, b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cut complexes of graphs: construction, homology, shellings, Morse "
               "matchings and a verification harness for the reference tables"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  GlobalOpts g;
  app.add_flag("--json", g.json_out, "machine-readable JSON output");
  app.add_flag("--csv", g.csv_out, "CSV output for tabular commands")->excludes("--json");
  app.add_option("--cache-dir", g.cache_dir, "directory for memoized homology results");
  app.add_option("--jobs", g.jobs, "worker threads for multi-table runs")
      ->check(CLI::Range(1, 256));
  app.add_option("--budget-seconds", g.budget_seconds,
                 "wall-clock budget for table and suite runs");
  app.add_flag("--conjecture", g.conjecture,
               "include conjectural comparisons (reported, never fatal)");

  int exit_rc = 0;

  // family
  {
    auto* cmd = app.add_subcommand("family", "print a named family graph");
    auto desc = std::make_shared<std::string>();
    cmd->add_option("descriptor", *desc, "e.g. squared-path(7)")->required();
    cmd->callback([&, desc] {
      Graph gr = make_family(*desc);
      if (g.json_out)
        std::cout << graph_to_json(gr) << "\n";
      else
        std::cout << graph_to_text(gr);
    });
  }

  // cut-complex
  {
    auto* cmd = app.add_subcommand("cut-complex", "facets of the k-cut complex");
    auto in = std::make_shared<ComplexInput>();
    add_graph_options(cmd, in->graph);
    cmd->add_option("-k,--k", in->k, "cut parameter")->required();
    cmd->callback([&, in] {
      Complex c = cut_complex(load_graph(in->graph), in->k);
      if (g.json_out)
        std::cout << complex_to_json(c) << "\n";
      else
        print_facets_text(std::cout, c);
    });
  }

  // fvector / hvector
  {
    auto* cmd = app.add_subcommand("fvector", "f-vector (f_-1, f_0, ...)");
    auto in = std::make_shared<ComplexInput>();
    add_complex_options(cmd, *in);
    cmd->callback([&, in] {
      Complex c = load_complex(*in);
      auto fv = f_vector(c);
      if (g.json_out) {
        std::cout << json{{"f", fv}}.dump() << "\n";
      } else {
        for (size_t i = 0; i < fv.size(); ++i)
          std::cout << fv[i] << (i + 1 < fv.size() ? (g.csv_out ? "," : " ") : "");
        std::cout << "\n";
      }
    });
  }
  {
    auto* cmd = app.add_subcommand("hvector", "h-vector (h_0, ..., h_d)");
    auto in = std::make_shared<ComplexInput>();
    add_complex_options(cmd, *in);
    cmd->callback([&, in] {
      Complex c = load_complex(*in);
      Poly h = h_polynomial(c);
      int d = c.dim() + 1;
      std::vector<long long> hv;
      for (int i = 0; i <= d; ++i) hv.push_back(h.coeff(i));
      if (g.json_out) {
        std::cout << json{{"h", hv}}.dump() << "\n";
      } else {
        for (size_t i = 0; i < hv.size(); ++i)
          std::cout << hv[i] << (i + 1 < hv.size() ? (g.csv_out ? "," : " ") : "");
        std::cout << "\n";
      }
    });
  }

  // betti
  {
    auto* cmd = app.add_subcommand("betti", "reduced homology: Betti numbers and torsion");
    auto in = std::make_shared<ComplexInput>();
    auto no_torsion = std::make_shared<bool>(false);
    add_complex_options(cmd, *in);
    cmd->add_flag("--no-torsion", *no_torsion, "skip the integer diagonalization");
    cmd->callback([&, in, no_torsion] {
      Complex c = load_complex(*in);
      if (c.is_void()) {
        if (g.json_out)
          std::cout << json{{"void", true},
                            {"betti", json::object()},
                            {"torsion", json::object()},
                            {"euler_reduced", 0}}
                           .dump()
                    << "\n";
        else
          std::cout << "void complex: no homology\n";
        return;
      }
      HomologyProfile h = homology_profile(c, !*no_torsion);
      if (g.json_out) {
        std::cout << homology_to_json(h) << "\n";
      } else {
        for (const auto& [d, b] : h.betti) std::cout << "betti[" << d << "] = " << b << "\n";
        if (h.torsion_computed) {
          bool any = false;
          for (const auto& [d, t] : h.torsion) {
            if (t.empty()) continue;
            any = true;
            std::cout << "torsion[" << d << "] =";
            for (long long x : t) std::cout << " " << x;
            std::cout << "\n";
          }
          if (!any) std::cout << "torsion-free\n";
        }
        std::cout << "euler_reduced = " << h.euler_reduced << "\n";
      }
    });
  }

  // shelling
  {
    auto* shell = app.add_subcommand("shelling", "shelling verification and search");
    shell->require_subcommand(1);

    auto* vcmd = shell->add_subcommand("verify", "check a proposed facet order");
    auto vin = std::make_shared<ComplexInput>();
    auto vorder = std::make_shared<std::string>();
    add_complex_options(vcmd, *vin);
    vcmd->add_option("--order", *vorder, "JSON facet order; - reads stdin")->required();
    vcmd->callback([&, vin, vorder] {
      Complex c = load_complex(*vin);
      auto order = parse_order_file(*vorder);
      auto v = verify_shelling(c, order);
      if (g.json_out) {
        json j{{"ok", v.ok}};
        if (v.ok) {
          j["full_restriction_count"] = v.certificate.full_restriction_count;
          j["restrictions"] = json::array();
          for (Mask r : v.certificate.restrictions)
            j["restrictions"].push_back(mask_to_vertices(r));
        } else {
          j["violation_i"] = v.violation_i;
          j["violation_j"] = v.violation_j;
          j["reason"] = v.reason;
        }
        std::cout << j.dump(2) << "\n";
      } else if (v.ok) {
        std::cout << "shelling order verified; " << v.certificate.full_restriction_count
                  << " full-restriction facets\n";
      } else {
        std::cout << "not a shelling: " << v.reason;
        if (v.violation_j > 0) std::cout << " (i=" << v.violation_i << ", j=" << v.violation_j << ")";
        std::cout << "\n";
      }
      if (!v.ok) exit_rc = 1;
    });

    auto* fcmd = shell->add_subcommand("find", "search for a shelling order");
    auto fin = std::make_shared<ComplexInput>();
    auto fopts = std::make_shared<ShellingSearchOptions>();
    add_complex_options(fcmd, *fin);
    fcmd->add_option("--max-facets", fopts->max_facets, "refuse larger instances");
    fcmd->add_option("--max-nodes", fopts->max_nodes, "search node budget");
    fcmd->callback([&, fin, fopts] {
      Complex c = load_complex(*fin);
      auto s = find_shelling(c, *fopts);
      if (g.json_out) {
        json j{{"status", s.status == SearchStatus::Found
                              ? "found"
                              : (s.status == SearchStatus::None ? "none" : "undecided")},
               {"explored", s.explored},
               {"note", s.note}};
        if (s.status == SearchStatus::Found) {
          j["order"] = json::array();
          for (Mask f : s.order) j["order"].push_back(mask_to_vertices(f));
          j["full_restriction_count"] = s.certificate.full_restriction_count;
        }
        std::cout << j.dump(2) << "\n";
      } else {
        switch (s.status) {
          case SearchStatus::Found: {
            std::cout << "shellable; order:";
            for (Mask f : s.order) std::cout << " " << join_vertices(f);
            std::cout << "\n";
            break;
          }
          case SearchStatus::None:
            std::cout << "not shellable (search exhausted, " << s.explored << " nodes)\n";
            break;
          case SearchStatus::Undecided:
            std::cout << "undecided: " << s.note << "\n";
            break;
        }
      }
      if (s.status == SearchStatus::None) exit_rc = 1;
      if (s.status == SearchStatus::Undecided) exit_rc = 2;
    });

    auto* scmd = shell->add_subcommand("squared-path", "the grouped order for the squared path");
    auto sn = std::make_shared<int>(0);
    auto sk = std::make_shared<int>(0);
    scmd->add_option("-n,--n", *sn, "vertices")->required();
    scmd->add_option("-k,--k", *sk, "cut parameter")->required();
    scmd->callback([&, sn, sk] {
      auto order = squared_path_shelling(*sn, *sk);
      Complex c = cut_complex(squared_path_graph(*sn), *sk);
      auto v = verify_shelling(c, order);
      if (!v.ok) throw std::logic_error("grouped order failed verification: " + v.reason);
      if (g.json_out) {
        json j{{"order", json::array()},
               {"full_restriction_count", v.certificate.full_restriction_count}};
        for (Mask f : order) j["order"].push_back(mask_to_vertices(f));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "verified shelling with " << v.certificate.full_restriction_count
                  << " full-restriction facets:\n";
        for (Mask f : order) std::cout << "  " << join_vertices(f) << "\n";
      }
    });
  }

  // morse
  {
    auto* morse = app.add_subcommand("morse", "discrete Morse matchings");
    morse->require_subcommand(1);
    auto* gcmd = morse->add_subcommand("grid-delta4", "refined matching on the grid 4-cut complex");
    auto gm = std::make_shared<int>(0);
    auto gn = std::make_shared<int>(0);
    gcmd->add_option("-m,--rows", *gm, "grid rows")->required();
    gcmd->add_option("-n,--cols", *gn, "grid columns")->required();
    gcmd->callback([&, gm, gn] {
      Complex c = cut_complex(grid_graph(*gm, *gn), 4);
      MorseMatching match = grid_delta4_matching(*gm, *gn);
      MatchingReport rep = verify_matching(c, match);
      if (g.json_out) {
        json j{{"pairs", match.pairs.size()},
               {"valid", rep.valid},
               {"acyclic", rep.acyclic},
               {"critical", json::array()},
               {"violation", rep.violation}};
        for (Mask f : match.critical) j["critical"].push_back(mask_to_vertices(f));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << match.pairs.size() << " pairs, " << match.critical.size()
                  << " critical faces\n";
        for (const auto& [d, cnt] : rep.critical_by_dim)
          std::cout << "  dim " << d << ": " << cnt << "\n";
        std::cout << (rep.valid ? "valid" : "INVALID") << ", "
                  << (rep.acyclic ? "acyclic" : "CYCLIC");
        if (!rep.violation.empty()) std::cout << " (" << rep.violation << ")";
        std::cout << "\n";
      }
      if (!rep.valid || !rep.acyclic) exit_rc = 1;
    });
  }

  // character
  {
    auto* ch = app.add_subcommand("character", "top homology traces for named actions");
    ch->require_subcommand(1);

    auto* cu = ch->add_subcommand("clique-union", "two disjoint cliques");
    auto cum = std::make_shared<int>(0);
    auto cun = std::make_shared<int>(0);
    auto cuk = std::make_shared<int>(0);
    auto cleft = std::make_shared<std::string>();
    auto cright = std::make_shared<std::string>();
    cu->add_option("-m,--m", *cum, "left clique size")->required();
    cu->add_option("-n,--n", *cun, "right clique size")->required();
    cu->add_option("-k,--k", *cuk, "cut parameter")->required();
    cu->add_option("--left", *cleft, "cycle type on the left, e.g. 2,1")->required();
    cu->add_option("--right", *cright, "cycle type on the right")->required();
    cu->callback([&, cum, cun, cuk, cleft, cright] {
      long long v = character_clique_union(*cum, *cun, *cuk, parse_int_list(*cleft),
                                           parse_int_list(*cright));
      if (g.json_out)
        std::cout << json{{"trace", v}}.dump() << "\n";
      else
        std::cout << v << "\n";
    });

    auto* cp = ch->add_subcommand("path", "path under identity or flip");
    auto cpn = std::make_shared<int>(0);
    auto cpk = std::make_shared<int>(0);
    auto cpe = std::make_shared<std::string>("identity");
    cp->add_option("-n,--n", *cpn, "vertices")->required();
    cp->add_option("-k,--k", *cpk, "cut parameter")->required();
    cp->add_option("--element", *cpe, "identity or flip")
        ->check(CLI::IsMember({"identity", "flip"}));
    cp->callback([&, cpn, cpk, cpe] {
      long long v = character_path(*cpn, *cpk,
                                   *cpe == "flip" ? PathElement::Flip : PathElement::Identity);
      if (g.json_out)
        std::cout << json{{"trace", v}}.dump() << "\n";
      else
        std::cout << v << "\n";
    });

    auto* cc = ch->add_subcommand("cycle", "cycle under a dihedral element");
    auto ccn = std::make_shared<int>(0);
    auto cck = std::make_shared<int>(0);
    auto crot = std::make_shared<int>(-1);
    auto cref = std::make_shared<int>(-1);
    cc->add_option("-n,--n", *ccn, "vertices")->required();
    cc->add_option("-k,--k", *cck, "cut parameter")->required();
    auto* ro = cc->add_option("--rotation", *crot, "power j of the basic rotation");
    cc->add_option("--reflection", *cref, "reflection times rotation^j")->excludes(ro);
    cc->callback([&, ccn, cck, crot, cref] {
      Permutation sigma = graph_automorphism(AutomorphismKind::CycleRotation, *ccn);
      Permutation el = Permutation::identity(*ccn);
      if (*cref >= 0) {
        el = graph_automorphism(AutomorphismKind::CycleReflectionRho, *ccn);
        for (int i = 0; i < *cref; ++i) el = el * sigma;
      } else {
        int j = *crot < 0 ? 0 : *crot;
        for (int i = 0; i < j; ++i) el = sigma * el;
      }
      long long v = character_cycle(*ccn, *cck, el);
      if (g.json_out)
        std::cout << json{{"trace", v}}.dump() << "\n";
      else
        std::cout << v << "\n";
    });
  }

  // verify-formulas
  {
    auto* cmd = app.add_subcommand("verify-formulas",
                                   "formula-vs-enumeration checks on small instances");
    cmd->callback([&] {
      SuiteReport rep = run_verification_suite(g.budget_seconds, g.conjecture, g.cache_ptr());
      exit_rc = print_suite_report(rep, g);
    });
  }

  // tables
  auto table_budget = [&](TableBudget& b) {
    b.seconds = g.budget_seconds;
  };
  {
    auto* cmd = app.add_subcommand("tables", "recompute the reference tables");
    auto names = std::make_shared<std::vector<std::string>>();
    auto budget = std::make_shared<TableBudget>();
    cmd->add_option("names", *names, "table names (default: all)");
    cmd->add_option("--max-universe", budget->max_universe, "skip cells on more vertices");
    cmd->add_option("--cell-seconds", budget->cell_seconds, "per-cell time estimate cap");
    cmd->callback([&, names, budget] {
      table_budget(*budget);
      std::vector<std::string> run = *names;
      if (run.empty()) run = golden_table_names();
      std::vector<TableReport> reports(run.size());
      const ResultCache* cache = g.cache_ptr();
      if (g.jobs > 1 && run.size() > 1) {
        std::atomic<size_t> next{0};
        auto work = [&] {
          for (size_t i = next.fetch_add(1); i < run.size(); i = next.fetch_add(1))
            reports[i] = reproduce_table(run[i], *budget, cache);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min<int>(g.jobs, static_cast<int>(run.size())); ++t)
          pool.emplace_back(work);
        for (auto& t : pool) t.join();
      } else {
        for (size_t i = 0; i < run.size(); ++i)
          reports[i] = reproduce_table(run[i], *budget, cache);
      }
      for (const auto& rep : reports) exit_rc = worst_exit(exit_rc, print_table_report(rep, g));
    });
  }

  // suite
  {
    auto* cmd = app.add_subcommand("suite", "formula checks plus all reference tables");
    auto budget = std::make_shared<TableBudget>();
    cmd->add_option("--max-universe", budget->max_universe, "skip cells on more vertices");
    cmd->add_option("--cell-seconds", budget->cell_seconds, "per-cell time estimate cap");
    cmd->callback([&, budget] {
      table_budget(*budget);
      const ResultCache* cache = g.cache_ptr();
      SuiteReport rep = run_verification_suite(g.budget_seconds, g.conjecture, cache);
      exit_rc = print_suite_report(rep, g);
      for (const auto& name : golden_table_names()) {
        TableReport tr = reproduce_table(name, *budget, cache);
        exit_rc = worst_exit(exit_rc, print_table_report(tr, g));
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_rc;
}
