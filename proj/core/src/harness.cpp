#include "kcut/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kcut/binomial.hpp"
#include "kcut/characters.hpp"
#include "kcut/formulas.hpp"
#include "kcut/homology.hpp"
#include "kcut/morse.hpp"
#include "kcut/shelling.hpp"

namespace kcut {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Match: return "match";
    case CheckStatus::Mismatch: return "MISMATCH";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Undecided: return "undecided";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string set_str(Mask f) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_vertices(f)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

// Dominant homology cost: eliminating the top boundary matrix.
double estimated_cell_ms(int universe, int k) {
  if (k >= universe) return 0;  // at most a point or void
  double cols = static_cast<double>(binom(universe, universe - k));
  double rows = static_cast<double>(binom(universe, universe - k - 1));
  return cols * rows * (universe - k) / 1e7;
}

struct RawCell {
  bool is_void = false;
  long long betti = 0;
  long long euler = 0;
};

RawCell computed_cell(const Graph& g, int k, int dim, const ResultCache* cache,
                      double* out_ms) {
  std::string req = "cell " + g.label + " k=" + std::to_string(k) +
                    " dim=" + std::to_string(dim);
  if (cache) {
    if (auto hit = cache->load(req)) {
      json j = json::parse(*hit);
      RawCell out;
      out.is_void = j.at("void").get<bool>();
      out.betti = j.at("betti").get<long long>();
      out.euler = j.at("euler_reduced").get<long long>();
      if (out_ms) *out_ms = 0;
      return out;
    }
  }
  auto t0 = Clock::now();
  Complex c = cut_complex(g, k);
  RawCell out;
  if (c.is_void()) {
    out.is_void = true;
  } else {
    HomologyProfile h = homology_profile(c, false);
    out.betti = h.betti_at(dim);
    out.euler = h.euler_reduced;
  }
  double ms = ms_since(t0);
  if (out_ms) *out_ms = ms;
  if (cache) {
    json j;
    j["void"] = out.is_void;
    j["betti"] = out.betti;
    j["euler_reduced"] = out.euler;
    cache->store(req, j.dump(), ms);
  }
  return out;
}

int report_dim(const GoldenTable& t, int k, int n) {
  if (t.family == "grid") {
    int mn = t.fixed_m * n;
    return k == 2 ? mn - 4 : mn - k - 1;
  }
  return n - k - 1;
}

}  // namespace

TableReport reproduce_table(const std::string& name, const TableBudget& budget,
                            const ResultCache* cache) {
  const GoldenTable& gt = golden_table(name);
  TableReport raw;
  raw.table = name;
  auto t0 = Clock::now();
  for (const auto& [key, cell] : gt.cells) {
    auto [k, n] = key;
    CellResult cr;
    cr.k = k;
    cr.n = n;
    int universe = gt.family == "grid" ? gt.fixed_m * n : n;
    double elapsed_s = ms_since(t0) / 1000.0;
    if (universe > budget.max_universe) {
      cr.status = CheckStatus::Skipped;
      cr.note = "universe " + std::to_string(universe) + " beyond budget limit " +
                std::to_string(budget.max_universe);
    } else if (elapsed_s > budget.seconds) {
      cr.status = CheckStatus::Skipped;
      cr.note = "table budget exhausted";
    } else if (estimated_cell_ms(universe, k) > budget.cell_seconds * 1000.0) {
      cr.status = CheckStatus::Skipped;
      cr.note = "estimated past the per-cell budget";
    } else {
      Graph g = gt.family == "grid" ? grid_graph(gt.fixed_m, n) : squared_path_graph(n);
      RawCell rc = computed_cell(g, k, report_dim(gt, k, n), cache, &cr.ms);
      cr.status = CheckStatus::Match;  // sentinel: computed; diff decides
      cr.computed = rc.betti;
      cr.note = rc.is_void ? "void" : "euler=" + std::to_string(rc.euler);
    }
    raw.cells.push_back(cr);
  }
  return diff_table(gt, raw);
}

TableReport diff_table(const GoldenTable& expected, const TableReport& computed) {
  TableReport out;
  out.table = computed.table.empty() ? expected.name : computed.table;
  std::map<std::pair<int, int>, const CellResult*> by_key;
  for (const auto& c : computed.cells) by_key[{c.k, c.n}] = &c;
  for (const auto& [key, gold] : expected.cells) {
    auto [k, n] = key;
    CellResult cr;
    cr.k = k;
    cr.n = n;
    cr.has_expected = true;
    cr.expected = gold.is_void ? 0 : gold.betti;
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      cr.status = CheckStatus::Skipped;
      cr.note = "not computed";
    } else {
      const CellResult& rc = *it->second;
      cr.ms = rc.ms;
      if (rc.status == CheckStatus::Skipped) {
        cr.status = CheckStatus::Skipped;
        cr.note = rc.note;
      } else {
        bool comp_void = rc.note.rfind("void", 0) == 0;
        cr.computed = rc.computed;
        if (gold.is_void) {
          cr.status = comp_void ? CheckStatus::Match : CheckStatus::Mismatch;
          if (!comp_void) cr.note = "expected a void complex";
        } else if (comp_void) {
          // A published 0 can stand for a complex with no faces at all;
          // no homology in any dimension matches a zero entry.
          cr.status = gold.betti == 0 ? CheckStatus::Match : CheckStatus::Mismatch;
          cr.note = cr.status == CheckStatus::Match ? "void" : "computed void, expected nonzero";
        } else {
          cr.status = cr.computed == cr.expected ? CheckStatus::Match : CheckStatus::Mismatch;
          auto ea = expected.euler_pred.find(key);
          if (cr.status == CheckStatus::Match && ea != expected.euler_pred.end()) {
            long long e = 0;
            if (rc.note.rfind("euler=", 0) == 0) e = std::stoll(rc.note.substr(6));
            // The published predictions for the grid k=5 rows leave out the
            // chorded-6-cycle faces; the gap is exactly the 6-cycle count.
            long long offset = (expected.family == "grid" && k == 5)
                                   ? grid_num_6cycles(expected.fixed_m, n)
                                   : 0;
            if (std::llabs(e) != ea->second + offset) {
              cr.status = CheckStatus::Mismatch;
              cr.note = "|euler| = " + std::to_string(std::llabs(e)) + ", published prediction " +
                        std::to_string(ea->second) + " + offset " + std::to_string(offset);
            } else {
              cr.note = "|euler| = " + std::to_string(std::llabs(e)) + " = prediction " +
                        std::to_string(ea->second) + " + " + std::to_string(offset) +
                        " six-cycle faces";
            }
          }
        }
      }
    }
    switch (cr.status) {
      case CheckStatus::Match: ++out.matches; break;
      case CheckStatus::Mismatch: ++out.mismatches; break;
      default: ++out.skipped; break;
    }
    out.cells.push_back(cr);
  }
  return out;
}

namespace {

using CheckFn = std::function<std::pair<CheckStatus, std::string>()>;

struct SuiteRunner {
  SuiteReport rep;
  double budget_s;
  Clock::time_point t0 = Clock::now();

  void add(const std::string& name, bool conjectural, const CheckFn& fn) {
    SuiteCheck ck;
    ck.name = name;
    ck.conjectural = conjectural;
    if (ms_since(t0) / 1000.0 > budget_s) {
      ck.status = CheckStatus::Skipped;
      ck.detail = "suite budget exhausted";
    } else {
      auto c0 = Clock::now();
      try {
        auto [st, detail] = fn();
        ck.status = st;
        ck.detail = detail;
      } catch (const std::exception& e) {
        ck.status = CheckStatus::Mismatch;
        ck.detail = std::string("exception: ") + e.what();
      }
      ck.ms = ms_since(c0);
    }
    if (!ck.conjectural) {
      if (ck.status == CheckStatus::Mismatch) ++rep.failed;
      if (ck.status == CheckStatus::Undecided) ++rep.undecided;
    }
    rep.checks.push_back(std::move(ck));
  }
};

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation perm_from_type_pair(int m, int n, const std::vector<int>& tm,
                                const std::vector<int>& tn) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : tm) {
    std::vector<int> c;
    for (int i = 0; i < part; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  for (int part : tn) {
    std::vector<int> c;
    for (int i = 0; i < part; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(m + n, cycles);
}

std::optional<std::string> betti_exactly(const HomologyProfile& h,
                                         const std::map<int, long long>& want) {
  for (const auto& [d, b] : h.betti) {
    long long w = want.count(d) ? want.at(d) : 0;
    if (b != w)
      return "betti_" + std::to_string(d) + " = " + std::to_string(b) + ", expected " +
             std::to_string(w);
  }
  for (const auto& [d, w] : want)
    if (w != 0 && !h.betti.count(d))
      return "betti_" + std::to_string(d) + " absent, expected " + std::to_string(w);
  return std::nullopt;
}

bool same_facet_set(std::vector<Mask> a, std::vector<Mask> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

long long path_wedge_count(int a, int k) { return binom(a - 1, k - 1) - (a - k + 1); }

std::vector<Graph> seeded_connected_graphs(std::uint64_t seed, size_t count) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<Graph> sample;
  while (sample.size() < count) {
    int n = 4 + static_cast<int>(rng() % 3);
    std::uint64_t bits = rng();
    std::vector<std::pair<int, int>> edges;
    std::uint64_t ekey = 0;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v, ++bit)
        if ((bits >> bit) & 1) {
          edges.emplace_back(u, v);
          ekey |= 1ull << bit;
        }
    Graph g = make_graph(n, edges, "random(" + std::to_string(n) + ")");
    if (!is_connected_induced(g, full_mask(n))) continue;
    if (!seen.insert({n, ekey}).second) continue;
    sample.push_back(std::move(g));
  }
  return sample;
}

}  // namespace

SuiteReport run_verification_suite(double budget_seconds, bool with_conjectures,
                                   const ResultCache* cache) {
  SuiteRunner run;
  run.budget_s = budget_seconds;

  run.add("figure-facets", false, [&]() -> std::pair<CheckStatus, std::string> {
    for (const auto& fig : golden_figures()) {
      Complex c = cut_complex(fig.graph, fig.k);
      if (c.is_void()) return {CheckStatus::Mismatch, fig.name + ": complex is void"};
      if (!same_facet_set(c.facets(), fig.facets))
        return {CheckStatus::Mismatch, fig.name + ": facet list differs"};
      if (fig.chordal && is_chordal(fig.graph) != *fig.chordal)
        return {CheckStatus::Mismatch, fig.name + ": chordality flag differs"};
      if (fig.shellable && !*fig.shellable) {
        auto s = find_shelling(c);
        if (s.status != SearchStatus::None)
          return {CheckStatus::Mismatch, fig.name + ": shelling search did not rule it out"};
      }
      if (!fig.betti.empty() || !fig.f_vector.empty()) {
        HomologyProfile h = homology_profile(c);
        if (auto bad = betti_exactly(h, fig.betti))
          return {CheckStatus::Mismatch, fig.name + ": " + *bad};
        if (!h.torsion_free()) return {CheckStatus::Mismatch, fig.name + ": torsion"};
        if (!fig.f_vector.empty() && f_vector(c) != fig.f_vector)
          return {CheckStatus::Mismatch, fig.name + ": f-vector differs"};
      }
    }
    return {CheckStatus::Match, std::to_string(golden_figures().size()) + " figures verified"};
  });

  run.add("edgeless-skeleton", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int n = 3; n <= 6; ++n)
      for (int k = 2; k <= n - 1; ++k) {
        Complex c = cut_complex(edgeless_graph(n), k);
        if (c.facet_count() != binom(n, k) || !c.has_complete_skeleton(n - k))
          return {CheckStatus::Mismatch,
                  "edgeless(" + std::to_string(n) + ") k=" + std::to_string(k) +
                      ": not the full skeleton"};
        HomologyProfile h = homology_profile(c);
        if (auto bad = betti_exactly(h, {{n - k - 1, binom(n - 1, k - 1)}}))
          return {CheckStatus::Mismatch,
                  "edgeless(" + std::to_string(n) + ") k=" + std::to_string(k) + ": " + *bad};
        if (!h.torsion_free())
          return {CheckStatus::Mismatch,
                  "edgeless(" + std::to_string(n) + ") k=" + std::to_string(k) + ": torsion"};
        ++comparisons;
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " skeleta verified"};
  });

  const std::vector<std::string> small_families = {
      "path(3)",         "path(4)",     "cycle(3)",    "cycle(4)",
      "complete(2)",     "complete(3)", "edgeless(3)", "squared-path(5)",
  };

  run.add("join-f", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (const auto& da : small_families)
      for (const auto& db : small_families)
        for (int k = 2; k <= 3; ++k) {
          Graph a = make_family(da), b = make_family(db);
          Poly f1 = f_polynomial(cut_complex(a, k));
          Poly f2 = f_polynomial(cut_complex(b, k));
          Poly predicted = f_poly_join(f1, f2, a.n, b.n);
          Poly direct = f_polynomial(cut_complex(graph_join(a, b), k));
          if (predicted != direct)
            return {CheckStatus::Mismatch,
                    "join(" + da + "," + db + ") k=" + std::to_string(k)};
          ++comparisons;
        }
    return {CheckStatus::Match, std::to_string(comparisons) + " joins verified"};
  });

  run.add("disjoint-union-f-h", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (const auto& da : small_families)
      for (const auto& db : small_families)
        for (int k = 2; k <= 3; ++k) {
          Graph a = make_family(da), b = make_family(db);
          Complex ca = cut_complex(a, k), cb = cut_complex(b, k);
          Complex cu = cut_complex(disjoint_union(a, b), k);
          Poly f1 = f_polynomial(ca), f2 = f_polynomial(cb);
          if (f_poly_disjoint_union(f1, f2, a.n, b.n, k) != f_polynomial(cu))
            return {CheckStatus::Mismatch,
                    "f: union(" + da + "," + db + ") k=" + std::to_string(k)};
          Poly h1 = ca.is_void() ? Poly::zero() : h_polynomial(ca);
          Poly h2 = cb.is_void() ? Poly::zero() : h_polynomial(cb);
          if (h_poly_disjoint_union(h1, h2, a.n, b.n, k) != h_polynomial(cu))
            return {CheckStatus::Mismatch,
                    "h: union(" + da + "," + db + ") k=" + std::to_string(k)};
          ++comparisons;
        }
    return {CheckStatus::Match, std::to_string(comparisons) + " disjoint unions verified"};
  });

  run.add("clique-union", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int m = 2; m <= 4; ++m)
      for (int n = 2; n <= 4; ++n)
        for (int k = 2; k <= m + n - 1; ++k) {
          std::string tag = "complete(" + std::to_string(m) + ")+complete(" +
                            std::to_string(n) + ") k=" + std::to_string(k);
          Graph u = disjoint_union(complete_graph(m), complete_graph(n));
          Complex c = cut_complex(u, k);
          if (f_poly_clique_union(m, n, k) != f_polynomial(c))
            return {CheckStatus::Mismatch, "f: " + tag};
          if (h_poly_clique_union(m, n, k) != h_polynomial(c))
            return {CheckStatus::Mismatch, "h: " + tag};
          if (k == 2 && h_poly_clique_union_k2(m, n) != h_poly_clique_union(m, n, 2))
            return {CheckStatus::Mismatch, "h product form: " + tag};
          HomologyProfile h = homology_profile(c);
          if (auto bad = betti_exactly(h, {{m + n - k - 1, clique_union_betti(m, n, k)}}))
            return {CheckStatus::Mismatch, tag + ": " + *bad};
          if (!h.torsion_free()) return {CheckStatus::Mismatch, tag + ": torsion"};
          ++comparisons;
        }
    return {CheckStatus::Match, std::to_string(comparisons) + " clique unions verified"};
  });

  run.add("squared-path-facets", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int n = 4; n <= 9; ++n)
      for (int k = 2; k <= n - 2; ++k) {
        Complex c = cut_complex(squared_path_graph(n), k);
        if (!same_facet_set(c.facets(), squared_path_facets(n, k)))
          return {CheckStatus::Mismatch,
                  "squared-path(" + std::to_string(n) + ") k=" + std::to_string(k)};
        ++comparisons;
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " facet lists verified"};
  });

  run.add("squared-path-shelling", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int n = 5; n <= 9; ++n)
      for (int k = 2; k <= n - 3; ++k) {
        std::string tag = "squared-path(" + std::to_string(n) + ") k=" + std::to_string(k);
        Complex c = cut_complex(squared_path_graph(n), k);
        auto order = squared_path_shelling(n, k);
        auto v = verify_shelling(c, order);
        if (!v.ok) return {CheckStatus::Mismatch, tag + ": " + v.reason};
        if (h_from_certificate(v.certificate) != h_polynomial(c))
          return {CheckStatus::Mismatch, tag + ": certificate h differs from the h-polynomial"};
        if (k == 3 && v.certificate.full_restriction_count != binom(n - 4, 2))
          return {CheckStatus::Mismatch, tag + ": full-restriction count"};
        if (n == k + 3 && (c.facet_count() != 1LL * k * k - 1 ||
                           v.certificate.full_restriction_count != binom(k - 1, 2)))
          return {CheckStatus::Mismatch, tag + ": wedge-size data"};
        ++comparisons;
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " shellings verified"};
  });

  run.add("grid-counts", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int m = 2; m <= 4; ++m)
      for (int n = m; n <= 4; ++n) {
        Graph g = grid_graph(m, n);
        std::string tag = "grid(" + std::to_string(m) + "," + std::to_string(n) + ")";
        if (grid_tau3(m, n) != static_cast<long long>(connected_k_subsets(g, 3).size()))
          return {CheckStatus::Mismatch, tag + ": connected 3-set count"};
        if (grid_connected4(m, n) != static_cast<long long>(connected_k_subsets(g, 4).size()))
          return {CheckStatus::Mismatch, tag + ": connected 4-set count"};
        if (grid_num_4cycles(m, n) != static_cast<long long>(induced_cycles(g, 4).size()))
          return {CheckStatus::Mismatch, tag + ": 4-cycle count"};
        if (grid_num_6cycles(m, n) != count_cycle_subgraphs(g, 6))
          return {CheckStatus::Mismatch, tag + ": 6-cycle count"};
        if (!induced_cycles(g, 6).empty())
          return {CheckStatus::Mismatch, tag + ": unexpected chordless 6-cycle"};
        ++comparisons;
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " grids verified"};
  });

  run.add("grid-betti-delta3", false, [&]() -> std::pair<CheckStatus, std::string> {
    const std::vector<std::pair<int, int>> grids = {{2, 2}, {2, 3}, {2, 4}, {3, 3}};
    for (auto [m, n] : grids) {
      std::string tag = "grid(" + std::to_string(m) + "," + std::to_string(n) + ") k=3";
      Complex c = cut_complex(grid_graph(m, n), 3);
      long long predicted = grid_betti_delta3(m, n);
      if (c.is_void()) {
        if (predicted != 0) return {CheckStatus::Mismatch, tag + ": void but predicted nonzero"};
        continue;
      }
      HomologyProfile h = homology_profile(c);
      if (auto bad = betti_exactly(h, {{m * n - 4, predicted}}))
        return {CheckStatus::Mismatch, tag + ": " + *bad};
      if (!h.torsion_free()) return {CheckStatus::Mismatch, tag + ": torsion"};
    }
    return {CheckStatus::Match, "4 grids verified"};
  });

  run.add("grid-euler", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    const std::vector<std::pair<int, int>> grids = {{2, 2}, {2, 3}, {2, 4}, {3, 3}};
    for (auto [m, n] : grids) {
      for (int k : {2, 4, 6}) {
        if (k > m * n) continue;
        if (k == 6 && m * n < 7) continue;  // the identity needs room
        auto pred = grid_euler_predictions(m, n, k);
        long long direct = euler_characteristic_reduced(cut_complex(grid_graph(m, n), k));
        if (pred.value != direct)
          return {CheckStatus::Mismatch,
                  "grid(" + std::to_string(m) + "," + std::to_string(n) +
                      ") k=" + std::to_string(k) + ": predicted " + std::to_string(pred.value) +
                      ", direct " + std::to_string(direct)};
        ++comparisons;
      }
    }
    for (auto [m, n] : {std::pair{2, 4}, std::pair{3, 3}}) {
      auto pred = grid_euler_predictions(m, n, 5);
      long long direct = euler_characteristic_reduced(cut_complex(grid_graph(m, n), 5));
      if (pred.value != direct)
        return {CheckStatus::Mismatch,
                "grid(" + std::to_string(m) + "," + std::to_string(n) + ") k=5: predicted " +
                    std::to_string(pred.value) + ", direct " + std::to_string(direct)};
      ++comparisons;
    }
    return {CheckStatus::Match, std::to_string(comparisons) + " Euler identities verified"};
  });

  run.add("grid-1dim", false, [&]() -> std::pair<CheckStatus, std::string> {
    const std::vector<std::pair<int, int>> grids = {{2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                    {3, 3}, {3, 4}};
    for (auto [m, n] : grids) {
      std::string tag = "grid(" + std::to_string(m) + "," + std::to_string(n) +
                        ") k=" + std::to_string(m * n - 2);
      auto pred = grid_1dim_predictions(m, n);
      Complex c = cut_complex(grid_graph(m, n), m * n - 2);
      if (c.facet_count() != pred.extra.at("facets"))
        return {CheckStatus::Mismatch, tag + ": facet count"};
      std::map<int, long long> want;
      for (const auto& [key, val] : pred.extra)
        if (key.rfind("betti_", 0) == 0) want[std::stoi(key.substr(6))] = val;
      HomologyProfile h = homology_profile(c);
      if (auto bad = betti_exactly(h, want)) return {CheckStatus::Mismatch, tag + ": " + *bad};
    }
    return {CheckStatus::Match, "6 one-dimensional complexes verified"};
  });

  run.add("grid-morse", false, [&]() -> std::pair<CheckStatus, std::string> {
    const std::vector<std::pair<int, int>> grids = {{2, 3}, {2, 4}, {3, 3}};
    for (auto [m, n] : grids) {
      std::string tag = "grid(" + std::to_string(m) + "," + std::to_string(n) + ") k=4";
      Complex c = cut_complex(grid_graph(m, n), 4);
      MorseMatching match = grid_delta4_matching(m, n);
      MatchingReport rep = verify_matching(c, match);
      if (!rep.valid || !rep.acyclic)
        return {CheckStatus::Mismatch, tag + ": " + rep.violation};
      long long want = binom(m * n - 1, 3) - grid_connected4(m, n);
      std::map<int, long long> expect;
      if (want > 0) expect[m * n - 5] = want;
      if (rep.critical_by_dim != expect)
        return {CheckStatus::Mismatch, tag + ": critical cells off the expected count"};
    }
    return {CheckStatus::Match, "3 grid matchings verified"};
  });

  run.add("face-lattice", false, [&]() -> std::pair<CheckStatus, std::string> {
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}}) {
      Graph g = grid_graph(m, n);
      std::string tag = "grid(" + std::to_string(m) + "," + std::to_string(n) + ")";
      if (!face_lattice_condition(g, 2, FaceLatticeMode::Antichain).holds)
        return {CheckStatus::Mismatch, tag + " k=2: condition failed"};
      if (!face_lattice_condition(g, 4, FaceLatticeMode::AntichainPlusCycles).holds)
        return {CheckStatus::Mismatch, tag + " k=4: condition failed"};
    }
    auto rep = face_lattice_condition(grid_graph(3, 3), 8, FaceLatticeMode::AntichainPlusCycles);
    if (rep.holds) return {CheckStatus::Mismatch, "grid(3,3) k=8: condition held unexpectedly"};
    if (rep.witness_set != full_mask(9 - 1) || rep.witness_x != 9)
      return {CheckStatus::Mismatch,
              "grid(3,3) k=8: unexpected witness " + set_str(rep.witness_set) + " x=" +
                  std::to_string(rep.witness_x)};
    return {CheckStatus::Match, "holds at k=2,4; fails at k=8 with the expected witness"};
  });

  run.add("characters-hook", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int n = 4; n <= 8; ++n)
      for (int k = 1; k <= n; ++k) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        if (hook_character(n, k, ones) != binom(n - 1, k - 1))
          return {CheckStatus::Mismatch,
                  "hook (" + std::to_string(k) + ",1^...) dimension at n=" + std::to_string(n)};
        ++comparisons;
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " dimensions verified"};
  });

  run.add("characters-clique-union", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int m = 2; m <= 3; ++m)
      for (int n = 2; n <= 3; ++n) {
        Graph u = disjoint_union(complete_graph(m), complete_graph(n));
        for (int k = 2; k <= m + n - 1; ++k) {
          Complex c = cut_complex(u, k);
          int dim = m + n - k - 1;
          for (const auto& tm : partitions_of(m))
            for (const auto& tn : partitions_of(n)) {
              Permutation g = perm_from_type_pair(m, n, tm, tn);
              long long lt = lefschetz_trace(c, g);
              long long sign = (dim % 2 == 0) ? 1 : -1;
              if (character_clique_union(m, n, k, tm, tn) != sign * lt)
                return {CheckStatus::Mismatch,
                        "K" + std::to_string(m) + "+K" + std::to_string(n) +
                            " k=" + std::to_string(k) + ": trace differs"};
              ++comparisons;
            }
        }
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " traces verified"};
  });

  run.add("characters-path", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int n = 5; n <= 7; ++n)
      for (int k = 3; k <= n - 2; ++k) {
        Complex c = cut_complex(path_graph(n), k);
        int dim = n - k - 1;
        long long sign = (dim % 2 == 0) ? 1 : -1;
        Permutation id = Permutation::identity(n);
        Permutation flip = graph_automorphism(AutomorphismKind::PathFlip, n);
        if (character_path(n, k, PathElement::Identity) != sign * lefschetz_trace(c, id))
          return {CheckStatus::Mismatch,
                  "path(" + std::to_string(n) + ") k=" + std::to_string(k) + ": identity"};
        if (character_path(n, k, PathElement::Flip) != sign * lefschetz_trace(c, flip))
          return {CheckStatus::Mismatch,
                  "path(" + std::to_string(n) + ") k=" + std::to_string(k) + ": flip"};
        comparisons += 2;
      }
    return {CheckStatus::Match, std::to_string(comparisons) + " traces verified"};
  });

  run.add("characters-cycle", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int n = 4; n <= 7; ++n) {
      auto group = dihedral_elements(n);
      for (int k = 2; k <= n - 2; ++k) {
        if (k >= 3 && n < k + 2) continue;
        Complex c = cut_complex(cycle_graph(n), k);
        int dim = (k == 2) ? n - 4 : n - k - 1;
        long long sign = (dim % 2 == 0) ? 1 : -1;
        for (const auto& g : group) {
          if (character_cycle(n, k, g) != sign * lefschetz_trace(c, g))
            return {CheckStatus::Mismatch,
                    "cycle(" + std::to_string(n) + ") k=" + std::to_string(k) +
                        ": trace differs on some dihedral element"};
          ++comparisons;
        }
      }
    }
    return {CheckStatus::Match, std::to_string(comparisons) + " traces verified"};
  });

  run.add("disjoint-union-wedge", false, [&]() -> std::pair<CheckStatus, std::string> {
    int comparisons = 0;
    for (int a = 3; a <= 4; ++a)
      for (int b = 3; b <= 4; ++b)
        for (int k = 3; k <= 3; ++k) {
          if (a < k || b < k) continue;
          Graph u = disjoint_union(path_graph(a), path_graph(b));
          Complex c = cut_complex(u, k);
          long long predicted = wedge_count_disjoint_union(path_wedge_count(a, k),
                                                           path_wedge_count(b, k), a, b, k);
          HomologyProfile h = homology_profile(c);
          if (auto bad = betti_exactly(h, {{a + b - k - 1, predicted}}))
            return {CheckStatus::Mismatch,
                    "path(" + std::to_string(a) + ")+path(" + std::to_string(b) + ") k=" +
                        std::to_string(k) + ": " + *bad};
          ++comparisons;
        }
    return {CheckStatus::Match, std::to_string(comparisons) + " wedge counts verified"};
  });

  run.add("gen-wedge-delta3", false, [&]() -> std::pair<CheckStatus, std::string> {
    for (int n = 6; n <= 9; ++n) {
      Graph g = squared_path_graph(n);
      Mask a = full_mask(n - 1);
      Mask b = vertex_bit(n - 2) | vertex_bit(n - 1) | vertex_bit(n);
      long long glued = gen_wedge_delta3_betti(g, a, b);
      if (glued != binom(n - 4, 2))
        return {CheckStatus::Mismatch,
                "squared-path(" + std::to_string(n) + "): glued count " + std::to_string(glued)};
      HomologyProfile h = homology_profile(cut_complex(g, 3), false);
      if (h.betti_at(n - 4) != glued)
        return {CheckStatus::Mismatch,
                "squared-path(" + std::to_string(n) + "): homology differs from glued count"};
    }
    return {CheckStatus::Match, "4 glued complexes verified"};
  });

  run.add("froeberg", false, [&]() -> std::pair<CheckStatus, std::string> {
    auto sample = seeded_connected_graphs(0x5eed5eedULL, 60);
    int chordal_count = 0;
    for (const auto& g : sample) {
      bool chordal = is_chordal(g);
      chordal_count += chordal;
      Complex c = cut_complex(g, 2);
      bool shellable;
      if (c.is_void()) {
        shellable = true;  // complete graph, nothing to shell
      } else {
        auto s = find_shelling(c);
        if (s.status == SearchStatus::Undecided)
          return {CheckStatus::Undecided, g.label + ": search undecided"};
        shellable = s.status == SearchStatus::Found;
      }
      if (shellable != chordal)
        return {CheckStatus::Mismatch,
                g.label + ": chordal=" + std::to_string(chordal) +
                    " shellable=" + std::to_string(shellable)};
    }
    return {CheckStatus::Match, "60 graphs verified (" + std::to_string(chordal_count) +
                                    " chordal)"};
  });

  if (with_conjectures) {
    run.add("squared-path-betti-conjecture", true, [&]() -> std::pair<CheckStatus, std::string> {
      const GoldenTable& t = golden_table("squared-path");
      int comparisons = 0, unpredicted = 0;
      for (const auto& [key, cell] : t.cells) {
        auto [k, n] = key;
        if (k < 4 || n < k + 2) continue;  // exact rows and void cells aside
        if (k >= 6 && n >= k + 4) {
          // No closed form and the difference recurrence cannot reach its
          // seeds here; the published value has nothing to be checked against.
          ++unpredicted;
          continue;
        }
        auto predicted = squared_path_betti(k, n);
        if (predicted.value != cell.betti)
          return {CheckStatus::Mismatch,
                  "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": predicted " +
                      std::to_string(predicted.value) + ", published " +
                      std::to_string(cell.betti)};
        ++comparisons;
      }
      return {CheckStatus::Match,
              std::to_string(comparisons) + " published cells matched by the closed forms, " +
                  std::to_string(unpredicted) + " without a predicted value"};
    });

    run.add("squared-path-betti-homology", true, [&]() -> std::pair<CheckStatus, std::string> {
      int comparisons = 0;
      for (int k : {4, 5})
        for (int n = k + 4; n <= 10; ++n) {
          Graph g = squared_path_graph(n);
          RawCell rc = computed_cell(g, k, n - k - 1, cache, nullptr);
          auto predicted = squared_path_betti(k, n);
          if (rc.is_void || rc.betti != predicted.value)
            return {CheckStatus::Mismatch,
                    "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": computed " +
                        std::to_string(rc.betti) + ", predicted " +
                        std::to_string(predicted.value)};
          ++comparisons;
        }
      return {CheckStatus::Match, std::to_string(comparisons) + " cells recomputed"};
    });
  }

  run.rep.total_ms = ms_since(run.t0);
  return run.rep;
}

int exit_code_for(const SuiteReport& r) {
  if (r.failed > 0) return 1;
  if (r.undecided > 0) return 2;
  return 0;
}

int exit_code_for(const TableReport& r) {
  if (r.mismatches > 0) return 1;
  if (r.matches == 0 && r.skipped > 0) return 2;
  return 0;
}

}  // namespace kcut
