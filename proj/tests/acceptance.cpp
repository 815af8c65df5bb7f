// Acceptance gate: one pass/fail line per criterion, exact equality
// throughout, nonzero exit when anything fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kcut/binomial.hpp"
#include "kcut/characters.hpp"
#include "kcut/complex.hpp"
#include "kcut/formulas.hpp"
#include "kcut/golden.hpp"
#include "kcut/graph.hpp"
#include "kcut/harness.hpp"
#include "kcut/homology.hpp"
#include "kcut/morse.hpp"
#include "kcut/shelling.hpp"

using namespace kcut;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      if (detail.size() < 400) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
      }
    }
  }
  void equal(long long got, long long want, const std::string& what) {
    require(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }
};

long long top_betti_or_zero(const Complex& c, bool with_torsion = false) {
  if (c.is_void()) return 0;
  return homology_profile(c, with_torsion).betti_at(c.dim());
}

// ---- 1: figure fidelity ----------------------------------------------------

void criterion_figures(Criterion& c) {
  const GoldenFigure& f1 = golden_figure("shellable-5-vertex-example");
  Complex c1 = cut_complex(f1.graph, 2);
  std::vector<Mask> want1 = {vertices_to_mask({2, 3, 4}), vertices_to_mask({1, 4, 5}),
                             vertices_to_mask({1, 2, 4})};
  c.require(c1.facets() == Complex::from_facets(5, want1).facets(), "figure 1 facet set");

  const GoldenFigure& f2 = golden_figure("nonshellable-6-vertex-example");
  Complex c2 = cut_complex(f2.graph, 4);
  std::vector<Mask> want2 = {vertices_to_mask({1, 3}), vertices_to_mask({2, 4})};
  c.require(c2.facets() == Complex::from_facets(6, want2).facets(), "figure 2 facet set");
  c.require(find_shelling(c2).status == SearchStatus::None, "figure 2 admits no shelling");

  const GoldenFigure& f3 = golden_figure("pentagon-2cut");
  Complex c3 = cut_complex(f3.graph, 2);
  c.equal(c3.facet_count(), 5, "pentagon facet count");
  c.require(c3.facets() == Complex::from_facets(5, f3.facets).facets(), "pentagon facet set");
  HomologyProfile h = homology_profile(c3);
  c.equal(h.betti_at(1), 1, "pentagon betti_1");
  for (auto [d, b] : h.betti)
    if (d != 1) c.require(b == 0, "pentagon betti_" + std::to_string(d) + " nonzero");
  c.require(h.torsion_free(), "pentagon torsion");
}

// ---- 2: edgeless family ----------------------------------------------------

void criterion_edgeless(Criterion& c) {
  for (int n = 3; n <= 8; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      HomologyProfile h = homology_profile(cut_complex(edgeless_graph(n), k));
      int top = n - k - 1;
      c.equal(h.betti_at(top), binom(n - 1, k - 1),
              "E_" + std::to_string(n) + " k=" + std::to_string(k) + " top betti");
      for (auto [d, b] : h.betti)
        if (d != top)
          c.require(b == 0, "E_" + std::to_string(n) + " k=" + std::to_string(k) +
                                " extra homology in dim " + std::to_string(d));
      c.require(h.torsion_free(),
                "E_" + std::to_string(n) + " k=" + std::to_string(k) + " torsion");
    }
  }
}

// ---- 3: squared-path table -------------------------------------------------

void criterion_table1(Criterion& c) {
  TableBudget budget;
  budget.seconds = 170;
  budget.max_universe = 11;
  TableReport rep = reproduce_table("squared-path", budget);
  for (const auto& cell : rep.cells) {
    if (cell.n > 11) continue;
    c.require(cell.status == CheckStatus::Match,
              "cell k=" + std::to_string(cell.k) + " n=" + std::to_string(cell.n) + " " +
                  to_string(cell.status) + " (" + cell.note + ")");
  }
  // spot values straight out of the published table
  const GoldenTable& t = golden_table("squared-path");
  c.equal(t.cells.at({3, 7}).betti, 3, "published (3,7)");
  c.equal(t.cells.at({4, 8}).betti, 11, "published (4,8)");
  c.equal(t.cells.at({5, 9}).betti, 26, "published (5,9)");
  c.equal(t.cells.at({6, 10}).betti, 50, "published (6,10)");
  c.equal(t.cells.at({7, 10}).betti, 15, "published (7,10)");
  c.equal(t.cells.at({8, 11}).betti, 21, "published (8,11)");
}

// ---- 4: squared-path shelling ----------------------------------------------

void criterion_sp_shelling(Criterion& c) {
  const GoldenTable& table = golden_table("squared-path");
  for (int n = 5; n <= 11; ++n) {
    for (int k = 2; k <= n - 3; ++k) {
      Complex cx = cut_complex(squared_path_graph(n), k);
      ShellingVerification v = verify_shelling(cx, squared_path_shelling(n, k));
      c.require(v.ok, "shelling order rejected at k=" + std::to_string(k) +
                          " n=" + std::to_string(n) + ": " + v.reason);
      if (!v.ok) continue;
      long long frc = v.certificate.full_restriction_count;
      auto cell = table.cells.find({k, n});
      if (k >= 3 && cell != table.cells.end())
        c.equal(frc, cell->second.betti,
                "full restrictions vs table at k=" + std::to_string(k) + " n=" + std::to_string(n));
      if (k == 3)
        c.equal(frc, binom(n - 4, 2), "full restrictions at k=3 n=" + std::to_string(n));
      if (n == k + 3)
        c.equal(frc, binom(k - 1, 2), "full restrictions at n=k+3, k=" + std::to_string(k));

      if (k == 3) {
        std::set<Mask> full;
        for (size_t i = 0; i < v.certificate.order.size(); ++i)
          if (v.certificate.restrictions[i] == v.certificate.order[i])
            full.insert(v.certificate.order[i]);
        std::set<Mask> want;
        for (int j = 6; j <= n; ++j)
          for (int b = 1; b <= j - 5; ++b)
            want.insert(full_mask(n) & ~vertices_to_mask({b, j - 2, j}));
        c.require(full == want, "k=3 full-restriction facet set at n=" + std::to_string(n));
      }
    }
  }

  // facet count recurrence at k=3 and the two-off diagonal count
  for (int n = 6; n <= 11; ++n) {
    long long fn = static_cast<long long>(squared_path_facets(n, 3).size());
    long long fp = static_cast<long long>(squared_path_facets(n - 1, 3).size());
    c.equal(fn - fp, binom(n - 3, 2) + (n - 4) + (n - 5),
            "facet recurrence at n=" + std::to_string(n));
  }
  for (int k = 2; k <= 8; ++k)
    c.equal(cut_complex(squared_path_graph(k + 3), k).facet_count(), 1LL * k * k - 1,
            "facet count at n=k+3, k=" + std::to_string(k));
}

// ---- 5: grid 3-cut ---------------------------------------------------------

void criterion_grid_delta3(Criterion& c) {
  struct Case {
    int m, n;
    long long betti;
  };
  for (auto [m, n, betti] : {Case{2, 2, 0}, Case{2, 3, 2}, Case{2, 4, 8}, Case{2, 5, 18},
                             Case{3, 3, 10}, Case{3, 4, 27}}) {
    std::string tag = "G(" + std::to_string(m) + "," + std::to_string(n) + ")";
    c.equal(grid_betti_delta3(m, n), betti, "formula at " + tag);
    c.equal(top_betti_or_zero(cut_complex(grid_graph(m, n), 3)), betti, "computed at " + tag);
  }
  for (int m = 2; m <= 6; ++m) {
    for (int n = m; n <= 6; ++n) {
      Graph g = grid_graph(m, n);
      std::string tag = "G(" + std::to_string(m) + "," + std::to_string(n) + ")";
      c.equal(grid_tau3(m, n), static_cast<long long>(connected_k_subsets(g, 3).size()),
              "tau_3 at " + tag);
      c.equal(grid_connected4(m, n), static_cast<long long>(connected_k_subsets(g, 4).size()),
              "connected 4-sets at " + tag);
    }
  }
  ShellingSearchOptions opts;
  opts.max_facets = 64;
  opts.max_nodes = 200'000'000;
  for (auto [m, n] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
    Complex cx = cut_complex(grid_graph(m, n), 3);
    ShellingSearch s = find_shelling(cx, opts);
    c.require(s.status == SearchStatus::Found,
              "no shelling found for the 3-cut complex of G(" + std::to_string(m) + "," +
                  std::to_string(n) + "): " + s.note);
  }
}

// ---- 6: grid 4-cut Morse ---------------------------------------------------

void criterion_grid_morse(Criterion& c) {
  struct Case {
    int m, n;
    long long critical;
  };
  for (auto [m, n, critical] : {Case{2, 4, 14}, Case{2, 5, 52}, Case{3, 3, 20}}) {
    std::string tag = "G(" + std::to_string(m) + "," + std::to_string(n) + ")";
    Complex cx = cut_complex(grid_graph(m, n), 4);
    MorseMatching match = grid_delta4_matching(m, n);
    MatchingReport rep = verify_matching(cx, match);
    c.require(rep.valid, "matching invalid at " + tag + ": " + rep.violation);
    c.require(rep.acyclic, "matching cyclic at " + tag + ": " + rep.violation);
    int top = m * n - 5;
    c.require(rep.critical_by_dim.size() == 1 && rep.critical_by_dim.count(top) == 1,
              "critical cells stray from dim mn-5 at " + tag);
    long long got = rep.critical_by_dim.count(top) ? rep.critical_by_dim.at(top) : -1;
    c.equal(got, critical, "critical count at " + tag);
    c.equal(binom(m * n - 1, 3) - grid_connected4(m, n), critical,
            "Euler-side critical count at " + tag);

    HomologyProfile h = homology_profile(cx, false);
    c.equal(h.betti_at(top), critical, "betti vs critical count at " + tag);
    for (auto [d, b] : h.betti)
      if (d != top)
        c.require(b == 0, "homology outside dim mn-5 at " + tag + " dim " + std::to_string(d));
  }
}

// ---- 7: grid 5/6-cut and one-dimensional complexes --------------------------

void criterion_grid_high_k(Criterion& c) {
  // The parenthesized table entries (21 and 11) come from the face-count
  // expression without the chorded-6-cycle faces; the actual reduced Euler
  // characteristic exceeds them by exactly the 6-cycle count. Both numbers
  // and the gap are pinned here.
  struct Case {
    int m, n;
    long long published;
  };
  for (auto [m, n, published] : {Case{3, 3, 21}, Case{2, 4, 11}}) {
    std::string tag = "G(" + std::to_string(m) + "," + std::to_string(n) + ")";
    Complex cx = cut_complex(grid_graph(m, n), 5);
    long long e = euler_characteristic_reduced(cx);
    PredictedInvariant pred = grid_euler_predictions(m, n, 5);
    c.equal(pred.extra.at("antichain_only"), published,
            "published 5-cut prediction at " + tag);
    c.equal(pred.value, e, "signed euler of the 5-cut complex at " + tag);
    c.equal(e < 0 ? -e : e, published + grid_num_6cycles(m, n),
            "|euler| vs prediction + 6-cycle faces at " + tag);
    HomologyProfile h = homology_profile(cx);
    int top = cx.dim();
    for (auto [d, b] : h.betti)
      if (d < top - 1)
        c.require(b == 0, "5-cut homology below the top two dims at " + tag);
    c.require(h.torsion_free(), "5-cut torsion at " + tag);
  }

  Complex w = cut_complex(grid_graph(2, 6), 10);
  c.equal(w.facet_count(), 14, "facet count of the 10-cut complex of G(2,6)");
  HomologyProfile hw = homology_profile(w, false);
  c.equal(hw.betti_at(1), 3, "betti_1 of the 10-cut complex of G(2,6)");
  c.equal(hw.betti_at(0), 0, "betti_0 of the 10-cut complex of G(2,6)");

  Complex s = cut_complex(grid_graph(3, 3), 7);
  c.equal(s.facet_count(), 4, "facet count of the 7-cut complex of G(3,3)");
  HomologyProfile hs = homology_profile(s, false);
  c.equal(hs.betti_at(1), 1, "betti_1 of the 7-cut complex of G(3,3)");

  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 4; ++n) {
      for (int k : {2, 4, 6}) {
        if (k > m * n) continue;
        FaceLatticeMode mode = k == 2 ? FaceLatticeMode::Antichain
                                      : FaceLatticeMode::AntichainPlusCycles;
        FaceLatticeReport r = face_lattice_condition(grid_graph(m, n), k, mode);
        c.require(r.holds, "face lattice condition fails at G(" + std::to_string(m) + "," +
                               std::to_string(n) + ") k=" + std::to_string(k));
      }
    }
  }
  FaceLatticeReport bad =
      face_lattice_condition(grid_graph(3, 3), 8, FaceLatticeMode::AntichainPlusCycles);
  c.require(!bad.holds, "face lattice condition unexpectedly holds at k=8 on G(3,3)");
  c.require(bad.witness_set == full_mask(8) && bad.witness_x == 9,
            "k=8 witness differs from the lex-first failure");
}

// ---- 8: disjoint-union algebra ----------------------------------------------

std::vector<Graph> family_pool() {
  std::vector<Graph> pool;
  for (int n = 1; n <= 5; ++n) pool.push_back(path_graph(n));
  for (int n = 3; n <= 5; ++n) pool.push_back(cycle_graph(n));
  for (int n = 1; n <= 5; ++n) pool.push_back(complete_graph(n));
  for (int n = 1; n <= 5; ++n) pool.push_back(edgeless_graph(n));
  for (int n = 1; n <= 5; ++n) pool.push_back(squared_path_graph(n));
  return pool;
}

void check_pair_formulas(Criterion& c, const Graph& a, const Graph& b, int k,
                         const std::string& tag) {
  Complex ca = cut_complex(a, k), cb = cut_complex(b, k);
  Poly f1 = f_polynomial(ca), f2 = f_polynomial(cb);

  Complex cj = cut_complex(graph_join(a, b), k);
  c.require(f_poly_join(f1, f2, a.n, b.n) == f_polynomial(cj), "join f at " + tag);

  Complex cu = cut_complex(disjoint_union(a, b), k);
  c.require(f_poly_disjoint_union(f1, f2, a.n, b.n, k) == f_polynomial(cu),
            "disjoint union f at " + tag);
  if (!cu.is_void()) {
    Poly h1 = ca.is_void() ? Poly::zero() : h_polynomial(ca);
    Poly h2 = cb.is_void() ? Poly::zero() : h_polynomial(cb);
    c.require(h_poly_disjoint_union(h1, h2, a.n, b.n, k) == h_polynomial(cu),
              "disjoint union h at " + tag);
  }
}

void criterion_union_algebra(Criterion& c) {
  std::vector<Graph> pool = family_pool();
  for (const Graph& a : pool)
    for (const Graph& b : pool)
      for (int k = 2; k <= 4; ++k)
        check_pair_formulas(c, a, b, k, a.label + " + " + b.label + " k=" + std::to_string(k));

  // seeded random pairs
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_graph = [&rng]() {
      int n = 2 + static_cast<int>(rng() % 4);
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (rng() & 1) edges.emplace_back(i, j);
      return make_graph(n, std::move(edges), "random");
    };
    Graph a = random_graph(), b = random_graph();
    int k = 2 + trial % 4;
    if (k > a.n + b.n) continue;
    check_pair_formulas(c, a, b, k, "random trial " + std::to_string(trial));
  }

  // wedge counts for unions of paths, against homology
  auto path_wedge = [](int a, int k) -> long long {
    if (a < k) return 0;
    return binom(a - 1, k - 1) - (a - k + 1);
  };
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 2; k < m + n; ++k) {
        std::string tag = "P_" + std::to_string(m) + " + P_" + std::to_string(n) +
                          " k=" + std::to_string(k);
        long long w = wedge_count_disjoint_union(path_wedge(m, k), path_wedge(n, k), m, n, k);
        Complex cx = cut_complex(disjoint_union(path_graph(m), path_graph(n)), k);
        c.equal(top_betti_or_zero(cx), w, "wedge count at " + tag);

        long long cb = clique_union_betti(m, n, k);
        Complex kk = cut_complex(disjoint_union(complete_graph(m), complete_graph(n)), k);
        c.equal(top_betti_or_zero(kk), cb,
                "clique union betti at K_" + std::to_string(m) + " + K_" + std::to_string(n) +
                    " k=" + std::to_string(k));
      }
    }
  }
}

// ---- 9: characters -----------------------------------------------------------

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxp) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Permutation perm_from_type_pair(int m, int n, const std::vector<int>& tm,
                                const std::vector<int>& tn) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : tm) {
    std::vector<int> cyc;
    for (int i = 0; i < len; ++i) cyc.push_back(next++);
    cycles.push_back(cyc);
  }
  for (int len : tn) {
    std::vector<int> cyc;
    for (int i = 0; i < len; ++i) cyc.push_back(next++);
    cycles.push_back(cyc);
  }
  return Permutation::from_cycles(m + n, cycles);
}

void criterion_characters(Criterion& c) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> ones(n, 1);
    for (int k = 1; k <= n; ++k)
      c.equal(hook_character(n, k, ones), binom(n - 1, k - 1),
              "hook dimension at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }

  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      auto pm = partitions_of(m), pn = partitions_of(n);
      for (int k = 2; k < m + n; ++k) {
        Complex cx = cut_complex(disjoint_union(complete_graph(m), complete_graph(n)), k);
        int dim = m + n - k - 1;
        for (const auto& tm : pm) {
          for (const auto& tn : pn) {
            long long chi = character_clique_union(m, n, k, tm, tn);
            long long lt = lefschetz_trace(cx, perm_from_type_pair(m, n, tm, tn));
            c.equal(dim % 2 == 0 ? lt : -lt, chi,
                    "clique union character at m=" + std::to_string(m) + " n=" +
                        std::to_string(n) + " k=" + std::to_string(k));
          }
        }
      }
    }
  }

  for (int n = 5; n <= 8; ++n) {
    for (int k = 3; k <= n - 2; ++k) {
      Complex cx = cut_complex(path_graph(n), k);
      int dim = n - k - 1;
      Permutation flip = graph_automorphism(AutomorphismKind::PathFlip, n);
      long long lt = lefschetz_trace(cx, flip);
      c.equal(dim % 2 == 0 ? lt : -lt, character_path(n, k, PathElement::Flip),
              "path flip character at n=" + std::to_string(n) + " k=" + std::to_string(k));

      Complex cyc = cut_complex(cycle_graph(n), k);
      for (const Permutation& g : dihedral_elements(n)) {
        long long clt = lefschetz_trace(cyc, g);
        c.equal(dim % 2 == 0 ? clt : -clt, character_cycle(n, k, g),
                "cycle character at n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }

  // the k = 2 one-dimensional representation on both generators
  for (int n = 4; n <= 8; ++n) {
    Permutation sigma = graph_automorphism(AutomorphismKind::CycleRotation, n);
    Permutation rho = graph_automorphism(AutomorphismKind::CycleReflectionRho, n);
    long long want_sigma = (n - 1) % 2 == 0 ? 1 : -1;
    long long want_rho = n % 2 == 0 ? ((n - 2) / 2 % 2 == 0 ? 1 : -1)
                                    : ((n + 1) / 2 % 2 == 0 ? 1 : -1);
    c.equal(character_cycle(n, 2, sigma), want_sigma,
            "k=2 rotation character at n=" + std::to_string(n));
    c.equal(character_cycle(n, 2, rho), want_rho,
            "k=2 reflection character at n=" + std::to_string(n));
  }
}

// ---- 10: Froeberg equivalence -------------------------------------------------

void criterion_froeberg(Criterion& c) {
  std::mt19937_64 rng(0x5EEDF00D);
  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<Graph> sample;
  int attempts = 0;
  while (sample.size() < 220 && attempts < 200000) {
    ++attempts;
    int n = 4 + static_cast<int>(rng() % 3);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t key = 0;
    int bit = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (rng() & 1) {
          edges.emplace_back(i, j);
          key |= std::uint64_t{1} << bit;
        }
        ++bit;
      }
    Graph g = make_graph(n, std::move(edges), "sample(" + std::to_string(n) + ")");
    if (!is_connected_induced(g, full_mask(n))) continue;
    if (!seen.insert({n, key}).second) continue;
    sample.push_back(std::move(g));
  }
  c.require(sample.size() >= 200, "sample generation fell short");

  for (const Graph& g : sample) {
    bool chordal = is_chordal(g);
    ShellingSearch s = find_shelling(cut_complex(g, 2));
    c.require(s.status != SearchStatus::Undecided, "undecided shelling search on " + g.label);
    bool shellable = s.status == SearchStatus::Found;
    c.require(chordal == shellable,
              "chordal/shellable disagreement on a " + std::to_string(g.n) + "-vertex graph");
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*fn)(Criterion&);
  };
  const Entry entries[] = {
      {"criterion-1 figure fidelity", criterion_figures},
      {"criterion-2 edgeless family", criterion_edgeless},
      {"criterion-3 squared-path table", criterion_table1},
      {"criterion-4 squared-path shelling", criterion_sp_shelling},
      {"criterion-5 grid 3-cut", criterion_grid_delta3},
      {"criterion-6 grid 4-cut Morse", criterion_grid_morse},
      {"criterion-7 grid high-k", criterion_grid_high_k},
      {"criterion-8 union algebra", criterion_union_algebra},
      {"criterion-9 characters", criterion_characters},
      {"criterion-10 Froeberg equivalence", criterion_froeberg},
  };

  int failed = 0;
  for (const Entry& e : entries) {
    Criterion crit;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(crit);
    } catch (const std::exception& ex) {
      crit.require(false, std::string("exception: ") + ex.what());
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    if (crit.ok) {
      std::printf("[PASS] %s (%.0f ms)\n", e.name, ms.count());
    } else {
      ++failed;
      std::printf("[FAIL] %s (%.0f ms): %s\n", e.name, ms.count(), crit.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
