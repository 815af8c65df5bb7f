#include "kcut/shelling.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace kcut {

ShellingVerification verify_shelling(const Complex& c, const std::vector<Mask>& order) {
  if (c.is_void()) throw std::invalid_argument("shelling: void complex");
  if (!c.is_pure()) throw std::invalid_argument("shelling: nonpure complex");
  ShellingVerification out;
  std::vector<Mask> sorted_order = order, sorted_facets = c.facets();
  std::sort(sorted_order.begin(), sorted_order.end());
  std::sort(sorted_facets.begin(), sorted_facets.end());
  if (sorted_order != sorted_facets) {
    out.reason = "order is not a permutation of the facets";
    return out;
  }
  // r(F_j) collects the x with F_j - x inside an earlier facet. The pairwise
  // condition "F_i meets F_j inside a covered codimension-1 face" reduces to
  // r(F_j) reaching outside F_i: the witness facet is the one covering
  // F_j - x for any x in r(F_j) - F_i.
  int t = static_cast<int>(order.size());
  std::vector<Mask> restrictions;
  restrictions.reserve(order.size());
  long long full_count = 0;
  long long covered_faces = 0;
  for (int j = 0; j < t; ++j) {
    Mask f = order[static_cast<size_t>(j)];
    Mask r = 0;
    Mask rest = f;
    while (rest) {
      Mask low = rest & (~rest + 1);
      rest &= rest - 1;
      Mask boundary_face = f & ~low;
      for (int i = 0; i < j; ++i)
        if ((boundary_face & ~order[static_cast<size_t>(i)]) == 0) {
          r |= low;
          break;
        }
    }
    for (int i = 0; i < j; ++i)
      if (((f & ~order[static_cast<size_t>(i)]) & r) == 0) {
        out.violation_i = i + 1;
        out.violation_j = j + 1;
        out.reason = "no earlier facet meets F_j in a common codimension-1 face";
        return out;
      }
    restrictions.push_back(r);
    if (r == f) ++full_count;
    covered_faces += 1LL << popcount(f & ~r);
  }
  // The intervals [r(F_j), F_j] of a shelling partition the face set.
  if (covered_faces != c.face_count())
    throw std::logic_error("shelling: restriction intervals do not partition the faces");
  out.certificate.order = order;
  out.certificate.restrictions = std::move(restrictions);
  out.certificate.full_restriction_count = full_count;
  out.ok = true;
  return out;
}

namespace {

struct Searcher {
  const std::vector<Mask>& facets;
  std::uint64_t max_nodes;
  std::uint64_t explored = 0;
  bool budget_hit = false;
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;

  explicit Searcher(const std::vector<Mask>& f, std::uint64_t mn)
      : facets(f), max_nodes(mn) {}

  // F may follow the placed set when every earlier intersection routes
  // through some placed facet meeting F in codimension 1.
  bool feasible(std::uint64_t placed, int cand) const {
    Mask f = facets[static_cast<size_t>(cand)];
    int want = popcount(f) - 1;
    std::uint64_t witnesses = 0;
    std::uint64_t rest = placed;
    while (rest) {
      int k = std::countr_zero(rest);
      rest &= rest - 1;
      if (popcount(facets[static_cast<size_t>(k)] & f) == want)
        witnesses |= std::uint64_t{1} << k;
    }
    rest = placed;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      Mask meet = facets[static_cast<size_t>(i)] & f;
      bool ok = false;
      std::uint64_t w = witnesses;
      while (w) {
        int k = std::countr_zero(w);
        w &= w - 1;
        if ((meet & ~(facets[static_cast<size_t>(k)] & f)) == 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool dfs(std::uint64_t placed, const std::vector<int>& heuristic) {
    if (order.size() == facets.size()) return true;
    if (++explored > max_nodes) {
      budget_hit = true;
      return false;
    }
    if (dead.count(placed)) return false;
    for (int cand : heuristic) {
      if (placed & (std::uint64_t{1} << cand)) continue;
      if (!feasible(placed, cand)) continue;
      order.push_back(cand);
      if (dfs(placed | (std::uint64_t{1} << cand), heuristic)) return true;
      if (budget_hit) return false;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  }
};

}  // namespace

ShellingSearch find_shelling(const Complex& c, ShellingSearchOptions opts) {
  ShellingSearch out;
  if (c.is_void() || c.is_empty_face_only()) {
    // No facets to order (or only the empty face); vacuously shellable.
    out.status = SearchStatus::Found;
    out.order = c.facets();
    out.note = "trivial";
    if (!c.is_void()) {
      auto v = verify_shelling(c, out.order);
      out.certificate = v.certificate;
    }
    return out;
  }
  if (!c.is_pure()) throw std::invalid_argument("find_shelling: nonpure complex");
  int t = static_cast<int>(c.facets().size());
  if (t > kMaxVertices || t > opts.max_facets) {
    out.status = SearchStatus::Undecided;
    out.note = "facet count " + std::to_string(t) + " above configured bound " +
               std::to_string(std::min<int>(opts.max_facets, kMaxVertices));
    return out;
  }

  // Branch order: descending lexicographic order of the sorted complements.
  Mask full = full_mask(c.universe());
  std::vector<int> heuristic(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) heuristic[static_cast<size_t>(i)] = i;
  std::sort(heuristic.begin(), heuristic.end(), [&](int a, int b) {
    return lex_less(full & ~c.facets()[static_cast<size_t>(b)],
                    full & ~c.facets()[static_cast<size_t>(a)]);
  });

  Searcher s(c.facets(), opts.max_nodes);
  bool found = s.dfs(0, heuristic);
  out.explored = s.explored;
  if (found) {
    out.status = SearchStatus::Found;
    out.order.reserve(s.order.size());
    for (int idx : s.order) out.order.push_back(c.facets()[static_cast<size_t>(idx)]);
    auto v = verify_shelling(c, out.order);
    if (!v.ok) throw std::logic_error("find_shelling: produced order failed verification");
    out.certificate = v.certificate;
  } else if (s.budget_hit) {
    out.status = SearchStatus::Undecided;
    out.note = "node budget exhausted";
  } else {
    out.status = SearchStatus::None;
  }
  return out;
}

std::vector<Mask> squared_path_facets(int n, int k) {
  if (k < 2 || n - k < 2) throw std::invalid_argument("squared path facets: need 2 <= k <= n-2");
  std::vector<Mask> out;
  std::vector<int> c = first_k_subset(n - k);
  do {
    Mask f = vertices_to_mask(c);
    bool facet = false;
    for (int i = 2; i <= n - 2 && !facet; ++i) {
      if (!contains_vertex(f, i) || !contains_vertex(f, i + 1)) continue;
      if (contains_vertex(f, i - 1)) continue;
      // Some j >= i+2 outside F: the high complement part is nonempty.
      Mask high = ~f & full_mask(n) & ~full_mask(i + 1);
      facet = high != 0;
    }
    if (facet) out.push_back(f);
  } while (next_k_subset(c, n));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Mask> squared_path_shelling(int n, int k) {
  if (k < 2 || n < k + 3) throw std::invalid_argument("squared path shelling: need k >= 2, n >= k+3");
  std::vector<Mask> facets = squared_path_facets(n, k);
  // Peeling the top vertex splits the facets into those whose complement
  // reaches j = n, ordered first, and a cone over the copy on [n-1], ordered
  // recursively. Unrolled: sort by j = max of the complement, descending.
  // Inside a level, complements meeting {j-2, j-1} in fewer vertices come
  // first; then complements whose lowest run ends higher, so a facet's lower
  // boundary faces are already covered; facet order breaks remaining ties.
  Mask full = full_mask(n);
  auto first_run_end = [&](Mask comp) {
    int i = lowest_vertex(comp);
    while (contains_vertex(comp, i + 1) || contains_vertex(comp, i + 2))
      i = contains_vertex(comp, i + 2) ? i + 2 : i + 1;
    return i;
  };
  std::stable_sort(facets.begin(), facets.end(), [&](Mask a, Mask b) {
    Mask ca = full & ~a, cb = full & ~b;
    int ja = std::bit_width(ca), jb = std::bit_width(cb);
    if (ja != jb) return ja > jb;
    Mask near_a = ca & (vertex_bit(ja - 1) | vertex_bit(ja - 2));
    Mask near_b = cb & (vertex_bit(jb - 1) | vertex_bit(jb - 2));
    if (popcount(near_a) != popcount(near_b)) return popcount(near_a) < popcount(near_b);
    int ga = first_run_end(ca), gb = first_run_end(cb);
    if (ga != gb) return ga > gb;
    return lex_less(a, b);
  });
  return facets;
}

Poly h_from_certificate(const ShellingCertificate& cert) {
  int top = 0;
  for (Mask r : cert.restrictions) top = std::max(top, popcount(r));
  std::vector<long long> h(static_cast<size_t>(top) + 1, 0);
  for (Mask r : cert.restrictions) ++h[static_cast<size_t>(popcount(r))];
  return Poly::from_coeffs(std::move(h));
}

}  // namespace kcut
