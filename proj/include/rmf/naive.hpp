#ifndef RMF_NAIVE_HPP
#define RMF_NAIVE_HPP

// Brute-force oracle for the graph enumerators.
//
// Generates every labeled graph inside the EnumerationBounds, filters it with
// check_nonsep / check_sep, and buckets the survivors by pairwise isomorphism
// found through exhaustive vertex and edge permutation search. Shares only
// the constraint checkers, the bounds and the work counter with the fast
// path.
//
// Labels are normalized by first appearance: with edges listed as sorted
// (white, black, weight) triples, each new white or black label is one more
// than the largest seen so far. Every multigraph has such a labeling, so no
// isomorphism class is lost.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "rmf/decograph.hpp"
#include "rmf/enumerator.hpp"
#include "rmf/error.hpp"
#include "rmf/topotype.hpp"

namespace rmf {

struct NaiveResult {
  std::int64_t count = 0;
  std::vector<DecoratedGraph> graphs;  // one per class, in discovery order
  std::uint64_t candidates = 0;        // labeled structures examined
};

// ---------------------------------------------------------------------------
// Brute-force isomorphism

namespace detail {

class BruteIso {
 public:
  BruteIso(const DecoratedGraph& a, const DecoratedGraph& b) : A_(a), B_(b) {}

  bool run() {
    if (A_.vertex_count() != B_.vertex_count() || A_.edge_count() != B_.edge_count()) return false;
    if (A_.gamma.has_value() != B_.gamma.has_value()) return false;
    phi_.assign(A_.vertex_count(), -1);
    used_.assign(B_.vertex_count(), 0);
    return vertices(0);
  }

 private:
  bool vertices(int v) {
    const int nv = A_.vertex_count();
    if (v == nv) return gamma_ok() && edges_match();
    for (int u = 0; u < nv; ++u) {
      if (used_[u] || !(A_.vertices[v] == B_.vertices[u])) continue;
      phi_[v] = u;
      used_[u] = 1;
      if (vertices(v + 1)) return true;
      used_[u] = 0;
      phi_[v] = -1;
    }
    return false;
  }

  bool gamma_ok() const {
    if (!A_.gamma) return true;
    for (int v = 0; v < A_.vertex_count(); ++v)
      if (phi_[A_.gamma->vertices[v]] != B_.gamma->vertices[phi_[v]]) return false;
    return true;
  }

  bool edges_match() {
    psi_.assign(A_.edge_count(), -1);
    taken_.assign(B_.edge_count(), 0);
    return edge(0);
  }

  bool edge_fits(int e, int f) const {
    const auto& E = A_.edges[e];
    const auto& F = B_.edges[f];
    if (E.weight != F.weight) return false;
    const int pu = phi_[E.u];
    const int pv = phi_[E.v];
    return (F.u == pu && F.v == pv) || (F.u == pv && F.v == pu);
  }

  bool edge(int e) {
    const int ne = A_.edge_count();
    while (e < ne && psi_[e] >= 0) ++e;
    if (e == ne) return true;
    for (int f = 0; f < ne; ++f) {
      if (taken_[f] || !edge_fits(e, f)) continue;
      if (!A_.gamma) {
        psi_[e] = f;
        taken_[f] = 1;
        if (edge(e + 1)) return true;
        taken_[f] = 0;
        psi_[e] = -1;
        continue;
      }
      const int ge = A_.gamma->edges[e];
      const int gf = B_.gamma->edges[f];
      if ((ge == e) != (gf == f)) continue;
      if (ge == e) {
        psi_[e] = f;
        taken_[f] = 1;
        if (edge(e + 1)) return true;
        taken_[f] = 0;
        psi_[e] = -1;
        continue;
      }
      if (psi_[ge] >= 0 || taken_[gf] || !edge_fits(ge, gf)) continue;
      psi_[e] = f;
      psi_[ge] = gf;
      taken_[f] = taken_[gf] = 1;
      if (edge(e + 1)) return true;
      taken_[f] = taken_[gf] = 0;
      psi_[e] = psi_[ge] = -1;
    }
    return false;
  }

  const DecoratedGraph& A_;
  const DecoratedGraph& B_;
  std::vector<int> phi_;
  std::vector<char> used_;
  std::vector<int> psi_;
  std::vector<char> taken_;
};

}  // namespace detail

/// Exhaustive isomorphism test (vertex and edge bijections). Gammas, when
/// present, must be involutions.
inline bool brute_force_isomorphic(const DecoratedGraph& a, const DecoratedGraph& b) {
  return detail::BruteIso(a, b).run();
}

// ---------------------------------------------------------------------------
// Labeled generation

namespace detail {

struct Triple {
  int white;
  int black;
  int weight;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Edge multisets as non-decreasing triple sequences over nw whites and nb
// blacks, exactly `count` edges of total weight `total`, labels introduced by
// first appearance, every vertex used.
template <class Visit>
void labeled_edge_sets(int nw, int nb, int count, int total, WorkCounter& work, Visit&& visit) {
  std::vector<Triple> cur;
  auto rec = [&](auto&& self, int remaining_count, int remaining_weight, int max_w, int max_b) -> void {
    work.tick();
    if (remaining_count == 0) {
      if (remaining_weight == 0 && max_w == nw - 1 && max_b == nb - 1) visit(cur);
      return;
    }
    const int lo_w = cur.empty() ? 0 : cur.back().white;
    for (int w = lo_w; w <= std::min(max_w + 1, nw - 1); ++w) {
      for (int b = 0; b <= std::min(max_b + 1, nb - 1); ++b) {
        for (int x = 1; x <= remaining_weight - (remaining_count - 1); ++x) {
          const Triple t{w, b, x};
          if (!cur.empty() && t < cur.back()) continue;
          cur.push_back(t);
          self(self, remaining_count - 1, remaining_weight - x, std::max(max_w, w), std::max(max_b, b));
          cur.pop_back();
        }
      }
    }
  };
  rec(rec, count, total, -1, -1);
}

template <class Visit>
void subsets_of_size(int n, int size, Visit&& visit) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      visit(cur);
      return;
    }
    for (int x = start; x < n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Every vertex involution exchanging colors (white i <-> black perm[i]), and
// every edge involution compatible with it.
template <class Visit>
void all_gammas(const DecoratedGraph& G, int nw, WorkCounter& work, Visit&& visit) {
  const int nv = G.vertex_count();
  const int ne = G.edge_count();
  std::vector<int> perm(nw);
  for (int i = 0; i < nw; ++i) perm[i] = i;
  do {
    std::vector<int> vmap(nv);
    for (int i = 0; i < nw; ++i) {
      vmap[i] = nw + perm[i];
      vmap[nw + perm[i]] = i;
    }
    bool attributes_match = true;
    for (int v = 0; v < nv; ++v)
      if (G.vertices[v].weight != G.vertices[vmap[v]].weight ||
          G.vertices[v].root != G.vertices[vmap[v]].root)
        attributes_match = false;
    if (!attributes_match) continue;
    std::vector<int> emap(ne, -1);
    auto rec = [&](auto&& self, int e) -> void {
      work.tick();
      while (e < ne && emap[e] >= 0) ++e;
      if (e == ne) {
        visit(Gamma{vmap, emap});
        return;
      }
      const auto& E = G.edges[e];
      const int pu = vmap[E.u];
      const int pv = vmap[E.v];
      for (int f = e; f < ne; ++f) {
        if (emap[f] >= 0) continue;
        const auto& F = G.edges[f];
        if (F.weight != E.weight) continue;
        if (!((F.u == pu && F.v == pv) || (F.u == pv && F.v == pu))) continue;
        emap[e] = f;
        emap[f] = e;
        self(self, e + 1);
        emap[e] = emap[f] = -1;
      }
    };
    rec(rec, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

class Bucketer {
 public:
  void add(const DecoratedGraph& G) {
    auto& bucket = buckets_[invariant(G)];
    for (const auto& rep : bucket)
      if (brute_force_isomorphic(rep, G)) return;
    bucket.push_back(G);
    order_.push_back(G);
  }
  NaiveResult result(std::uint64_t candidates) const {
    NaiveResult r;
    r.count = static_cast<std::int64_t>(order_.size());
    r.graphs = order_;
    r.candidates = candidates;
    return r;
  }

 private:
  // Isomorphism-invariant profile: sorted (color, root, weight, degree,
  // gamma-fixed-degree) vertex tuples.
  static std::vector<std::tuple<int, int, int, int, int>> invariant(const DecoratedGraph& G) {
    std::vector<std::tuple<int, int, int, int, int>> t;
    for (int v = 0; v < G.vertex_count(); ++v) {
      int fixed = 0;
      for (int e = 0; e < G.edge_count(); ++e)
        if ((G.edges[e].u == v || G.edges[e].v == v) && G.gamma && G.gamma->edges[e] == e) ++fixed;
      const auto& V = G.vertices[v];
      t.emplace_back(static_cast<int>(V.color), V.root, V.weight, G.degree(v), fixed);
    }
    std::sort(t.begin(), t.end());
    return t;
  }

  std::map<std::vector<std::tuple<int, int, int, int, int>>, std::vector<DecoratedGraph>> buckets_;
  std::vector<DecoratedGraph> order_;
};

// Labeled skeleton: whites 0..nw-1, blacks nw..nw+nb-1.
inline DecoratedGraph skeleton(int nw, int nb, const std::vector<Triple>& triples) {
  DecoratedGraph G;
  for (int i = 0; i < nw; ++i) G.add_vertex(Color::White);
  for (int i = 0; i < nb; ++i) G.add_vertex(Color::Black);
  for (const auto& t : triples) G.add_edge(t.white, nw + t.black, t.weight);
  return G;
}

// Roots (given subsets), then every vertex-weight distribution of `z` over
// the non-root vertices.
template <class Visit>
void weightings(DecoratedGraph G, const std::vector<int>& roots, int z, Visit&& visit) {
  for (int r : roots) G.vertices[r].root = true;
  std::vector<int> free;
  for (int v = 0; v < G.vertex_count(); ++v)
    if (!G.vertices[v].root) free.push_back(v);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == free.size()) {
      if (left == 0) visit(G);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      G.vertices[free[j]].weight = x;
      self(self, j + 1, left - x);
    }
    G.vertices[free[j]].weight = 0;
  };
  rec(rec, 0, z);
}

inline bool roots_have_degree_one(const DecoratedGraph& G, const std::vector<int>& roots) {
  for (int r : roots)
    if (G.degree(r) != 1) return false;
  return true;
}

}  // namespace detail

/// Oracle count of non-separating graphs. Supports involutive gamma only.
inline NaiveResult enum_nonsep_naive_indices(int g, int n, std::span<const int> indices,
                                             const EnumOptions& opts = {}) {
  if (opts.gamma_any_order) throw DomainError("naive oracle supports involutive gamma only");
  for (int i : indices)
    if (i <= 0) throw DomainError("non-separating graphs need positive indices");
  WorkCounter work(opts.work_limit);
  const auto bounds = bounds_nonsep(g, n, indices);
  const int k = static_cast<int>(indices.size());
  const int total = bounds.max_edges;  // sum zeta_E is exactly n + sum I
  detail::Bucketer buckets;
  for (int ne = 1; ne <= bounds.max_edges; ++ne) {
    for (int z = 0; z <= bounds.max_total_vweight; ++z) {
      const int nv = k + ne + 1 + z - g;
      if (nv < 2 || nv % 2 != 0 || nv > bounds.max_vertices) continue;
      const int half = nv / 2;
      detail::labeled_edge_sets(half, half, ne, total, work, [&](const std::vector<detail::Triple>& ts) {
        const DecoratedGraph base = detail::skeleton(half, half, ts);
        if (!detail::is_connected(base)) return;
        detail::subsets_of_size(half, k, [&](const std::vector<int>& wr) {
          detail::subsets_of_size(half, k, [&](const std::vector<int>& br) {
            std::vector<int> roots = wr;
            for (int b : br) roots.push_back(half + b);
            if (!detail::roots_have_degree_one(base, roots)) return;
            detail::weightings(base, roots, z, [&](const DecoratedGraph& G) {
              work.tick();
              bool any = false;
              detail::all_gammas(G, half, work, [&](const Gamma& gm) {
                if (any && opts.gamma_existence) return;
                DecoratedGraph H = G;
                H.gamma = gm;
                if (!check_nonsep_indices(H, g, n, indices).empty()) return;
                any = true;
                if (!opts.gamma_existence) buckets.add(H);
              });
              if (any && opts.gamma_existence) buckets.add(G);
            });
          });
        });
      });
    }
  }
  return buckets.result(work.used());
}

/// Oracle count of separating graphs.
inline NaiveResult enum_sep_naive_degrees(int g, int n, std::span<const int> degrees,
                                          const EnumOptions& opts = {}) {
  for (int i : degrees)
    if (i == 0) throw DomainError("separating graphs are undefined for zero degrees");
  WorkCounter work(opts.work_limit);
  const auto bounds = bounds_sep(g, n, degrees);
  const int k = static_cast<int>(degrees.size());
  std::int64_t abs_sum = 0;
  int negatives = 0;
  for (int i : degrees) {
    abs_sum += i < 0 ? -i : i;
    negatives += i < 0;
  }
  detail::Bucketer buckets;
  if ((n + abs_sum) % 2 != 0 || (g - k + 1) < 0 || (g - k + 1) % 2 != 0)
    return buckets.result(0);
  const int total = bounds.max_edges;
  const int half_genus = (g - k + 1) / 2;
  for (int ne = 1; ne <= bounds.max_edges; ++ne) {
    for (int z = 0; z <= bounds.max_total_vweight; ++z) {
      const int nv = ne + 1 + z - half_genus;
      if (nv < 2 || nv > bounds.max_vertices) continue;
      for (int nw = 1; nw < nv; ++nw) {
        const int nb = nv - nw;
        detail::labeled_edge_sets(nw, nb, ne, total, work, [&](const std::vector<detail::Triple>& ts) {
          const DecoratedGraph base = detail::skeleton(nw, nb, ts);
          if (!detail::is_connected(base)) return;
          detail::subsets_of_size(nw, negatives, [&](const std::vector<int>& wr) {
            detail::subsets_of_size(nb, k - negatives, [&](const std::vector<int>& br) {
              std::vector<int> roots = wr;
              for (int b : br) roots.push_back(nw + b);
              if (!detail::roots_have_degree_one(base, roots)) return;
              detail::weightings(base, roots, z, [&](const DecoratedGraph& G) {
                work.tick();
                if (check_sep_degrees(G, g, n, degrees).empty()) buckets.add(G);
              });
            });
          });
        });
      }
    }
  }
  return buckets.result(work.used());
}

inline NaiveResult enum_nonsep_naive(const TopType& t, const EnumOptions& opts = {}) {
  if (t.variant() != Variant::NonSep) throw DomainError("enum_nonsep_naive needs a NonSep type");
  if (!exists(t).exists) throw DomainError("type " + format_type(t) + " does not exist");
  if (t.has_zero_index()) throw DomainError("non-separating graphs are undefined for zero indices");
  return enum_nonsep_naive_indices(t.g(), t.n(), t.indices(), opts);
}

inline NaiveResult enum_sep_naive(const TopType& t, const EnumOptions& opts = {}) {
  if (t.variant() != Variant::Sep) throw DomainError("enum_sep_naive needs a Sep type");
  if (!exists(t).exists) throw DomainError("type " + format_type(t) + " does not exist");
  if (t.has_zero_index()) throw DomainError("separating graphs are undefined for zero degrees");
  if (admits_extension(t))
    throw DomainError("type admits extension; its components are the extended types");
  return enum_sep_naive_degrees(t.g(), t.n(), t.indices(), opts);
}

}  // namespace rmf

#endif  // RMF_NAIVE_HPP
