#ifndef RMF_ENUMERATOR_HPP
#define RMF_ENUMERATOR_HPP

// Enumeration of separating and non-separating graphs up to isomorphism.
//
// Every graph splits into a core (the non-root vertices and the edges between
// them) and k pendant root edges. The genus and degree equations fix the
// total core edge weight and the core cycle rank plus vertex-weight total, so
// the pipeline is:
//
//   1. connected bipartite multigraph shapes, generated isomorph-free by
//      canonical deletion;
//   2. edge weights as compositions of the core weight;
//   3. vertex weights as distributions of the remaining genus;
//   4. root attachment (white roots hang off black core vertices and vice
//      versa);
//   5. gamma search (non-separating only) and deduplication by canonical key.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmf/canonical.hpp"
#include "rmf/decograph.hpp"
#include "rmf/error.hpp"
#include "rmf/topotype.hpp"

namespace rmf {

inline constexpr std::uint64_t kDefaultWorkLimit = 100'000'000;

struct EnumOptions {
  /// Count underlying graphs admitting at least one gamma instead of
  /// (graph, gamma) pairs up to conjugation.
  bool gamma_existence = false;
  bool gamma_any_order = false;
  /// When set, enum_sep refuses the |sum I| = n case, whose answer is known
  /// in closed form.
  bool short_circuit = true;
  std::uint64_t work_limit = kDefaultWorkLimit;
};

class WorkCounter {
 public:
  explicit WorkCounter(std::uint64_t limit) : limit_(limit) {}

  void tick(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) throw WorkLimitExceeded(limit_);
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Size limits implied by the genus and degree equations.
struct EnumerationBounds {
  int max_edges = 0;
  int max_vertices = 0;
  int max_total_vweight = 0;
};

/// Non-separating: sum zeta_E = n + sum I bounds |E|; connectivity bounds
/// sum zeta_V by g - k; |V| = k + |E| + 1 + sum zeta_V - g <= |E| + 1.
inline EnumerationBounds bounds_nonsep(int g, int n, std::span<const int> indices) {
  std::int64_t isum = 0;
  for (int i : indices) isum += i;
  const int k = static_cast<int>(indices.size());
  EnumerationBounds b;
  b.max_edges = static_cast<int>(std::max<std::int64_t>(0, n + isum));
  b.max_total_vweight = std::max(0, g - k);
  b.max_vertices = b.max_edges + 1;
  return b;
}

/// Separating: sum zeta_E = (n + sum |I|) / 2 bounds |E|; sum zeta_V is at
/// most (g - k + 1) / 2.
inline EnumerationBounds bounds_sep(int g, int n, std::span<const int> degrees) {
  std::int64_t abs_sum = 0;
  for (int i : degrees) abs_sum += i < 0 ? -i : i;
  const int k = static_cast<int>(degrees.size());
  EnumerationBounds b;
  b.max_edges = static_cast<int>(std::max<std::int64_t>(0, (n + abs_sum) / 2));
  b.max_total_vweight = std::max(0, (g - k + 1) / 2);
  b.max_vertices = b.max_edges + 1;
  return b;
}

// ---------------------------------------------------------------------------
// Shapes

namespace detail {

// Shape edges all have weight 1; weight 2 marks a distinguished edge.
inline std::string marked_key(const DecoratedGraph& shape, int edge) {
  DecoratedGraph m = shape;
  m.edges[edge].weight = 2;
  return canonical_key(m);
}

inline bool connected_without(const DecoratedGraph& G, int skip) {
  const int nv = G.vertex_count();
  std::vector<int> parent(nv);
  for (int v = 0; v < nv; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = nv;
  for (int e = 0; e < G.edge_count(); ++e) {
    if (e == skip) continue;
    const int a = find(G.edges[e].u);
    const int b = find(G.edges[e].v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

// Edges whose removal (together with a leaf endpoint, for pendant edges)
// leaves a connected shape.
inline std::vector<int> deletable_edges(const DecoratedGraph& G) {
  std::vector<int> out;
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    const bool pendant = G.degree(E.u) == 1 || G.degree(E.v) == 1;
    if (connected_without(G, e) || pendant) out.push_back(e);
  }
  return out;
}

// Canonical deletion: the deletable edge whose canonical endpoint labels are
// lexicographically largest.
inline int canonical_deletion(const DecoratedGraph& G) {
  const auto form = canonical_form(G);
  std::vector<int> label(G.vertex_count());
  for (int p = 0; p < G.vertex_count(); ++p) label[form.order[p]] = p;
  int best = -1;
  std::pair<int, int> best_pair{-1, -1};
  for (int e : deletable_edges(G)) {
    const int a = label[G.edges[e].u];
    const int b = label[G.edges[e].v];
    const std::pair<int, int> p{std::min(a, b), std::max(a, b)};
    if (p > best_pair) {
      best_pair = p;
      best = e;
    }
  }
  return best;
}

}  // namespace detail

/// Connected bipartite multigraph shapes up to color-preserving isomorphism,
/// grouped by edge count: result[e] holds the shapes with e edges, for
/// 1 <= e <= max_edges, restricted to at most max_vertices vertices and cycle
/// rank at most max_rank. Shapes with both colors only (every shape has an
/// edge).
inline std::vector<std::vector<DecoratedGraph>> connected_shapes(int max_edges, int max_vertices,
                                                                 int max_rank, WorkCounter& work) {
  std::vector<std::vector<DecoratedGraph>> levels(std::max(1, max_edges + 1));
  if (max_edges < 1 || max_vertices < 2 || max_rank < 0) return levels;
  DecoratedGraph seed;
  seed.add_vertex(Color::White);
  seed.add_vertex(Color::Black);
  seed.add_edge(0, 1, 1);
  levels[1].push_back(seed);

  for (int e = 1; e < max_edges; ++e) {
    for (const auto& parent : levels[e]) {
      std::vector<DecoratedGraph> children;
      const int nv = parent.vertex_count();
      for (int a = 0; a < nv; ++a) {
        if (parent.vertices[a].color != Color::White) continue;
        for (int b = 0; b < nv; ++b) {
          if (parent.vertices[b].color != Color::Black) continue;
          DecoratedGraph c = parent;
          c.add_edge(a, b, 1);
          children.push_back(std::move(c));
        }
      }
      if (nv < max_vertices) {
        for (int a = 0; a < nv; ++a) {
          DecoratedGraph c = parent;
          const int leaf = c.add_vertex(opposite(parent.vertices[a].color));
          c.add_edge(a, leaf, 1);
          children.push_back(std::move(c));
        }
      }
      std::set<std::string> seen;
      for (auto& c : children) {
        work.tick();
        const int rank = c.edge_count() - c.vertex_count() + 1;
        if (rank > max_rank) continue;
        const int added = c.edge_count() - 1;
        auto key = detail::marked_key(c, added);
        if (!seen.insert(key).second) continue;
        const int chosen = detail::canonical_deletion(c);
        if (chosen != added && detail::marked_key(c, chosen) != key) continue;
        levels[e + 1].push_back(std::move(c));
      }
    }
  }
  return levels;
}

// ---------------------------------------------------------------------------
// Decoration helpers

namespace detail {

/// Ordered compositions of `total` into `parts` positive parts.
inline void compositions(int total, int parts, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = 1; x <= total - (parts - 1); ++x) {
    cur.push_back(x);
    compositions(total - x, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// Ordered distributions of `total` into `parts` non-negative parts.
inline void distributions(int total, int parts, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    distributions(total - x, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// Attachment choices for roots with the given (sorted) weights onto
/// `targets`; roots of equal weight take non-decreasing target positions.
inline void attachments(const std::vector<int>& weights, const std::vector<int>& targets,
                        std::size_t j, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (j == weights.size()) {
    out.push_back(cur);
    return;
  }
  std::size_t start = 0;
  if (j > 0 && weights[j] == weights[j - 1]) start = static_cast<std::size_t>(cur.back());
  for (std::size_t t = start; t < targets.size(); ++t) {
    cur.push_back(static_cast<int>(t));
    attachments(weights, targets, j + 1, cur, out);
    cur.pop_back();
  }
}

/// Relabel G into canonical vertex order with edges sorted, so that emitted
/// representatives do not depend on discovery order.
inline DecoratedGraph canonical_representative(const DecoratedGraph& G) {
  const auto form = canonical_form(G);
  std::vector<int> vperm(G.vertex_count());
  for (int p = 0; p < G.vertex_count(); ++p) vperm[form.order[p]] = p;
  std::vector<std::tuple<int, int, int, int, int>> es;
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    const int a = vperm[E.u];
    const int b = vperm[E.v];
    const int fixed = (G.gamma && G.gamma->edges[e] == e) ? 1 : 0;
    es.emplace_back(std::min(a, b), std::max(a, b), E.weight, fixed, e);
  }
  std::sort(es.begin(), es.end());
  std::vector<int> eperm(G.edge_count());
  std::vector<bool> flip(G.edge_count());
  for (int pos = 0; pos < G.edge_count(); ++pos) {
    const int e = std::get<4>(es[pos]);
    eperm[e] = pos;
    flip[e] = vperm[G.edges[e].u] > vperm[G.edges[e].v];
  }
  return relabeled(G, vperm, eperm, flip);
}

class GraphCollector {
 public:
  void add(const DecoratedGraph& G, const std::string& key) {
    if (graphs_.count(key)) return;
    graphs_.emplace(key, canonical_representative(G));
  }
  std::vector<DecoratedGraph> take() {
    std::vector<DecoratedGraph> out;
    out.reserve(graphs_.size());
    for (auto& [key, g] : graphs_) out.push_back(std::move(g));
    return out;
  }

 private:
  std::map<std::string, DecoratedGraph> graphs_;
};

struct RootSpec {
  std::vector<int> white;  // weights of white roots, sorted
  std::vector<int> black;  // weights of black roots, sorted
};

// Calls emit(graph) for every decoration of every shape: core edge weights
// summing to core_weight, vertex weights summing to rank_budget - rank, and
// every root attachment.
template <class Emit>
void decorate_shapes(const std::vector<std::vector<DecoratedGraph>>& levels, int core_weight,
                     int rank_budget, bool balanced_core, const RootSpec& roots,
                     WorkCounter& work, Emit&& emit) {
  for (int e = 1; e < static_cast<int>(levels.size()) && e <= core_weight; ++e) {
    std::vector<std::vector<int>> weightings;
    std::vector<int> cur;
    compositions(core_weight, e, cur, weightings);
    for (const auto& shape : levels[e]) {
      const int nv = shape.vertex_count();
      const int rank = e - nv + 1;
      const int spare = rank_budget - rank;
      if (spare < 0) continue;
      if (balanced_core && shape.count(Color::White) != shape.count(Color::Black)) continue;
      std::vector<int> whites;
      std::vector<int> blacks;
      for (int v = 0; v < nv; ++v)
        (shape.vertices[v].color == Color::White ? whites : blacks).push_back(v);

      std::vector<std::vector<int>> vweights;
      distributions(spare, nv, cur, vweights);
      std::vector<std::vector<int>> white_att;  // white roots onto black vertices
      std::vector<std::vector<int>> black_att;
      attachments(roots.white, blacks, 0, cur, white_att);
      attachments(roots.black, whites, 0, cur, black_att);

      for (const auto& ew : weightings)
        for (const auto& vw : vweights)
          for (const auto& wa : white_att)
            for (const auto& ba : black_att) {
              work.tick();
              DecoratedGraph G = shape;
              for (int x = 0; x < e; ++x) G.edges[x].weight = ew[x];
              for (int v = 0; v < nv; ++v) G.vertices[v].weight = vw[v];
              for (std::size_t j = 0; j < roots.white.size(); ++j) {
                const int r = G.add_vertex(Color::White, 0, true);
                G.add_edge(r, blacks[wa[j]], roots.white[j]);
              }
              for (std::size_t j = 0; j < roots.black.size(); ++j) {
                const int r = G.add_vertex(Color::Black, 0, true);
                G.add_edge(whites[ba[j]], r, roots.black[j]);
              }
              emit(std::move(G));
            }
    }
  }
}

}  // namespace detail

/// Non-separating graphs for positive indices given in any order, one per
/// isomorphism class, sorted by canonical key. In gamma-existence mode the
/// classes are those of the underlying graphs, each emitted with one gamma.
inline std::vector<DecoratedGraph> enum_nonsep_indices(int g, int n, std::span<const int> indices,
                                                       const EnumOptions& opts = {}) {
  for (int i : indices)
    if (i <= 0) throw DomainError("non-separating graphs need positive indices");
  if (g < 0 || n < 1) throw DomainError("need g >= 0 and n >= 1");
  WorkCounter work(opts.work_limit);
  const int k = static_cast<int>(indices.size());
  std::int64_t isum = 0;
  for (int i : indices) isum += i;
  const std::int64_t core_weight = n - isum;
  const int rank_budget = g - k;
  // A core without edges would need roots of both colors on one vertex; a
  // root-to-root edge would force n = 0.
  if (core_weight < 1 || rank_budget < 0) return {};

  detail::RootSpec roots;
  roots.white = detail::sorted_copy(indices);
  roots.black = roots.white;
  const auto bounds = bounds_nonsep(g, n, indices);
  const auto levels = connected_shapes(static_cast<int>(core_weight),
                                       std::min<int>(bounds.max_vertices, static_cast<int>(core_weight) + 1),
                                       rank_budget, work);
  const GammaOptions gopts{opts.gamma_any_order};
  detail::GraphCollector out;
  std::map<std::string, std::pair<std::string, DecoratedGraph>> by_underlying;
  detail::decorate_shapes(levels, static_cast<int>(core_weight), rank_budget, true, roots, work,
                          [&](DecoratedGraph G) {
                            const auto gammas = find_gammas(G, gopts);
                            work.tick(gammas.size());
                            if (gammas.empty()) return;
                            if (opts.gamma_existence) {
                              const std::string ukey = canonical_key(G);
                              for (const auto& gm : gammas) {
                                DecoratedGraph H = G;
                                H.gamma = gm;
                                std::string fkey = canonical_key(H);
                                auto it = by_underlying.find(ukey);
                                if (it == by_underlying.end())
                                  by_underlying.emplace(ukey, std::pair{std::move(fkey), std::move(H)});
                                else if (fkey < it->second.first)
                                  it->second = {std::move(fkey), std::move(H)};
                              }
                              return;
                            }
                            for (const auto& gm : gammas) {
                              DecoratedGraph H = G;
                              H.gamma = gm;
                              out.add(H, canonical_key(H));
                            }
                          });
  if (opts.gamma_existence) {
    std::vector<DecoratedGraph> res;
    for (auto& [ukey, entry] : by_underlying)
      res.push_back(detail::canonical_representative(entry.second));
    return res;
  }
  return out.take();
}

/// Separating graphs for non-zero signed degrees given in any order.
inline std::vector<DecoratedGraph> enum_sep_degrees(int g, int n, std::span<const int> degrees,
                                                    const EnumOptions& opts = {}) {
  for (int i : degrees)
    if (i == 0) throw DomainError("separating graphs are undefined for zero degrees");
  if (g < 0 || n < 1) throw DomainError("need g >= 0 and n >= 1");
  WorkCounter work(opts.work_limit);
  const int k = static_cast<int>(degrees.size());
  std::int64_t abs_sum = 0;
  detail::RootSpec roots;
  for (int i : degrees) {
    abs_sum += i < 0 ? -i : i;
    (i < 0 ? roots.white : roots.black).push_back(i < 0 ? -i : i);
  }
  std::sort(roots.white.begin(), roots.white.end());
  std::sort(roots.black.begin(), roots.black.end());
  if ((n + abs_sum) % 2 != 0 || (g - k + 1) < 0 || (g - k + 1) % 2 != 0) return {};
  const std::int64_t core_weight = (n - abs_sum) / 2;
  const int rank_budget = (g - k + 1) / 2;
  if (core_weight < 0) return {};

  detail::GraphCollector out;
  if (core_weight == 0) {
    // Single core vertex carrying all of the genus; every root must hang off
    // it, so all roots share a color. (A lone root-to-root edge has n = 0.)
    if (!roots.white.empty() && !roots.black.empty()) return {};
    work.tick();
    DecoratedGraph G;
    const Color core = roots.white.empty() ? Color::White : Color::Black;
    const int c = G.add_vertex(core, rank_budget, false);
    for (int w : roots.white.empty() ? roots.black : roots.white) {
      const int r = G.add_vertex(opposite(core), 0, true);
      G.add_edge(c, r, w);
    }
    out.add(G, canonical_key(G));
    return out.take();
  }

  const auto levels = connected_shapes(static_cast<int>(core_weight),
                                       static_cast<int>(core_weight) + 1, rank_budget, work);
  detail::decorate_shapes(levels, static_cast<int>(core_weight), rank_budget, false, roots, work,
                          [&](DecoratedGraph G) { out.add(G, canonical_key(G)); });
  return out.take();
}

inline std::vector<DecoratedGraph> enum_nonsep(const TopType& t, const EnumOptions& opts = {}) {
  if (t.variant() != Variant::NonSep) throw DomainError("enum_nonsep needs a NonSep type");
  if (!exists(t).exists) throw DomainError("type " + format_type(t) + " does not exist");
  if (t.has_zero_index())
    throw DomainError("non-separating graphs are undefined for zero indices");
  return enum_nonsep_indices(t.g(), t.n(), t.indices(), opts);
}

inline std::vector<DecoratedGraph> enum_sep(const TopType& t, const EnumOptions& opts = {}) {
  if (t.variant() != Variant::Sep) throw DomainError("enum_sep needs a Sep type");
  if (!exists(t).exists) throw DomainError("type " + format_type(t) + " does not exist");
  if (t.has_zero_index()) throw DomainError("separating graphs are undefined for zero degrees");
  if (admits_extension(t))
    throw DomainError("type admits extension; its components are the extended types");
  const auto s = t.index_sum();
  if (opts.short_circuit && (s < 0 ? -s : s) == t.n())
    throw DomainError("|sum I| = n is answered in closed form; disable short-circuit to enumerate");
  return enum_sep_degrees(t.g(), t.n(), t.indices(), opts);
}

}  // namespace rmf

#endif  // RMF_ENUMERATOR_HPP
