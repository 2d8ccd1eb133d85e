#ifndef RMF_DECOGRAPH_HPP
#define RMF_DECOGRAPH_HPP

// Bipartite decorated multigraphs: the separating and non-separating graphs
// whose isomorphism classes count the Euler characteristic of a
// compactified component.
//
// Vertices carry a color (white = component over the upper half-plane,
// black = over the lower), a genus weight and a root flag. Edges carry the
// number of sheets over the real line and have identity, so parallel edges
// are distinct. The optional gamma is a color-swapping automorphism acting on
// both vertices and edges.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rmf/error.hpp"
#include "rmf/topotype.hpp"

namespace rmf {

enum class Color : std::uint8_t { White = 0, Black = 1 };

inline Color opposite(Color c) { return c == Color::White ? Color::Black : Color::White; }

struct Vertex {
  Color color = Color::White;
  int weight = 0;  // zeta_V, genus of the corresponding surface piece
  bool root = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  int weight = 1;  // zeta_E, sheets over the real line

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Images of every vertex id and every edge id.
struct Gamma {
  std::vector<int> vertices;
  std::vector<int> edges;

  friend auto operator<=>(const Gamma&, const Gamma&) = default;
  friend bool operator==(const Gamma&, const Gamma&) = default;
};

struct DecoratedGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::optional<Gamma> gamma;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int add_vertex(Color c, int weight = 0, bool root = false) {
    vertices.push_back({c, weight, root});
    return vertex_count() - 1;
  }
  int add_edge(int u, int v, int weight) {
    edges.push_back({u, v, weight});
    return edge_count() - 1;
  }

  int count(Color c) const {
    return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                          [c](const Vertex& v) { return v.color == c; }));
  }
  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
  }
  std::int64_t vertex_weight_sum() const {
    std::int64_t s = 0;
    for (const auto& v : vertices) s += v.weight;
    return s;
  }
  std::int64_t edge_weight_sum() const {
    std::int64_t s = 0;
    for (const auto& e : edges) s += e.weight;
    return s;
  }

  DecoratedGraph without_gamma() const {
    DecoratedGraph h = *this;
    h.gamma.reset();
    return h;
  }

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;
};

/// The white and black endpoint of an edge (assumes the edge is bipartite).
inline std::pair<int, int> white_black(const DecoratedGraph& G, const Edge& e) {
  return G.vertices[e.u].color == Color::White ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

/// Edge action induced by a vertex map when no explicit one is given: an edge
/// whose endpoints are swapped is fixed, other edges are matched in id order
/// to the parallel edges of equal weight between the image endpoints.
/// Entries are -1 where no matching edge exists.
inline std::vector<int> induced_edge_action(const DecoratedGraph& G,
                                            const std::vector<int>& vertex_image) {
  const int nv = G.vertex_count();
  auto in_range = [nv](int x) { return x >= 0 && x < nv; };
  using Key = std::tuple<int, int, int>;
  auto key = [](int a, int b, int w) { return Key{std::min(a, b), std::max(a, b), w}; };
  std::map<Key, std::vector<int>> classes;
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    classes[key(E.u, E.v, E.weight)].push_back(e);
  }
  std::vector<int> image(G.edge_count(), -1);
  for (const auto& [k, ids] : classes) {
    const auto [a, b, w] = k;
    if (!in_range(a) || !in_range(b) || static_cast<int>(vertex_image.size()) != nv) continue;
    const int pa = vertex_image[a];
    const int pb = vertex_image[b];
    if (!in_range(pa) || !in_range(pb)) continue;
    const Key target = key(pa, pb, w);
    if (target == k) {
      for (int e : ids) image[e] = e;
      continue;
    }
    auto it = classes.find(target);
    if (it == classes.end()) continue;
    for (std::size_t j = 0; j < ids.size() && j < it->second.size(); ++j)
      image[ids[j]] = it->second[j];
  }
  return image;
}

struct Violation {
  std::string clause;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ViolationList = std::vector<Violation>;

inline bool has_clause(const ViolationList& vs, const std::string& clause) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.clause == clause; });
}

struct GammaOptions {
  /// Accept color-swapping automorphisms of any order, not just involutions.
  bool any_order = false;
};

namespace detail {

inline bool is_connected(const DecoratedGraph& G) {
  const int nv = G.vertex_count();
  if (nv == 0) return false;
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = nv;
  for (const auto& e : G.edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

// Structural invariants shared by both graph roles. Returns false when the
// graph is too broken (bad endpoints) for further checks to be meaningful.
inline bool check_structure(const DecoratedGraph& G, ViolationList& out) {
  const int nv = G.vertex_count();
  bool ok = true;
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    if (E.u < 0 || E.u >= nv || E.v < 0 || E.v >= nv) {
      out.push_back({"edge-endpoints", "edge " + std::to_string(e) + " has an endpoint out of range"});
      ok = false;
    }
  }
  if (!ok) return false;
  for (int v = 0; v < nv; ++v)
    if (G.vertices[v].weight < 0)
      out.push_back({"vertex-weight", "vertex " + std::to_string(v) + " has negative weight"});
  for (int e = 0; e < G.edge_count(); ++e) {
    const auto& E = G.edges[e];
    if (E.weight < 1)
      out.push_back({"edge-weight", "edge " + std::to_string(e) + " has non-positive weight"});
    if (G.vertices[E.u].color == G.vertices[E.v].color)
      out.push_back({"bipartite", "edge " + std::to_string(e) + " joins vertices of one color"});
  }
  if (!is_connected(G)) out.push_back({"connected", "graph is not connected"});
  for (int v = 0; v < nv; ++v) {
    if (!G.vertices[v].root) continue;
    if (G.degree(v) != 1)
      out.push_back({"root-degree", "root vertex " + std::to_string(v) + " does not have degree 1"});
    if (G.vertices[v].weight != 0)
      out.push_back({"root-weight", "root vertex " + std::to_string(v) + " has non-zero weight"});
  }
  return true;
}

inline bool is_permutation_of(const std::vector<int>& p, int size) {
  if (static_cast<int>(p.size()) != size) return false;
  std::vector<char> seen(size, 0);
  for (int x : p) {
    if (x < 0 || x >= size || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

inline void check_gamma(const DecoratedGraph& G, const GammaOptions& opts, ViolationList& out) {
  const Gamma& gm = *G.gamma;
  const int nv = G.vertex_count();
  const int ne = G.edge_count();
  if (!is_permutation_of(gm.vertices, nv)) {
    out.push_back({"gamma-permutation", "vertex image is not a permutation"});
    return;
  }
  if (!is_permutation_of(gm.edges, ne)) {
    out.push_back({"gamma-permutation", "edge image is not a permutation"});
    return;
  }
  for (int v = 0; v < nv; ++v) {
    const auto& a = G.vertices[v];
    const auto& b = G.vertices[gm.vertices[v]];
    if (a.color == b.color)
      out.push_back({"gamma-color-swap", "gamma keeps the color of vertex " + std::to_string(v)});
    if (a.weight != b.weight)
      out.push_back({"gamma-vertex-weight", "gamma changes the weight of vertex " + std::to_string(v)});
    if (a.root != b.root)
      out.push_back({"gamma-root", "gamma does not map roots to roots at vertex " + std::to_string(v)});
    if (!opts.any_order && gm.vertices[gm.vertices[v]] != v)
      out.push_back({"gamma-involution", "gamma is not an involution at vertex " + std::to_string(v)});
  }
  for (int e = 0; e < ne; ++e) {
    const auto& E = G.edges[e];
    const auto& F = G.edges[gm.edges[e]];
    const int pu = gm.vertices[E.u];
    const int pv = gm.vertices[E.v];
    const bool incident = (F.u == pu && F.v == pv) || (F.u == pv && F.v == pu);
    if (!incident || E.weight != F.weight)
      out.push_back({"gamma-edge-map", "edge " + std::to_string(e) + " is not mapped to a matching edge"});
    if (!opts.any_order && gm.edges[gm.edges[e]] != e)
      out.push_back({"gamma-involution", "gamma is not an involution at edge " + std::to_string(e)});
    if (gm.edges[e] == e && E.weight % 2 != 0)
      out.push_back({"gamma-even-fixed-edge", "edge " + std::to_string(e) + " is fixed by gamma but has odd weight"});
  }
}

inline std::vector<int> sorted_copy(std::span<const int> xs) {
  std::vector<int> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Constraint check of a non-separating graph against oval indices given in
/// any order. `indices` must be non-zero.
inline ViolationList check_nonsep_indices(const DecoratedGraph& G, int g, int n,
                                          std::span<const int> indices,
                                          const GammaOptions& opts = {}) {
  for (int i : indices)
    if (i <= 0) throw DomainError("non-separating graphs need positive indices");
  ViolationList out;
  if (!detail::check_structure(G, out)) return out;

  if (!G.gamma)
    out.push_back({"gamma-present", "non-separating graph needs gamma"});
  else
    detail::check_gamma(G, opts, out);

  if (G.count(Color::White) != G.count(Color::Black))
    out.push_back({"balanced-colors", "|V_w| != |V_b|"});

  const std::int64_t k = static_cast<std::int64_t>(indices.size());
  std::int64_t isum = 0;
  for (int i : indices) isum += i;
  const std::int64_t genus = k + G.edge_count() - G.vertex_count() + 1 + G.vertex_weight_sum();
  if (genus != g)
    out.push_back({"genus-equation", "k + |E| - |V| + 1 + sum zeta_V = " + std::to_string(genus) +
                                         ", expected " + std::to_string(g)});
  const std::int64_t degree = G.edge_weight_sum() - isum;
  if (degree != n)
    out.push_back({"degree-equation", "sum zeta_E - sum I = " + std::to_string(degree) +
                                          ", expected " + std::to_string(n)});

  std::vector<int> white_roots;
  std::vector<int> black_roots;
  for (int v = 0; v < G.vertex_count(); ++v)
    if (G.vertices[v].root)
      (G.vertices[v].color == Color::White ? white_roots : black_roots).push_back(v);
  if (static_cast<std::int64_t>(white_roots.size()) != k ||
      static_cast<std::int64_t>(black_roots.size()) != k) {
    out.push_back({"root-count", "need exactly k root vertices of each color"});
  } else if (!has_clause(out, "root-degree")) {
    const auto want = detail::sorted_copy(indices);
    auto root_weights = [&](const std::vector<int>& roots) {
      std::vector<int> w;
      for (int r : roots)
        for (const auto& e : G.edges)
          if (e.u == r || e.v == r) w.push_back(e.weight);
      std::sort(w.begin(), w.end());
      return w;
    };
    if (root_weights(white_roots) != want)
      out.push_back({"root-weights", "white root edge weights differ from I"});
    if (root_weights(black_roots) != want)
      out.push_back({"root-weights", "black root edge weights differ from I"});
  }
  return out;
}

inline ViolationList check_nonsep(const DecoratedGraph& G, const TopType& t,
                                  const GammaOptions& opts = {}) {
  if (t.variant() != Variant::NonSep) throw DomainError("check_nonsep needs a NonSep type");
  if (t.has_zero_index()) throw DomainError("non-separating graphs are undefined for zero indices");
  return check_nonsep_indices(G, t.g(), t.n(), t.indices(), opts);
}

/// Constraint check of a separating graph against signed degrees given in any
/// order. `degrees` must be non-zero.
inline ViolationList check_sep_degrees(const DecoratedGraph& G, int g, int n,
                                       std::span<const int> degrees) {
  for (int i : degrees)
    if (i == 0) throw DomainError("separating graphs are undefined for zero degrees");
  ViolationList out;
  if (!detail::check_structure(G, out)) return out;
  if (G.gamma) out.push_back({"gamma-absent", "separating graph carries no gamma"});

  const std::int64_t k = static_cast<std::int64_t>(degrees.size());
  std::int64_t abs_sum = 0;
  std::int64_t negatives = 0;
  for (int i : degrees) {
    abs_sum += i < 0 ? -i : i;
    negatives += i < 0;
  }
  const std::int64_t genus =
      (k - 1) + 2 * (G.edge_count() - G.vertex_count() + 1) + 2 * G.vertex_weight_sum();
  if (genus != g)
    out.push_back({"genus-equation", "(k-1) + 2(|E| - |V| + 1) + 2 sum zeta_V = " +
                                         std::to_string(genus) + ", expected " + std::to_string(g)});
  const std::int64_t degree = 2 * G.edge_weight_sum() - abs_sum;
  if (degree != n)
    out.push_back({"degree-equation", "2 sum zeta_E - sum |I| = " + std::to_string(degree) +
                                          ", expected " + std::to_string(n)});

  std::int64_t white_roots = 0;
  std::int64_t black_roots = 0;
  for (const auto& v : G.vertices)
    if (v.root) (v.color == Color::White ? white_roots : black_roots) += 1;
  if (white_roots + black_roots != k) {
    out.push_back({"root-count", "need exactly k root vertices"});
  } else if (white_roots != negatives || black_roots != k - negatives) {
    out.push_back({"root-colors", "root colors must match the signs of I"});
  } else if (!has_clause(out, "root-degree")) {
    std::vector<int> signed_weights;
    for (int v = 0; v < G.vertex_count(); ++v) {
      if (!G.vertices[v].root) continue;
      const int sign = G.vertices[v].color == Color::White ? -1 : 1;
      for (const auto& e : G.edges)
        if (e.u == v || e.v == v) signed_weights.push_back(sign * e.weight);
    }
    std::sort(signed_weights.begin(), signed_weights.end());
    if (signed_weights != detail::sorted_copy(degrees))
      out.push_back({"root-weights", "signed root edge weights differ from I"});
  }
  return out;
}

inline ViolationList check_sep(const DecoratedGraph& G, const TopType& t) {
  if (t.variant() != Variant::Sep) throw DomainError("check_sep needs a Sep type");
  if (t.has_zero_index()) throw DomainError("separating graphs are undefined for zero degrees");
  return check_sep_degrees(G, t.g(), t.n(), t.indices());
}

// ---------------------------------------------------------------------------
// Gamma search

namespace detail {

class GammaSearch {
 public:
  GammaSearch(const DecoratedGraph& G, const GammaOptions& opts) : G_(G), opts_(opts) {
    const int nv = G.vertex_count();
    between_.assign(nv, std::vector<std::vector<int>>(nv));
    for (const auto& e : G.edges) {
      between_[e.u][e.v].push_back(e.weight);
      between_[e.v][e.u].push_back(e.weight);
    }
    for (auto& row : between_)
      for (auto& cell : row) std::sort(cell.begin(), cell.end());
    degree_.resize(nv);
    for (int v = 0; v < nv; ++v) degree_[v] = G.degree(v);
    image_.assign(nv, -1);
    used_.assign(nv, 0);
  }

  std::vector<std::vector<int>> vertex_maps() {
    if (G_.count(Color::White) != G_.count(Color::Black)) return {};
    search(0);
    return std::move(found_);
  }

 private:
  bool compatible(int v, int u) const {
    const auto& a = G_.vertices[v];
    const auto& b = G_.vertices[u];
    return a.color != b.color && a.weight == b.weight && a.root == b.root &&
           degree_[v] == degree_[u];
  }

  bool consistent(int v) const {
    for (int x = 0; x < G_.vertex_count(); ++x) {
      if (image_[x] < 0) continue;
      if (between_[v][x] != between_[image_[v]][image_[x]]) return false;
    }
    return true;
  }

  void search(int v) {
    const int nv = G_.vertex_count();
    while (v < nv && image_[v] >= 0) ++v;
    if (v == nv) {
      found_.push_back(image_);
      return;
    }
    for (int u = 0; u < nv; ++u) {
      if (used_[u] || !compatible(v, u)) continue;
      if (opts_.any_order) {
        image_[v] = u;
        used_[u] = 1;
        if (consistent(v)) search(v + 1);
        image_[v] = -1;
        used_[u] = 0;
      } else {
        if (image_[u] >= 0 || used_[v]) continue;
        image_[v] = u;
        image_[u] = v;
        used_[u] = used_[v] = 1;
        if (consistent(v) && consistent(u)) search(v + 1);
        image_[v] = image_[u] = -1;
        used_[u] = used_[v] = 0;
      }
    }
  }

  const DecoratedGraph& G_;
  GammaOptions opts_;
  std::vector<std::vector<std::vector<int>>> between_;
  std::vector<int> degree_;
  std::vector<int> image_;
  std::vector<char> used_;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// All admissible gammas of G (its own gamma, if any, is ignored).
///
/// For each admissible vertex map, the edge actions are listed one per
/// class up to renaming parallel edges of equal weight: edges between two
/// vertices that gamma swaps may each be fixed (even weight only) or paired
/// with a parallel twin, and every such choice of fixed count is returned;
/// all other edges are matched in id order.
inline std::vector<Gamma> find_gammas(const DecoratedGraph& G, const GammaOptions& opts = {}) {
  detail::GammaSearch search(G, opts);
  std::vector<Gamma> out;
  for (auto& vmap : search.vertex_maps()) {
    // (white, black, weight) -> edge ids
    using Key = std::tuple<int, int, int>;
    std::map<Key, std::vector<int>> classes;
    for (int e = 0; e < G.edge_count(); ++e) {
      const auto [w, b] = white_black(G, G.edges[e]);
      classes[{w, b, G.edges[e].weight}].push_back(e);
    }
    std::vector<int> base(G.edge_count(), -1);
    std::vector<std::pair<std::vector<int>, int>> self_classes;  // ids, weight
    bool ok = true;
    for (const auto& [key, ids] : classes) {
      const auto [w, b, wt] = key;
      const Key target{vmap[b], vmap[w], wt};
      if (target == key) {
        self_classes.emplace_back(ids, wt);
        continue;
      }
      auto it = classes.find(target);
      if (it == classes.end() || it->second.size() != ids.size()) {
        ok = false;
        break;
      }
      for (std::size_t j = 0; j < ids.size(); ++j) base[ids[j]] = it->second[j];
    }
    if (!ok) continue;

    // Cartesian product over the number of fixed edges in each self class.
    std::vector<int> fixed(self_classes.size(), 0);
    std::vector<std::vector<int>> choices(self_classes.size());
    bool feasible = true;
    for (std::size_t c = 0; c < self_classes.size(); ++c) {
      const int size = static_cast<int>(self_classes[c].first.size());
      const bool even = self_classes[c].second % 2 == 0;
      for (int f = size % 2; f <= size; f += 2)
        if (f == 0 || even) choices[c].push_back(f);
      if (choices[c].empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<std::size_t> pick(self_classes.size(), 0);
    while (true) {
      Gamma gm{vmap, base};
      for (std::size_t c = 0; c < self_classes.size(); ++c) {
        const auto& ids = self_classes[c].first;
        const int f = choices[c][pick[c]];
        for (int j = 0; j < f; ++j) gm.edges[ids[j]] = ids[j];
        for (std::size_t j = f; j + 1 < ids.size(); j += 2) {
          gm.edges[ids[j]] = ids[j + 1];
          gm.edges[ids[j + 1]] = ids[j];
        }
      }
      out.push_back(std::move(gm));
      std::size_t c = 0;
      while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
      if (c == pick.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Relabelings

/// Swap white and black on every vertex.
inline DecoratedGraph recolored(const DecoratedGraph& G) {
  DecoratedGraph h = G;
  for (auto& v : h.vertices) v.color = opposite(v.color);
  return h;
}

/// Vertex v becomes vertex vperm[v], edge e becomes edge eperm[e]; endpoint
/// order of edge e is reversed when flip[e] is set.
inline DecoratedGraph relabeled(const DecoratedGraph& G, const std::vector<int>& vperm,
                                const std::vector<int>& eperm,
                                const std::vector<bool>& flip = {}) {
  DecoratedGraph h;
  h.vertices.resize(G.vertices.size());
  h.edges.resize(G.edges.size());
  for (int v = 0; v < G.vertex_count(); ++v) h.vertices[vperm[v]] = G.vertices[v];
  for (int e = 0; e < G.edge_count(); ++e) {
    Edge E{vperm[G.edges[e].u], vperm[G.edges[e].v], G.edges[e].weight};
    if (!flip.empty() && flip[e]) std::swap(E.u, E.v);
    h.edges[eperm[e]] = E;
  }
  if (G.gamma) {
    Gamma gm;
    gm.vertices.resize(G.vertices.size());
    gm.edges.resize(G.edges.size());
    for (int v = 0; v < G.vertex_count(); ++v) gm.vertices[vperm[v]] = vperm[G.gamma->vertices[v]];
    for (int e = 0; e < G.edge_count(); ++e) gm.edges[eperm[e]] = eperm[G.gamma->edges[e]];
    h.gamma = std::move(gm);
  }
  return h;
}

}  // namespace rmf

#endif  // RMF_DECOGRAPH_HPP
