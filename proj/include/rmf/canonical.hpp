#ifndef RMF_CANONICAL_HPP
#define RMF_CANONICAL_HPP

// Canonical forms of decorated graphs.
//
// Isomorphism preserves incidence, color, vertex and edge weights, root
// flags, and conjugates gamma. Vertices are ordered by individualization and
// refinement; the key is the minimal encoding over all leaves of the search
// tree. Edges enter the encoding as (label, label, weight, fixed-by-gamma),
// which determines a gamma-carrying multigraph up to renaming parallel edges
// of equal weight.

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rmf/decograph.hpp"

namespace rmf {

struct CanonicalForm {
  std::vector<int> order;  // order[position] = vertex id
  std::string key;
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const DecoratedGraph& G) : G_(G), nv_(G.vertex_count()) {
    incident_.resize(nv_);
    for (int e = 0; e < G.edge_count(); ++e) {
      const auto& E = G.edges[e];
      const int fixed = edge_fixed(e);
      incident_[E.u].push_back({E.v, E.weight, fixed});
      incident_[E.v].push_back({E.u, E.weight, fixed});
    }
  }

  CanonicalForm run() {
    std::vector<std::vector<int>> cells;
    if (nv_ > 0) {
      std::vector<int> all(nv_);
      for (int v = 0; v < nv_; ++v) all[v] = v;
      cells = split_by(all, [&](int v) { return vertex_invariant(v); });
    }
    search(std::move(cells));
    CanonicalForm out;
    out.order = std::move(best_order_);
    out.key = to_bytes(best_);
    return out;
  }

 private:
  struct Incidence {
    int other;
    int weight;
    int fixed;
  };

  int edge_fixed(int e) const { return (G_.gamma && G_.gamma->edges[e] == e) ? 1 : 0; }

  std::vector<int> vertex_invariant(int v) const {
    const auto& V = G_.vertices[v];
    std::vector<int> inv{static_cast<int>(V.color), V.root ? 1 : 0, V.weight,
                         static_cast<int>(incident_[v].size())};
    std::vector<std::pair<int, int>> ws;
    for (const auto& in : incident_[v]) ws.emplace_back(in.weight, in.fixed);
    std::sort(ws.begin(), ws.end());
    for (auto [w, f] : ws) {
      inv.push_back(w);
      inv.push_back(f);
    }
    return inv;
  }

  template <class Sig>
  static std::vector<std::vector<int>> split_by(const std::vector<int>& cell, Sig sig) {
    using S = decltype(sig(0));
    std::vector<std::pair<S, int>> tagged;
    tagged.reserve(cell.size());
    for (int v : cell) tagged.emplace_back(sig(v), v);
    std::sort(tagged.begin(), tagged.end());
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < tagged.size(); ++i) {
      if (i == 0 || tagged[i].first != tagged[i - 1].first) out.emplace_back();
      out.back().push_back(tagged[i].second);
    }
    return out;
  }

  void refine(std::vector<std::vector<int>>& cells) const {
    std::vector<int> cell_of(nv_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      auto sig = [&](int v) {
        std::vector<std::tuple<int, int, int>> s;
        s.reserve(incident_[v].size() + 1);
        for (const auto& in : incident_[v]) s.emplace_back(cell_of[in.other], in.weight, in.fixed);
        std::sort(s.begin(), s.end());
        if (G_.gamma) s.emplace_back(-1, cell_of[G_.gamma->vertices[v]], 0);
        return s;
      };
      std::vector<std::vector<int>> next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        for (auto& part : split_by(cell, sig)) next.push_back(std::move(part));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  void search(std::vector<std::vector<int>> cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      std::vector<int> order;
      order.reserve(nv_);
      for (const auto& c : cells) order.push_back(c.front());
      leaf(order);
      return;
    }
    for (int v : cells[target]) {
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int x : cells[c])
          if (x != v) rest.push_back(x);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const std::vector<int>& order) {
    std::vector<int> label(nv_);
    for (int p = 0; p < nv_; ++p) label[order[p]] = p;
    std::vector<int> enc;
    enc.reserve(3 + 3 * nv_ + nv_ + 4 * G_.edge_count());
    enc.push_back(nv_);
    enc.push_back(G_.edge_count());
    enc.push_back(G_.gamma ? 1 : 0);
    for (int p = 0; p < nv_; ++p) {
      const auto& V = G_.vertices[order[p]];
      enc.push_back(static_cast<int>(V.color));
      enc.push_back(V.root ? 1 : 0);
      enc.push_back(V.weight);
    }
    if (G_.gamma)
      for (int p = 0; p < nv_; ++p) enc.push_back(label[G_.gamma->vertices[order[p]]]);
    std::vector<std::tuple<int, int, int, int>> es;
    es.reserve(G_.edge_count());
    for (int e = 0; e < G_.edge_count(); ++e) {
      const auto& E = G_.edges[e];
      const int a = label[E.u];
      const int b = label[E.v];
      es.emplace_back(std::min(a, b), std::max(a, b), E.weight, edge_fixed(e));
    }
    std::sort(es.begin(), es.end());
    for (const auto& [a, b, w, f] : es) {
      enc.push_back(a);
      enc.push_back(b);
      enc.push_back(w);
      enc.push_back(f);
    }
    if (!have_best_ || enc < best_) {
      best_ = std::move(enc);
      best_order_ = order;
      have_best_ = true;
    }
  }

  static std::string to_bytes(const std::vector<int>& enc) {
    std::string out;
    out.reserve(enc.size() * 4);
    for (int x : enc) {
      const auto u = static_cast<std::uint32_t>(x) ^ 0x80000000u;
      out.push_back(static_cast<char>((u >> 24) & 0xff));
      out.push_back(static_cast<char>((u >> 16) & 0xff));
      out.push_back(static_cast<char>((u >> 8) & 0xff));
      out.push_back(static_cast<char>(u & 0xff));
    }
    return out;
  }

  const DecoratedGraph& G_;
  int nv_;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<int> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical vertex order and key. Pre: endpoints and gamma are in range.
inline CanonicalForm canonical_form(const DecoratedGraph& G) {
  return detail::Canonizer(G).run();
}

/// Byte string, equal for two graphs iff they are isomorphic. Keys compare
/// consistently as unsigned byte strings.
inline std::string canonical_key(const DecoratedGraph& G) { return canonical_form(G).key; }

inline bool are_isomorphic(const DecoratedGraph& a, const DecoratedGraph& b) {
  return canonical_key(a) == canonical_key(b);
}

/// Printable form of a key.
inline std::string key_hex(const std::string& key) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(key.size() * 2);
  for (unsigned char c : key) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 15]);
  }
  return s;
}

}  // namespace rmf

#endif  // RMF_CANONICAL_HPP
