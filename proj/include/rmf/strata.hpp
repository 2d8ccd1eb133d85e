#ifndef RMF_STRATA_HPP
#define RMF_STRATA_HPP

// Stratification of the space of real unordered m-tuples of points of the
// Riemann sphere by multiplicity pattern, and the open-cell decompositions of
// the configuration spaces W^k(RP^1) and W^s(upper half-plane) used to show
// that only the two-conjugate-point stratum contributes to Euler
// characteristics.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rmf/error.hpp"

namespace rmf {

/// Pi(P|Q): r real points with multiplicities P and s conjugate pairs with
/// multiplicities Q. Both sequences non-decreasing, entries >= 1.
struct StratumSignature {
  std::vector<int> real;       // P
  std::vector<int> conjugate;  // Q

  int r() const { return static_cast<int>(real.size()); }
  int s() const { return static_cast<int>(conjugate.size()); }

  int weight() const {
    int m = 0;
    for (int p : real) m += p;
    for (int q : conjugate) m += 2 * q;
    return m;
  }

  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
};

/// Total order used for listings: (r + s, P, Q) lexicographically.
inline bool stratum_less(const StratumSignature& a, const StratumSignature& b) {
  const int la = a.r() + a.s();
  const int lb = b.r() + b.s();
  if (la != lb) return la < lb;
  if (a.real != b.real) return a.real < b.real;
  return a.conjugate < b.conjugate;
}

inline int stratum_dim(const StratumSignature& sig) { return sig.r() + 2 * sig.s(); }

namespace detail {

// All non-decreasing sequences of positive integers summing to `total`.
inline void partitions_into(int total, int min_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= total; ++p) {
    cur.push_back(p);
    partitions_into(total - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(total, 1, cur, out);
  return out;
}

}  // namespace detail

/// Every signature of weight m, sorted by stratum_less.
inline std::vector<StratumSignature> enumerate_strata(int m) {
  if (m < 1) throw DomainError("enumerate_strata needs m >= 1");
  std::vector<StratumSignature> out;
  for (int pairs = 0; 2 * pairs <= m; ++pairs) {
    const auto ps = detail::partitions(m - 2 * pairs);
    const auto qs = detail::partitions(pairs);
    for (const auto& p : ps)
      for (const auto& q : qs) out.push_back({p, q});
  }
  std::sort(out.begin(), out.end(), stratum_less);
  return out;
}

// ---------------------------------------------------------------------------
// Cells

enum class CellKind { RealFinite, RealInfinity, Lambda };

/// Relation between consecutive points of a W^s(Lambda) cell:
/// Strict means Re z1 < Re z2, Stacked means Re z1 = Re z2 and Im z1 < Im z2.
enum class Relation { Strict, Stacked };

struct CellDescriptor {
  CellKind kind = CellKind::RealFinite;
  std::vector<Relation> relations;  // s - 1 entries for Lambda cells
  int dim = 0;
};

/// W^k(RP^1) = {no point at infinity} + {one point at infinity}.
/// W^0 is a single point.
inline std::vector<CellDescriptor> cells_real(int k) {
  if (k < 0) throw DomainError("cells_real needs k >= 0");
  if (k == 0) return {CellDescriptor{CellKind::RealFinite, {}, 0}};
  return {CellDescriptor{CellKind::RealFinite, {}, k},
          CellDescriptor{CellKind::RealInfinity, {}, k - 1}};
}

inline int lambda_cell_dim(const std::vector<Relation>& rel) {
  int d = 2;
  for (auto r : rel) d += (r == Relation::Strict) ? 2 : 1;
  return d;
}

/// One cell per relation word of length s - 1, words ordered with bit j of
/// the enumeration counter selecting Stacked at position j.
inline std::vector<CellDescriptor> cells_lambda(int s) {
  if (s < 0) throw DomainError("cells_lambda needs s >= 0");
  if (s > 30) throw DomainError("cells_lambda: s too large to enumerate");
  if (s == 0) return {CellDescriptor{CellKind::Lambda, {}, 0}};
  std::vector<CellDescriptor> out;
  const std::uint32_t words = 1u << (s - 1);
  out.reserve(words);
  for (std::uint32_t w = 0; w < words; ++w) {
    CellDescriptor c;
    c.kind = CellKind::Lambda;
    for (int j = 0; j < s - 1; ++j)
      c.relations.push_back(((w >> j) & 1u) ? Relation::Stacked : Relation::Strict);
    c.dim = lambda_cell_dim(c.relations);
    out.push_back(std::move(c));
  }
  return out;
}

inline std::int64_t alternating_cell_sum(const std::vector<CellDescriptor>& cells) {
  std::int64_t chi = 0;
  for (const auto& c : cells) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

inline std::int64_t chi_w_real(int k) { return alternating_cell_sum(cells_real(k)); }
inline std::int64_t chi_w_lambda(int s) { return alternating_cell_sum(cells_lambda(s)); }

/// Alternating cell count of W^r(RP^1) x W^s(Lambda).
inline std::int64_t chi_cover(int r, int s) { return chi_w_real(r) * chi_w_lambda(s); }

inline std::string format_stratum(const StratumSignature& sig) {
  auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  return "P=" + list(sig.real) + " Q=" + list(sig.conjugate) +
         " dim=" + std::to_string(stratum_dim(sig));
}

}  // namespace rmf

#endif  // RMF_STRATA_HPP
