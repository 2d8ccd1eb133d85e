#ifndef RMF_EULER_HPP
#define RMF_EULER_HPP

// Euler characteristics of a connected component H and of its
// compactification N.
//
// Both equal the number of points over the stratum of two conjugate points of
// multiplicity g + n - 1 (every other stratum has zero alternating cell
// count, see chi_cover). For H that count is 0 or 1; for N it is a count of
// decorated graphs, or a closed-form value in the degenerate cases.

#include <cstdint>
#include <optional>
#include <string>

#include "rmf/enumerator.hpp"
#include "rmf/error.hpp"
#include "rmf/topotype.hpp"

namespace rmf {

enum class ChiRoute {
  ComponentG0,
  ComponentZero,
  SepFullDegree,
  ZeroIndex,
  GraphCountNonSep,
  GraphCountSep,
  ExtOne,
};

inline const char* route_name(ChiRoute r) {
  switch (r) {
    case ChiRoute::ComponentG0: return "COMPONENT_G0";
    case ChiRoute::ComponentZero: return "COMPONENT_ZERO";
    case ChiRoute::SepFullDegree: return "SEP_FULL_DEGREE";
    case ChiRoute::ZeroIndex: return "ZERO_INDEX";
    case ChiRoute::GraphCountNonSep: return "GRAPH_COUNT_NONSEP";
    case ChiRoute::GraphCountSep: return "GRAPH_COUNT_SEP";
    case ChiRoute::ExtOne: return "EXT_ONE";
  }
  return "?";
}

inline std::optional<ChiRoute> route_from_name(const std::string& s) {
  for (auto r : {ChiRoute::ComponentG0, ChiRoute::ComponentZero, ChiRoute::SepFullDegree,
                 ChiRoute::ZeroIndex, ChiRoute::GraphCountNonSep, ChiRoute::GraphCountSep,
                 ChiRoute::ExtOne})
    if (s == route_name(r)) return r;
  return std::nullopt;
}

struct ChiResult {
  std::int64_t value = 0;
  ChiRoute route = ChiRoute::ComponentZero;
  std::optional<std::int64_t> graph_count;

  friend bool operator==(const ChiResult&, const ChiResult&) = default;
};

namespace detail {

inline void require_component(const TopType& t) {
  const auto report = exists(t);
  if (!report.exists) throw DomainError("type " + format_type(t) + " does not exist");
  if (t.variant() == Variant::Sep && admits_extension(t))
    throw DomainError("type " + format_type(t) +
                      " admits extension; its components are indexed by xi");
}

inline std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace detail

/// chi(H). A component contains a function with only the critical values
/// +-i exactly when g = 0 and, on separating curves, the single oval carries
/// the full degree.
inline ChiResult chi_component(const TopType& t) {
  detail::require_component(t);
  bool one = false;
  switch (t.variant()) {
    case Variant::NonSep:
      one = t.g() == 0;
      break;
    case Variant::Sep:
      one = t.g() == 0 && t.k() == 1 && detail::abs64(t.indices()[0]) == t.n();
      break;
    case Variant::SepExt:
      one = false;
      break;
  }
  return one ? ChiResult{1, ChiRoute::ComponentG0, std::nullopt}
             : ChiResult{0, ChiRoute::ComponentZero, std::nullopt};
}

/// chi(N). With `opts.short_circuit` off, the |sum I| = n separating case is
/// answered by enumeration instead of the closed form.
inline ChiResult chi_compactification(const TopType& t, const EnumOptions& opts = {}) {
  detail::require_component(t);
  switch (t.variant()) {
    case Variant::NonSep: {
      if (t.k() > 0 && t.has_zero_index()) return {0, ChiRoute::ZeroIndex, std::nullopt};
      const auto count = static_cast<std::int64_t>(enum_nonsep(t, opts).size());
      return {count, ChiRoute::GraphCountNonSep, count};
    }
    case Variant::Sep: {
      const bool full = detail::abs64(t.index_sum()) == t.n();
      if (full && opts.short_circuit) return {1, ChiRoute::SepFullDegree, std::nullopt};
      if (t.has_zero_index()) return {0, ChiRoute::ZeroIndex, std::nullopt};
      const auto count = static_cast<std::int64_t>(enum_sep(t, opts).size());
      return {count, ChiRoute::GraphCountSep, count};
    }
    case Variant::SepExt:
      if (t.has_zero_index()) return {0, ChiRoute::ZeroIndex, std::nullopt};
      return {1, ChiRoute::ExtOne, std::nullopt};
  }
  throw DomainError("unreachable variant");
}

}  // namespace rmf

#endif  // RMF_EULER_HPP
