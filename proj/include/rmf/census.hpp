#ifndef RMF_CENSUS_HPP
#define RMF_CENSUS_HPP

// Catalog sweeps over bounded ranges of topological types.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "rmf/error.hpp"
#include "rmf/euler.hpp"
#include "rmf/topotype.hpp"

namespace rmf {

struct CensusRecord {
  TopType type;
  bool exists = false;
  std::optional<int> dim{};
  std::optional<std::int64_t> chi_h{};
  std::optional<std::int64_t> chi_n{};
  std::optional<std::int64_t> graph_count{};
  std::optional<std::string> route{};  // route of chi_n
  std::optional<std::string> error{};  // set when chi_n could not be computed

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

enum class EpsFilter { NonSep, Sep, Ext };

struct SweepBounds {
  int g_max = -1;
  int n_max = 0;
  int abs_i_max = 0;
  std::optional<EpsFilter> eps;
  /// Keep records of empty types too.
  bool include_missing = false;
  int jobs = 1;
  EnumOptions enum_options;
};

namespace detail {

inline void multisets(int lo, int hi, int size, std::vector<std::int64_t>& cur,
                      std::vector<std::vector<std::int64_t>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? lo : static_cast<int>(cur.back());
  for (int x = start; x <= hi; ++x) {
    cur.push_back(x);
    multisets(lo, hi, size, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Normalized candidate types inside the bounds: k ranges over 0..g+1
/// (non-separating) or 1..g+1 (separating), indices over [0, M] or [-M, M].
/// Existing separating types that admit extension are replaced by their
/// extended refinements over every admissible xi.
inline std::vector<TopType> sweep_types(const SweepBounds& b) {
  std::set<TopType> out;
  const bool want_nonsep = !b.eps || *b.eps == EpsFilter::NonSep;
  const bool want_sep = !b.eps || *b.eps == EpsFilter::Sep;
  const bool want_ext = !b.eps || *b.eps == EpsFilter::Sep || *b.eps == EpsFilter::Ext;
  for (int g = 0; g <= b.g_max; ++g) {
    for (int n = 1; n <= b.n_max; ++n) {
      for (int k = 0; k <= g + 1; ++k) {
        std::vector<std::vector<std::int64_t>> lists;
        std::vector<std::int64_t> cur;
        if (want_nonsep) {
          detail::multisets(0, b.abs_i_max, k, cur, lists);
          for (const auto& I : lists) {
            auto t = normalize(RawType{Variant::NonSep, g, n, I, std::nullopt});
            if (b.include_missing || exists(t).exists) out.insert(t);
          }
          lists.clear();
        }
        if (k == 0 || !(want_sep || want_ext)) continue;
        detail::multisets(-b.abs_i_max, b.abs_i_max, k, cur, lists);
        for (const auto& I : lists) {
          auto t = normalize(RawType{Variant::Sep, g, n, I, std::nullopt});
          const bool present = exists(t).exists;
          if (present && admits_extension(t)) {
            if (!want_ext) continue;
            for (int xi = 0; xi <= t.xi_bound(); ++xi)
              out.insert(normalize(RawType{Variant::SepExt, g, n, I, xi}));
          } else if (want_sep && (present || b.include_missing)) {
            out.insert(t);
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

inline CensusRecord census_record(const TopType& t, const EnumOptions& opts = {}) {
  CensusRecord r{t};
  r.exists = exists(t).exists;
  if (!r.exists) return r;
  r.dim = dimension(t);
  r.chi_h = chi_component(t).value;
  try {
    const auto chi = chi_compactification(t, opts);
    r.chi_n = chi.value;
    r.graph_count = chi.graph_count;
    r.route = route_name(chi.route);
  } catch (const WorkLimitExceeded& e) {
    r.error = e.what();
  }
  return r;
}

/// One record per candidate type, in (variant, g, n, I, xi) order. The
/// output does not depend on `jobs`.
inline std::vector<CensusRecord> sweep(const SweepBounds& b) {
  const auto types = sweep_types(b);
  std::vector<std::optional<CensusRecord>> slots(types.size());
  const int jobs = std::max(1, b.jobs);
  if (jobs == 1 || types.size() < 2) {
    for (std::size_t i = 0; i < types.size(); ++i) slots[i] = census_record(types[i], b.enum_options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < types.size(); i = next++)
          slots[i] = census_record(types[i], b.enum_options);
      });
    for (auto& th : workers) th.join();
  }
  std::vector<CensusRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json record_to_json(const CensusRecord& r) {
  using nlohmann::json;
  auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
  json j;
  j["type"] = format_type(r.type);
  j["variant"] = variant_name(r.type.variant());
  j["g"] = r.type.g();
  j["n"] = r.type.n();
  j["I"] = r.type.indices();
  j["xi"] = opt(r.type.xi());
  j["exists"] = r.exists;
  j["dim"] = opt(r.dim);
  j["chi_h"] = opt(r.chi_h);
  j["chi_n"] = opt(r.chi_n);
  j["graph_count"] = opt(r.graph_count);
  j["route"] = opt(r.route);
  j["error"] = opt(r.error);
  return j;
}

inline CensusRecord record_from_json(const nlohmann::json& j) {
  auto get_opt = [&](const char* field, auto tag) -> std::optional<decltype(tag)> {
    if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
    return j.at(field).get<decltype(tag)>();
  };
  try {
    CensusRecord r{parse_type(j.at("type").get<std::string>())};
    r.exists = j.at("exists").get<bool>();
    r.dim = get_opt("dim", int{});
    r.chi_h = get_opt("chi_h", std::int64_t{});
    r.chi_n = get_opt("chi_n", std::int64_t{});
    r.graph_count = get_opt("graph_count", std::int64_t{});
    r.route = get_opt("route", std::string{});
    r.error = get_opt("error", std::string{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("census record JSON: ") + e.what());
  }
}

inline std::string records_to_jsonl(const std::vector<CensusRecord>& records) {
  std::string out;
  for (const auto& r : records) out += record_to_json(r).dump() + "\n";
  return out;
}

inline std::string records_to_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << "type,variant,g,n,I,xi,exists,dim,chi_h,chi_n,graph_count,route\n";
  auto opt = [](const auto& o) {
    std::ostringstream s;
    if (o) s << *o;
    return s.str();
  };
  for (const auto& r : records) {
    std::string I;
    for (int j = 0; j < r.type.k(); ++j) I += (j ? " " : "") + std::to_string(r.type.indices()[j]);
    os << '"' << format_type(r.type) << "\"," << variant_name(r.type.variant()) << ','
       << r.type.g() << ',' << r.type.n() << ",\"" << I << "\"," << opt(r.type.xi()) << ','
       << (r.exists ? "true" : "false") << ',' << opt(r.dim) << ',' << opt(r.chi_h) << ','
       << opt(r.chi_n) << ',' << opt(r.graph_count) << ',' << opt(r.route) << '\n';
  }
  return os.str();
}

}  // namespace rmf

#endif  // RMF_CENSUS_HPP
