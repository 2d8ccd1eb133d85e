// rmf: command-line front end.
//
// Exit status: 0 success, 1 domain error, 2 usage error, 3 work limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rmf/rmf.hpp"

namespace {

using nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWorkLimit = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain failure whose details were already written to stderr.
struct ReportedFailure {};

std::uint64_t work_limit_from_env() {
  const char* env = std::getenv("RMF_WORK_LIMIT");
  if (!env) return rmf::kDefaultWorkLimit;
  const std::string s(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || v == 0 || s[0] == '-')
    throw UsageError("RMF_WORK_LIMIT must be a positive integer, got '" + s + "'");
  return v;
}

void print_existence(const rmf::ExistenceReport& r) {
  for (const auto& c : r.violated) std::cerr << "violated: " << c << "\n";
}

rmf::TopType existing_type(const std::string& text) {
  const auto t = rmf::parse_type(text);
  const auto report = rmf::exists(t);
  if (!report.exists) {
    std::cerr << "error: type " << rmf::format_type(t) << " does not exist\n";
    print_existence(report);
    throw ReportedFailure{};
  }
  return t;
}

json chi_json(const rmf::ChiResult& r) {
  json j{{"value", r.value}, {"route", rmf::route_name(r.route)}};
  j["graph_count"] = r.graph_count ? json(*r.graph_count) : json(nullptr);
  return j;
}

std::string chi_text(const rmf::ChiResult& r) {
  std::ostringstream os;
  os << "value=" << r.value << " route=" << rmf::route_name(r.route);
  if (r.graph_count) os << " graphs=" << *r.graph_count;
  return os.str();
}

struct EnumFlags {
  bool naive = false;
  bool gamma_existence = false;
  bool gamma_any_order = false;
  bool no_shortcircuit = false;

  rmf::EnumOptions options() const {
    rmf::EnumOptions o;
    o.gamma_existence = gamma_existence;
    o.gamma_any_order = gamma_any_order;
    o.short_circuit = !no_shortcircuit;
    o.work_limit = work_limit_from_env();
    return o;
  }
};

void add_enum_flags(CLI::App* cmd, EnumFlags& f, bool with_naive) {
  if (with_naive) cmd->add_flag("--naive", f.naive, "Use the brute-force oracle");
  cmd->add_flag("--gamma-existence", f.gamma_existence,
                "Count underlying graphs admitting some gamma");
  cmd->add_flag("--gamma-any-order", f.gamma_any_order,
                "Allow color-swapping automorphisms of any order");
  cmd->add_flag("--no-shortcircuit", f.no_shortcircuit,
                "Enumerate even where a closed form is known");
}

std::vector<rmf::DecoratedGraph> enumerate(const rmf::TopType& t, const EnumFlags& f,
                                           const rmf::EnumOptions& o) {
  if (f.naive) {
    if (t.variant() == rmf::Variant::NonSep) return rmf::enum_nonsep_naive(t, o).graphs;
    if (t.variant() == rmf::Variant::Sep) return rmf::enum_sep_naive(t, o).graphs;
  } else {
    if (t.variant() == rmf::Variant::NonSep) return rmf::enum_nonsep(t, o);
    if (t.variant() == rmf::Variant::Sep) return rmf::enum_sep(t, o);
  }
  throw rmf::DomainError("graphs are defined for NonSep and Sep types only");
}

// Count under the other gamma counting mode.
std::int64_t alternate_count(const rmf::TopType& t, rmf::EnumOptions o) {
  o.gamma_existence = !o.gamma_existence;
  return static_cast<std::int64_t>(t.variant() == rmf::Variant::NonSep
                                       ? rmf::enum_nonsep(t, o).size()
                                       : rmf::enum_sep(t, o).size());
}

const char* mode_name(bool existence) { return existence ? "existence" : "pairs"; }

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rmf::DomainError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw rmf::DomainError("failed writing '" + path + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"Topological invariants of spaces of real meromorphic functions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  auto json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "JSON output"); };

  std::string type_text;
  std::string graph_path;
  EnumFlags flags;
  auto* validate = app.add_subcommand("validate", "Check that a type exists, or that a graph fits it");
  validate->add_option("type", type_text, "Type, e.g. 1,3,0|1")->required();
  validate->add_option("--graph", graph_path, "Graph JSON file to check against the type");
  validate->add_flag("--gamma-any-order", flags.gamma_any_order,
                     "Allow color-swapping automorphisms of any order");
  json_flag(validate);

  auto* dim = app.add_subcommand("dim", "Dimension of the component");
  dim->add_option("type", type_text)->required();
  json_flag(dim);

  auto* chi_h = app.add_subcommand("chi-h", "Euler characteristic of a component");
  chi_h->add_option("type", type_text)->required();
  json_flag(chi_h);

  auto* chi_n = app.add_subcommand("chi-n", "Euler characteristic of the compactified component");
  chi_n->add_option("type", type_text)->required();
  add_enum_flags(chi_n, flags, false);
  json_flag(chi_n);

  std::string format = "json";
  auto* graphs = app.add_subcommand("graphs", "List decorated graphs of a type");
  graphs->add_option("type", type_text)->required();
  graphs->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  add_enum_flags(graphs, flags, true);
  json_flag(graphs);

  int m = 0;
  auto* strata = app.add_subcommand("strata", "Strata of real m-tuples of points");
  strata->add_option("m", m)->required();
  json_flag(strata);

  int max_s = 0;
  auto* verify = app.add_subcommand("verify-cells", "Check the cell-count Euler identities");
  verify->add_option("--max-s", max_s)->required()->check(CLI::Range(0, 30));
  json_flag(verify);

  rmf::SweepBounds bounds;
  std::string eps;
  std::string out_path;
  std::string catalog_format = "jsonl";
  auto* catalog = app.add_subcommand("catalog", "Sweep all types within bounds");
  catalog->add_option("--g-max", bounds.g_max)->required();
  catalog->add_option("--n-max", bounds.n_max)->required();
  catalog->add_option("--abs-i-max", bounds.abs_i_max)->required()->check(CLI::NonNegativeNumber);
  catalog->add_option("--eps", eps)->check(CLI::IsMember({"0", "1", "ext"}));
  catalog->add_option("--out", out_path, "Output file (default stdout)");
  catalog->add_option("--format", catalog_format)->check(CLI::IsMember({"jsonl", "csv"}));
  catalog->add_option("--jobs", bounds.jobs, "Worker threads")->check(CLI::PositiveNumber);
  catalog->add_flag("--all", bounds.include_missing, "Also list empty types");
  json_flag(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*validate) {
    const auto t = rmf::parse_type(type_text);
    const auto report = rmf::exists(t);
    if (graph_path.empty()) {
      if (as_json) {
        std::cout << json{{"type", rmf::format_type(t)},
                          {"variant", rmf::variant_name(t.variant())},
                          {"exists", report.exists},
                          {"violated", report.violated}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "type=" << rmf::format_type(t) << " exists=" << (report.exists ? "true" : "false")
                  << "\n";
      }
      if (!report.exists) {
        print_existence(report);
        return kExitDomain;
      }
      return 0;
    }
    std::ifstream in(graph_path);
    if (!in) throw rmf::DomainError("cannot read '" + graph_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto G = rmf::graph_from_json_text(buf.str());
    rmf::ViolationList vs;
    if (t.variant() == rmf::Variant::NonSep) {
      rmf::GammaOptions go;
      go.any_order = flags.gamma_any_order;
      vs = rmf::check_nonsep(G, t, go);
    } else if (t.variant() == rmf::Variant::Sep) {
      vs = rmf::check_sep(G, t);
    } else {
      throw rmf::DomainError("graphs are defined for NonSep and Sep types only");
    }
    if (as_json) {
      json arr = json::array();
      for (const auto& v : vs) arr.push_back({{"clause", v.clause}, {"detail", v.detail}});
      std::cout << json{{"type", rmf::format_type(t)}, {"valid", vs.empty()}, {"violations", arr}}
                       .dump()
                << "\n";
    } else {
      std::cout << "type=" << rmf::format_type(t) << " valid=" << (vs.empty() ? "true" : "false")
                << "\n";
    }
    for (const auto& v : vs) std::cerr << "violation: " << v.clause << ": " << v.detail << "\n";
    return vs.empty() ? 0 : kExitDomain;
  }

  if (*dim) {
    const auto t = existing_type(type_text);
    const int d = rmf::dimension(t);
    if (as_json)
      std::cout << json{{"type", rmf::format_type(t)}, {"dim", d}}.dump() << "\n";
    else
      std::cout << d << "\n";
    return 0;
  }

  if (*chi_h) {
    const auto t = existing_type(type_text);
    const auto r = rmf::chi_component(t);
    std::cout << (as_json ? chi_json(r).dump() : chi_text(r)) << "\n";
    return 0;
  }

  if (*chi_n) {
    const auto t = existing_type(type_text);
    const auto o = flags.options();
    const auto r = rmf::chi_compactification(t, o);
    std::optional<std::int64_t> other;
    if (r.graph_count) {
      const auto c = alternate_count(t, o);
      if (c != *r.graph_count) other = c;
    }
    if (as_json) {
      auto j = chi_json(r);
      if (other) j[std::string("graph_count_") + mode_name(!o.gamma_existence)] = *other;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << chi_text(r);
      if (other) std::cout << " graphs_" << mode_name(!o.gamma_existence) << "=" << *other;
      std::cout << "\n";
    }
    return 0;
  }

  if (*graphs) {
    const auto t = existing_type(type_text);
    const auto o = flags.options();
    const auto gs = enumerate(t, flags, o);
    if (!flags.naive) {
      const auto c = alternate_count(t, o);
      if (c != static_cast<std::int64_t>(gs.size()))
        std::cerr << "note: count is " << c << " when counting " << mode_name(!o.gamma_existence)
                  << "\n";
    }
    if (format == "dot" && !as_json) {
      std::cout << "// count=" << gs.size() << "\n";
      for (std::size_t i = 0; i < gs.size(); ++i)
        std::cout << rmf::graph_to_dot(gs[i], "G" + std::to_string(i));
    } else {
      json arr = json::array();
      for (const auto& G : gs) arr.push_back(rmf::graph_to_json(G));
      std::cout << json{{"count", gs.size()}, {"graphs", arr}}.dump() << "\n";
    }
    return 0;
  }

  if (*strata) {
    const auto list = rmf::enumerate_strata(m);
    if (as_json) {
      json arr = json::array();
      for (const auto& s : list)
        arr.push_back({{"P", s.real}, {"Q", s.conjugate}, {"dim", rmf::stratum_dim(s)}});
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& s : list) std::cout << rmf::format_stratum(s) << "\n";
    }
    return 0;
  }

  if (*verify) {
    struct Row {
      std::string identity;
      int arg;
      std::int64_t value;
      std::int64_t expected;
    };
    std::vector<Row> rows;
    for (int s = 0; s <= max_s; ++s)
      rows.push_back({"chi_w_lambda", s, rmf::chi_w_lambda(s), s <= 1 ? 1 : 0});
    for (int k = 1; k <= max_s; ++k) rows.push_back({"chi_w_real", k, rmf::chi_w_real(k), 0});
    rows.push_back({"chi_cover(0,s)", 1, rmf::chi_cover(0, 1), 1});
    bool all = true;
    json arr = json::array();
    for (const auto& r : rows) {
      const bool ok = r.value == r.expected;
      all = all && ok;
      if (as_json)
        arr.push_back({{"identity", r.identity}, {"arg", r.arg}, {"value", r.value},
                       {"expected", r.expected}, {"pass", ok}});
      else
        std::cout << r.identity << " " << r.arg << " value=" << r.value
                  << " expected=" << r.expected << " " << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (as_json) std::cout << arr.dump() << "\n";
    return all ? 0 : kExitDomain;
  }

  if (*catalog) {
    if (eps == "0") bounds.eps = rmf::EpsFilter::NonSep;
    if (eps == "1") bounds.eps = rmf::EpsFilter::Sep;
    if (eps == "ext") bounds.eps = rmf::EpsFilter::Ext;
    bounds.enum_options.work_limit = work_limit_from_env();
    const auto records = rmf::sweep(bounds);
    write_output(out_path, catalog_format == "csv" ? rmf::records_to_csv(records)
                                                   : rmf::records_to_jsonl(records));
    int flagged = 0;
    for (const auto& r : records) flagged += r.error ? 1 : 0;
    if (!out_path.empty() && out_path != "-")
      std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
    if (flagged) {
      std::cerr << "warning: " << flagged << " records hit the work limit\n";
      return kExitWorkLimit;
    }
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ReportedFailure&) {
    return kExitDomain;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rmf::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const rmf::WorkLimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise RMF_WORK_LIMIT)\n";
    return kExitWorkLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
