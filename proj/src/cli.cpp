#include "compcount/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "compcount/compositions.hpp"
#include "compcount/series.hpp"
#include "compcount/verify.hpp"

namespace compcount::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

ordered_json graph_json(const LabeledGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

}  // namespace

void write_record(const OutputRecord& record, Format format, std::ostream& out) {
  const bool two_index = !record.values.empty() && record.values.front().first.size() == 2;
  switch (format) {
    case Format::plain: {
      if (two_index) {
        // one triangle row per line
        std::int64_t row = -1;
        for (const auto& [index, value] : record.values) {
          if (index[0] != row) {
            if (row >= 0) out << '\n';
            row = index[0];
          } else {
            out << ' ';
          }
          out << to_decimal(value);
        }
        if (row >= 0) out << '\n';
      } else {
        for (std::size_t i = 0; i < record.values.size(); ++i) {
          out << (i ? " " : "") << to_decimal(record.values[i].second);
        }
        if (!record.values.empty()) out << '\n';
      }
      if (record.graph) out << format_edge_list(*record.graph);
      break;
    }
    case Format::csv: {
      out << (two_index ? "n,k,value\n" : "index,value\n");
      for (const auto& [index, value] : record.values) {
        for (auto i : index) out << i << ',';
        out << to_decimal(value) << '\n';
      }
      break;
    }
    case Format::json: {
      ordered_json j;
      j["command"] = record.command;
      j["parameters"] = ordered_json::object();
      for (const auto& [key, value] : record.parameters) j["parameters"][key] = value;
      j["values"] = ordered_json::array();
      for (const auto& [index, value] : record.values) {
        j["values"].push_back({{"index", index}, {"value", to_decimal(value)}});
      }
      if (record.graph) j["graph"] = graph_json(*record.graph);
      out << j.dump(2) << '\n';
      break;
    }
  }
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OutputRecord single(std::string command, std::vector<std::pair<std::string, std::string>> parameters,
                    std::int64_t index, BigCount value) {
  OutputRecord r{std::move(command), std::move(parameters), {}, std::nullopt};
  r.values.push_back({{index}, std::move(value)});
  return r;
}

std::string str(std::int64_t v) { return std::to_string(v); }

void write_verification(const VerifyOptions& options, const std::string& suite_name,
                        const std::vector<CheckResult>& checks, Format format, std::ostream& out) {
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  switch (format) {
    case Format::plain:
      out << "# verify suite=" << suite_name << " seed=" << options.seed << " max-n=" << options.max_n
          << " cap=" << options.vertex_cap << '\n';
      for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) out << ": " << c.detail;
        out << '\n';
      }
      out << "# " << passed << '/' << checks.size() << " checks passed\n";
      break;
    case Format::csv:
      out << "# seed=" << options.seed << '\n' << "check,passed,detail\n";
      for (const auto& c : checks) {
        out << csv_field(c.name) << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
      }
      break;
    case Format::json: {
      ordered_json j;
      j["command"] = "verify";
      j["parameters"] = {{"suite", suite_name},
                         {"seed", std::to_string(options.seed)},
                         {"max-n", std::to_string(options.max_n)},
                         {"cap", std::to_string(options.vertex_cap)}};
      j["checks"] = ordered_json::array();
      for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["passed"] = static_cast<std::size_t>(passed) == checks.size();
      out << j.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of integer and graph compositions", "compcount"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultVertexCap;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--seed", seed, "Seed for randomized verification");
  app.add_option("--cap", cap, "Vertex cap for the subset DP");

  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t rows = 0;
  std::int64_t order = 0;
  std::int64_t max_n = 10;
  std::string mode;
  std::string kind;
  std::string family;
  std::string path;
  std::string suite = "all";
  bool emit_graph = false;
  bool reduce = false;

  auto* count = app.add_subcommand("count", "Count integer compositions")->require_subcommand(1);
  auto* restricted = count->add_subcommand("restricted", "Compositions into k parts within [min, max]");
  restricted->add_option("--n", n)->required();
  restricted->add_option("--k", k)->required();
  restricted->add_option("--min", lower, "Smallest allowed part (default 0)");
  auto* upper_opt = restricted->add_option("--max", upper, "Largest allowed part (default unbounded)");

  auto* distinct = count->add_subcommand("distinct", "Compositions into distinct parts");
  distinct->add_option("--n", n)->required();
  auto* distinct_k = distinct->add_option("--k", k, "Number of parts (default: any)");

  auto* leading = count->add_subcommand("leading", "Compositions whose first part bounds the rest");
  leading->add_option("--mode", mode)->required()->check(CLI::IsMember({"strict", "weak"}));
  leading->add_option("--n", n)->required();
  auto* leading_k = leading->add_option("--k", k, "Leading part (default: any)");

  auto* avoid = count->add_subcommand("avoid", "Compositions with no part equal to k");
  avoid->add_option("--k", k)->required();
  avoid->add_option("--n", n)->required();

  auto* contain = count->add_subcommand("contain", "Compositions with at least one part equal to k");
  contain->add_option("--k", k)->required();
  contain->add_option("--n", n)->required();

  auto* tri = app.add_subcommand("triangle", "Distinct-part triangle rows 0..R-1");
  tri->add_option("--kind", kind)->required()->check(CLI::IsMember({"pi", "cdistinct"}));
  tri->add_option("--rows", rows)->required();

  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  series->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"fstrict", "fweak", "avoid", "contain", "distinct-total"}));
  auto* series_k = series->add_option("--k", k);
  series->add_option("--order", order)->required();

  auto* graph = app.add_subcommand("graph", "Graph compositions")->require_subcommand(1);
  auto* graph_count = graph->add_subcommand("count", "Count compositions of an edge-list graph");
  graph_count->add_option("--file", path)->required();
  graph_count->add_flag("--reduce", reduce, "Split at cut vertices and bridges first");
  auto* graph_family = graph->add_subcommand("family", "Closed-form count for a graph family");
  graph_family->add_option("--name", family)
      ->required()
      ->check(CLI::IsMember({"path", "tree", "complete", "kminus", "cycle", "ladder"}));
  graph_family->add_option("--n", n)->required();
  graph_family->add_flag("--emit-graph", emit_graph, "Also print the family member's edge list");

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "compositions", "series", "graphs"}));
  verify->add_option("--max-n", max_n);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage_error;
  }

  const Format format = format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::plain;

  try {
    if (count->parsed()) {
      if (restricted->parsed()) {
        const PartBounds bounds = *upper_opt ? PartBounds::between(lower, upper) : PartBounds::at_least(lower);
        write_record(single("count restricted",
                            {{"n", str(n)}, {"k", str(k)}, {"min", str(lower)},
                             {"max", *upper_opt ? str(upper) : "inf"}},
                            n, count_restricted(n, k, bounds)),
                     format, out);
      } else if (distinct->parsed()) {
        if (*distinct_k) {
          write_record(single("count distinct", {{"n", str(n)}, {"k", str(k)}}, n, count_compositions_distinct(n, k)),
                       format, out);
        } else {
          write_record(single("count distinct", {{"n", str(n)}}, n, count_compositions_distinct_total(n)), format, out);
        }
      } else if (leading->parsed()) {
        const bool strict = mode == "strict";
        BigCount value;
        if (*leading_k) {
          value = strict ? count_leading_strict(n, k) : count_leading_weak(n, k);
        } else {
          value = strict ? count_leading_strict_total(n) : leading_weak_total(n);
        }
        std::vector<std::pair<std::string, std::string>> params{{"mode", mode}, {"n", str(n)}};
        if (*leading_k) params.emplace_back("k", str(k));
        write_record(single("count leading", std::move(params), n, value), format, out);
      } else if (avoid->parsed()) {
        write_record(single("count avoid", {{"k", str(k)}, {"n", str(n)}}, n, count_avoiding(n, k)), format, out);
      } else if (contain->parsed()) {
        write_record(single("count contain", {{"k", str(k)}, {"n", str(n)}}, n, count_containing(n, k)), format, out);
      }
      return ok;
    }

    if (tri->parsed()) {
      const auto t = triangle(kind == "pi" ? TriangleKind::partitions_distinct : TriangleKind::compositions_distinct, rows);
      OutputRecord r{"triangle", {{"kind", kind}, {"rows", str(rows)}}, {}, std::nullopt};
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
          r.values.push_back({{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}, t.rows[i][j]});
        }
      }
      write_record(r, format, out);
      return ok;
    }

    if (series->parsed()) {
      const bool needs_k = family == "avoid" || family == "contain";
      const bool takes_k = family != "distinct-total";
      if (needs_k && !*series_k) throw UsageError("--family " + family + " requires --k");
      if (!takes_k && *series_k) throw UsageError("--family distinct-total does not take --k");
      TruncatedSeries s(0);
      if (family == "fstrict" || family == "fweak") {
        const bool weak = family == "fweak";
        s = *series_k ? series_from_rational(weak ? gf_leading_weak(k) : gf_leading_strict(k), order)
                      : gf_leading_total(order, weak);
      } else if (family == "avoid") {
        s = series_from_rational(gf_avoiding(k), order);
      } else if (family == "contain") {
        s = series_from_rational(gf_containing(k), order);
      } else {
        s = gf_distinct_total(order);
      }
      OutputRecord r{"series", {{"family", family}}, {}, std::nullopt};
      if (*series_k) r.parameters.emplace_back("k", str(k));
      r.parameters.emplace_back("order", str(order));
      for (std::int64_t i = 0; i <= s.order(); ++i) r.values.push_back({{i}, s.coefficient(i)});
      write_record(r, format, out);
      return ok;
    }

    if (graph_count->parsed()) {
      std::ifstream file(path);
      if (!file) throw DomainError("cannot open graph file '" + path + "'");
      const LabeledGraph g = parse_edge_list(file);
      const BigCount value = reduce ? reduce_and_count(g, cap) : count_compositions_graph(g, cap);
      write_record(single("graph count",
                          {{"file", path}, {"vertices", std::to_string(g.vertex_count())},
                           {"edges", std::to_string(g.edge_count())}, {"method", reduce ? "reduce" : "dp"}},
                          static_cast<std::int64_t>(g.vertex_count()), value),
                   format, out);
      return ok;
    }

    if (graph_family->parsed()) {
      const GraphFamily f = parse_graph_family(family);
      OutputRecord r = single("graph family", {{"name", family}, {"n", str(n)}}, n, family_count(f, n));
      if (emit_graph) r.graph = build_family(f, n);
      write_record(r, format, out);
      return ok;
    }

    if (verify->parsed()) {
      VerifyOptions options;
      options.suite = parse_verify_suite(suite);
      options.max_n = max_n;
      options.seed = seed;
      options.vertex_cap = cap;
      const auto checks = run_verification(options);
      write_verification(options, suite, checks, format, out);
      const bool all_passed = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
      return all_passed ? ok : domain_error;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return resource_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return domain_error;
  } catch (const ArithmeticError& e) {
    err << "internal error: " << e.what() << '\n';
    return domain_error;
  }
  err << app.help();
  return usage_error;
}

}  // namespace compcount::cli
