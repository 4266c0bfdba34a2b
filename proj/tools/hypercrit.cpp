// Batch front end: analyze hypergraph files, run the constructive
// transforms, search for extremal orders, and dump catalog entries.
//
// Exit codes: 0 success, 1 well-formed negative answer (precondition not
// met, input outside H_r), 2 usage or parse errors. JSON goes to stdout,
// human-readable summaries to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hypercrit/io.hpp"
#include "hypercrit/serialize.hpp"

namespace {

using namespace hypercrit;

int thread_count_from_env() {
  const char* raw = std::getenv("HYPERCRIT_THREADS");
  if (!raw) return 1;
  const int v = std::atoi(raw);
  return v >= 1 ? v : 1;
}

void emit(const json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open " + out_path + " for writing");
    out << text;
  }
}

std::string flags_line(const ClassMembership& cm) {
  std::string s;
  for (int i = 1; i <= 5; ++i)
    s += "H" + std::to_string(i) + "=" + (cm.in(i) ? "1" : "0") + " ";
  return s;
}

int run_analyze(const std::string& path, const std::string& format,
                const std::string& out_path) {
  const Hypergraph h = read_hypergraph_file(path);
  const auto membership = validate_membership(h);
  if (!membership.in_H_r) {
    json payload{{"membership", to_json(membership)}};
    emit(payload, out_path);
    std::cerr << path << ": not a valid H_r member\n";
    return 1;
  }
  const auto rp = rank_profile(h);
  const auto dp = degree_profile(h);
  const auto tv = transversal_number(h);
  const auto mc = matching_number(h);
  const auto cm = classify(h);
  json qds = json::array();
  for (int v = 0; v < h.n(); ++v) qds.push_back(to_json(quasidegree(h, v)));

  if (format == "text") {
    std::ostream& os = std::cout;
    os << "hypergraph: n=" << h.n() << " m=" << h.edge_count()
       << " rank=" << rp.rank << (rp.is_uniform ? " uniform" : "") << "\n";
    os << "tau=" << tv.tau << " witness=" << to_string(tv.witness) << "\n";
    os << "alpha'=" << mc.alpha_prime << "\n";
    os << "qd:";
    for (int v = 0; v < h.n(); ++v) os << " " << quasidegree(h, v).qd;
    os << "\n" << "classes: " << flags_line(cm) << "\n";
  } else {
    json payload{{"membership", to_json(membership)},
                 {"rank_profile", to_json(rp)},
                 {"degree_profile", to_json(dp)},
                 {"transversal", to_json(tv)},
                 {"matching", to_json(mc)},
                 {"quasidegree", qds},
                 {"classification", to_json(cm)}};
    emit(payload, out_path);
  }
  std::cerr << path << ": tau=" << tv.tau << " alpha'=" << mc.alpha_prime
            << " " << flags_line(cm) << "\n";
  return 0;
}

int run_transform(const std::string& op, const std::string& path,
                  const std::string& out_path, const std::string& trace_path,
                  const std::string& pivot_arg) {
  const Hypergraph h = read_hypergraph_file(path);
  const auto before = validate_membership(h).in_H_r
                          ? std::optional<ClassMembership>(classify(h))
                          : std::nullopt;
  Hypergraph output;
  TransformTrace trace;
  json extra = json::object();
  try {
    if (op == "saturate") {
      auto res = saturate(h);
      output = std::move(res.output);
      trace = std::move(res.trace);
    } else if (op == "shrink-to-edge-critical") {
      auto res = shrink_to_edge_critical(h);
      output = std::move(res.output);
      trace = std::move(res.trace);
    } else if (op == "rank-lift") {
      std::optional<Edge> pivot;
      if (!pivot_arg.empty()) {
        std::vector<int> vs;
        std::istringstream ss(pivot_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) vs.push_back(std::stoi(tok));
        pivot = Edge::from_vertices(vs);
      }
      auto res = rank_lift(h, pivot);
      output = std::move(res.output);
      trace = std::move(res.report.trace);
      extra["rank_lift"] = to_json(res.report);
    } else if (op == "minimalize") {
      auto res = minimalize(h);
      output = std::move(res.output);
      trace = std::move(res.trace);
    } else if (op == "uniformize-extend") {
      auto res = uniformize_extend(h, rank_profile(h).rank);
      output = std::move(res.output);
      trace = std::move(res.trace);
    } else {
      std::cerr << "unknown transform '" << op << "'\n";
      return 2;
    }
  } catch (const PreconditionError& e) {
    json payload{{"error", "precondition"}, {"detail", e.what()}};
    if (before) payload["before"] = to_json(*before);
    std::cout << payload.dump(2) << "\n";
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 1;
  }

  if (!out_path.empty()) write_hypergraph_file(output, out_path);
  if (!trace_path.empty()) {
    std::ofstream tf(trace_path, std::ios::binary);
    if (!tf) throw Error("cannot open " + trace_path + " for writing");
    tf << trace_to_jsonl(trace);
  }
  const auto after = classify(output);
  json payload{{"output", to_json(output)},
               {"steps", static_cast<int>(trace.steps.size())},
               {"after", to_json(after)}};
  if (before) payload["before"] = to_json(*before);
  if (!extra.empty()) payload.update(extra);
  std::cout << payload.dump(2) << "\n";
  std::cerr << "before: " << (before ? flags_line(*before) : "-") << "\n"
            << "after:  " << flags_line(after) << "\n";
  return 0;
}

int run_search(int class_index, int rank, int max_n, bool uniform,
               bool witness_only, const std::string& stream_path,
               const std::string& out_path) {
  const int threads = thread_count_from_env();
  const auto rec = extremal_order(class_index, rank, max_n, witness_only, threads);
  if (!stream_path.empty()) {
    std::ofstream sf(stream_path, std::ios::binary);
    if (!sf) throw Error("cannot open " + stream_path + " for writing");
    long long count = 0;
    if (!witness_only) {
      EnumOptions opt;
      opt.uniform = uniform;
      opt.threads = threads;
      for (int n = 2; n <= max_n; ++n) {
        for (const auto& h : enumerate_H_r(rank, n, opt)) {
          ++count;
          sf << json{{"hypergraph", to_json(h)},
                     {"classification", to_json(classify(h))}}
                    .dump()
             << "\n";
        }
      }
    }
    sf << json{{"summary",
                json{{"members", count}, {"exhaustive", rec.exhaustive}}}}
              .dump()
       << "\n";
  }
  emit(to_json(rec), out_path);
  std::cerr << "class H" << class_index << " rank " << rank << ": best order "
            << rec.best_order << (rec.exhaustive ? " (exhaustive)" : " (lower bound)")
            << "\n";
  return 0;
}

int run_catalog(const std::string& name, const std::string& format,
                const std::string& out_path) {
  const auto entry = catalog(name);
  if (format == "text") {
    if (out_path.empty()) {
      std::cout << write_hypergraph_text(entry.hypergraph);
    } else {
      write_hypergraph_file(entry.hypergraph, out_path);
    }
  } else {
    emit(to_json(entry), out_path);
  }
  std::cerr << entry.name << ": " << entry.provenance << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of matching-critical intersecting hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  bool seedless = false;  // reserved; nothing here is randomized
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", out_path, "write the JSON payload to a file");
  app.add_flag("--seedless", seedless, "reserved flag; runs are deterministic");

  auto* analyze = app.add_subcommand("analyze", "profiles, invariants, classes");
  std::string analyze_path;
  analyze->add_option("path", analyze_path, "hypergraph file")->required();

  auto* transform = app.add_subcommand("transform", "run a constructive rewrite");
  std::string op, transform_path, trace_path, pivot;
  transform
      ->add_option("op", op,
                   "saturate | shrink-to-edge-critical | rank-lift | "
                   "minimalize | uniformize-extend")
      ->required()
      ->check(CLI::IsMember({"saturate", "shrink-to-edge-critical", "rank-lift",
                             "minimalize", "uniformize-extend"}));
  transform->add_option("path", transform_path, "hypergraph file")->required();
  transform->add_option("--trace", trace_path, "write the rewrite trace (JSON Lines)");
  transform->add_option("--pivot", pivot,
                        "rank-lift pivot edge, comma-separated vertices");

  auto* search = app.add_subcommand("search", "extremal orders per class");
  int class_index = 0, rank = 0, max_n = 0;
  bool uniform = false, witness_only = false;
  search->add_option("--class", class_index, "class index 1..5")
      ->required()
      ->check(CLI::Range(1, 5));
  search->add_option("--rank", rank, "rank (>= 2)")->required()->check(CLI::Range(2, 32));
  search->add_option("--max-n", max_n, "largest vertex count to search")
      ->required()
      ->check(CLI::Range(2, 64));
  search->add_flag("--uniform", uniform, "restrict streamed families to r-uniform");
  search->add_flag("--witness-only", witness_only,
                   "report lower bounds from the catalog and lift chains");
  std::string stream_path;
  search->add_option("--stream", stream_path,
                     "write every enumerated member + classification (JSON Lines)");

  auto* cat = app.add_subcommand("catalog", "dump a named hypergraph");
  std::string name;
  cat->add_option("name", name, "fano | triangle | paper_example_4v | "
                                "complete_uniform(r) | star(k)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(analyze_path, format, out_path);
    if (*transform)
      return run_transform(op, transform_path, out_path, trace_path, pivot);
    if (*search)
      return run_search(class_index, rank, max_n, uniform, witness_only,
                        stream_path, out_path);
    if (*cat) return run_catalog(name, format, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
