// Copyright 2026 The fourcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "fourcolor/coloring.hpp"
#include "fourcolor/embedding.hpp"
#include "fourcolor/errors.hpp"
#include "fourcolor/io.hpp"
#include "fourcolor/map_pipeline.hpp"
#include "fourcolor/operations.hpp"
#include "fourcolor/triangulation.hpp"

namespace fourcolor::cli {
namespace {

using io::Json;

struct Options {
  std::vector<std::string> inputs;
  std::string strategy = "any";
  bool verify = false;
  std::string dot_path;
  std::string report_path;
  std::string coloring_path;
  std::size_t jobs = 1;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t bound = kDefaultOracleBound;
};

// Result of one command on one input: the document for stdout or a
// diagnostic for stderr.
struct Outcome {
  int code = kOk;
  std::string document;
  std::string diagnostic;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write '" + path + "'");
  out << text;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

bool looks_like_json(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != text.end() && (*it == '{' || *it == '[');
}

// Graph documents may be a bare graph or the output of `generate`.
const Json& graph_part(const Json& doc) { return doc.is_object() && doc.contains("graph") ? doc.at("graph") : doc; }

EdgeListGraph read_edge_list(const std::string& text) {
  if (looks_like_json(text)) return io::edge_list_from_json(graph_part(io::parse_json(text)));
  return io::edge_list_from_text(text);
}

EmbeddedGraph read_embedded(const std::string& text) {
  if (looks_like_json(text)) return io::graph_from_json(graph_part(io::parse_json(text)));
  return compute_embedding(io::edge_list_from_text(text));
}

Strategy parse_strategy(const std::string& s) { return s == "trapped-first" ? Strategy::TrappedFirst : Strategy::Any; }

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

std::string edges_json(const std::vector<Edge>& edges, const LabelTable& labels) {
  Json arr = Json::array();
  for (const auto& [a, b] : edges) arr.push_back(Json::array({label_of(labels, a), label_of(labels, b)}));
  return arr.dump();
}

Outcome failure(int code, const char* kind, const std::string& message, Json extra = Json::object()) {
  Json diag = Json::object();
  diag["error"] = kind;
  diag["message"] = message;
  for (auto& [k, v] : extra.items()) diag[k] = v;
  return Outcome{code, {}, diag.dump() + "\n"};
}

// Runs `body`, translating the toolkit's exceptions into the exit-code
// vocabulary.
Outcome guarded(const std::function<std::string()>& body) {
  try {
    return Outcome{kOk, body(), {}};
  } catch (const NonPlanarError& e) {
    Json extra = Json::object();
    extra["witness"] = Json::array();
    for (const auto& [a, b] : e.witness()) extra["witness"].push_back(Json::array({a.value, b.value}));
    return failure(kNonPlanar, "NonPlanar", e.what(), extra);
  } catch (const StuckError& e) {
    Json extra = Json::object();
    extra["degrees"] = e.degrees();
    extra["vertices"] = e.graph().vertex_count();
    return failure(kStuck, "Stuck", e.what(), extra);
  } catch (const DisconnectedError& e) {
    return failure(kInvalidInput, "Disconnected", e.what());
  } catch (const BoundExceededError& e) {
    return failure(kInvalidInput, "BoundExceeded", e.what());
  } catch (const Error& e) {
    return failure(kInvalidInput, "InvalidInput", e.what());
  } catch (const std::exception& e) {
    return failure(kInternal, "Internal", e.what());
  }
}

Json verification_json(const Verdict& verdict, std::size_t colors_used, const LabelTable& labels) {
  Json v = Json::object();
  v["proper"] = verdict.proper;
  v["colors_used"] = colors_used;
  v["violations"] = Json::parse(edges_json(verdict.violations, labels));
  return v;
}

Json operation_totals(const TriangulationRecord& record, const OpLog& log) {
  const long k = static_cast<long>(log.size());
  Json totals = Json::object();
  totals["triangulation"] = {{"dV", 0}, {"dE", record.added.size()}, {"dF", record.added.size()}};
  totals["annihilation"] = {{"dV", -k}, {"dE", -3 * k}, {"dF", -2 * k}};
  totals["creation"] = {{"dV", k}, {"dE", 3 * k}, {"dF", 2 * k}};
  return totals;
}

Outcome color_map_one(const std::string& path, const Options& opt) {
  return guarded([&] {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(path);
    const MapDoc map = io::map_from_json(io::parse_json(text));
    const MapColoring result = color_map(map, parse_strategy(opt.strategy));
    Json doc = io::map_coloring_to_json(result);

    const EdgeListGraph g = map_to_graph(map);
    Coloring by_vertex;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) by_vertex[g.vertices[i]] = result.colors[i].second;

    auto recheck = [&] {
      Verdict verdict = verify_proper(g, by_vertex);
      if (!borders_respected(map, result)) verdict.proper = false;
      return verification_json(verdict, distinct_colors(by_vertex), g.labels);
    };
    if (opt.verify) {
      doc["verification"] = recheck();
      if (!doc["verification"]["proper"].get<bool>()) throw std::logic_error("pipeline produced an improper coloring");
    }
    if (!opt.dot_path.empty()) write_file(opt.dot_path, io::to_dot(g, &by_vertex));
    if (!opt.report_path.empty()) {
      Json report = Json::object();
      report["input_digest"] = "sha256:" + sha256_hex(text);
      report["operations"] = operation_totals(result.triangulation, result.log);
      report["log"] = io::oplog_to_json(result.log);
      report["coloring"] = io::coloring_to_json(by_vertex, g.labels);
      report["verification"] = recheck();
      report["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      write_file(opt.report_path, render(report));
    }
    return render(doc);
  });
}

Outcome color_graph_one(const std::string& path, const Options& opt) {
  return guarded([&] {
    const std::string text = read_file(path);
    const EdgeListGraph g = read_edge_list(text);
    const PipelineResult result = color_graph(g, parse_strategy(opt.strategy));
    Json doc = io::coloring_to_json(result.coloring, g.labels);
    Json provenance = Json::object();
    provenance["triangulation"] = io::triangulation_to_json(result.triangulation, g.labels);
    provenance["log"] = io::oplog_to_json(result.log);
    doc["provenance"] = std::move(provenance);
    if (opt.verify) {
      Verdict verdict = verify_proper(g, result.coloring);
      doc["verification"] = verification_json(verdict, distinct_colors(result.coloring), g.labels);
      if (!verdict.proper) throw std::logic_error("pipeline produced an improper coloring");
    }
    if (!opt.dot_path.empty()) write_file(opt.dot_path, io::to_dot(g, &result.coloring));
    return render(doc);
  });
}

Outcome reduce_one(const std::string& path, const Options& opt) {
  return guarded([&] {
    EmbeddedGraph g = read_embedded(read_file(path));
    if (!is_mpg(g)) throw InvalidInputError("reduce needs a maximal planar graph; use color-graph for other inputs");
    if (!g.outer_face()) g = prefer_trapped_degree3(std::move(g));
    Reduction r = reduce_to_k4(std::move(g), parse_strategy(opt.strategy));
    return render(io::oplog_to_json(r.log));
  });
}

Outcome oracle_one(const std::string& path, const Options& opt) {
  return guarded([&] {
    const EdgeListGraph g = read_edge_list(read_file(path));
    ChromaticResult r = brute_force_chromatic(g, opt.bound);
    Json witness = Json::object();
    for (const auto& [v, c] : r.witness) witness[label_of(g.labels, v)] = c;
    Json doc = Json::object();
    doc["chromatic"] = r.chromatic;
    doc["witness"] = std::move(witness);
    return render(doc);
  });
}

// Runs `fn` over every input, at most `jobs` at a time, and prints results in
// input order. The exit code is the first non-zero one.
int batch(const Options& opt, const std::function<Outcome(const std::string&, const Options&)>& fn,
          std::ostream& out, std::ostream& err) {
  std::vector<Outcome> results(opt.inputs.size());
  const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
  for (std::size_t begin = 0; begin < opt.inputs.size(); begin += jobs) {
    const std::size_t end = std::min(opt.inputs.size(), begin + jobs);
    std::vector<std::future<Outcome>> running;
    for (std::size_t i = begin; i < end; ++i)
      running.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, fn,
                                   std::cref(opt.inputs[i]), std::cref(opt)));
    for (std::size_t i = begin; i < end; ++i) results[i] = running[i - begin].get();
  }
  int code = kOk;
  for (const Outcome& r : results) {
    out << r.document;
    err << r.diagnostic;
    if (code == kOk) code = r.code;
  }
  return code;
}

int single(const Outcome& r, std::ostream& out, std::ostream& err) {
  out << r.document;
  err << r.diagnostic;
  return r.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-colouring of planar maps by annihilation and creation of degree-3 vertices", "fourcolor"};
  app.require_subcommand(1);
  Options opt;

  auto add_strategy = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", opt.strategy, "Degree-3 vertex selection")
        ->check(CLI::IsMember({"trapped-first", "any"}));
  };
  auto add_batch = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("inputs", opt.inputs, what)->required();
    cmd->add_option("--jobs", opt.jobs, "Process independent inputs in parallel")->check(CLI::PositiveNumber);
  };

  auto* color_map_cmd = app.add_subcommand("color-map", "Colour a map given as countries and borders");
  add_batch(color_map_cmd, "Map JSON files");
  add_strategy(color_map_cmd);
  color_map_cmd->add_flag("--verify", opt.verify, "Re-check the colouring independently");
  color_map_cmd->add_option("--dot", opt.dot_path, "Also write a coloured DOT rendering");
  color_map_cmd->add_option("--report", opt.report_path, "Write a run report (digest, totals, timing)");

  auto* color_graph_cmd = app.add_subcommand("color-graph", "Colour a planar graph (JSON or edge list)");
  add_batch(color_graph_cmd, "Graph files");
  add_strategy(color_graph_cmd);
  color_graph_cmd->add_flag("--verify", opt.verify, "Re-check the colouring independently");
  color_graph_cmd->add_option("--dot", opt.dot_path, "Also write a coloured DOT rendering");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a maximal planar graph to K4 and print the log");
  add_batch(reduce_cmd, "Graph files");
  add_strategy(reduce_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a colouring against a graph");
  std::string graph_path, coloring_path;
  verify_cmd->add_option("graph", graph_path, "Graph file")->required();
  verify_cmd->add_option("coloring", coloring_path, "Colouring JSON")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Random MPG built by creations from K4");
  generate_cmd->add_option("n", opt.n, "Vertex count (>= 4)")->required();
  generate_cmd->add_option("--seed", opt.seed, "PRNG seed");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact chromatic number by backtracking");
  add_batch(oracle_cmd, "Graph files");
  oracle_cmd->add_option("--bound", opt.bound, "Largest vertex count accepted");

  auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a graph");
  dot_cmd->add_option("graph", graph_path, "Graph file")->required();
  dot_cmd->add_option("--coloring", opt.coloring_path, "Colouring JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return single(failure(kInvalidInput, "Usage", e.what()), out, err);
  }

  const bool one_output = !opt.dot_path.empty() || !opt.report_path.empty();
  if (one_output && opt.inputs.size() != 1)
    return single(failure(kInvalidInput, "Usage", "--dot and --report take a single input"), out, err);

  if (color_map_cmd->parsed()) return batch(opt, color_map_one, out, err);
  if (color_graph_cmd->parsed()) return batch(opt, color_graph_one, out, err);
  if (reduce_cmd->parsed()) return batch(opt, reduce_one, out, err);
  if (oracle_cmd->parsed()) return batch(opt, oracle_one, out, err);

  if (generate_cmd->parsed()) {
    return single(guarded([&] {
                    Generated gen = random_induced_mpg(opt.n, opt.seed);
                    Json doc = Json::object();
                    doc["graph"] = io::graph_to_json(gen.graph);
                    doc["log"] = io::oplog_to_json(gen.log);
                    return render(doc);
                  }),
                  out, err);
  }

  if (verify_cmd->parsed()) {
    Outcome r = guarded([&] {
      const EdgeListGraph g = read_edge_list(read_file(graph_path));
      const Coloring coloring = io::coloring_from_json(io::parse_json(read_file(coloring_path)), g.labels);
      const Verdict verdict = verify_proper(g, coloring);
      return render(verification_json(verdict, distinct_colors(coloring), g.labels));
    });
    if (r.code == kOk && r.document.find("\"proper\": false") != std::string::npos) r.code = kInvalidInput;
    return single(r, out, err);
  }

  if (dot_cmd->parsed()) {
    return single(guarded([&] {
                    const EdgeListGraph g = read_edge_list(read_file(graph_path));
                    if (opt.coloring_path.empty()) return io::to_dot(g);
                    const Coloring c = io::coloring_from_json(io::parse_json(read_file(opt.coloring_path)), g.labels);
                    return io::to_dot(g, &c);
                  }),
                  out, err);
  }
  return kInternal;
}

}  // namespace fourcolor::cli
