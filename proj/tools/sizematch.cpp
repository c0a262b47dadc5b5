/* Copyright 2026 The sizematch Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// sizematch: reduced size functions, cornerpoint diagrams and matching
// distances of vertex-weighted graphs.
//
// Exit codes: 0 ok, 1 property failure, 2 malformed input, 3 model
// violation (e.g. disconnected graph).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sizematch/bounds.hpp"
#include "sizematch/diagram.hpp"
#include "sizematch/io.hpp"
#include "sizematch/matching.hpp"
#include "sizematch/realize.hpp"
#include "sizematch/selftest.hpp"

namespace {

using namespace sizematch;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kParseError = 2;
constexpr int kModelViolation = 3;

struct Options {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1729;
  std::size_t cap = 8;
  std::size_t refine = 1;
  bool witness = false;
};

void emit(const Options& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw ParseError(opts.output, 0, "cannot open for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Diagram load_diagram(const std::string& path) {
  try {
    return diagram_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path, 0, e.what());
  }
}

int cmd_diagram(const Options& opts, const std::string& vertices, const std::string& edges) {
  const Diagram d = extract_diagram(load_size_pair(vertices, edges));
  emit(opts, opts.format == "csv" ? diagram_csv(d) : to_json(d).dump(2));
  return kOk;
}

int cmd_dist(const Options& opts, const std::string& first, const std::string& second) {
  const MatchingResult r = matching_distance(load_diagram(first), load_diagram(second));
  if (opts.format == "csv") {
    emit(opts, "# distance " + to_string(r.distance) + "\n" + matching_csv(r.matching));
  } else if (opts.witness) {
    emit(opts, Json{{"distance", number(r.distance)},
                    {"distance_exact", to_string(r.distance)},
                    {"matching", to_json(r.matching)}}
                   .dump(2));
  } else {
    emit(opts, number(r.distance).dump());
  }
  return kOk;
}

int cmd_bound(const Options& opts, const std::vector<std::string>& files) {
  const SizePair sp1 = load_size_pair(files[0], files[1]);
  const SizePair sp2 = load_size_pair(files[2], files[3]);
  BoundReport report;
  try {
    report = bound_report(sp1, sp2, opts.cap);
  } catch (const ChainViolation& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kPropertyFailure;
  }
  if (opts.format == "csv") {
    std::ostringstream head;
    head << "# earlier_bound " << to_string(report.earlier.value) << "\n# d_match "
         << to_string(report.d_match) << "\n# exact "
         << (report.exact_pseudo_distance ? to_string(*report.exact_pseudo_distance)
                                          : "skipped: " + report.exact_skipped_reason)
         << "\n";
    emit(opts, head.str() + matching_csv(report.matching));
  } else {
    emit(opts, to_json(report).dump(2));
  }
  return kOk;
}

int cmd_realize(const Options& opts, const std::string& first, const std::string& second,
                const std::string& min_epsilon) {
  const Diagram d1 = load_diagram(first);
  const Diagram d2 = load_diagram(second);
  RealizeOptions ropts;
  if (!min_epsilon.empty()) ropts.min_epsilon = parse_decimal(min_epsilon);
  std::optional<Realization> made;
  try {
    made = realize(d1, d2, ropts);
  } catch (const RealizationError& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kModelViolation;
  }
  const Realization& r = *made;
  const RealizationCheck check = verify_realization(d1, d2, r, opts.refine);
  emit(opts, Json{{"phi", to_json(r.phi)},
                  {"psi", to_json(r.psi)},
                  {"params", to_json(r.params)},
                  {"matching_distance", number(r.distance)},
                  {"verification", to_json(check)}}
                 .dump(2));
  return check.ok() ? kOk : kPropertyFailure;
}

int cmd_stability(const Options& opts, const std::string& vertices, const std::string& edges,
                  const std::string& perturbed, const std::string& eps_text) {
  const SizePair sp = load_size_pair(vertices, edges);
  std::ifstream in(perturbed);
  if (!in) throw ParseError(perturbed, 0, "cannot open file");
  const std::vector<Real> values = read_vertex_values(in, sp, perturbed);
  Real eps;
  try {
    eps = parse_decimal(eps_text);
  } catch (const std::invalid_argument& e) {
    throw ParseError("--eps", 0, e.what());
  }
  StabilityProbe probe;
  try {
    probe = stability_probe(sp, values, eps);
  } catch (const std::invalid_argument& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kModelViolation;
  }
  emit(opts, Json{{"d_match", number(probe.distance)},
                  {"infinity_displacement", number(probe.infinity_displacement)},
                  {"eps", number(eps)},
                  {"holds", probe.holds}}
                 .dump(2));
  return probe.holds ? kOk : kPropertyFailure;
}

int cmd_selftest(const Options& opts, double scale, const std::vector<std::string>& suites,
                 std::size_t jobs) {
  SelftestConfig config;
  config.seed = opts.seed;
  config.cap = opts.cap;
  for (std::size_t* count : {&config.graphs, &config.stability_trials, &config.matching_pairs,
                             &config.metric_triples, &config.chain_pairs,
                             &config.realization_pairs}) {
    *count = static_cast<std::size_t>(static_cast<double>(*count) * scale + 0.5);
  }
  const std::vector<SuiteResult> results = run_selftest(config, suites, jobs);
  std::cout << "seed " << config.seed << '\n';
  bool all = true;
  Json report = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    const char* status = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    std::cout << status << "  " << r.name << "  (" << r.detail << ", " << r.seconds << " s)\n";
    if (!r.passed) std::cout << "  counterexample: " << r.counterexample.dump() << '\n';
    report.push_back(Json{{"suite", r.name},
                          {"status", status},
                          {"cases", r.cases},
                          {"seconds", r.seconds},
                          {"detail", r.detail},
                          {"counterexample", r.counterexample}});
  }
  if (!opts.output.empty()) emit(opts, Json{{"seed", opts.seed}, {"suites", report}}.dump(2));
  return all ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced size functions and matching distances of weighted graphs"};
  app.require_subcommand(1);
  Options opts;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", opts.output, "Write to this file instead of stdout");
  };

  std::string vertices, edges;
  auto* diagram = app.add_subcommand("diagram", "Cornerpoint diagram of a size pair");
  diagram->add_option("vertices", vertices, "Vertex CSV (id,value)")->required();
  diagram->add_option("edges", edges, "Edge CSV (u,v)")->required();
  add_format(diagram);
  add_output(diagram);

  std::string first, second;
  auto* dist = app.add_subcommand("dist", "Matching distance between two diagram files");
  dist->add_option("diagram1", first)->required();
  dist->add_option("diagram2", second)->required();
  dist->add_flag("--witness", opts.witness, "Also print an optimal matching");
  add_format(dist);
  add_output(dist);

  std::vector<std::string> bound_files;
  auto* bound = app.add_subcommand("bound", "Lower bounds for the pseudo-distance of two size pairs");
  bound->add_option("files", bound_files, "vertices1 edges1 vertices2 edges2")
      ->required()
      ->expected(4);
  bound->add_option("--cap", opts.cap, "Vertex limit for the exact enumeration");
  add_format(bound);
  add_output(bound);

  std::string min_epsilon;
  auto* realize_cmd = app.add_subcommand("realize", "Two fields realizing two diagrams at their matching distance");
  realize_cmd->add_option("diagram1", first)->required();
  realize_cmd->add_option("diagram2", second)->required();
  realize_cmd->add_option("--refine", opts.refine, "Row subdivision for verification")
      ->check(CLI::PositiveNumber);
  realize_cmd->add_option("--min-epsilon", min_epsilon, "Smallest acceptable pit half-height");
  add_output(realize_cmd);

  std::string perturbed, eps;
  auto* stability = app.add_subcommand("stability", "Check a perturbation against its matching distance");
  stability->add_option("vertices", vertices)->required();
  stability->add_option("edges", edges)->required();
  stability->add_option("perturbed", perturbed, "Vertex CSV with the perturbed values")->required();
  stability->add_option("--eps", eps, "Perturbation bound")->required();
  add_output(stability);

  double scale = 1.0;
  std::size_t jobs = 1;
  std::vector<std::string> suites;
  auto* selftest = app.add_subcommand("selftest", "Run the seeded property suites");
  selftest->add_option("--seed", opts.seed, "Generator seed")->envname("SIZEMATCH_SEED");
  selftest->add_option("--cap", opts.cap, "Oracle size limit; 0 skips oracle suites");
  selftest->add_option("--scale", scale, "Multiplier for every case count")
      ->check(CLI::NonNegativeNumber);
  selftest->add_option("--suite", suites, "Run only these suites");
  selftest->add_option("--jobs", jobs, "Suites run concurrently")->check(CLI::PositiveNumber);
  add_output(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*diagram) return cmd_diagram(opts, vertices, edges);
    if (*dist) return cmd_dist(opts, first, second);
    if (*bound) return cmd_bound(opts, bound_files);
    if (*realize_cmd) return cmd_realize(opts, first, second, min_epsilon);
    if (*stability) return cmd_stability(opts, vertices, edges, perturbed, eps);
    if (*selftest) return cmd_selftest(opts, scale, suites, jobs);
  } catch (const ParseError& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidDiagram& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kParseError;
  } catch (const DisconnectedGraph& e) {
    std::cerr << "sizematch: graph is disconnected: " << e.component_count()
              << " connected components\n";
    return kModelViolation;
  } catch (const InvalidSizePair& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kModelViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sizematch: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}
