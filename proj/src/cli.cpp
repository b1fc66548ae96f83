#include "edgecol/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "edgecol/classic.hpp"
#include "edgecol/error.hpp"
#include "edgecol/generators.hpp"
#include "edgecol/oracle.hpp"
#include "edgecol/overfull.hpp"

namespace edgecol {

using json = nlohmann::ordered_json;

json to_json(const PipelineReport& r) {
  json j;
  j["condition"] = r.condition;
  j["profile"] = r.profile;
  j["seed"] = r.seed;
  j["attempts"] = r.attempts;
  j["finish_round"] = r.finish_round;
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"attempt", f.attempt}, {"step", f.step}, {"message", f.message}});
  j["failed_attempts"] = fails;
  j["partition"] = {{"certificate", r.partition_certificate},
                    {"threshold", r.partition_threshold},
                    {"random_tries", r.partition_random_tries},
                    {"polished", r.partition_polished}};
  j["step1"] = {{"k", r.k},
                {"s_threshold", r.s_threshold},
                {"s_size", r.s_size},
                {"side_slack", r.side_slack},
                {"s_a", r.s_a},
                {"s_b", r.s_b},
                {"augmentation_edges_a", r.aug_edges_a},
                {"augmentation_edges_b", r.aug_edges_b},
                {"sides_swapped", r.sides_swapped},
                {"equalize_swaps", r.equalize_swaps},
                {"missing_sum_a", r.missing_sum_a},
                {"missing_sum_b", r.missing_sum_b},
                {"max_class_missing_a", r.max_class_missing_a},
                {"max_class_missing_b", r.max_class_missing_b},
                {"missing_sum_bound", std::round(r.missing_sum_bound * 1000) / 1000},
                {"class_missing_bound", std::round(r.class_missing_bound * 1000) / 1000},
                {"bounds_hold", r.step1_bounds_hold}};
  json lengths = json::object();
  for (const auto& [len, count] : r.paths_by_length) lengths[std::to_string(len)] = count;
  j["step2"] = {{"good_cap", r.good_cap},
                {"relocations", r.relocations},
                {"relocations_skipped", r.relocations_skipped},
                {"pairs_ab", r.pairs_ab},
                {"pairs_aa", r.pairs_aa},
                {"pairs_bb", r.pairs_bb},
                {"direct_paths", r.direct_paths},
                {"shape_paths", r.shape_paths},
                {"search_paths", r.search_paths},
                {"relaxed_paths", r.relaxed_paths},
                {"paths_by_length", lengths},
                {"max_residual_degree", r.max_residual_degree}};
  j["step3"] = {{"ell", r.ell},
                {"ell_literal", r.ell_paper},
                {"residual_cap", r.residual_cap},
                {"residual_a_edges", r.residual_a_edges},
                {"residual_b_edges", r.residual_b_edges},
                {"residual_a_max_degree", r.residual_a_max_degree},
                {"residual_b_max_degree", r.residual_b_max_degree},
                {"matching_sizes", r.matching_sizes},
                {"excluded_total", r.excluded_total},
                {"matching_fallbacks", r.matching_fallbacks},
                {"chain_repairs", r.chain_repairs},
                {"unmatched_total", r.unmatched_total}};
  j["step4"] = {{"delta_r", r.delta_r}, {"expected_delta_r", r.expected_delta_r}, {"palette", r.palette}};
  return j;
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json js;
    js["kind"] = to_string(s.kind);
    js["edges"] = s.edges.size();
    std::vector<int> colors = s.colors;
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    js["colors"] = colors;
    js["delta_before"] = s.delta_before;
    js["delta_after"] = s.delta_after;
    js["note"] = s.note;
    steps.push_back(js);
  }
  json j;
  j["steps"] = steps;
  j["core_condition"] = t.core_condition ? json(to_string(*t.core_condition)) : json(nullptr);
  j["hakimi_edges"] = t.hakimi_edges;
  j["forest_count"] = t.forest_count;
  return j;
}

namespace {

json instance_json(const SimpleGraph& g) {
  int heavy = 0, light = 0;
  const int top = g.max_degree(), low = g.min_degree();
  for (VertexId v : g.vertices()) {
    heavy += g.degree(v) == top;
    light += g.degree(v) == low;
  }
  return {{"order", g.order()}, {"edges", g.edge_count()}, {"max_degree", top},
          {"min_degree", low}, {"min_degree_count", light}, {"max_degree_count", heavy}};
}

json coloring_json(const ColoringFile& c) {
  json arr = json::array();
  for (const auto& e : c.edges) arr.push_back({e.u, e.v, e.copy, e.color});
  return arr;
}

}  // namespace

ColorOutcome color_graph(const SimpleGraph& g, const ConstantsProfile& profile, std::uint64_t seed, bool timing) {
  ColorOutcome out;
  json& rep = out.report;
  rep["instance"] = instance_json(g);
  rep["profile"] = profile.name;
  rep["epsilon"] = profile.epsilon;
  rep["seed"] = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto res = chi_prime_dense(g, profile, seed);
    rep["status"] = "ok";
    rep["class"] = res.chromatic_class;
    rep["overfull"] = {{"status", std::string(to_string(res.verdict.status))}, {"witness", res.verdict.witness}};
    rep["palette"] = res.palette;
    rep["condition"] = res.trace.core_condition ? json(to_string(*res.trace.core_condition)) : json(nullptr);
    rep["trace"] = to_json(res.trace);
    rep["pipeline"] = res.report ? to_json(*res.report) : json(nullptr);
    out.coloring = coloring_for(g, res.colors, res.palette);
    rep["coloring"] = coloring_json(*out.coloring);
  } catch (const HypothesisError& e) {
    out.exit = exit_code::hypothesis;
    rep["status"] = "hypothesis_violation";
    rep["error"] = e.what();
  } catch (const DriverError& e) {
    out.exit = exit_code::pipeline;
    rep["status"] = "pipeline_failure";
    rep["error"] = e.what();
    rep["failed_stage"] = e.stage;
    rep["trace"] = to_json(e.trace);
    rep["pipeline"] = e.report ? to_json(*e.report) : json(nullptr);
  }
  if (timing)
    rep["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

VerifyOutcome verify_coloring(const SimpleGraph& g, const ColoringFile& c) {
  VerifyOutcome out;
  json& rep = out.report;
  std::vector<int> colors;
  try {
    colors = colors_for(g, c);
  } catch (const ParseError& e) {
    out.exit = exit_code::input;
    rep["status"] = "input_error";
    rep["error"] = e.what();
    return out;
  }
  const auto mg = Multigraph::from_simple(g);
  const auto check = validate_proper(mg, colors);
  int top = 0, uncolored = 0;
  for (int col : colors) {
    top = std::max(top, col);
    uncolored += col == 0;
  }
  std::vector<int> sizes(std::max(top, c.palette) + 1, 0);
  for (int col : colors) ++sizes[col];
  const int half = g.order() / 2;
  int perfect = 0, used = 0;
  json class_sizes = json::array();
  for (std::size_t col = 1; col < sizes.size(); ++col) {
    class_sizes.push_back(sizes[col]);
    used += sizes[col] > 0;
    perfect += sizes[col] == half && g.order() % 2 == 0;
  }
  const bool ok = check.ok && uncolored == 0 && top <= c.palette;
  rep["status"] = ok ? "ok" : "improper";
  rep["proper"] = check.ok;
  if (!check.ok) rep["conflict"] = {{"vertex", check.vertex}, {"color", check.color}};
  rep["uncolored"] = uncolored;
  rep["palette"] = c.palette;
  rep["colors_used"] = used;
  rep["max_color"] = top;
  rep["within_palette"] = top <= c.palette;
  rep["class_sizes"] = class_sizes;
  rep["perfect_matching_classes"] = perfect;
  out.exit = ok ? exit_code::ok : exit_code::improper;
  return out;
}

std::uint64_t seed_from_name(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json bench_directory(const std::string& dir, const ConstantsProfile& profile, std::uint64_t seed, int jobs,
                     bool timing) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  struct Row {
    json report;
    int exit = 0;
    double ms = 0;
  };
  std::vector<Row> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      Row& row = rows[i];
      const auto start = std::chrono::steady_clock::now();
      const std::string name = files[i].filename().string();
      try {
        const auto g = read_simple_graph_file(files[i].string());
        auto res = color_graph(g, profile, seed ^ seed_from_name(name), false);
        row.exit = res.exit;
        row.report = std::move(res.report);
        row.report.erase("coloring");
        if (res.exit == exit_code::ok) {
          const auto v = verify_coloring(g, *res.coloring);
          row.report["verified"] = v.exit == exit_code::ok;
          if (v.exit != exit_code::ok) row.exit = exit_code::improper;
        }
      } catch (const std::exception& e) {
        row.exit = exit_code::input;
        row.report = {{"status", "input_error"}, {"error", e.what()}};
      }
      row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      json head{{"file", name}, {"exit", row.exit}};
      head.update(row.report);
      row.report = std::move(head);
      if (timing) row.report["wall_ms"] = row.ms;
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(files.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  json instances = json::array();
  int ok = 0, class1 = 0, class2 = 0;
  std::map<int, int> by_exit;
  std::vector<double> times;
  for (const auto& row : rows) {
    instances.push_back(row.report);
    ++by_exit[row.exit];
    times.push_back(row.ms);
    if (row.exit == exit_code::ok) {
      ++ok;
      (row.report.value("class", 1) == 2 ? class2 : class1) += 1;
    }
  }
  json agg;
  agg["instances"] = files.size();
  agg["succeeded"] = ok;
  agg["class1"] = class1;
  agg["class2"] = class2;
  agg["success_rate"] = files.empty() ? 0.0 : static_cast<double>(ok) / files.size();
  json exits = json::object();
  for (const auto& [code, count] : by_exit) exits[std::to_string(code)] = count;
  agg["exit_codes"] = exits;
  if (timing && !times.empty()) {
    std::sort(times.begin(), times.end());
    auto pct = [&](double q) { return times[std::min(times.size() - 1, static_cast<std::size_t>(q * times.size()))]; };
    agg["wall_ms"] = {{"p50", pct(0.5)}, {"p90", pct(0.9)}, {"max", times.back()}};
  }
  return {{"profile", profile.name}, {"seed", seed}, {"aggregate", agg}, {"results", instances}};
}

namespace {

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!f) throw ParseError(0, "cannot write " + path);
    f << text;
  }
}

ConstantsProfile make_profile(const std::string& name, double epsilon) {
  auto p = ConstantsProfile::named(name);
  p.epsilon = epsilon;
  return p;
}

json check_family(const std::string& family, const SimpleGraph& g) {
  json j = instance_json(g);
  const int n = g.order() / 2;
  if (family == "wide-spread" && j["max_degree_count"].get<int>() < n + 1)
    throw std::invalid_argument("wide-spread graph has too few max-degree vertices");
  if (family == "regular" && !g.is_regular()) throw std::logic_error("regular generator produced an irregular graph");
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge coloring of dense graphs with max-degree colors"};
  app.require_subcommand(1);

  std::string graph_path, coloring_path, out_path, report_path, profile_name = "desk", family, dir;
  double epsilon = 0.2, p = 0.8;
  std::uint64_t seed = 1;
  bool timing = false;
  int order = 0, degree = 0, max_degree = 0, light_degree = 0, lights = 2, jobs = 1, max_vertices = 14;
  double seconds = 30;

  auto* color = app.add_subcommand("color", "Color a graph and print a JSON report");
  color->add_option("graph", graph_path, "Edge-list file")->required();
  color->add_option("--profile", profile_name, "Constants profile: desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  color->add_option("--epsilon", epsilon, "Density margin");
  color->add_option("--seed", seed, "Partition seed");
  color->add_option("--out", out_path, "Write the coloring file here");
  color->add_option("--report", report_path, "Write the JSON report here instead of stdout");
  color->add_flag("--timing", timing, "Include wall time in the report");

  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", graph_path, "Edge-list file")->required();
  verify->add_option("coloring", coloring_path, "Coloring file")->required();

  auto* detect_cmd = app.add_subcommand("detect-overfull", "Report an overfull or full G - v");
  detect_cmd->add_option("graph", graph_path, "Edge-list file")->required();

  auto* gen = app.add_subcommand("generate", "Write a random graph of a family");
  gen->add_option("family", family, "regular, two-light, wide-spread, random-dense or planted-overfull")
      ->required()
      ->check(CLI::IsMember({"regular", "two-light", "wide-spread", "random-dense", "planted-overfull"}));
  gen->add_option("--order", order, "Number of vertices")->required();
  gen->add_option("--degree", degree, "Degree (regular)");
  gen->add_option("--max-degree", max_degree, "Max degree");
  gen->add_option("--light-degree", light_degree, "Degree of the light vertices");
  gen->add_option("--lights", lights, "Number of light vertices");
  gen->add_option("--p", p, "Edge keep probability (random-dense)");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out_path, "Output file");

  auto* bench = app.add_subcommand("bench", "Color every edge list in a directory");
  bench->add_option("dir", dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--profile", profile_name, "Constants profile")->check(CLI::IsMember({"desk", "paper"}));
  bench->add_option("--epsilon", epsilon, "Density margin");
  bench->add_option("--seed", seed, "Base seed, mixed with a hash of each file name");
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--report", report_path, "Write the JSON report here");
  bench->add_flag("--timing", timing, "Include wall times");

  auto* oracle = app.add_subcommand("oracle", "Exact chromatic index and overfull scan for a small graph");
  oracle->add_option("graph", graph_path, "Edge-list file")->required();
  oracle->add_option("--max-vertices", max_vertices, "Vertex budget");
  oracle->add_option("--seconds", seconds, "Time budget");

  std::vector<std::string> argv_store{"edgecol"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::input;
  }

  try {
    if (*color) {
      const auto g = read_simple_graph_file(graph_path);
      auto res = color_graph(g, make_profile(profile_name, epsilon), seed, timing);
      if (res.coloring && !out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ParseError(0, "cannot write " + out_path);
        write_coloring(f, *res.coloring);
      }
      emit(res.report, report_path, out);
      return res.exit;
    }
    if (*verify) {
      const auto g = read_simple_graph_file(graph_path);
      const auto c = read_coloring_file(coloring_path);
      const auto res = verify_coloring(g, c);
      emit(res.report, "", out);
      return res.exit;
    }
    if (*detect_cmd) {
      const auto g = read_simple_graph_file(graph_path);
      try {
        const auto v = detect(g);
        emit({{"instance", instance_json(g)}, {"status", std::string(to_string(v.status))}, {"witness", v.witness}}, "",
             out);
      } catch (const HypothesisError& e) {
        emit({{"status", "hypothesis_violation"}, {"error", e.what()}}, "", out);
        return exit_code::hypothesis;
      }
      return exit_code::ok;
    }
    if (*gen) {
      SimpleGraph g;
      if (family == "regular") g = gen_regular(order, degree, seed);
      else if (family == "two-light" || family == "wide-spread")
        g = gen_two_light(order, max_degree, light_degree, lights, seed);
      else if (family == "random-dense") g = gen_random_dense(order, p, seed);
      else g = gen_planted_overfull(order, max_degree, light_degree, seed);
      const auto info = check_family(family, g);
      std::ostringstream text;
      text << "# " << family << " seed " << seed << " max_degree " << info["max_degree"] << " min_degree "
           << info["min_degree"] << "\n";
      write_edge_list(text, g);
      if (out_path.empty()) {
        out << text.str();
      } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError(0, "cannot write " + out_path);
        f << text.str();
      }
      return exit_code::ok;
    }
    if (*bench) {
      const auto rep = bench_directory(dir, make_profile(profile_name, epsilon), seed, jobs, timing);
      emit(rep, report_path, out);
      return exit_code::ok;
    }
    if (*oracle) {
      const auto g = read_simple_graph_file(graph_path);
      OracleBudget budget{max_vertices, seconds};
      const auto r = exact_chromatic_index(g, budget);
      json j{{"instance", instance_json(g)}};
      if (r.status == OracleStatus::timeout) {
        j["status"] = "timeout";
      } else {
        j["status"] = "exact";
        j["chromatic_index"] = r.chromatic_index;
        j["class"] = r.chromatic_index == g.max_degree() ? 1 : 2;
      }
      j["nodes"] = r.nodes;
      const auto witnesses = exhaustive_overfull_scan(g, g.max_degree(), budget);
      j["overfull_witnesses"] = witnesses.size();
      if (!witnesses.empty()) j["smallest_witness"] = witnesses.front();
      emit(j, "", out);
      return exit_code::ok;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const OracleBudgetError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const ContractViolation& e) {
    err << "input error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return exit_code::hypothesis;
  }
  return exit_code::input;
}

}  // namespace edgecol
