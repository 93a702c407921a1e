#include "dint/construction.hpp"
#include "dint/generators.hpp"
#include "dint/graph.hpp"
#include "dint/interval.hpp"
#include "dint/recognition.hpp"
#include "dint/rep_io.hpp"
#include "dint/split_checker.hpp"
#include "dint/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

dint::Graph load_graph(const std::string& path) { return dint::parse_graph(slurp(path)); }

dint::DIntervalRep load_rep(const std::string& path) {
  return dint::parse_representation(slurp(path));
}

nlohmann::ordered_json rep_json(const dint::DIntervalRep& rep) {
  return nlohmann::ordered_json::parse(dint::write_representation(rep));
}

nlohmann::ordered_json report_json(const dint::VerifyReport& report) {
  nlohmann::ordered_json j;
  j["ok"] = report.ok;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) arr.push_back({{"kind", v.kind}, {"witness", v.witness}});
  j["violations"] = std::move(arr);
  return j;
}

void print_report(const dint::VerifyReport& report) {
  for (const auto& v : report.violations)
    std::cout << "violation: " << v.kind << " (" << v.witness << ")\n";
}

struct SplitOptions {
  std::string mode = "disjoint";
  long long node_budget = 1'000'000'000;
  double time_budget = 1800.0;
};

dint::SplitMode parse_mode(const std::string& mode) {
  if (mode == "disjoint") return dint::SplitMode::Disjoint;
  if (mode == "nondisjoint") return dint::SplitMode::NonDisjoint;
  throw CLI::ValidationError("--mode", "must be disjoint or nondisjoint");
}

// Build either from a graph file (.el) or directly from a representation file.
dint::DIntervalRep build_any(const std::string& path, int d, bool disjoint) {
  bool is_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (disjoint) {
    dint::DIntervalRep in = is_json ? load_rep(path) : [&] {
      auto rep = dint::recognize_interval(load_graph(path));
      if (!rep) throw dint::NotInterval();
      return *rep;
    }();
    return dint::build_disjoint_unit_d_rep_eclaw_free(in, d);
  }
  if (is_json) return dint::build_unit_d_rep(load_rep(path), d);
  return dint::build_unit_d_rep(load_graph(path), d);
}

int run_build(const std::string& path, int d, bool disjoint, bool json, const std::string& out) {
  dint::DIntervalRep rep;
  try {
    rep = build_any(path, d, disjoint);
  } catch (const dint::ClawBoundExceeded& e) {
    std::cerr << "no unit " << d << "-interval representation: " << e.what() << "\n";
    return kExitNo;
  } catch (const dint::NotInterval& e) {
    std::cerr << e.what() << "\n";
    return kExitNo;
  } catch (const dint::NotEClawFree& e) {
    std::cerr << e.what() << " {";
    for (size_t i = 0; i < e.witness.vertices.size(); ++i)
      std::cerr << (i ? "," : "") << e.witness.vertices[i];
    std::cerr << "}\n";
    return kExitNo;
  }
  // self-check before claiming success
  bool is_json_in = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  dint::Graph g = is_json_in ? dint::d_intersection_graph(load_rep(path)) : load_graph(path);
  auto report = dint::verify_representation(rep, g, true, disjoint, false);
  if (!report.ok) {
    print_report(report);
    return kExitNo;
  }
  if (json && out.empty()) {
    std::cout << rep_json(rep).dump(2) << "\n";
  } else {
    emit(dint::write_representation(rep), out);
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit d-interval representations: construction, recognition, split search"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int threads = 1;
  app.add_flag("--json", json, "machine-readable JSON on stdout");
  app.add_option("--threads", threads, "parallelism degree (currently single-threaded)");

  std::string in_path, out_path, gen_name;
  int d = 2, claw_t = 3;
  SplitOptions split;
  bool want_unit = false, want_disjoint = false, want_balanced = false;

  auto* rec = app.add_subcommand("recognize-interval", "decide interval membership, emit a representation");
  rec->add_option("graph", in_path, "edge-list file")->required();
  rec->add_option("-o,--out", out_path, "write representation JSON here");

  auto* claw = app.add_subcommand("claw-check", "decide K_{1,t}-freeness");
  claw->add_option("graph", in_path, "edge-list file")->required();
  claw->add_option("-t", claw_t, "number of leaves")->required();

  auto* bu = app.add_subcommand("build-unit", "build a unit d-interval representation");
  bu->add_option("input", in_path, "edge-list or representation JSON file")->required();
  bu->add_option("-d", d, "number of intervals per vertex")->required();
  bu->add_option("-o,--out", out_path, "write representation JSON here");

  auto* bd = app.add_subcommand("build-disjoint-unit",
                                "build a disjoint unit d-interval representation (E-claw-free inputs)");
  bd->add_option("input", in_path, "edge-list or representation JSON file")->required();
  bd->add_option("-d", d, "number of intervals per vertex")->required();
  bd->add_option("-o,--out", out_path, "write representation JSON here");

  auto* cs = app.add_subcommand("check-split", "decide (disjoint) unit 2-interval membership");
  cs->add_option("graph", in_path, "edge-list file")->required();
  cs->add_option("--mode", split.mode, "disjoint|nondisjoint")->required();
  cs->add_option("--node-budget", split.node_budget, "search node budget");
  cs->add_option("--time-budget", split.time_budget, "search time budget in seconds");

  auto* ver = app.add_subcommand("verify", "check a representation against a graph");
  ver->add_option("rep", in_path, "representation JSON file")->required();
  std::string ver_graph;
  ver->add_option("graph", ver_graph, "edge-list file")->required();
  ver->add_flag("--unit", want_unit, "require exact unit lengths");
  ver->add_flag("--disjoint", want_disjoint, "require per-vertex disjointness");
  ver->add_flag("--balanced", want_balanced, "require per-vertex equal lengths");

  auto* gen = app.add_subcommand("gen", "emit a named instance");
  gen->add_option("name", gen_name,
                  "counterexample:<0..5> | counterexample-d:<d> | balanced-gadget:<d> | "
                  "kbip:<a>,<b> | random:<n>,<max_m>,<seed>")
      ->required();
  gen->add_option("-o,--out", out_path, "output file");

  auto* ren = app.add_subcommand("render", "render a representation JSON as SVG");
  ren->add_option("rep", in_path, "representation JSON file")->required();
  ren->add_option("-o,--out", out_path, "output SVG file");

  auto* bench = app.add_subcommand("bench", "construction scaling measurement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (rec->parsed()) {
      auto found = dint::recognize_interval(load_graph(in_path));
      if (!found) {
        std::cerr << "not an interval graph\n";
        return kExitNo;
      }
      if (json && out_path.empty())
        std::cout << rep_json(*found).dump(2) << "\n";
      else
        emit(dint::write_representation(*found), out_path);
      return kExitYes;
    }

    if (claw->parsed()) {
      auto witness = dint::has_induced_star(load_graph(in_path), claw_t);
      if (json) {
        nlohmann::ordered_json j;
        j["free"] = !witness.has_value();
        if (witness) {
          j["center"] = witness->center;
          j["leaves"] = witness->leaves;
        }
        std::cout << j.dump(2) << "\n";
      } else if (witness) {
        std::cout << "K_{1," << claw_t << "} centered at " << witness->center << ":";
        for (int leaf : witness->leaves) std::cout << " " << leaf;
        std::cout << "\n";
      }
      return witness ? kExitNo : kExitYes;
    }

    if (bu->parsed()) return run_build(in_path, d, false, json, out_path);
    if (bd->parsed()) return run_build(in_path, d, true, json, out_path);

    if (cs->parsed()) {
      dint::SearchLimits limits;
      limits.node_budget = split.node_budget;
      limits.time_budget =
          std::chrono::milliseconds(static_cast<long long>(split.time_budget * 1000));
      dint::Graph g = load_graph(in_path);
      dint::SplitMode mode = parse_mode(split.mode);
      auto res = dint::search_split(g, mode, limits);
      if (res.verdict == dint::SplitVerdict::Yes) {
        auto report = dint::verify_split(g, *res.solution, mode);
        if (!report.ok) {
          print_report(report);
          return kExitNo;
        }
      }
      if (json) {
        nlohmann::ordered_json j;
        j["verdict"] = res.verdict == dint::SplitVerdict::Yes      ? "yes"
                       : res.verdict == dint::SplitVerdict::No     ? "no"
                                                                   : "exhausted";
        j["nodes"] = res.nodes;
        if (res.solution) {
          auto sol = nlohmann::ordered_json::object();
          auto splits = nlohmann::ordered_json::array();
          for (int v = 1; v <= res.solution->n; ++v)
            if (res.solution->split[v]) splits.push_back(v);
          sol["split"] = std::move(splits);
          auto edges = nlohmann::ordered_json::array();
          for (const auto& [e, prs] : res.solution->rep_edges)
            for (auto [i, j2] : prs)
              edges.push_back({{"u", e.first}, {"i", i}, {"v", e.second}, {"j", j2}});
          sol["rep_edges"] = std::move(edges);
          sol["internal_edges"] = res.solution->internal_edges;
          j["solution"] = std::move(sol);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        if (res.verdict == dint::SplitVerdict::Yes) {
          std::cout << "yes; split vertices:";
          for (int v = 1; v <= res.solution->n; ++v)
            if (res.solution->split[v]) std::cout << " " << v;
          std::cout << "\n";
        } else {
          std::cout << (res.verdict == dint::SplitVerdict::No ? "no" : "exhausted") << "\n";
        }
      }
      if (res.verdict == dint::SplitVerdict::Yes) return kExitYes;
      return res.verdict == dint::SplitVerdict::No ? kExitNo : kExitExhausted;
    }

    if (ver->parsed()) {
      auto report = dint::verify_representation(load_rep(in_path), load_graph(ver_graph),
                                                want_unit, want_disjoint, want_balanced);
      if (json)
        std::cout << report_json(report).dump(2) << "\n";
      else
        print_report(report);
      return report.ok ? kExitYes : kExitNo;
    }

    if (gen->parsed()) {
      auto colon = gen_name.find(':');
      std::string kind = gen_name.substr(0, colon);
      std::vector<long long> args;
      if (colon != std::string::npos) {
        std::stringstream ss(gen_name.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stoll(tok));
      }
      auto need = [&](size_t k) {
        if (args.size() != k)
          throw std::invalid_argument("generator " + kind + " needs " + std::to_string(k) +
                                      " argument(s)");
      };
      if (kind == "counterexample") {
        need(1);
        emit(dint::write_graph(dint::counterexample_graph(static_cast<int>(args[0]))), out_path);
      } else if (kind == "counterexample-d") {
        need(1);
        emit(dint::write_graph(dint::counterexample_d(static_cast<int>(args[0]))), out_path);
      } else if (kind == "balanced-gadget") {
        need(1);
        emit(dint::write_graph(dint::balanced_gadget(static_cast<int>(args[0]))), out_path);
      } else if (kind == "kbip") {
        need(2);
        emit(dint::write_graph(dint::complete_bipartite(static_cast<int>(args[0]),
                                                        static_cast<int>(args[1]))),
             out_path);
      } else if (kind == "random") {
        need(3);
        emit(dint::write_representation(dint::random_interval_rep(
                 static_cast<int>(args[0]), static_cast<int>(args[1]),
                 static_cast<std::uint64_t>(args[2]))),
             out_path);
      } else {
        throw std::invalid_argument("unknown generator " + gen_name);
      }
      return kExitYes;
    }

    if (ren->parsed()) {
      emit(dint::render_svg(load_rep(in_path)), out_path);
      return kExitYes;
    }

    if (bench->parsed()) {
      std::cout << "n\ttransform_ms\tverified\n";
      for (int n : {25000, 50000, 100000}) {
        auto rep = dint::random_interval_rep(n, 4, 7);
        auto t0 = std::chrono::steady_clock::now();
        auto spread = dint::spread_endpoints(rep);
        std::vector<dint::TransformPlan> plans;
        plans.reserve(n);
        for (int v = 1; v <= n; ++v) plans.push_back(dint::transform_interval(v, spread));
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        size_t pieces = 0;
        for (const auto& p : plans) pieces += p.pieces.size();
        std::cout << n << "\t" << ms << "\t" << pieces << " pieces\n";
      }
      return kExitYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
