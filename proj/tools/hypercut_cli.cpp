// Command line front end for the hypercut library.
//
//   gen        write a generated instance in .hgr form
//   mincut     solve one instance with a chosen algorithm
//   verify     cross-check every solver against exhaustive references
//   decompose  run the expander decomposition, print it as JSON
//   report     print the structural min-cut report as JSON
//   bench      run a named suite, emit per-instance CSV timings
//
// Results go to stdout, progress and warnings to stderr.  For a fixed
// (input, flags, seed) triple the JSON output is byte-identical across runs,
// so wall-clock timings are reported on stderr only.
//
// Exit codes: 0 success, 2 usage error, 3 unreadable or malformed input,
// 4 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hypercut/driver.hpp"
#include "hypercut/errors.hpp"
#include "hypercut/expander.hpp"
#include "hypercut/generators.hpp"
#include "hypercut/hypergraph.hpp"
#include "hypercut/io.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/ordering.hpp"
#include "hypercut/rng.hpp"
#include "hypercut/smallcut.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

int thread_cap() {
  if (const char* env = std::getenv("HYPERCUT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

struct GenArgs {
  std::string family;
  int n = -1;
  int r = -1;
  int m = -1;
  int s = -1;
  int lam = -1;
  std::uint64_t seed = 0;
  std::string out;
};

struct MincutArgs {
  std::string file;
  std::string algo = "auto";
  int s = 1;
  std::uint64_t seed = 0;
  bool has_seed = false;
  int repeat = 3;
  bool force_large = false;
  bool json = false;
};

struct VerifyArgs {
  std::string file;
  int max_n = 18;
  std::uint64_t seed = 0;
};

struct DecomposeArgs {
  std::string file;
  double phi = 0.0;
  int exact_limit = 14;
  std::uint64_t seed = 0;
};

struct BenchArgs {
  std::string suite;
  std::string out;
  std::uint64_t seed = 0;
};

int run_gen(const GenArgs& a) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) {
      std::cerr << "gen " << a.family << ": missing or invalid " << what
                << '\n';
      return false;
    }
    return true;
  };

  hypercut::Hypergraph g;
  if (a.family == "random") {
    if (!need(a.n >= 2, "--n") || !need(a.r >= 2, "--r") ||
        !need(a.m >= 0, "--m"))
      return 2;
    g = hypercut::gen_random(a.n, a.r, a.m, a.seed);
  } else if (a.family == "planted") {
    if (!need(a.n >= 3, "--n") || !need(a.r >= 2, "--r") ||
        !need(a.s >= 1, "--s") || !need(a.lam >= 1, "--lam"))
      return 2;
    hypercut::PlantedInstance inst =
        hypercut::gen_planted_small_cut(a.n, a.r, a.s, a.lam, a.seed);
    std::cerr << "gen planted: capacity " << inst.capacity << ", side size "
              << inst.side.size() << '\n';
    g = std::move(inst.graph);
  } else if (a.family == "pairs") {
    if (!need(a.n >= 2, "--n")) return 2;
    if (a.n < 100)
      std::cerr << "warning: pairs instances with n < 100 fall outside the "
                   "regime where their extremal cut structure is guaranteed\n";
    g = hypercut::gen_nontrivial_example(a.n);
  } else if (a.family == "groups") {
    if (!need(a.n >= 1, "--n") || !need(a.r >= 2, "--r")) return 2;
    g = hypercut::gen_tight_example(a.n, a.r);
  } else if (a.family == "complete") {
    if (!need(a.n >= 2, "--n") || !need(a.r >= 2, "--r")) return 2;
    g = hypercut::gen_complete_uniform(a.n, a.r);
  } else {
    std::cerr << "gen: unknown family '" << a.family << "'\n";
    return 2;
  }

  if (a.out.empty()) {
    hypercut::write_hgr(std::cout, g);
  } else {
    hypercut::write_hgr_file(a.out, g);
    std::cerr << "gen: wrote " << g.num_edges() << " edges on "
              << g.num_vertices() << " vertices to " << a.out << '\n';
  }
  return 0;
}

int run_mincut(const MincutArgs& a) {
  hypercut::Hypergraph g = hypercut::read_hgr_file(a.file);
  Clock::time_point start = Clock::now();

  hypercut::Cut cut;
  bool randomized = false;
  if (a.algo == "auto") {
    hypercut::MinCutOptions opt;
    opt.seed = a.seed;
    opt.repeat_factor = a.repeat;
    opt.force_large_branch = a.force_large;
    cut = hypercut::min_cut(g, opt);
    randomized = true;
  } else if (a.algo == "slow") {
    cut = hypercut::slow_min_cut(g);
  } else if (a.algo == "cx") {
    cut = hypercut::cx_min_cut(g);
  } else if (a.algo == "expdecomp") {
    cut = hypercut::exp_decomp_min_cut(g, a.seed);
    randomized = true;
  } else if (a.algo == "small") {
    cut = hypercut::small_size_min_cut(g, a.s, a.seed, a.repeat);
    randomized = true;
  } else if (a.algo == "exhaustive") {
    cut = hypercut::exhaustive_small_min_cut(g, a.s, std::max(a.s, 4));
  } else {
    std::cerr << "mincut: unknown algorithm '" << a.algo << "'\n";
    return 2;
  }

  double ms = elapsed_ms(start);
  std::cerr << "mincut: " << a.algo << " finished in " << ms << " ms\n";

  if (a.json) {
    hypercut::ResultRecord rec;
    rec.algorithm = a.algo;
    rec.lambda = cut.capacity;
    rec.side = cut.side;
    if (a.has_seed && randomized) rec.seed = a.seed;
    rec.wall_ms = 0.0;  // timings go to stderr so the JSON stays reproducible
    rec.params["source"] = cut.source;
    if (a.algo == "small" || a.algo == "exhaustive")
      rec.params["s"] = std::to_string(a.s);
    if (a.force_large) rec.params["force_large_branch"] = "1";
    std::cout << hypercut::to_json(rec) << '\n';
  } else {
    std::cout << "lambda " << cut.capacity << "\nside";
    for (int v : cut.side) std::cout << ' ' << v;
    std::cout << "\nsource " << cut.source << '\n';
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  hypercut::Hypergraph g = hypercut::read_hgr_file(a.file);
  int n = g.num_vertices();
  if (n < 2) {
    std::cerr << "verify: instance needs at least 2 vertices\n";
    return 2;
  }
  if (n > a.max_n) {
    std::cerr << "verify: " << n << " vertices exceeds --max-n " << a.max_n
              << "; exhaustive reference would be too slow\n";
    return 2;
  }

  hypercut::MinCutEnumeration oracle = hypercut::brute_min_cut(g, a.max_n);
  long long lambda = oracle.capacity;

  bool ok = true;
  auto check = [&](const char* name, const hypercut::Cut& cut,
                   long long expect) {
    long long repriced =
        cut.side.empty() ? cut.capacity : hypercut::cut_capacity(g, cut.side);
    bool good = cut.capacity == expect && repriced == expect;
    std::cout << (good ? "ok " : "MISMATCH ") << name << " capacity "
              << cut.capacity << " expected " << expect << '\n';
    if (!good) ok = false;
  };

  check("slow", hypercut::slow_min_cut(g), lambda);
  check("cx", hypercut::cx_min_cut(g), lambda);
  check("expdecomp", hypercut::exp_decomp_min_cut(g, a.seed), lambda);
  hypercut::MinCutOptions opt;
  opt.seed = a.seed;
  check("auto", hypercut::min_cut(g, opt), lambda);
  check("small",
        hypercut::small_size_min_cut(g, std::max(1, n / 2), a.seed), lambda);
  int s = std::max(1, std::min(4, n - 1));
  check("exhaustive", hypercut::exhaustive_small_min_cut(g, s, 6),
        hypercut::brute_min_s_cut(g, s, a.max_n).capacity);

  if (!ok) {
    std::string repro = a.file + ".repro.hgr";
    hypercut::write_hgr_file(repro, g);
    std::cerr << "verify: mismatch against exhaustive reference; instance "
                 "copied to "
              << repro << '\n';
    return 4;
  }
  std::cout << "all solvers agree: lambda " << lambda << '\n';
  return 0;
}

int run_decompose(const DecomposeArgs& a) {
  hypercut::Hypergraph g = hypercut::read_hgr_file(a.file);
  if (a.phi <= 0.0 || a.phi > 1.0) {
    std::cerr << "decompose: --phi must lie in (0, 1]\n";
    return 2;
  }
  Clock::time_point start = Clock::now();
  hypercut::Decomposition dec =
      hypercut::hypergraph_expander_decomposition(g, a.phi, a.exact_limit,
                                                  a.seed);
  std::cerr << "decompose: " << dec.partition.blocks.size() << " blocks, "
            << dec.crossing_edges << " crossing edges in "
            << elapsed_ms(start) << " ms\n";

  nlohmann::json j;
  j["phi"] = dec.phi;
  j["crossing_edges"] = dec.crossing_edges;
  j["blocks"] = dec.partition.blocks;
  std::vector<bool> certified(dec.certified.begin(), dec.certified.end());
  j["certified"] = certified;
  std::cout << j.dump() << '\n';
  return 0;
}

int run_report(const std::string& file) {
  hypercut::Hypergraph g = hypercut::read_hgr_file(file);
  hypercut::StructuralReport rep = hypercut::structural_report(g);

  nlohmann::json j;
  j["lambda"] = rep.lambda;
  j["num_edges"] = rep.num_edges;
  j["rank"] = rep.rank;
  j["min_cut_sizes"] = rep.min_cut_sizes;
  j["union_size"] = rep.union_size;
  j["small_size_bound"] = rep.small_size_bound;
  j["has_small_min_cut"] = rep.has_small_min_cut;
  j["union_ratio"] = rep.union_ratio;
  j["gap_hypothesis"] = rep.gap_hypothesis;
  j["gap_low"] = rep.gap_low;
  j["gap_high"] = rep.gap_high;
  j["gap_holds"] = rep.gap_holds;
  std::cout << j.dump() << '\n';
  return 0;
}

struct BenchRow {
  std::string suite;
  std::string label;
  int n = 0;
  long long m = 0;
  long long p = 0;
  std::string algo;
  long long capacity = 0;
  double ms = 0.0;
};

int run_bench(const BenchArgs& a) {
  std::vector<std::function<BenchRow()>> tasks;
  auto add = [&](std::string label, hypercut::Hypergraph g, std::string algo,
                 std::function<hypercut::Cut(const hypercut::Hypergraph&)>
                     solve) {
    tasks.push_back([&, label = std::move(label), g = std::move(g),
                     algo = std::move(algo), solve = std::move(solve)] {
      BenchRow row;
      row.suite = a.suite;
      row.label = label;
      row.n = g.num_vertices();
      row.m = g.num_edges();
      row.p = g.total_size();
      row.algo = algo;
      Clock::time_point start = Clock::now();
      hypercut::Cut cut = solve(g);
      row.ms = elapsed_ms(start);
      row.capacity = cut.capacity;
      return row;
    });
  };

  auto slow = [](const hypercut::Hypergraph& g) {
    return hypercut::slow_min_cut(g);
  };
  auto cx = [](const hypercut::Hypergraph& g) {
    return hypercut::cx_min_cut(g);
  };

  if (a.suite == "small") {
    int idx = 0;
    for (int n : {8, 10, 12})
      for (int rep = 0; rep < 4; ++rep, ++idx) {
        std::uint64_t s = hypercut::derive_seed(a.seed, idx);
        hypercut::Hypergraph g = hypercut::gen_random(n, 3, 3 * n, s);
        std::string label = "random_n" + std::to_string(n) + "_" +
                            std::to_string(rep);
        std::uint64_t auto_seed = hypercut::derive_seed(s, 1);
        add(label, g, "slow", slow);
        add(label, g, "cx", cx);
        add(label, std::move(g), "auto",
            [auto_seed](const hypercut::Hypergraph& h) {
              hypercut::MinCutOptions opt;
              opt.seed = auto_seed;
              return hypercut::min_cut(h, opt);
            });
      }
  } else if (a.suite == "planted") {
    int idx = 0;
    for (int lam : {1, 2, 3})
      for (int rep = 0; rep < 2; ++rep, ++idx) {
        std::uint64_t s = hypercut::derive_seed(a.seed, 100 + idx);
        hypercut::PlantedInstance inst =
            hypercut::gen_planted_small_cut(12, 3, 1, lam, s);
        std::string label = "planted_lam" + std::to_string(lam) + "_" +
                            std::to_string(rep);
        std::uint64_t small_seed = hypercut::derive_seed(s, 2);
        add(label, inst.graph, "slow", slow);
        add(label, std::move(inst.graph), "small",
            [small_seed](const hypercut::Hypergraph& h) {
              return hypercut::small_size_min_cut(h, 1, small_seed);
            });
      }
  } else if (a.suite == "scaling") {
    int idx = 0;
    for (int n : {80, 160, 320, 640}) {
      std::uint64_t s = hypercut::derive_seed(a.seed, 200 + idx++);
      hypercut::Hypergraph g = hypercut::gen_random(n, 3, 2 * n, s);
      add("random_n" + std::to_string(n), std::move(g), "slow", slow);
    }
  } else {
    std::cerr << "bench: unknown suite '" << a.suite
              << "' (small, planted, scaling)\n";
    return 2;
  }

  std::vector<BenchRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
      rows[i] = tasks[i]();
  };
  int workers =
      std::max(1, std::min<int>(thread_cap(), static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (std::thread& t : pool) t.join();

  std::ostringstream csv;
  csv << "suite,instance,n,m,p,algo,capacity,wall_ms\n";
  for (const BenchRow& row : rows)
    csv << row.suite << ',' << row.label << ',' << row.n << ',' << row.m
        << ',' << row.p << ',' << row.algo << ',' << row.capacity << ','
        << row.ms << '\n';

  if (a.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(a.out);
    if (!out) {
      std::cerr << "bench: cannot write " << a.out << '\n';
      return 2;
    }
    out << csv.str();
    std::cerr << "bench: wrote " << rows.size() << " rows to " << a.out
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum cut toolkit for low-rank hypergraphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance (.hgr)");
  gen->add_option("family", gen_args.family,
                  "random | planted | pairs | groups | complete")
      ->required();
  gen->add_option("--n", gen_args.n, "number of vertices");
  gen->add_option("--r", gen_args.r, "rank (max edge size)");
  gen->add_option("--m", gen_args.m, "number of edges (random)");
  gen->add_option("--s", gen_args.s, "planted side size (planted)");
  gen->add_option("--lam", gen_args.lam, "planted cut capacity (planted)");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("--out", gen_args.out, "output path (default: stdout)");

  MincutArgs mc_args;
  CLI::App* mincut = app.add_subcommand("mincut", "solve one instance");
  mincut->add_option("file", mc_args.file, ".hgr input")->required();
  mincut->add_option("--algo", mc_args.algo,
                     "auto | slow | cx | expdecomp | small | exhaustive")
      ->check(CLI::IsMember(
          {"auto", "slow", "cx", "expdecomp", "small", "exhaustive"}));
  mincut->add_option("--s", mc_args.s, "side-size bound (small, exhaustive)");
  CLI::Option* seed_opt =
      mincut->add_option("--seed", mc_args.seed, "random seed");
  mincut->add_option("--repeat", mc_args.repeat,
                     "repetition multiplier for randomized probes");
  mincut->add_flag("--force-large-branch", mc_args.force_large,
                   "skip the contraction-only shortcut in auto mode");
  mincut->add_flag("--json", mc_args.json, "emit a JSON result record");

  VerifyArgs v_args;
  CLI::App* verify =
      app.add_subcommand("verify", "cross-check solvers exhaustively");
  verify->add_option("file", v_args.file, ".hgr input")->required();
  verify->add_option("--max-n", v_args.max_n,
                     "largest vertex count to verify exhaustively");
  verify->add_option("--seed", v_args.seed, "random seed");

  DecomposeArgs d_args;
  CLI::App* decompose =
      app.add_subcommand("decompose", "expander decomposition as JSON");
  decompose->add_option("file", d_args.file, ".hgr input")->required();
  decompose->add_option("--phi", d_args.phi, "conductance threshold")
      ->required();
  decompose->add_option("--exact-limit", d_args.exact_limit,
                        "exhaustive certification cutoff");
  decompose->add_option("--seed", d_args.seed, "random seed");

  std::string report_file;
  CLI::App* report =
      app.add_subcommand("report", "structural min-cut report as JSON");
  report->add_option("file", report_file, ".hgr input")->required();

  BenchArgs b_args;
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", b_args.suite, "small | planted | scaling")
      ->required();
  bench->add_option("--out", b_args.out, "CSV path (default: stdout)");
  bench->add_option("--seed", b_args.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  mc_args.has_seed = seed_opt->count() > 0;

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (mincut->parsed()) return run_mincut(mc_args);
    if (verify->parsed()) return run_verify(v_args);
    if (decompose->parsed()) return run_decompose(d_args);
    if (report->parsed()) return run_report(report_file);
    if (bench->parsed()) return run_bench(b_args);
  } catch (const hypercut::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == hypercut::ErrorCode::ParseError ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
