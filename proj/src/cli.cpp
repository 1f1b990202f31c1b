#include "hlf/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlf/circuit.hpp"
#include "hlf/cla.hpp"
#include "hlf/enumerate.hpp"
#include "hlf/error.hpp"
#include "hlf/grid_image.hpp"
#include "hlf/instance.hpp"
#include "hlf/oracle.hpp"
#include "hlf/timing.hpp"

namespace hlf::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string instance;
  std::string out_path;
  std::string mode = "text";
  bool count_only = false;
  std::size_t chunks = 1;
  std::optional<std::size_t> cap;
  double tol = 1e-9;
  std::string format = "p1";
  std::size_t repeat = 1;

  // gen
  std::optional<std::size_t> side;
  std::optional<std::size_t> general_n;
  double edge_probability = 0.5;
  std::uint64_t seed = 1;

  // ratio
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
  std::optional<double> n;
  std::optional<std::size_t> r;
  std::size_t d = 1;
  std::optional<double> dt;
  double tau = 0.0;
};

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, bool binary) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
      if (!file_) {
        throw ValidationError("cannot open output file '" + path + "'");
      }
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::size_t effective_cap(const Options& o) { return o.cap ? *o.cap : rank_cap_from_env(); }

HlfInstance require_instance(const Options& o) {
  if (o.instance.empty()) {
    throw ValidationError("an instance is required (file path or grid:N:b)");
  }
  return load_instance(o.instance);
}

void add_instance_option(CLI::App* cmd, Options& o) {
  cmd->add_option("source", o.instance, "Instance file or grid:N:b shorthand");
  cmd->add_option("--instance", o.instance, "Instance file or grid:N:b shorthand");
}

int cmd_gen(const Options& o, std::ostream& out) {
  HlfInstance inst = [&] {
    std::mt19937_64 rng(o.seed);
    if (!o.instance.empty()) {
      return load_instance(o.instance);
    }
    if (o.side) {
      return random_grid_instance(*o.side, rng);
    }
    if (o.general_n) {
      if (*o.general_n == 0) {
        throw ValidationError("--n must be positive");
      }
      return random_general_instance(*o.general_n, o.edge_probability, rng);
    }
    throw ValidationError("gen needs an instance, --N <side> or --n <size>");
  }();
  Sink sink(o.out_path, out, false);
  *sink << serialize_instance(inst);
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const HlfInstance inst = require_instance(o);
  Sink sink(o.out_path, out, false);
  *sink << cla_to_json(run_cla(inst)) << "\n";
  return kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const HlfInstance inst = require_instance(o);
  const ClaSummary cla = run_cla(inst);
  const std::string mode = o.count_only ? "count-only" : o.mode;
  if (mode == "count-only") {
    // the count is 2^r; the cap still applies so the command means the same thing
    const SolutionEnumerator e(inst, cla, effective_cap(o));
    Sink sink(o.out_path, out, false);
    *sink << e.solution_count() << "\n";
    return kSuccess;
  }
  const SolutionEnumerator e(inst, cla, effective_cap(o));
  if (mode == "checksum") {
    const SolutionDigest d = e.parallel_digest(o.chunks);
    json doc{{"count", d.count}, {"digest", d.hex()}, {"r", cla.rank}, {"chunks", o.chunks}};
    Sink sink(o.out_path, out, false);
    *sink << doc.dump() << "\n";
    return kSuccess;
  }
  const bool binary = mode == "binary";
  if (!binary && mode != "text") {
    throw ValidationError("unknown --mode '" + mode + "' (text, binary, checksum, count-only)");
  }
  const auto ranges = partition_range(e.solution_count(), o.chunks);
  std::vector<std::string> buffers(ranges.size());
  const auto render = [&](std::size_t k) {
    std::string& buf = buffers[k];
    e.for_each(ranges[k].first, ranges[k].second, [&](std::uint64_t, const BitVector& z) {
      if (binary) {
        // little-endian words, bit 1 = least significant bit of word 0
        for (const auto w : z.words()) {
          for (int byte = 0; byte < 8; ++byte) {
            buf += static_cast<char>((w >> (8 * byte)) & 0xffu);
          }
        }
      } else {
        buf += z.to_string();
        buf += '\n';
      }
    });
  };
  if (ranges.size() > 1) {
    std::vector<std::jthread> workers;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
      workers.emplace_back(render, k);
    }
  } else if (!ranges.empty()) {
    render(0);
  }
  Sink sink(o.out_path, out, binary);
  for (const auto& buf : buffers) {
    (*sink).write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const HlfInstance inst = require_instance(o);
  const VerificationReport report = verify_instance(inst, o.tol);
  Sink sink(o.out_path, out, false);
  *sink << report.to_json() << "\n";
  return report.agrees ? kSuccess : kOracleDisagreement;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const HlfInstance inst = require_instance(o);
  if (o.format != "p1" && o.format != "p4") {
    throw ValidationError("unknown --format '" + o.format + "' (p1, p4)");
  }
  const auto solutions = enumerate_solutions(inst, run_cla(inst), effective_cap(o));
  const GridImage image = render_distribution_grid(std::span<const BitVector>(solutions), inst.size());
  Sink sink(o.out_path, out, o.format == "p4");
  *sink << write_pbm(image, o.format == "p1");
  return kSuccess;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const HlfInstance inst = require_instance(o);
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const ClaSummary cla = run_cla(inst);
  const auto t1 = clock::now();
  const SolutionEnumerator e(inst, cla, effective_cap(o));
  SolutionDigest digest;
  double best = 0.0;
  for (std::size_t rep = 0; rep < std::max<std::size_t>(o.repeat, 1); ++rep) {
    const auto start = clock::now();
    digest = e.parallel_digest(o.chunks);
    const double seconds = std::chrono::duration<double>(clock::now() - start).count();
    best = rep == 0 ? seconds : std::min(best, seconds);
  }
  json doc{{"n", inst.size()},
           {"r", cla.rank},
           {"chunks", o.chunks},
           {"solutions", digest.count},
           {"cla_seconds", std::chrono::duration<double>(t1 - t0).count()},
           {"seconds", best},
           {"solutions_per_second", best > 0.0 ? static_cast<double>(digest.count) / best : 0.0},
           {"checksum", digest.hex()}};
  Sink sink(o.out_path, out, false);
  *sink << doc.dump() << "\n";
  return kSuccess;
}

int cmd_ratio(const Options& o, std::ostream& out) {
  json doc;
  if (o.n) {
    doc["n"] = *o.n;
    doc["r0"] = r0_bound(*o.n);
    if (o.r) {
      TimingParams p;
      p.c1 = o.c1;
      p.c2 = o.c2;
      p.c3 = o.c3;
      p.n = static_cast<std::size_t>(*o.n);
      p.r = *o.r;
      p.d = o.d;
      doc["ratio"] = runtime_ratio(p);
    }
  }
  if (o.dt) {
    if (!o.r) {
      throw ValidationError("--dt needs --r");
    }
    doc["fpga_seconds"] = fpga_time_model(*o.dt, o.tau, *o.r);
  }
  if (doc.empty()) {
    throw ValidationError("ratio needs --n (and --r) or --dt with --r");
  }
  Sink sink(o.out_path, out, false);
  *sink << doc.dump() << "\n";
  return kSuccess;
}

void print_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Classical solver, enumerator and verifier for hidden linear function instances", "hlf"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Write an instance document");
  add_instance_option(gen, o);
  gen->add_option("--N", o.side, "Grid side length for a random-b grid instance");
  gen->add_option("--n", o.general_n, "Size of a random general symmetric instance");
  gen->add_option("--p", o.edge_probability, "Edge probability for --n")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--out", o.out_path, "Output path");

  auto* solve = app.add_subcommand("solve", "Print rank, pivots, kernel basis and z_a as JSON");
  add_instance_option(solve, o);
  solve->add_option("--out", o.out_path, "Output path");

  auto* enumerate = app.add_subcommand("enumerate", "Stream every solution");
  add_instance_option(enumerate, o);
  enumerate->add_option("--mode", o.mode, "text | binary | checksum | count-only");
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of solutions");
  enumerate->add_option("--chunks", o.chunks, "Parallel enumeration chunks")->check(CLI::PositiveNumber);
  enumerate->add_option("--cap", o.cap, "Maximum rank to enumerate (default 34 or HLF_MAX_R)");
  enumerate->add_option("--out", o.out_path, "Output path");

  auto* verify = app.add_subcommand("verify", "Cross-check enumeration against the independent oracles");
  add_instance_option(verify, o);
  verify->add_option("--tol", o.tol, "Amplitude tolerance");
  verify->add_option("--out", o.out_path, "Output path");

  auto* plot = app.add_subcommand("plot", "Render the solution set as a portable bitmap");
  add_instance_option(plot, o);
  plot->add_option("--format", o.format, "p1 (plain) or p4 (packed)");
  plot->add_option("--cap", o.cap, "Maximum rank to enumerate");
  plot->add_option("--out", o.out_path, "Output path");

  auto* bench = app.add_subcommand("bench", "Time checksum-mode enumeration");
  add_instance_option(bench, o);
  bench->add_option("--chunks", o.chunks, "Parallel enumeration chunks")->check(CLI::PositiveNumber);
  bench->add_option("--repeat", o.repeat, "Repetitions; best time is reported");
  bench->add_option("--cap", o.cap, "Maximum rank to enumerate");
  bench->add_option("--out", o.out_path, "Output path");

  auto* ratio = app.add_subcommand("ratio", "Evaluate the analytic timing models");
  ratio->add_option("--c1", o.c1, "Linear-algebra stage coefficient")->check(CLI::PositiveNumber);
  ratio->add_option("--c2", o.c2, "Enumeration coefficient")->check(CLI::PositiveNumber);
  ratio->add_option("--c3", o.c3, "Quantum device coefficient")->check(CLI::PositiveNumber);
  ratio->add_option("--n", o.n, "Problem size");
  ratio->add_option("--r", o.r, "Binary rank");
  ratio->add_option("--d", o.d, "Circuit depth");
  ratio->add_option("--dt", o.dt, "Clock period in seconds");
  ratio->add_option("--tau", o.tau, "Pipeline delay in cycles");
  ratio->add_option("--out", o.out_path, "Output path");

  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) {
    storage.emplace_back("hlf");
  }
  std::vector<char*> argv;
  for (auto& s : storage) {
    argv.push_back(s.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return kValidationError;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(o, out);
    }
    if (solve->parsed()) {
      return cmd_solve(o, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(o, out);
    }
    if (verify->parsed()) {
      return cmd_verify(o, out);
    }
    if (plot->parsed()) {
      return cmd_plot(o, out);
    }
    if (bench->parsed()) {
      return cmd_bench(o, out);
    }
    return cmd_ratio(o, out);
  } catch (const ValidationError& e) {
    print_error(err, "validation", e.what());
    return kValidationError;
  } catch (const std::domain_error& e) {
    print_error(err, "validation", e.what());
    return kValidationError;
  } catch (const ConsistencyError& e) {
    print_error(err, "consistency", e.what());
    return kOracleDisagreement;
  } catch (const ResourceCapError& e) {
    print_error(err, "resource_cap", e.what());
    return kResourceCap;
  }
}

}  // namespace hlf::cli
