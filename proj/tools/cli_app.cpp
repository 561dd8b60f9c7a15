#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "pforge/config.hpp"
#include "pforge/instance_io.hpp"
#include "pforge/oracle.hpp"

namespace pforge::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kToolName = "planted-forge";
constexpr const char* kVersion = "0.1.0";

struct WriteFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerateOptions {
  std::string problem_type;
  std::string config_path;
  std::size_t num_instances = 10;
  std::string output_format = "ising";
  std::string file_format = "txt";
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::string output_root = ".";
};

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ rd();
}

fs::path unique_directory(const fs::path& root, const std::string& name) {
  fs::path candidate = root / name;
  for (int suffix = 1; fs::exists(candidate); ++suffix)
    candidate = root / (name + "_" + std::to_string(suffix));
  return candidate;
}

std::string instance_filename(std::size_t index, std::size_t count, const std::string& ext) {
  const std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string digits = std::to_string(index);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "sample_" + digits + "." + ext;
}

int generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  const auto type = parse_problem_type(opts.problem_type);
  if (!type) {
    err << kToolName << ": unknown problem type '" << opts.problem_type
        << "' (expected TP, WP, DCL, XORSAT or K_LOCAL)\n";
    return kUnknownProblemType;
  }

  std::ifstream config_file(opts.config_path, std::ios::binary);
  if (!config_file) {
    err << kToolName << ": cannot read config file '" << opts.config_path << "'\n";
    return kConfigError;
  }
  std::ostringstream text;
  text << config_file.rdbuf();

  GeneratorConfig config;
  try {
    config = parse_config(text.str(), *type);
  } catch (const ConfigError& e) {
    err << kToolName << ": " << opts.config_path << ": " << e.what() << '\n';
    return kConfigError;
  }

  const OutputForm form = opts.output_format == "hobo" ? OutputForm::hobo : OutputForm::ising;
  const FileFormat file_format = opts.file_format == "json" ? FileFormat::json : FileFormat::txt;
  const std::uint64_t seed = opts.seed.value_or(entropy_seed());
  err << kToolName << ": seed " << seed << '\n';

  const std::size_t n = opts.num_instances;
  std::vector<ProblemInstance> instances(n);
  std::vector<std::exception_ptr> failures(n);
  std::vector<InstanceFileRecord> records(n);

  fs::path dir;
  try {
    fs::create_directories(opts.output_root);
    dir = unique_directory(opts.output_root, output_dir_name(config));
    fs::create_directory(dir);
  } catch (const fs::filesystem_error& e) {
    err << kToolName << ": cannot create output directory: " << e.what() << '\n';
    return kWriteError;
  }

  // Instance i always draws from stream (seed, i), so content does not depend
  // on the worker count or scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        RngStream rng(seed, i);
        ProblemInstance inst = to_output_form(generate_instance(config, rng), form);
        const std::string filename =
            instance_filename(i, n, file_format == FileFormat::json ? "json" : "txt");
        inst.metadata["manifest"] = {{"tool", kToolName},
                                     {"version", kVersion},
                                     {"seed", seed},
                                     {"stream", i}};
        std::ofstream file(dir / filename, std::ios::binary);
        if (!file) throw WriteFailure("cannot open " + (dir / filename).string());
        try {
          if (file_format == FileFormat::json)
            write_instance_json(inst, file);
          else
            write_instance_txt(inst, file);
        } catch (const std::runtime_error& e) {
          throw WriteFailure(e.what());
        }
        records[i] = {filename, inst.ground_energy, inst.degeneracy_log2};
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const WriteFailure& e) {
      err << kToolName << ": write failed: " << e.what() << '\n';
      return kWriteError;
    } catch (const std::exception& e) {
      err << kToolName << ": instance " << i << ": generation failed: " << e.what() << '\n';
      return kGenerationError;
    }
  }

  if (config.type != ProblemType::DCL) {
    std::ofstream gs(dir / "gs_energies.txt", std::ios::binary);
    try {
      if (!gs) throw std::runtime_error("cannot open gs_energies.txt");
      write_gs_energies(records, gs);
    } catch (const std::exception& e) {
      err << kToolName << ": write failed: " << e.what() << '\n';
      return kWriteError;
    }
  }
  out << dir.string() << '\n';
  return kOk;
}

struct VerifyOptions {
  std::string path;
  double energy = 0.0;
  std::optional<std::string> degeneracy;
  std::string format = "ising";
  unsigned workers = 0;
};

int verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  MultilinearPolynomial p;
  try {
    std::ifstream in(opts.path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file");
    if (fs::path(opts.path).extension() == ".json") {
      p = read_instance_json(in).polynomial;
    } else {
      p = read_instance_txt(in, opts.format == "hobo" ? Domain::boolean : Domain::spin);
    }
  } catch (const std::exception& e) {
    err << kToolName << " verify: " << opts.path << ": " << e.what() << '\n';
    return kVerifyParseError;
  }
  if (p.num_variables() > kMaxOracleVariables) {
    err << kToolName << " verify: " << p.num_variables() << " variables exceed the oracle cap of "
        << kMaxOracleVariables << '\n';
    return kVerifyTooLarge;
  }
  const OracleReport report = brute_force_ground(p, opts.workers);
  out << "min_energy " << format_number(report.min_energy) << '\n'
      << "degeneracy " << report.degeneracy << '\n';
  if (std::abs(report.min_energy - opts.energy) > kOracleTieTolerance) {
    err << kToolName << " verify: energy mismatch: oracle " << format_number(report.min_energy)
        << ", expected " << format_number(opts.energy) << '\n';
    return kVerifyMismatch;
  }
  if (opts.degeneracy && *opts.degeneracy != std::to_string(report.degeneracy)) {
    err << kToolName << " verify: degeneracy mismatch: oracle " << report.degeneracy
        << ", expected " << *opts.degeneracy << '\n';
    return kVerifyMismatch;
  }
  return kOk;
}

int parse_and_run(CLI::App& app, std::vector<std::string> args, std::ostream& out,
                  std::ostream& err, const std::function<int()>& body) {
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  return body();
}

int run_verify(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Check an instance's ground state by exhaustive enumeration (N <= 24).",
               std::string(kToolName) + " verify"};
  VerifyOptions opts;
  app.add_option("file", opts.path, "Instance file (.txt or .json)")->required();
  app.add_option("--energy", opts.energy, "Expected ground-state energy")->required();
  app.add_option("--degeneracy", opts.degeneracy, "Expected number of ground states");
  app.add_option("--format", opts.format, "Variable domain of a .txt instance")
      ->check(CLI::IsMember({"ising", "hobo"}))
      ->capture_default_str();
  app.add_option("-j,--workers", opts.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
  return parse_and_run(app, std::move(args), out, err, [&] { return verify(opts, out, err); });
}

int run_generate(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generate binary optimization instances with planted solutions.", kToolName};
  app.footer(
      "Problem types: TP (tile planting), WP (Wishart planting), DCL (deceptive cluster\n"
      "loops), XORSAT (equation planting), K_LOCAL (k-local planting).\n"
      "Use '" + std::string(kToolName) + " verify --help' to check instances.");
  GenerateOptions opts;
  app.add_option("problem_type", opts.problem_type, "TP, WP, DCL, XORSAT or K_LOCAL")->required();
  app.add_option("config_file", opts.config_path, "INI configuration file")->required();
  app.add_option("-n", opts.num_instances, "Number of instances to generate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("-o", opts.output_format, "Output form: ising or hobo")
      ->check(CLI::IsMember({"ising", "hobo"}))
      ->capture_default_str();
  app.add_option("-f", opts.file_format, "File format: txt or json")
      ->check(CLI::IsMember({"txt", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for reproducible output (default: random)");
  app.add_option("-j,--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output-root", opts.output_root, "Directory in which to create the output directory")
      ->capture_default_str();
  return parse_and_run(app, std::move(args), out, err, [&] { return generate(opts, out, err); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args.front() == "verify")
    return run_verify({args.begin() + 1, args.end()}, out, err);
  return run_generate(args, out, err);
}

}  // namespace pforge::cli
