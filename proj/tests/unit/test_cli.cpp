#include <doctest.h>

#include <stdexcept>

#include <cstdlib>
#include <sstream>

#include "../../tools/cli_app.hpp"
#include "fs_support.hpp"
#include "pforge/instance_io.hpp"

using namespace pforge;
using pforge::testing::TempDir;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path output_dir(const Result& r) {
  REQUIRE(r.code == 0);
  std::string line = r.out.substr(0, r.out.find('\n'));
  return fs::path(line);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::size_t columns(const std::string& line) {
  std::istringstream in(line);
  std::size_t n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

const char* kTp = "[TP]\ndimension = 2\nL = 4\np1 = 0.2\np2 = 0.5\np3 = 0.1\ngauge_transform = yes\n";
const char* kDcl = "[DCL]\nLx = 4\nLy = 4\nalpha = 0.2\nR = 2\nlambda = 2\n";
const char* kXorsat = "[XORSAT]\nk = 3\nN = 12\n";

}  // namespace

TEST_CASE("TP hobo json batch") {
  TempDir tmp;
  const auto cfg = tmp.path() / "params.in";
  testing::write_file(cfg, kTp);
  const auto r = run({"TP", cfg.string(), "-n", "2", "-o", "hobo", "-f", "json", "--seed", "7",
                      "--output-root", tmp.path().string()});
  const auto dir = output_dir(r);
  CHECK(dir.filename() == "tile_planting_2D_L_4_p1_0.2_p2_0.5_p3_0.1");
  CHECK(r.err.find("seed 7") != std::string::npos);
  CHECK(fs::exists(dir / "sample_0.json"));
  CHECK(fs::exists(dir / "sample_1.json"));
  const auto gs = lines(testing::read_file(dir / "gs_energies.txt"));
  REQUIRE(gs.size() == 2);
  for (const auto& l : gs) CHECK(columns(l) == 2);

  std::ifstream in(dir / "sample_0.json");
  const auto inst = read_instance_json(in);
  CHECK(inst.polynomial.domain() == Domain::boolean);
  const auto doc = instance_to_json(inst);
  CHECK(doc["format"] == "hobo");
  CHECK(doc["metadata"]["manifest"]["seed"] == 7);
  CHECK(doc["metadata"]["manifest"]["stream"] == 0);

  // Verify the first file against its gs_energies entry.
  const std::string energy = gs[0].substr(gs[0].find(' ') + 1);
  CHECK(run({"verify", (dir / "sample_0.json").string(), "--energy", energy}).code == 0);
}

TEST_CASE("defaults: 10 txt ising instances, existing directory is not overwritten") {
  TempDir tmp;
  const auto cfg = tmp.path() / "params.in";
  testing::write_file(cfg, kTp);
  const auto first = output_dir(run({"TP", cfg.string(), "--output-root", tmp.path().string()}));
  const auto files = testing::snapshot(first);
  CHECK(files.size() == 11);
  CHECK(files.count("sample_0.txt") == 1);
  CHECK(files.count("sample_9.txt") == 1);
  const auto second = output_dir(run({"TP", cfg.string(), "--output-root", tmp.path().string()}));
  CHECK(second.filename() == first.filename().string() + "_1");

  // Text instances are Ising and verify against gs_energies.
  const auto gs = lines(files.at("gs_energies.txt"));
  const std::string energy = gs[3].substr(gs[3].find(' ') + 1);
  CHECK(gs[3].rfind("sample_3.txt ", 0) == 0);
  CHECK(run({"verify", (first / "sample_3.txt").string(), "--energy", energy}).code == 0);
}

TEST_CASE("DCL batch has no gs_energies") {
  TempDir tmp;
  const auto cfg = tmp.path() / "params.in";
  testing::write_file(cfg, kDcl);
  const auto dir = output_dir(run({"dcl", cfg.string(), "--seed", "1", "--output-root", tmp.path().string()}));
  const auto files = testing::snapshot(dir);
  CHECK(files.size() == 10);
  CHECK(files.count("gs_energies.txt") == 0);
}

TEST_CASE("seeded runs are byte-identical across runs and worker counts") {
  TempDir a, b, c;
  const auto cfg = a.path() / "params.in";
  testing::write_file(cfg, kXorsat);
  const auto d1 = output_dir(run({"XORSAT", cfg.string(), "-n", "12", "-f", "json", "--seed", "42",
                                  "--output-root", (a.path() / "out").string()}));
  const auto d2 = output_dir(run({"XORSAT", cfg.string(), "-n", "12", "-f", "json", "--seed", "42",
                                  "--output-root", b.path().string()}));
  const auto d3 = output_dir(run({"XORSAT", cfg.string(), "-n", "12", "-f", "json", "--seed", "42",
                                  "-j", "4", "--output-root", c.path().string()}));
  const auto s1 = testing::snapshot(d1);
  CHECK(s1 == testing::snapshot(d2));
  CHECK(s1 == testing::snapshot(d3));
  CHECK(s1.count("sample_00.json") == 1);
  const auto d4 = output_dir(run({"XORSAT", cfg.string(), "-n", "12", "-f", "json", "--seed", "43",
                                  "--output-root", c.path().string()}));
  CHECK(testing::snapshot(d4) != s1);
}

TEST_CASE("XORSAT gs_energies has a degeneracy column that verify accepts") {
  TempDir tmp;
  const auto cfg = tmp.path() / "params.in";
  testing::write_file(cfg, kXorsat);
  const auto dir = output_dir(run({"XORSAT", cfg.string(), "-n", "3", "--seed", "5",
                                   "--output-root", tmp.path().string()}));
  const auto gs = lines(testing::read_file(dir / "gs_energies.txt"));
  REQUIRE(gs.size() == 3);
  for (const auto& l : gs) {
    CHECK(columns(l) == 3);
    std::istringstream in(l);
    std::string file, energy, degeneracy;
    in >> file >> energy >> degeneracy;
    CHECK(energy == "-12");
    CHECK(run({"verify", (dir / file).string(), "--energy", energy, "--degeneracy", degeneracy})
              .code == 0);
    CHECK(run({"verify", (dir / file).string(), "--energy", energy, "--degeneracy", "3"}).code ==
          cli::kVerifyMismatch);
  }
}

TEST_CASE("verify rejects a corrupted instance") {
  TempDir tmp;
  const auto file = tmp.path() / "bad.txt";
  testing::write_file(file, "0 1 -1\n1 2 -1\n0 2 -1\n");
  CHECK(run({"verify", file.string(), "--energy", "-3"}).code == 0);
  testing::write_file(file, "0 1 -1\n1 2 -1\n0 2 5\n");
  CHECK(run({"verify", file.string(), "--energy", "-3"}).code == cli::kVerifyMismatch);
  testing::write_file(file, "0 1 x\n");
  CHECK(run({"verify", file.string(), "--energy", "-3"}).code == cli::kVerifyParseError);
  CHECK(run({"verify", (tmp.path() / "missing.txt").string(), "--energy", "0"}).code ==
        cli::kVerifyParseError);
  testing::write_file(file, "0 30 -1\n");
  CHECK(run({"verify", file.string(), "--energy", "-1"}).code == cli::kVerifyTooLarge);
}

TEST_CASE("error statuses") {
  TempDir tmp;
  const auto cfg = tmp.path() / "params.in";
  testing::write_file(cfg, kTp);
  CHECK(run({"FCL", cfg.string()}).code == cli::kUnknownProblemType);
  CHECK(run({"WP", cfg.string()}).code == cli::kConfigError);
  CHECK(run({"TP", (tmp.path() / "none.in").string()}).code == cli::kConfigError);
  CHECK(run({"TP", cfg.string(), "-o", "qubo"}).code == cli::kUsage);
  CHECK(run({"TP", cfg.string(), "-f", "csv"}).code == cli::kUsage);
  CHECK(run({"TP"}).code == cli::kUsage);
  testing::write_file(cfg, "[DCL]\nLx = 2\nLy = 2\nalpha = 10\nR = 1\nlambda = 1\n");
  CHECK(run({"DCL", cfg.string(), "-n", "1", "--output-root", tmp.path().string()}).code ==
        cli::kGenerationError);
}

TEST_CASE("help documents every flag") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  const std::string text = r.out + r.err;
  for (const char* flag : {"-n", "-o", "-f", "--seed", "problem_type", "config_file"})
    CHECK(text.find(flag) != std::string::npos);
  CHECK(std::system((std::string(PFORGE_CLI_BINARY) + " --help > /dev/null").c_str()) == 0);
}
