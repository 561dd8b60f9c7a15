#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pforge/dcl.hpp"
#include "pforge/ini.hpp"
#include "pforge/klocal.hpp"
#include "pforge/tile.hpp"
#include "pforge/wishart.hpp"
#include "pforge/xorsat.hpp"

namespace pforge {

enum class ProblemType { TP, WP, DCL, XORSAT, K_LOCAL };

/// INI section header of a problem type ("TP", "WP", "DCL", "XORSAT", "K_LOCAL").
std::string section_header(ProblemType type);

/// Case-insensitive lookup of a problem-type token.
std::optional<ProblemType> parse_problem_type(std::string_view token);

using GeneratorParams = std::variant<TileParams, WishartParams, DclParams, XorsatParams, KLocalPlan>;

struct GeneratorConfig {
  ProblemType type = ProblemType::TP;
  GeneratorParams params;
  // Properties of the problem-type section exactly as written in the file.
  std::map<std::string, std::string> raw;
  // K_LOCAL only: identifiers in plan order, repeats preserved.
  std::vector<std::string> subproblem_ids;
};

/// Reads and validates the section for `type`; other sections are ignored
/// except K_LOCAL subproblem sections. Throws ConfigError naming the section
/// and property at fault.
GeneratorConfig parse_config(std::string_view text, ProblemType type);

/// Output directory name, e.g. tile_planting_2D_L_32_p1_0.2_p2_0.5_p3_0.1.
std::string output_dir_name(const GeneratorConfig& config);

/// Generates one instance from a validated config.
ProblemInstance generate_instance(const GeneratorConfig& config, RngStream& rng);

}  // namespace pforge
