#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pforge/polynomial.hpp"

namespace pforge {

using Json = nlohmann::ordered_json;

/// A generated problem together with what is known about its optimum.
struct ProblemInstance {
  std::string problem_type;  // INI section header: TP, WP, DCL, XORSAT, K_LOCAL
  MultilinearPolynomial polynomial;
  std::optional<double> ground_energy;
  // Number of ground states is 2^degeneracy_log2 (XORSAT only).
  std::optional<std::uint32_t> degeneracy_log2;
  Json metadata = Json::object();
};

/// Exact decimal representation of 2^exponent.
std::string pow2_decimal(std::uint32_t exponent);

/// Thrown when a generator cannot produce a valid instance, e.g. when a
/// rejection-sampling cap is exceeded.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pforge
