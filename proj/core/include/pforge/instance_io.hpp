#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "pforge/instance.hpp"

namespace pforge {

enum class OutputForm { ising, hobo };
enum class FileFormat { txt, json };

/// Integers (|x| <= 2^53) print without a decimal point; everything else
/// with 17 significant digits, which round-trips a double exactly.
std::string format_number(double value);

/// Strict parse of a full string as a double; std::nullopt on junk.
std::optional<double> parse_number(std::string_view text);

/// For hobo output the Ising polynomial is rewritten with s = 1 - 2x, its new
/// constant split off, and the certificate shifted to match the emitted file.
ProblemInstance to_output_form(ProblemInstance instance, OutputForm form);

/// One line per term, "<i_1> ... <i_k> <coefficient>", in (arity, indices)
/// order. The polynomial must have no constant term.
void write_instance_txt(const ProblemInstance& instance, std::ostream& out);

/// Reads the text format. Without an explicit variable count, N is one more
/// than the largest index seen.
MultilinearPolynomial read_instance_txt(std::istream& in, Domain domain,
                                        std::optional<std::size_t> num_variables = std::nullopt);

/// Canonical single-line JSON document terminated by a newline:
/// {"problem_type", "format", "num_variables", "terms", "metadata"}.
void write_instance_json(const ProblemInstance& instance, std::ostream& out);
Json instance_to_json(const ProblemInstance& instance);
ProblemInstance read_instance_json(std::istream& in);

/// One gs_energies.txt line.
struct InstanceFileRecord {
  std::string filename;
  std::optional<double> ground_energy;
  std::optional<std::uint32_t> degeneracy_log2;
};

/// "<filename> <energy>[ <degeneracy>]" per record; records without an
/// energy are skipped.
void write_gs_energies(std::span<const InstanceFileRecord> records, std::ostream& out);

}  // namespace pforge
