#include "pforge/instance_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pforge {

std::string format_number(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot format a non-finite coefficient");
  if (value == 0.0) return "0";
  char buf[64];
  if (std::nearbyint(value) == value && std::abs(value) <= 9007199254740992.0) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(value));
    return std::string(buf, ptr);
  }
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::optional<double> parse_number(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return out;
}

ProblemInstance to_output_form(ProblemInstance instance, OutputForm form) {
  if (form == OutputForm::ising || instance.polynomial.domain() == Domain::boolean)
    return instance;
  auto [hobo, constant] = split_constant(to_boolean(instance.polynomial));
  instance.polynomial = std::move(hobo);
  if (instance.ground_energy) instance.ground_energy = *instance.ground_energy - constant;
  instance.metadata["hobo_constant_offset"] = constant;
  return instance;
}

void write_instance_txt(const ProblemInstance& instance, std::ostream& out) {
  if (instance.polynomial.constant() != 0.0)
    throw std::invalid_argument("split the constant term off before writing");
  for (const auto& [indices, c] : instance.polynomial.terms()) {
    for (Index i : indices) out << i << ' ';
    out << format_number(c) << '\n';
  }
  if (!out) throw std::runtime_error("failed writing instance text");
}

MultilinearPolynomial read_instance_txt(std::istream& in, Domain domain,
                                        std::optional<std::size_t> num_variables) {
  std::vector<std::pair<IndexSet, double>> terms;
  std::size_t max_index_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() < 2)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected indices and a coefficient");
    IndexSet indices;
    for (std::size_t t = 0; t + 1 < tokens.size(); ++t) {
      Index idx = 0;
      const auto& tok = tokens[t];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), idx);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad index '" + tok + "'");
      indices.push_back(idx);
      max_index_plus_one = std::max<std::size_t>(max_index_plus_one, std::size_t{idx} + 1);
    }
    const auto c = parse_number(tokens.back());
    if (!c) throw std::runtime_error("line " + std::to_string(line_no) + ": bad coefficient '" + tokens.back() + "'");
    terms.emplace_back(std::move(indices), *c);
  }
  const std::size_t n = num_variables.value_or(max_index_plus_one);
  if (n < max_index_plus_one)
    throw std::runtime_error("instance references variables beyond the declared count");
  MultilinearPolynomial p(n, domain);
  for (auto& [indices, c] : terms) p.add_term(std::move(indices), c);
  return p;
}

namespace {

Json coefficient_json(double c) {
  if (std::nearbyint(c) == c && std::abs(c) <= 9007199254740992.0)
    return Json(static_cast<std::int64_t>(c));
  return Json(c);
}

}  // namespace

Json instance_to_json(const ProblemInstance& instance) {
  if (instance.polynomial.constant() != 0.0)
    throw std::invalid_argument("split the constant term off before writing");
  Json doc = Json::object();
  doc["problem_type"] = instance.problem_type;
  doc["format"] = to_string(instance.polynomial.domain());
  doc["num_variables"] = instance.polynomial.num_variables();
  Json terms = Json::array();
  for (const auto& [indices, c] : instance.polynomial.terms()) {
    Json term = Json::object();
    term["indices"] = indices;
    term["coefficient"] = coefficient_json(c);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  Json metadata = instance.metadata;
  if (instance.ground_energy) metadata["ground_energy"] = coefficient_json(*instance.ground_energy);
  if (instance.degeneracy_log2) {
    metadata["degeneracy_log2"] = *instance.degeneracy_log2;
    metadata["degeneracy"] = pow2_decimal(*instance.degeneracy_log2);
  }
  doc["metadata"] = std::move(metadata);
  return doc;
}

void write_instance_json(const ProblemInstance& instance, std::ostream& out) {
  out << instance_to_json(instance).dump() << '\n';
  if (!out) throw std::runtime_error("failed writing instance JSON");
}

ProblemInstance read_instance_json(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid instance JSON: ") + e.what());
  }
  try {
    ProblemInstance out;
    out.problem_type = doc.at("problem_type").get<std::string>();
    const std::string format = doc.at("format").get<std::string>();
    if (format != "ising" && format != "hobo")
      throw std::runtime_error("unknown instance format '" + format + "'");
    const Domain domain = format == "ising" ? Domain::spin : Domain::boolean;
    out.polynomial = MultilinearPolynomial(doc.at("num_variables").get<std::size_t>(), domain);
    for (const auto& term : doc.at("terms")) {
      out.polynomial.add_term(term.at("indices").get<IndexSet>(),
                              term.at("coefficient").get<double>());
    }
    out.metadata = doc.value("metadata", Json::object());
    if (out.metadata.contains("ground_energy"))
      out.ground_energy = out.metadata["ground_energy"].get<double>();
    if (out.metadata.contains("degeneracy_log2"))
      out.degeneracy_log2 = out.metadata["degeneracy_log2"].get<std::uint32_t>();
    out.metadata.erase("ground_energy");
    out.metadata.erase("degeneracy_log2");
    out.metadata.erase("degeneracy");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed instance JSON: ") + e.what());
  }
}

void write_gs_energies(std::span<const InstanceFileRecord> records, std::ostream& out) {
  for (const auto& r : records) {
    if (!r.ground_energy) continue;
    out << r.filename << ' ' << format_number(*r.ground_energy);
    if (r.degeneracy_log2) out << ' ' << pow2_decimal(*r.degeneracy_log2);
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing gs_energies");
}

}  // namespace pforge
