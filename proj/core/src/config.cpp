#include "pforge/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

namespace pforge {

namespace {

class SectionReader {
 public:
  SectionReader(const IniDocument& doc, std::string name) : doc_(doc), name_(std::move(name)) {
    if (!doc.has_section(name_)) throw ConfigError(name_, "", "missing section");
  }

  const std::string& name() const { return name_; }

  bool has(const std::string& key) const { return doc_.get(name_, key).has_value(); }

  std::string text(const std::string& key) const {
    auto v = doc_.get(name_, key);
    if (!v) throw ConfigError(name_, key, "missing property");
    if (v->empty()) throw ConfigError(name_, key, "empty value");
    return *v;
  }

  long long integer(const std::string& key) const {
    const std::string v = text(key);
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw ConfigError(name_, key, "expected an integer, got '" + v + "'");
    return out;
  }

  double real(const std::string& key) const {
    const std::string v = text(key);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
      throw ConfigError(name_, key, "expected a number, got '" + v + "'");
    return out;
  }

  bool yes_no(const std::string& key) const {
    const std::string v = text(key);
    if (v == "yes") return true;
    if (v == "no") return false;
    throw ConfigError(name_, key, "allowed values are 'yes' and 'no', got '" + v + "'");
  }

  double probability(const std::string& key) const {
    const double p = real(key);
    if (p < 0.0 || p > 1.0) throw ConfigError(name_, key, "must lie in [0, 1]");
    return p;
  }

  ConfigError error(const std::string& key, const std::string& message) const {
    return ConfigError(name_, key, message);
  }

 private:
  const IniDocument& doc_;
  std::string name_;
};

// Probability sums may carry one rounding error from decimal input.
constexpr double kSumSlack = 1e-12;

TileParams read_tile(const SectionReader& s) {
  TileParams tp;
  const long long dim = s.integer("dimension");
  if (dim != 2 && dim != 3) throw s.error("dimension", "must be 2 or 3");
  tp.dimension = static_cast<int>(dim);
  const long long L = s.integer("L");
  if (L <= 2 || L % 2 != 0) throw s.error("L", "must be an even integer greater than two");
  tp.L = static_cast<std::size_t>(L);
  if (tp.dimension == 2) {
    tp.p = {s.probability("p1"), s.probability("p2"), s.probability("p3")};
    if (tp.p[0] + tp.p[1] + tp.p[2] > 1.0 + kSumSlack)
      throw s.error("p3", "p1 + p2 + p3 must not exceed 1");
  } else {
    tp.pf = {s.probability("pF22"), s.probability("pF42")};
    if (tp.pf[0] + tp.pf[1] > 1.0 + kSumSlack)
      throw s.error("pF42", "pF22 + pF42 must not exceed 1");
  }
  tp.gauge_transform = s.yes_no("gauge_transform");
  return tp;
}

WishartParams read_wishart(const SectionReader& s) {
  WishartParams wp;
  const long long n = s.integer("N");
  if (n < 3) throw s.error("N", "must be an integer of at least 3");
  wp.N = static_cast<std::size_t>(n);
  wp.alpha = s.real("alpha");
  if (!(wp.alpha > 0.0)) throw s.error("alpha", "must be positive");
  wp.discretize_couplers = s.yes_no("discretize_couplers");
  wp.gauge_transform = s.yes_no("gauge_transform");
  try {
    wp.validate();
  } catch (const std::invalid_argument& e) {
    throw s.error("N", e.what());
  }
  return wp;
}

DclParams read_dcl(const SectionReader& s) {
  DclParams p;
  for (const char* key : {"Lx", "Ly"}) {
    const long long v = s.integer(key);
    if (v < 1 || v > static_cast<long long>(kMaxChimeraSize))
      throw s.error(key, "must be an integer in [1, 16]");
    (std::string(key) == "Lx" ? p.Lx : p.Ly) = static_cast<std::size_t>(v);
  }
  p.alpha = s.real("alpha");
  if (!(p.alpha > 0.0)) throw s.error("alpha", "must be positive");
  const long long r = s.integer("R");
  if (r < 1 || r > 1'000'000) throw s.error("R", "must be an integer greater than zero");
  p.R = static_cast<int>(r);
  p.lambda = s.real("lambda");
  if (!(p.lambda >= 1.0)) throw s.error("lambda", "must be at least 1");
  return p;
}

XorsatParams read_xorsat(const SectionReader& s) {
  XorsatParams p;
  const long long k = s.integer("k");
  if (k < 2) throw s.error("k", "must be an integer of at least 2");
  const long long n = s.integer("N");
  if (n < k) throw s.error("N", "must be at least k");
  p.k = static_cast<std::size_t>(k);
  p.N = static_cast<std::size_t>(n);
  return p;
}

bool valid_identifier(const std::string& id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id.front()))) return false;
  return std::all_of(id.begin(), id.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

KLocalPlan read_klocal(const IniDocument& doc, const SectionReader& s,
                       std::vector<std::string>& ids) {
  KLocalPlan plan;
  const long long k_max = s.integer("k_max");
  if (k_max <= 2 || k_max > 64) throw s.error("k_max", "must be an integer greater than 2");
  plan.k_max = static_cast<int>(k_max);

  const std::string list = s.text("subproblem_id_list");
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    std::string id = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = id.find_first_not_of(" \t");
    const auto last = id.find_last_not_of(" \t");
    id = first == std::string::npos ? "" : id.substr(first, last - first + 1);
    if (!valid_identifier(id))
      throw s.error("subproblem_id_list",
                    "identifier '" + id + "' must start with a letter and be alphanumeric");
    ids.push_back(id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  for (const auto& id : ids) {
    const SectionReader sub(doc, id);
    const std::string type = sub.text("subproblem_type");
    if (type == "RF") {
      const long long n = sub.integer("N");
      if (n < 1) throw sub.error("N", "must be a positive integer");
      plan.subproblems.emplace_back(RandomFieldSpec{static_cast<std::size_t>(n)});
    } else if (type == "TP") {
      plan.subproblems.emplace_back(read_tile(sub));
    } else if (type == "WP") {
      plan.subproblems.emplace_back(read_wishart(sub));
    } else {
      throw sub.error("subproblem_type", "allowed values are RF, TP and WP, got '" + type + "'");
    }
  }

  const bool has_field = std::any_of(plan.subproblems.begin(), plan.subproblems.end(),
                                     [](const auto& sp) { return std::holds_alternative<RandomFieldSpec>(sp); });
  if (plan.k_max % 2 == 0 && has_field)
    throw s.error("subproblem_id_list",
                  "random field (RF) subproblems are only allowed for odd k_max");
  try {
    plan.validate();
  } catch (const std::invalid_argument& e) {
    throw s.error("subproblem_id_list", e.what());
  }
  return plan;
}

}  // namespace

std::string section_header(ProblemType type) {
  switch (type) {
    case ProblemType::TP: return "TP";
    case ProblemType::WP: return "WP";
    case ProblemType::DCL: return "DCL";
    case ProblemType::XORSAT: return "XORSAT";
    case ProblemType::K_LOCAL: return "K_LOCAL";
  }
  return "";
}

std::optional<ProblemType> parse_problem_type(std::string_view token) {
  std::string upper(token);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (auto t : {ProblemType::TP, ProblemType::WP, ProblemType::DCL, ProblemType::XORSAT,
                 ProblemType::K_LOCAL}) {
    if (upper == section_header(t)) return t;
  }
  return std::nullopt;
}

GeneratorConfig parse_config(std::string_view text, ProblemType type) {
  const IniDocument doc = IniDocument::parse(text);
  const SectionReader main(doc, section_header(type));

  GeneratorConfig config;
  config.type = type;
  for (const auto& [k, v] : *doc.section(main.name())) config.raw[k] = v;

  switch (type) {
    case ProblemType::TP: config.params = read_tile(main); break;
    case ProblemType::WP: config.params = read_wishart(main); break;
    case ProblemType::DCL: config.params = read_dcl(main); break;
    case ProblemType::XORSAT: config.params = read_xorsat(main); break;
    case ProblemType::K_LOCAL:
      config.params = read_klocal(doc, main, config.subproblem_ids);
      break;
  }
  return config;
}

std::string output_dir_name(const GeneratorConfig& config) {
  auto raw = [&](const char* key) {
    auto it = config.raw.find(key);
    return it == config.raw.end() ? std::string() : it->second;
  };
  switch (config.type) {
    case ProblemType::TP: {
      const auto& tp = std::get<TileParams>(config.params);
      if (tp.dimension == 2)
        return "tile_planting_2D_L_" + raw("L") + "_p1_" + raw("p1") + "_p2_" + raw("p2") +
               "_p3_" + raw("p3");
      return "tile_planting_3D_L_" + raw("L") + "_pF22_" + raw("pF22") + "_pF42_" + raw("pF42");
    }
    case ProblemType::WP: {
      const auto& wp = std::get<WishartParams>(config.params);
      return "wishart_planting_N_" + raw("N") + "_alpha_" + raw("alpha") +
             (wp.discretize_couplers ? "_discrete" : "");
    }
    case ProblemType::DCL:
      return "deceptive_cluster_loops_Lx_" + raw("Lx") + "_Ly_" + raw("Ly") + "_alpha_" +
             raw("alpha") + "_R_" + raw("R") + "_lambda_" + raw("lambda");
    case ProblemType::XORSAT:
      return "xorsat_planting_k_" + raw("k") + "_N_" + raw("N");
    case ProblemType::K_LOCAL:
      return "k_local_kmax_" + raw("k_max");
  }
  return "instances";
}

ProblemInstance generate_instance(const GeneratorConfig& config, RngStream& rng) {
  return std::visit(
      [&](const auto& params) -> ProblemInstance {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, TileParams>)
          return generate_tile_instance(params, rng);
        else if constexpr (std::is_same_v<T, WishartParams>)
          return generate_wishart_instance(params, rng);
        else if constexpr (std::is_same_v<T, DclParams>)
          return generate_dcl_instance(params, rng);
        else if constexpr (std::is_same_v<T, XorsatParams>)
          return generate_xorsat_instance(params, rng);
        else
          return generate_klocal_instance(params, rng);
      },
      config.params);
}

}  // namespace pforge
