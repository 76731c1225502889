#include "gelfand/io.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "format.hpp"
#include "gelfand/config.hpp"
#include "gelfand/version.hpp"

namespace gelfand {

namespace {

using nlohmann::json;
using detail::format_double;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw std::invalid_argument(std::string("malformed document: missing field '") + key + "'");
  }
  return doc.at(key);
}

std::vector<Complex> parse_complex_list(const json& values) {
  if (!values.is_array()) {
    throw std::invalid_argument("malformed document: 'values' must be an array");
  }
  std::vector<Complex> out;
  out.reserve(values.size());
  for (const json& v : values) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw std::invalid_argument("malformed document: complex values are [re, im] pairs");
    }
    out.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  return out;
}

json complex_list(const std::vector<Complex>& values) {
  json out = json::array();
  for (const Complex& v : values) out.push_back(json::array({v.real(), v.imag()}));
  return out;
}

// Canonical rendering: keys sorted (nlohmann::json objects iterate sorted),
// doubles in fixed %.17g, two-space indentation.
void dump_canonical(const json& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
  const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + json(it.key()).dump() + ": ";
        dump_canonical(it.value(), out, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const json& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_canonical(item, out, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        throw std::invalid_argument("cannot serialize a non-finite number");
      }
      out += format_double(v);
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

std::string dump_canonical(const json& j) {
  std::string out;
  dump_canonical(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace

GroupPtr parse_group_document(const std::string& text) {
  const json doc = parse_or_throw(text);
  const std::string name = field(doc, "name").get<std::string>();
  if (doc.contains("table")) {
    const std::size_t order = field(doc, "order").get<std::size_t>();
    const json& table = doc.at("table");
    std::vector<std::uint32_t> flat;
    flat.reserve(order * order);
    if (!table.is_array()) throw std::invalid_argument("malformed document: 'table' not an array");
    for (const json& row : table) {
      if (row.is_array()) {
        for (const json& v : row) flat.push_back(v.get<std::uint32_t>());
      } else {
        flat.push_back(row.get<std::uint32_t>());
      }
    }
    return make_group_from_table(name, order, std::move(flat));
  }
  if (doc.contains("generators")) {
    const std::size_t degree = field(doc, "degree").get<std::size_t>();
    std::vector<std::vector<std::uint32_t>> generators;
    for (const json& gen : doc.at("generators")) {
      generators.push_back(gen.get<std::vector<std::uint32_t>>());
    }
    return make_group_from_generators(name, degree, generators);
  }
  throw std::invalid_argument("malformed document: expected 'table' or 'generators'");
}

Subgroup parse_subgroup_document(const std::string& text, const GroupPtr& group) {
  const json doc = parse_or_throw(text);
  const char* key = doc.contains("members") ? "members" : "generators";
  if (!doc.contains(key)) {
    throw std::invalid_argument("malformed document: expected 'members' or 'generators'");
  }
  const auto seed = doc.at(key).get<std::vector<std::uint32_t>>();
  return Subgroup::closure(group, seed);
}

FunctionDocument parse_function_document(const std::string& text, const PairContext& ctx) {
  const json doc = parse_or_throw(text);
  const std::string pair = field(doc, "pair").get<std::string>();
  const std::string domain = field(doc, "domain").get<std::string>();
  std::vector<Complex> values = parse_complex_list(field(doc, "values"));
  if (domain == "group") {
    return {pair, GroupFunction(ctx.group, std::move(values))};
  }
  if (domain == "classes") {
    return {pair, BiInvariantFunction(ctx.cosets, std::move(values))};
  }
  throw std::invalid_argument("malformed document: domain must be 'group' or 'classes'");
}

std::string write_function_document(const std::string& pair, const BiInvariantFunction& f) {
  json doc;
  doc["pair"] = pair;
  doc["domain"] = "classes";
  doc["values"] = complex_list(f.class_values());
  return dump_canonical(doc);
}

namespace {

json basis_echo(const SphericalBasis& basis) {
  json echo = json::array();
  for (const SphericalFunction& phi : basis.functions()) {
    echo.push_back(complex_list(phi.class_values()));
  }
  return echo;
}

}  // namespace

std::string write_spectral_document(const std::string& pair, const SpectralVector& F) {
  json doc;
  doc["pair"] = pair;
  doc["domain"] = "spectral";
  doc["values"] = complex_list(F.values);
  doc["projected"] = F.projected;
  doc["basisOrder"] = basis_echo(*F.basis);
  return dump_canonical(doc);
}

SpectralVector parse_spectral_document(const std::string& text, const BasisPtr& basis) {
  const json doc = parse_or_throw(text);
  if (field(doc, "domain").get<std::string>() != "spectral") {
    throw std::invalid_argument("malformed document: expected domain 'spectral'");
  }
  std::vector<Complex> values = parse_complex_list(field(doc, "values"));
  if (values.size() != basis->size()) {
    throw std::invalid_argument("spectral vector length does not match the basis");
  }
  const json& echo = field(doc, "basisOrder");
  if (echo.size() != basis->size()) {
    throw std::invalid_argument("basisOrder echo does not match the basis size");
  }
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const std::vector<Complex> claimed = parse_complex_list(echo[j]);
    const auto& actual = basis->function(j).class_values();
    if (claimed.size() != actual.size()) {
      throw std::invalid_argument("basisOrder echo does not match the class count");
    }
    for (std::size_t c = 0; c < actual.size(); ++c) {
      if (std::abs(claimed[c] - actual[c]) > 1e-9) {
        throw std::invalid_argument("basisOrder echo disagrees with the pair's basis");
      }
    }
  }
  return {basis, std::move(values), false};
}

SobolevWeight parse_weight_document(const std::string& text, const BasisPtr& basis) {
  const json doc = parse_or_throw(text);
  const std::string mode = field(doc, "mode").get<std::string>();
  if (mode == "user") {
    return make_weight(basis, field(doc, "values").get<std::vector<double>>());
  }
  if (mode == "cayley") {
    std::vector<std::uint32_t> classes;
    if (doc.contains("classes")) {
      classes = doc.at("classes").get<std::vector<std::uint32_t>>();
    } else {
      classes.push_back(field(doc, "class").get<std::uint32_t>());
    }
    return make_weight_cayley(basis, classes);
  }
  throw std::invalid_argument("malformed document: mode must be 'user' or 'cayley'");
}

std::string write_analysis_document(const PairContext& ctx, const BasisPtr& basis,
                                    const PlancherelMeasure& mu, const SobolevWeight& weight,
                                    double s, std::optional<double> alpha) {
  json doc;
  doc["pair"] = ctx.name;
  doc["groupOrder"] = ctx.group->order();
  doc["subgroupOrder"] = ctx.subgroup.size();
  json classes = json::array();
  for (std::uint32_t c = 0; c < ctx.cosets->class_count(); ++c) {
    json cls;
    cls["index"] = c;
    cls["size"] = ctx.cosets->class_size(c);
    cls["representative"] = ctx.cosets->rep_of(c);
    cls["inverseClass"] = ctx.cosets->inverse_class_of(c);
    classes.push_back(cls);
  }
  doc["classes"] = classes;
  doc["basis"] = basis_echo(*basis);
  doc["plancherel"] = mu.weights;
  doc["gamma"] = weight.gamma;
  doc["weightMode"] = weight.mode;
  doc["s"] = s;
  json constants;
  constants["supEmbedding"] = embedding_sup_constant(weight, s);
  if (alpha) {
    doc["alpha"] = *alpha;
    double alpha_sum = 0.0;
    for (std::size_t j = 0; j < mu.weights.size(); ++j) {
      alpha_sum += mu.weights[j] *
                   std::pow(1.0 + weight.gamma[j] * weight.gamma[j], -*alpha);
    }
    constants["lpEmbedding"] = std::pow(alpha_sum, s / (2.0 * *alpha));
    const RellichChainReport chain = rellich_chain_report(weight, s, *alpha);
    constants["minMollifierConstant"] = chain.min_mollifier_constant;
    constants["classModuli"] = chain.class_moduli;
    doc["chainNote"] = chain.note;
  }
  doc["constants"] = constants;
  return dump_canonical(doc);
}

std::string serialize_report(const SuiteReport& report) {
  json doc;
  doc["artifact"] = {{"name", "gelfand"}, {"version", kVersion}};
  json cfg;
  cfg["pairs"] = report.config.pairs;
  cfg["suites"] = report.config.suites;
  cfg["trials"] = report.config.trials;
  cfg["masterSeed"] = report.config.master_seed;
  cfg["tolerance"] = report.config.tolerance;
  cfg["weight"] = report.config.weight;
  cfg["s"] = report.config.s;
  cfg["alpha"] = report.config.alpha;
  cfg["pGrid"] = report.config.p_grid;
  doc["config"] = cfg;
  json checks = json::array();
  for (const CheckRecord& rec : report.checks) {
    json r;
    r["checkName"] = rec.check;
    r["pair"] = rec.pair;
    r["kind"] = rec.kind;
    r["params"] = rec.params;
    r["lhs"] = rec.lhs;
    r["rhs"] = rec.rhs;
    r["slack"] = rec.slack;
    r["tolerance"] = rec.tolerance;
    r["pass"] = rec.pass;
    r["trialCount"] = rec.trial_count;
    r["worstTrialSeed"] = rec.worst_trial_seed;
    checks.push_back(r);
  }
  doc["checks"] = checks;
  doc["summary"] = {{"total", report.total()},
                    {"passed", report.passed()},
                    {"failed", report.total() - report.passed()}};
  return dump_canonical(doc);
}

}  // namespace gelfand
