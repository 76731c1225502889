// gph: harmonic analysis on finite Gelfand pairs from the command line.
//
// Exit codes: 0 all checks pass, 1 one or more checks fail, 2 configuration
// or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gelfand/io.hpp"
#include "gelfand/random.hpp"
#include "gelfand/suite.hpp"
#include "gelfand/version.hpp"

namespace {

using namespace gelfand;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
  out << text;
}

// A weight SPEC is inline JSON ('{...}'), a shorthand ("auto", "zero",
// "cayley:1,3", "user:0,1,1,2") or a path to a weight document.
SobolevWeight load_weight(const std::string& spec, const BasisPtr& basis) {
  if (!spec.empty() && spec.front() == '{') return parse_weight_document(spec, basis);
  if (spec == "auto" || spec == "zero" || spec.starts_with("cayley:") ||
      spec.starts_with("user:")) {
    return resolve_weight(spec, basis);
  }
  return parse_weight_document(read_file(spec), basis);
}

int cmd_catalog() {
  std::printf("%-10s %8s %8s %8s %-8s %s\n", "name", "|G|", "|K|", "classes", "gelfand",
              "description");
  for (const CatalogEntry& entry : catalog()) {
    const PairContext ctx = entry.build();
    std::printf("%-10s %8zu %8zu %8zu %-8s %s\n", entry.name.c_str(), ctx.group->order(),
                ctx.subgroup.size(), ctx.cosets->class_count(),
                entry.expect_gelfand ? "true" : "false", entry.description.c_str());
  }
  return 0;
}

int cmd_gelfand(const std::string& group_file, const std::string& subgroup_file) {
  const GroupPtr group = parse_group_document(read_file(group_file));
  const Subgroup subgroup = parse_subgroup_document(read_file(subgroup_file), group);
  const GelfandCertificate cert = is_gelfand_pair(group, subgroup);
  std::cout << "{\n  \"group\": \"" << group->name() << "\",\n  \"order\": " << group->order()
            << ",\n  \"subgroupOrder\": " << subgroup.size() << ",\n  \"verdict\": "
            << (cert.verdict ? "true" : "false");
  if (cert.witness) {
    const auto& w = *cert.witness;
    std::cout << ",\n  \"witness\": {\"classI\": " << w[0] << ", \"classJ\": " << w[1]
              << ", \"element\": " << w[2] << "},\n  \"maxAsymmetry\": " << cert.max_asymmetry;
  }
  std::cout << "\n}\n";
  return 0;
}

int cmd_analyze(const std::string& pair, const std::string& weight_spec, double s,
                std::optional<double> alpha, const std::string& out) {
  const PairContext ctx = build_pair(pair);
  const BasisPtr basis = spherical_basis(ctx.cosets);
  const PlancherelMeasure mu = plancherel_measure(basis);
  const SobolevWeight weight = load_weight(weight_spec, basis);
  write_output(out, write_analysis_document(ctx, basis, mu, weight, s, alpha));
  return 0;
}

int cmd_transform(const std::string& pair, const std::string& function_file, bool inverse,
                  const std::string& out) {
  const PairContext ctx = build_pair(pair);
  const BasisPtr basis = spherical_basis(ctx.cosets);
  const std::string text = read_file(function_file);
  if (inverse) {
    const SpectralVector spectral = parse_spectral_document(text, basis);
    const BiInvariantFunction f = inverse_transform(spectral, plancherel_measure(basis));
    write_output(out, write_function_document(pair, f));
    return 0;
  }
  const FunctionDocument doc = parse_function_document(text, ctx);
  if (doc.pair != pair) {
    throw std::invalid_argument("function document names pair '" + doc.pair + "', expected '" +
                                pair + "'");
  }
  const SpectralVector spectral =
      std::holds_alternative<GroupFunction>(doc.value)
          ? spherical_transform(std::get<GroupFunction>(doc.value), basis)
          : spherical_transform(std::get<BiInvariantFunction>(doc.value), basis);
  write_output(out, write_spectral_document(pair, spectral));
  return 0;
}

int cmd_verify(const SuiteConfig& cfg, const std::string& out) {
  const SuiteReport report = run_suite(cfg);
  write_output(out, serialize_report(report));
  std::cerr << report.passed() << "/" << report.total() << " checks passed\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic analysis on finite Gelfand pairs"};
  app.set_version_flag("--version", gelfand::kVersion);
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in pair catalog");

  auto* gelfand_cmd = app.add_subcommand("gelfand", "decide the Gelfand property of (G, K)");
  std::string group_file;
  std::string subgroup_file;
  gelfand_cmd->add_option("--group", group_file, "group document (JSON)")->required();
  gelfand_cmd->add_option("--subgroup", subgroup_file, "subgroup document (JSON)")->required();

  auto* analyze_cmd =
      app.add_subcommand("analyze", "emit basis, Plancherel weights, gamma and constants");
  std::string pair;
  std::string weight_spec = "auto";
  double s = 1.0;
  double alpha_value = 0.0;
  bool has_alpha = false;
  std::string out;
  analyze_cmd->add_option("--pair", pair, "catalog pair name")->required();
  analyze_cmd->add_option("--weight", weight_spec, "weight SPEC (auto|zero|cayley:..|user:..|file)");
  analyze_cmd->add_option("--s", s, "Sobolev exponent s");
  analyze_cmd->add_option("--alpha", alpha_value, "embedding exponent alpha")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { has_alpha = true; });
  analyze_cmd->add_option("--out", out, "output file (default stdout)");

  auto* transform_cmd = app.add_subcommand("transform", "spherical transform of a function");
  std::string function_file;
  bool inverse = false;
  transform_cmd->add_option("--pair", pair, "catalog pair name")->required();
  transform_cmd->add_option("--function", function_file, "function or spectral document")
      ->required();
  transform_cmd->add_flag("--inverse", inverse, "invert a spectral document");
  transform_cmd->add_option("--out", out, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites and emit a report");
  SuiteConfig cfg;
  bool all_pairs = false;
  std::string suites_csv;
  verify_cmd->add_option("--pair", cfg.pairs, "pair name(s); repeatable");
  verify_cmd->add_flag("--all", all_pairs, "run on the whole catalog");
  verify_cmd->add_option("--suite", suites_csv, "comma-separated suite list");
  verify_cmd->add_option("--trials", cfg.trials, "base trial count");
  verify_cmd->add_option("--seed", cfg.master_seed, "master seed");
  verify_cmd->add_option("--tol", cfg.tolerance, "equality-check tolerance");
  verify_cmd->add_option("--weight", cfg.weight, "weight SPEC for the Sobolev suites");
  verify_cmd->add_option("--s", cfg.s, "Sobolev exponent s");
  verify_cmd->add_option("--alpha", cfg.alpha, "embedding exponent alpha");
  verify_cmd->add_option("--out", out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
    if (catalog_cmd->parsed()) return cmd_catalog();
    if (gelfand_cmd->parsed()) return cmd_gelfand(group_file, subgroup_file);
    if (analyze_cmd->parsed()) {
      return cmd_analyze(pair, weight_spec, s,
                         has_alpha ? std::optional<double>(alpha_value) : std::nullopt, out);
    }
    if (transform_cmd->parsed()) return cmd_transform(pair, function_file, inverse, out);
    if (verify_cmd->parsed()) {
      if (!all_pairs && cfg.pairs.empty()) {
        std::cerr << "error: verify needs --pair NAME or --all\n";
        return 2;
      }
      if (all_pairs) cfg.pairs.clear();
      if (!suites_csv.empty()) {
        cfg.suites.clear();
        std::stringstream stream(suites_csv);
        std::string item;
        while (std::getline(stream, item, ',')) cfg.suites.push_back(item);
      }
      return cmd_verify(cfg, out);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
