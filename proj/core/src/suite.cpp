#include "gelfand/suite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "format.hpp"
#include "gelfand/config.hpp"
#include "gelfand/hecke.hpp"
#include "gelfand/random.hpp"
#include "gelfand/sobolev.hpp"

namespace gelfand {

namespace {

using detail::format_double;

// Aggregates the trials of one check cell, keeping the worst trial.
class Aggregator {
 public:
  Aggregator(std::string check, std::string pair, std::string kind, double tolerance,
             std::map<std::string, std::string> params = {}) {
    rec_.check = std::move(check);
    rec_.pair = std::move(pair);
    rec_.kind = std::move(kind);
    rec_.tolerance = tolerance;
    rec_.params = std::move(params);
    rec_.trial_count = 0;
  }

  void bound(double lhs, double rhs, std::uint64_t seed,
             std::map<std::string, std::string> extras = {}) {
    add(lhs, rhs, rhs - lhs, seed, std::move(extras));
  }

  void equal(double lhs, double rhs, std::uint64_t seed,
             std::map<std::string, std::string> extras = {}) {
    const double metric = -std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
    add(lhs, rhs, metric, seed, std::move(extras));
  }

  CheckRecord finish() {
    if (rec_.kind == "bound") {
      rec_.pass = rec_.slack >= -rec_.tolerance;
    } else {
      rec_.pass = std::abs(rec_.lhs - rec_.rhs) <= rec_.tolerance * (1.0 + std::abs(rec_.rhs));
    }
    return rec_;
  }

 private:
  void add(double lhs, double rhs, double metric, std::uint64_t seed,
           std::map<std::string, std::string> extras) {
    ++rec_.trial_count;
    if (first_ || metric < worst_) {
      first_ = false;
      worst_ = metric;
      rec_.lhs = lhs;
      rec_.rhs = rhs;
      rec_.slack = rhs - lhs;
      rec_.worst_trial_seed = seed;
      for (auto& [k, v] : extras) rec_.params[k] = v;
    }
  }

  CheckRecord rec_;
  bool first_ = true;
  double worst_ = 0.0;
};

std::uint64_t stream_of(const std::string& pair, const std::string& check) {
  return fnv1a64(pair + "/" + check);
}

struct PairState {
  PairContext ctx;
  GelfandCertificate cert;
  BasisPtr basis;
  PlancherelMeasure mu;
  SobolevWeight weight;
};

void run_gelfand(const CatalogEntry& entry, const PairState& st, const SuiteConfig&,
                 std::vector<CheckRecord>& out) {
  Aggregator agg("gelfand-verdict", st.ctx.name, "verdict", 0.0,
                 {{"expected", entry.expect_gelfand ? "true" : "false"},
                  {"actual", st.cert.verdict ? "true" : "false"}});
  agg.bound(st.cert.max_asymmetry, 0.0, 0);
  CheckRecord rec = agg.finish();
  rec.pass = st.cert.verdict == entry.expect_gelfand &&
             (!entry.expect_gelfand || st.cert.max_asymmetry == 0.0);
  if (st.cert.witness) {
    const auto& w = *st.cert.witness;
    rec.params["witness"] = std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                            std::to_string(w[2]);
  }
  out.push_back(std::move(rec));
}

void run_spherical(const PairState& st, const SuiteConfig& cfg, std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  const auto& basis = *st.basis;
  const double tol = cfg.tolerance;

  {
    Aggregator agg("spherical-basis-size", pair, "equal", 0.0);
    agg.equal(static_cast<double>(basis.size()),
              static_cast<double>(st.ctx.cosets->class_count()), 0);
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-product-formula", pair, "bound", tol);
    for (const auto& phi : basis.functions()) {
      agg.bound(functional_equation_residual(phi), 0.0, 0,
                {{"worst_index", std::to_string(phi.index())}});
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-identity-value", pair, "bound", tol);
    for (const auto& phi : basis.functions()) {
      agg.bound(std::abs(phi.value_on(0) - Complex(1.0, 0.0)), 0.0, 0);
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-hermitian-symmetry", pair, "bound", tol);
    const auto& space = *st.ctx.cosets;
    for (const auto& phi : basis.functions()) {
      double worst = 0.0;
      for (std::uint32_t c = 0; c < space.class_count(); ++c) {
        worst = std::max(worst, std::abs(phi.value_on(space.inverse_class_of(c)) -
                                         std::conj(phi.value_on(c))));
      }
      agg.bound(worst, 0.0, 0);
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-boundedness", pair, "bound", kSlackTol);
    for (const auto& phi : basis.functions()) {
      double m = 0.0;
      for (const Complex& v : phi.class_values()) m = std::max(m, std::abs(v));
      agg.bound(m, 1.0, 0);
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-psd", pair, "bound", kPsdTol);
    for (const auto& phi : basis.functions()) {
      agg.bound(-phi.psd_min_eigenvalue(), 0.0, 0,
                {{"worst_index", std::to_string(phi.index())}});
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-orthogonality", pair, "bound", tol);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        agg.bound(std::abs(inner_product(basis.function(a).as_bi_invariant(),
                                         basis.function(b).as_bi_invariant())),
                  0.0, 0);
      }
    }
    if (basis.size() == 1) agg.bound(0.0, 0.0, 0);
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("spherical-eigenfunction", pair, "bound", tol);
    const std::uint64_t stream = stream_of(pair, "spherical-eigenfunction");
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      double worst = 0.0;
      for (const auto& phi : basis.functions()) {
        worst = std::max(worst, eigenvalue_check(f, phi));
      }
      agg.bound(worst, 0.0, seed);
    }
    out.push_back(agg.finish());
  }
}

void run_plancherel(const PairState& st, const SuiteConfig& cfg, std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  {
    Aggregator agg("plancherel-identity", pair, "equal", cfg.tolerance);
    const std::uint64_t stream = stream_of(pair, "plancherel-identity");
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const SpectralVector hat = spherical_transform(f, st.basis);
      agg.equal(lp_norm_spectral(hat, 2.0, st.mu), lp_norm(f, 2.0), seed);
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("parseval-polarization", pair, "bound", cfg.tolerance);
    const std::uint64_t fs = stream_of(pair, "parseval-polarization/f");
    const std::uint64_t gs = stream_of(pair, "parseval-polarization/g");
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, fs, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BiInvariantFunction g =
          random_bi_invariant_function(st.ctx.cosets, trial_seed(cfg.master_seed, gs, t));
      const SpectralVector fh = spherical_transform(f, st.basis);
      const SpectralVector gh = spherical_transform(g, st.basis);
      Complex spectral(0.0, 0.0);
      for (std::size_t j = 0; j < fh.values.size(); ++j) {
        spectral += st.mu.weights[j] * fh.values[j] * std::conj(gh.values[j]);
      }
      agg.bound(std::abs(inner_product(f, g) - spectral), 0.0, seed);
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("inversion-roundtrip", pair, "bound", cfg.tolerance);
    const std::uint64_t stream = stream_of(pair, "inversion-roundtrip");
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BiInvariantFunction back =
          inverse_transform(spherical_transform(f, st.basis), st.mu);
      double scale = 0.0;
      double diff = 0.0;
      for (std::size_t c = 0; c < f.size(); ++c) {
        scale = std::max(scale, std::abs(f.class_values()[c]));
        diff = std::max(diff, std::abs(f.class_values()[c] - back.class_values()[c]));
      }
      agg.bound(diff / (1.0 + scale), 0.0, seed);
    }
    out.push_back(agg.finish());
  }
}

void run_hy(const PairState& st, const SuiteConfig& cfg, bool inverse,
            std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  const std::string name = inverse ? "inverse-hy" : "hy";
  const int trials = std::max(1, cfg.trials / 2);
  for (double p : cfg.p_grid) {
    if (inverse && p <= 1.0) continue;
    Aggregator agg(name + "-bound", pair, "bound", kSlackTol, {{"p", format_double(p)}});
    const std::uint64_t stream = stream_of(pair, name + "-bound/" + format_double(p));
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BoundCheck check = inverse ? inverse_hausdorff_young_check(f, p, st.basis)
                                       : hausdorff_young_check(f, p, st.basis);
      agg.bound(check.lhs, check.rhs, seed);
    }
    out.push_back(agg.finish());
  }
  {
    // Endpoint p = 2 reduces to the Plancherel identity.
    Aggregator agg(name + "-endpoint", pair, "equal", cfg.tolerance, {{"p", "2"}});
    const std::uint64_t stream = stream_of(pair, name + "-endpoint");
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BoundCheck check = inverse ? inverse_hausdorff_young_check(f, 2.0, st.basis)
                                       : hausdorff_young_check(f, 2.0, st.basis);
      agg.equal(check.lhs, check.rhs, seed);
    }
    out.push_back(agg.finish());
  }
}

void run_embeddings(const PairState& st, const SuiteConfig& cfg,
                    std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  {
    Aggregator agg("embedding-l2", pair, "bound", kSlackTol);
    const std::uint64_t stream = stream_of(pair, "embedding-l2");
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BoundCheck check = embedding_l2_check(f, st.weight, cfg.s);
      agg.bound(check.lhs, check.rhs, seed);
    }
    out.push_back(agg.finish());
  }
  {
    // gamma == 0 collapses the Sobolev norm to the L^2 norm.
    const SobolevWeight zero =
        make_weight(st.basis, std::vector<double>(st.basis->size(), 0.0));
    Aggregator agg("embedding-l2-gamma0", pair, "equal", kSlackTol);
    const std::uint64_t stream = stream_of(pair, "embedding-l2-gamma0");
    for (int t = 0; t < std::max(1, cfg.trials / 2); ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      agg.equal(lp_norm(f, 2.0), sobolev_norm(f, zero, cfg.s), seed);
    }
    out.push_back(agg.finish());
  }
  {
    Aggregator agg("embedding-sup", pair, "bound", kSlackTol);
    const std::uint64_t stream = stream_of(pair, "embedding-sup");
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BoundCheck check = embedding_sup_check(f, st.weight, cfg.s);
      agg.bound(check.lhs, check.rhs, seed);
    }
    out.push_back(agg.finish());
  }
  for (double mult : {1.5, 2.0, 4.0}) {
    const double alpha = mult * cfg.s;
    Aggregator agg("embedding-lp", pair, "bound", kSlackTol,
                   {{"alpha", format_double(alpha)}});
    const std::uint64_t stream = stream_of(pair, "embedding-lp/" + format_double(alpha));
    for (int t = 0; t < std::max(1, cfg.trials / 2); ++t) {
      const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BoundCheck check = embedding_lp_check(f, st.weight, SobolevParams{cfg.s, alpha});
      agg.bound(check.lhs, check.rhs, seed);
    }
    out.push_back(agg.finish());
  }
}

void run_translation(const PairState& st, const SuiteConfig& cfg,
                     std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  const std::size_t n = st.ctx.group->order();
  Aggregator bound_agg("translation-bound", pair, "bound", kSlackTol);
  Aggregator ident_agg("translation-transform-identity", pair, "bound", cfg.tolerance);
  const std::uint64_t stream = stream_of(pair, "translation-bound");
  for (int t = 0; t < std::max(1, cfg.trials / 2); ++t) {
    const std::uint64_t seed = trial_seed(cfg.master_seed, stream, t);
    const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
    for (std::uint32_t y = 0; y < n; ++y) {
      const TranslationCheck check = translation_bound_check(f, st.weight, cfg.s, y);
      bound_agg.bound(check.lhs, check.rhs, seed, {{"worst_y", std::to_string(y)}});
      ident_agg.bound(check.transform_identity_residual, 0.0, seed,
                      {{"worst_y", std::to_string(y)}});
    }
  }
  out.push_back(bound_agg.finish());
  out.push_back(ident_agg.finish());
}

void run_mollifier(const PairState& st, const SuiteConfig& cfg,
                   std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  const int count = std::max(1, cfg.trials / 5);
  Aggregator agg("mollifier-bound", pair, "bound", kSlackTol);
  const std::uint64_t es = stream_of(pair, "mollifier-bound/eta");
  const std::uint64_t fs = stream_of(pair, "mollifier-bound/f");
  for (int e = 0; e < count; ++e) {
    const MollifierFunction eta =
        random_mollifier(st.ctx.cosets, trial_seed(cfg.master_seed, es, e));
    for (int t = 0; t < count; ++t) {
      // Index the grid cell independently of the trial count so enlarging
      // the grid keeps every earlier (eta, f) cell.
      const std::uint64_t seed = trial_seed(
          cfg.master_seed, fs, (static_cast<std::uint64_t>(e) << 32) | static_cast<std::uint64_t>(t));
      const BiInvariantFunction f = random_bi_invariant_function(st.ctx.cosets, seed);
      const BoundCheck check = mollifier_bound_check(f, st.weight, cfg.s, eta);
      agg.bound(check.lhs, check.rhs, seed);
    }
  }
  out.push_back(agg.finish());
}

void run_rellich(const PairState& st, const SuiteConfig& cfg, std::vector<CheckRecord>& out) {
  const std::string& pair = st.ctx.name;
  const int count = std::max(1, cfg.trials / 5);
  const RellichChainReport report = rellich_chain_report(st.weight, cfg.s, cfg.alpha);

  Aggregator link_moll("rellich-link-mollifier", pair, "bound", kSlackTol);
  Aggregator link_young("rellich-link-young", pair, "bound", kSlackTol);
  Aggregator link_triangle("rellich-link-triangle", pair, "bound", kSlackTol);
  const std::uint64_t es = stream_of(pair, "rellich/eta");
  const std::uint64_t fs = stream_of(pair, "rellich/fn");
  const std::uint64_t gs = stream_of(pair, "rellich/f");
  for (int t = 0; t < count; ++t) {
    const MollifierFunction eta =
        random_mollifier(st.ctx.cosets, trial_seed(cfg.master_seed, es, t));
    const std::uint64_t seed = trial_seed(cfg.master_seed, fs, t);
    const BiInvariantFunction fn = random_bi_invariant_function(st.ctx.cosets, seed);
    const BiInvariantFunction f =
        random_bi_invariant_function(st.ctx.cosets, trial_seed(cfg.master_seed, gs, t));

    const BoundCheck moll = mollifier_bound_check(fn, st.weight, cfg.s, eta);
    link_moll.bound(moll.lhs, moll.rhs, seed);

    auto smooth = [&](const BiInvariantFunction& h) {
      return project_bi_invariant(convolve(h.expand(), eta.function().expand()), st.ctx.cosets);
    };
    const BiInvariantFunction fn_eta = smooth(fn);
    const BiInvariantFunction f_eta = smooth(f);
    // Young contraction |g * eta|_2 <= |g|_2 |eta|_1 with |eta|_1 = 1.
    link_young.bound(lp_norm(fn_eta - f_eta, 2.0), lp_norm(fn - f, 2.0), seed);
    const double triangle = lp_norm(fn - fn_eta, 2.0) + lp_norm(fn_eta - f_eta, 2.0) +
                            lp_norm(f_eta - f, 2.0);
    link_triangle.bound(lp_norm(fn - f, 2.0), triangle, seed);
  }
  out.push_back(link_moll.finish());
  out.push_back(link_young.finish());
  out.push_back(link_triangle.finish());

  {
    Aggregator agg("rellich-identity-modulus", pair, "bound", kSlackTol,
                   {{"min_mollifier_constant", format_double(report.min_mollifier_constant)}});
    agg.bound(report.element_moduli[0], 0.0, 0);
    out.push_back(agg.finish());
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "gelfand",     "spherical",   "plancherel", "hy",           "inverse-hy",
      "embeddings",  "translation", "mollifier",  "rellich-chain"};
  return names;
}

void SuiteConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(s > 0.0)) throw std::invalid_argument("s must be positive");
  if (!(alpha > s)) throw std::invalid_argument("alpha must exceed s");
  const auto& names = suite_names();
  for (const std::string& suite : suites) {
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  }
  for (const std::string& pair : pairs) {
    bool known = false;
    for (const CatalogEntry& entry : catalog()) known = known || entry.name == pair;
    if (!known) throw std::invalid_argument("unknown pair '" + pair + "'");
  }
  for (double p : p_grid) {
    if (!(p >= 1.0 && p <= 2.0)) {
      throw std::invalid_argument("p-grid values must lie in [1,2]");
    }
  }
}

SobolevWeight resolve_weight(const std::string& spec, const BasisPtr& basis) {
  if (spec == "zero" || (spec == "auto" && basis->space()->class_count() == 1)) {
    return make_weight(basis, std::vector<double>(basis->size(), 0.0));
  }
  if (spec == "auto") {
    const std::uint32_t inv1 = basis->space()->inverse_class_of(1);
    std::vector<std::uint32_t> classes{1};
    if (inv1 != 1) classes.push_back(inv1);
    return make_weight_cayley(basis, classes);
  }
  const auto parse_list = [](const std::string& text) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = text.find(',', start);
      if (comma == std::string::npos) {
        items.push_back(text.substr(start));
        break;
      }
      items.push_back(text.substr(start, comma - start));
      start = comma + 1;
    }
    return items;
  };
  if (spec.starts_with("cayley:")) {
    std::vector<std::uint32_t> classes;
    for (const std::string& item : parse_list(spec.substr(7))) {
      classes.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return make_weight_cayley(basis, classes);
  }
  if (spec.starts_with("user:")) {
    std::vector<double> values;
    for (const std::string& item : parse_list(spec.substr(5))) {
      values.push_back(std::stod(item));
    }
    return make_weight(basis, values);
  }
  throw std::invalid_argument("unknown weight specification '" + spec + "'");
}

std::int64_t SuiteReport::passed() const {
  std::int64_t count = 0;
  for (const CheckRecord& rec : checks) count += rec.pass ? 1 : 0;
  return count;
}

SuiteReport run_suite(const SuiteConfig& config) {
  config.validate();
  SuiteReport report;
  report.config = config;

  const auto selected_suite = [&](const std::string& name) {
    return config.suites.empty() ||
           std::find(config.suites.begin(), config.suites.end(), name) != config.suites.end();
  };
  const auto selected_pair = [&](const std::string& name) {
    return config.pairs.empty() ||
           std::find(config.pairs.begin(), config.pairs.end(), name) != config.pairs.end();
  };

  for (const CatalogEntry& entry : catalog()) {
    if (!selected_pair(entry.name)) continue;
    PairState st;
    st.ctx = entry.build();
    st.cert = is_gelfand_pair(st.ctx.cosets);
    if (selected_suite("gelfand")) run_gelfand(entry, st, config, report.checks);
    if (!st.cert.verdict) continue;  // property suites need a Gelfand pair

    bool needs_basis = false;
    for (const std::string& name : suite_names()) {
      if (name != "gelfand" && selected_suite(name)) needs_basis = true;
    }
    if (!needs_basis) continue;
    st.basis = spherical_basis(st.ctx.cosets);
    st.mu = plancherel_measure(st.basis);
    st.weight = resolve_weight(config.weight, st.basis);

    if (selected_suite("spherical")) run_spherical(st, config, report.checks);
    if (selected_suite("plancherel")) run_plancherel(st, config, report.checks);
    if (selected_suite("hy")) run_hy(st, config, false, report.checks);
    if (selected_suite("inverse-hy")) run_hy(st, config, true, report.checks);
    if (selected_suite("embeddings")) run_embeddings(st, config, report.checks);
    if (selected_suite("translation")) run_translation(st, config, report.checks);
    if (selected_suite("mollifier")) run_mollifier(st, config, report.checks);
    if (selected_suite("rellich-chain")) run_rellich(st, config, report.checks);
  }
  return report;
}

}  // namespace gelfand
