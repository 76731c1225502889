// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "gelfand/io.hpp"
#include "gelfand/random.hpp"
#include "gelfand/suite.hpp"

using namespace gelfand;

namespace {

int g_failures = 0;
bool g_current_ok = true;
std::string g_detail;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    g_current_ok = false;
    if (g_detail.size() < 400) g_detail += (g_detail.empty() ? "" : "; ") + what;
  }
}

void expect_near(double got, double want, double tol, const std::string& what) {
  expect(std::abs(got - want) <= tol,
         what + " (got " + std::to_string(got) + ", want " + std::to_string(want) + ")");
}

void criterion(int number, const std::string& title, void (*body)()) {
  g_current_ok = true;
  g_detail.clear();
  try {
    body();
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  if (!g_current_ok) ++g_failures;
  std::printf("[%s] criterion %d: %s%s%s\n", g_current_ok ? "PASS" : "FAIL", number,
              title.c_str(), g_detail.empty() ? "" : " -- ", g_detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Analyzed {
  PairContext ctx;
  BasisPtr basis;
  PlancherelMeasure mu;
  SobolevWeight weight;  // auto weight, s = 1
};

Analyzed analyze(const std::string& name) {
  Analyzed a;
  a.ctx = build_pair(name);
  a.basis = spherical_basis(a.ctx.cosets);
  a.mu = plancherel_measure(a.basis);
  a.weight = resolve_weight("auto", a.basis);
  return a;
}

std::vector<std::string> positive_pairs() {
  std::vector<std::string> names;
  for (const CatalogEntry& entry : catalog()) {
    if (entry.expect_gelfand) names.push_back(entry.name);
  }
  return names;
}

// ---- criterion bodies -------------------------------------------------

void c1_gelfand_detection() {
  for (const CatalogEntry& entry : catalog()) {
    const auto start = std::chrono::steady_clock::now();
    auto ctx = entry.build();
    const GelfandCertificate cert = is_gelfand_pair(ctx.cosets);
    const double elapsed = seconds_since(start);
    expect(cert.verdict == entry.expect_gelfand, entry.name + ": verdict mismatch");
    if (entry.expect_gelfand) {
      expect(cert.max_asymmetry == 0.0, entry.name + ": commutativity not exact");
    } else {
      expect(cert.witness.has_value(), entry.name + ": missing witness");
    }
    expect(elapsed < 1.0, entry.name + ": took " + std::to_string(elapsed) + "s");
  }
}

void c2_spherical_basis() {
  for (const std::string& name : positive_pairs()) {
    const auto start = std::chrono::steady_clock::now();
    auto ctx = build_pair(name);
    auto basis = spherical_basis(ctx.cosets);
    expect(basis->size() == ctx.cosets->class_count(), name + ": basis size");
    for (const auto& phi : basis->functions()) {
      expect(functional_equation_residual(phi) <= 1e-10, name + ": product formula");
      expect(std::abs(phi.value_on(0) - Complex(1, 0)) <= 1e-10, name + ": phi(e) = 1");
      double sup = 0.0;
      for (const Complex& v : phi.class_values()) sup = std::max(sup, std::abs(v));
      expect(sup <= 1.0 + 1e-12, name + ": |phi| <= 1");
      for (std::uint32_t c = 0; c < ctx.cosets->class_count(); ++c) {
        expect(std::abs(phi.value_on(ctx.cosets->inverse_class_of(c)) -
                        std::conj(phi.value_on(c))) <= 1e-12,
               name + ": conjugation symmetry");
      }
      expect(phi.psd_min_eigenvalue() >= -1e-10, name + ": Gram PSD");
    }
    const double elapsed = seconds_since(start);
    expect(elapsed < 5.0, name + ": took " + std::to_string(elapsed) + "s");
  }
  // Pinned basis of (S3, S2).
  auto basis = spherical_basis(build_pair("s3/s2").cosets);
  expect(basis->size() == 2, "s3/s2 size");
  expect_near(std::abs(basis->function(0).value_on(1) - Complex(1, 0)), 0.0, 1e-10,
              "s3/s2 phi0 on D_1");
  expect_near(std::abs(basis->function(1).value_on(1) - Complex(-0.5, 0)), 0.0, 1e-10,
              "s3/s2 phi1 on D_1");
}

void c3_plancherel_parseval() {
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const std::uint64_t fs = fnv1a64(name + "/acc-plancherel-f");
    const std::uint64_t gs = fnv1a64(name + "/acc-plancherel-g");
    for (int t = 0; t < 100; ++t) {
      const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, fs, t));
      const auto g = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, gs, t));
      const SpectralVector fh = spherical_transform(f, a.basis);
      const SpectralVector gh = spherical_transform(g, a.basis);
      const double lhs = lp_norm_spectral(fh, 2.0, a.mu);
      const double rhs = lp_norm(f, 2.0);
      expect(std::abs(lhs - rhs) <= 1e-10 * (1.0 + rhs), name + ": Plancherel identity");
      Complex spectral(0, 0);
      for (std::size_t j = 0; j < fh.values.size(); ++j) {
        spectral += a.mu.weights[j] * fh.values[j] * std::conj(gh.values[j]);
      }
      expect(std::abs(inner_product(f, g) - spectral) <= 1e-10, name + ": polarization");
    }
  }
}

void c4_inversion_roundtrip() {
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const std::uint64_t stream = fnv1a64(name + "/acc-roundtrip");
    for (int t = 0; t < 100; ++t) {
      const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, stream, t));
      const auto back = inverse_transform(spherical_transform(f, a.basis), a.mu);
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        expect(std::abs(f.value_on(c) - back.value_on(c)) <=
                   1e-10 * (1.0 + std::abs(f.value_on(c))),
               name + ": round trip");
      }
    }
  }
}

void c5_hausdorff_young() {
  const std::vector<double> grid = {1.0, 1.25, 1.5, 1.75, 2.0};
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const std::uint64_t stream = fnv1a64(name + "/acc-hy");
    for (double p : grid) {
      for (int t = 0; t < 50; ++t) {
        const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, stream, t));
        const BoundCheck hy = hausdorff_young_check(f, p, a.basis);
        expect(hy.slack >= -1e-12, name + ": HY at p = " + std::to_string(p));
        if (p > 1.0) {
          const BoundCheck inv = inverse_hausdorff_young_check(f, p, a.basis);
          expect(inv.slack >= -1e-12, name + ": inverse HY at p = " + std::to_string(p));
        }
        if (p == 2.0) {
          expect(std::abs(hy.lhs - hy.rhs) <= 1e-10 * (1.0 + hy.rhs),
                 name + ": HY endpoint equality");
        }
      }
    }
  }
}

void c6_embeddings() {
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const SobolevWeight zero = make_weight(a.basis, std::vector<double>(a.basis->size(), 0.0));
    const std::uint64_t stream = fnv1a64(name + "/acc-embed");
    for (int t = 0; t < 100; ++t) {
      const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, stream, t));
      expect(embedding_l2_check(f, a.weight, 1.0).slack >= -1e-12, name + ": L2 embedding");
      const BoundCheck eq = embedding_l2_check(f, zero, 1.0);
      expect(std::abs(eq.lhs - eq.rhs) <= 1e-12 * (1.0 + eq.rhs),
             name + ": equality at gamma = 0");
      expect(embedding_sup_check(f, a.weight, 1.0).slack >= -1e-12, name + ": sup embedding");
    }
    for (double mult : {1.5, 2.0, 4.0}) {
      for (int t = 0; t < 50; ++t) {
        const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, stream, 1000 + t));
        expect(embedding_lp_check(f, a.weight, SobolevParams{1.0, mult}).slack >= -1e-12,
               name + ": Lp embedding at alpha = " + std::to_string(mult));
      }
    }
  }
  // Pinned z4 constants.
  auto ctx = build_pair("z4");
  auto basis = spherical_basis(ctx.cosets);
  const SobolevWeight weight = make_weight_cayley(basis, {1, 3});
  const double c = embedding_sup_constant(weight, 1.0);
  expect_near(c * c, 7.0 / 3.0, 1e-12, "z4: C^2 = 7/3");
  const BiInvariantFunction delta(ctx.cosets, {Complex(1, 0), {0, 0}, {0, 0}, {0, 0}});
  expect_near(sobolev_norm(delta, weight, 1.0), std::sqrt(0.5), 1e-12,
              "z4: |delta|_{H^1} = sqrt(1/2)");
}

void c7_translation() {
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const std::uint64_t stream = fnv1a64(name + "/acc-translate");
    for (int t = 0; t < 50; ++t) {
      const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, stream, t));
      for (std::uint32_t y = 0; y < a.ctx.group->order(); ++y) {
        const TranslationCheck check = translation_bound_check(f, a.weight, 1.0, y);
        expect(check.slack >= -1e-12, name + ": translation bound at y = " + std::to_string(y));
        expect(check.transform_identity_residual <= 1e-10,
               name + ": transform identity at y = " + std::to_string(y));
      }
    }
  }
  // Pinned z4 instance: f = delta, y = 2.
  auto ctx = build_pair("z4");
  auto basis = spherical_basis(ctx.cosets);
  const SobolevWeight weight = make_weight_cayley(basis, {1, 3});
  const BiInvariantFunction delta(ctx.cosets, {Complex(1, 0), {0, 0}, {0, 0}, {0, 0}});
  const TranslationCheck check = translation_bound_check(delta, weight, 1.0, 2);
  expect_near(check.lhs, 0.5, 1e-12, "z4: lhs = 1/2");
  expect_near(check.rhs, 1.0, 1e-12, "z4: rhs = 1");
}

void c8_mollifier() {
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const std::uint64_t es = fnv1a64(name + "/acc-moll-eta");
    const std::uint64_t fs = fnv1a64(name + "/acc-moll-f");
    for (int e = 0; e < 20; ++e) {
      const MollifierFunction eta = random_mollifier(a.ctx.cosets, trial_seed(42, es, e));
      for (int t = 0; t < 20; ++t) {
        const auto f =
            random_bi_invariant_function(a.ctx.cosets, trial_seed(42, fs, e * 20 + t));
        expect(mollifier_bound_check(f, a.weight, 1.0, eta).slack >= -1e-12,
               name + ": mollifier bound");
      }
    }
  }
}

void c9_rellich_chain() {
  for (const std::string& name : positive_pairs()) {
    const Analyzed a = analyze(name);
    const RellichChainReport report = rellich_chain_report(a.weight, 1.0, 2.0);
    expect(report.element_moduli[0] == 0.0, name + ": modulus at e");
    const std::uint64_t es = fnv1a64(name + "/acc-chain-eta");
    const std::uint64_t fs = fnv1a64(name + "/acc-chain-f");
    for (int t = 0; t < 20; ++t) {
      const MollifierFunction eta = random_mollifier(a.ctx.cosets, trial_seed(42, es, t));
      const auto fn = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, fs, 2 * t));
      const auto f = random_bi_invariant_function(a.ctx.cosets, trial_seed(42, fs, 2 * t + 1));
      const auto smooth = [&](const BiInvariantFunction& h) {
        return project_bi_invariant(convolve(h.expand(), eta.function().expand()), a.ctx.cosets);
      };
      const auto fn_eta = smooth(fn);
      const auto f_eta = smooth(f);
      // Link 1: the mollifier estimate on f_n.
      expect(mollifier_bound_check(fn, a.weight, 1.0, eta).slack >= -1e-12,
             name + ": chain link 1");
      // Link 2: smoothing is an L^2 contraction (|eta|_1 = 1).
      expect(lp_norm(fn_eta - f_eta, 2.0) <= lp_norm(fn - f, 2.0) + 1e-12,
             name + ": chain link 2");
      // Link 3: the triangle decomposition.
      expect(lp_norm(fn - f, 2.0) <= lp_norm(fn - fn_eta, 2.0) + lp_norm(fn_eta - f_eta, 2.0) +
                                         lp_norm(f_eta - f, 2.0) + 1e-12,
             name + ": chain link 3");
    }
  }
  // Pinned z4 modulus table entry.
  auto ctx = build_pair("z4");
  auto basis = spherical_basis(ctx.cosets);
  const SobolevWeight weight = make_weight_cayley(basis, {1, 3});
  const RellichChainReport report = rellich_chain_report(weight, 1.0, 2.0);
  expect_near(report.element_moduli[2], std::sqrt(2.0), 1e-12, "z4: modulus(y=2) = sqrt(2)");
}

void c10_determinism_and_runtime() {
  SuiteConfig cfg;  // defaults: all pairs, all suites, 100 trials, seed 42
  const auto start = std::chrono::steady_clock::now();
  const std::string once = serialize_report(run_suite(cfg));
  const double first_run = seconds_since(start);
  const std::string twice = serialize_report(run_suite(cfg));
  expect(once == twice, "reports are not byte-identical");
  expect(first_run < 60.0, "full suite took " + std::to_string(first_run) + "s");
  const SuiteReport report = run_suite(cfg);
  expect(report.all_pass(), "default suite has failing checks");
}

}  // namespace

int main() {
  criterion(1, "Gelfand detection (exact, < 1 s per pair)", c1_gelfand_detection);
  criterion(2, "spherical basis correctness (< 5 s per pair)", c2_spherical_basis);
  criterion(3, "Plancherel and Parseval identities (100 trials per pair)", c3_plancherel_parseval);
  criterion(4, "inversion round trip (100 trials per pair)", c4_inversion_roundtrip);
  criterion(5, "Hausdorff-Young and inverse over the p-grid", c5_hausdorff_young);
  criterion(6, "embedding inequalities and pinned z4 constants", c6_embeddings);
  criterion(7, "translation estimate and transform identity", c7_translation);
  criterion(8, "mollifier estimate (20 x 20 per pair)", c8_mollifier);
  criterion(9, "compactness proof chain and modulus table", c9_rellich_chain);
  criterion(10, "byte-identical reports, full suite < 60 s", c10_determinism_and_runtime);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
