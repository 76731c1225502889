#include <doctest.h>

#include "gelfand/catalog.hpp"
#include "gelfand/hecke.hpp"
#include "gelfand/random.hpp"
#include "oracles.hpp"

using namespace gelfand;

TEST_CASE("convolve: worked examples") {
  SUBCASE("delta * delta on Z4") {
    auto ctx = build_pair("z4");
    const auto f = delta_identity(ctx.group);
    const auto conv = convolve(f, f);
    CHECK(std::abs(conv.values()[0] - Complex(0.25, 0)) < 1e-15);
    for (std::uint32_t x = 1; x < 4; ++x) CHECK(std::abs(conv.values()[x]) < 1e-15);
    // Direct double-loop oracle.
    const auto direct = oracles::convolve_direct(f, f);
    for (std::uint32_t x = 0; x < 4; ++x) CHECK(std::abs(conv.values()[x] - direct[x]) < 1e-15);
  }
  SUBCASE("constant against anything averages") {
    auto ctx = build_pair("s3/s2");
    const auto ones = constant_function(ctx.group, {1, 0});
    const auto g = random_group_function(ctx.group, 3);
    const auto conv = convolve(ones, g);
    Complex mean(0, 0);
    for (const Complex& v : g.values()) mean += v;
    mean /= static_cast<double>(g.size());
    for (std::uint32_t x = 0; x < conv.size(); ++x) {
      CHECK(std::abs(conv.values()[x] - mean) < 1e-14);
    }
  }
  SUBCASE("shift indicator on Z2") {
    auto g = make_group_from_table("z2", 2, {0, 1, 1, 0});
    const GroupFunction f(g, {Complex(0, 0), Complex(1, 0)});
    const auto conv = convolve(f, f);
    CHECK(std::abs(conv.values()[0] - Complex(0.5, 0)) < 1e-15);
    CHECK(std::abs(conv.values()[1]) < 1e-15);
  }
}

TEST_CASE("convolve: both orientations coincide on a unimodular group") {
  auto ctx = build_pair("s4/s3");
  const auto& grp = *ctx.group;
  for (int t = 0; t < 20; ++t) {
    const auto f = random_group_function(ctx.group, trial_seed(17, 0, t));
    const auto g = random_group_function(ctx.group, trial_seed(17, 1, t));
    const auto conv = convolve(f, g);
    for (std::uint32_t x = 0; x < grp.order(); ++x) {
      Complex other(0, 0);
      for (std::uint32_t y = 0; y < grp.order(); ++y) {
        other += f.values()[y] * g.values()[grp.mul(grp.inv(y), x)];
      }
      other /= static_cast<double>(grp.order());
      CHECK(std::abs(conv.values()[x] - other) < 1e-13);
    }
  }
}

TEST_CASE("convolve: associativity on random triples") {
  auto ctx = build_pair("d8");
  for (int t = 0; t < 20; ++t) {
    const auto f = random_group_function(ctx.group, trial_seed(23, 0, t));
    const auto g = random_group_function(ctx.group, trial_seed(23, 1, t));
    const auto h = random_group_function(ctx.group, trial_seed(23, 2, t));
    const auto left = convolve(convolve(f, g), h);
    const auto right = convolve(f, convolve(g, h));
    for (std::uint32_t x = 0; x < left.size(); ++x) {
      CHECK(std::abs(left.values()[x] - right.values()[x]) < 1e-12);
    }
  }
}

TEST_CASE("structure_constants: (Z2, {e}) tensor") {
  auto ctx = build_pair("z2");
  const StructureConstants sc(ctx.cosets);
  // Oracle: coefficients read off the convolution of class indicators.
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      const auto conv = convolve(class_indicator(ctx.cosets, i).expand(),
                                 class_indicator(ctx.cosets, j).expand());
      for (std::uint32_t k = 0; k < 2; ++k) {
        CHECK(sc.coefficient(i, j, k) ==
              doctest::Approx(conv.values()[ctx.cosets->rep_of(k)].real()).epsilon(1e-14));
      }
    }
  }
  CHECK(sc.coefficient(0, 0, 0) == doctest::Approx(0.5));
  CHECK(sc.coefficient(0, 1, 1) == doctest::Approx(0.5));
  CHECK(sc.coefficient(1, 1, 0) == doctest::Approx(0.5));
  CHECK(sc.coefficient(1, 1, 1) == doctest::Approx(0.0));
  CHECK(sc.coefficient(1, 0, 1) == doctest::Approx(0.5));
  CHECK(sc.coefficient(0, 0, 1) == doctest::Approx(0.0));
  CHECK(sc.coefficient(0, 1, 0) == doctest::Approx(0.0));
  CHECK(sc.coefficient(1, 0, 0) == doctest::Approx(0.0));
}

TEST_CASE("structure_constants: one-class pair and (S3,S2)") {
  {
    auto ctx = build_pair("full/full");
    const StructureConstants sc(ctx.cosets);
    CHECK(sc.coefficient(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  {
    auto ctx = build_pair("s3/s2");
    const StructureConstants sc(ctx.cosets);
    const auto conv = convolve(class_indicator(ctx.cosets, 0).expand(),
                               class_indicator(ctx.cosets, 0).expand());
    CHECK(std::abs(conv.values()[0] - Complex(1.0 / 3.0, 0)) < 1e-14);
    CHECK(sc.coefficient(0, 0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(sc.coefficient(0, 0, 1) == doctest::Approx(0.0));
  }
}

TEST_CASE("structure_constants: exact mass balance") {
  for (const char* name : {"z4", "s3/s2", "s4/s3", "cube3", "d8", "s3/e"}) {
    auto ctx = build_pair(name);
    const StructureConstants sc(ctx.cosets);
    const auto d1 = static_cast<std::uint32_t>(sc.class_count());
    for (std::uint32_t i = 0; i < d1; ++i) {
      for (std::uint32_t j = 0; j < d1; ++j) {
        std::int64_t total = 0;
        for (std::uint32_t k = 0; k < d1; ++k) total += sc.count(i, j, k);
        // sum_k N[i][j][k] = |D_i| |D_j| exactly.
        CHECK(total == static_cast<std::int64_t>(ctx.cosets->class_size(i)) *
                           static_cast<std::int64_t>(ctx.cosets->class_size(j)));
      }
    }
  }
}

TEST_CASE("structure constants expand convolution of bi-invariant functions") {
  for (const char* name : {"s3/s2", "cube3", "d8"}) {
    auto ctx = build_pair(name);
    const StructureConstants sc(ctx.cosets);
    for (int t = 0; t < 50; ++t) {
      const auto f = random_bi_invariant_function(ctx.cosets, trial_seed(31, 0, t));
      const auto g = random_bi_invariant_function(ctx.cosets, trial_seed(31, 1, t));
      const auto via_tensor = convolve(sc, f, g);
      const auto direct = project_bi_invariant(convolve(f.expand(), g.expand()), ctx.cosets);
      for (std::uint32_t c = 0; c < via_tensor.size(); ++c) {
        CHECK(std::abs(via_tensor.value_on(c) - direct.value_on(c)) < 1e-12);
      }
    }
  }
}

TEST_CASE("is_gelfand_pair: verdicts and witnesses") {
  CHECK(is_gelfand_pair(build_pair("z4").cosets).verdict);
  CHECK(is_gelfand_pair(build_pair("s3/s2").cosets).verdict);
  CHECK(is_gelfand_pair(build_pair("s3/s2").cosets).max_asymmetry == 0.0);

  const auto cert = is_gelfand_pair(build_pair("s3/e").cosets);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.max_asymmetry > 0.0);
  REQUIRE(cert.witness.has_value());
  // The witness triple indexes a genuine inequality of indicator convolutions.
  auto ctx = build_pair("s3/e");
  const auto& w = *cert.witness;
  const auto left = convolve(class_indicator(ctx.cosets, w[0]).expand(),
                             class_indicator(ctx.cosets, w[1]).expand());
  const auto right = convolve(class_indicator(ctx.cosets, w[1]).expand(),
                              class_indicator(ctx.cosets, w[0]).expand());
  CHECK(std::abs(left.values()[w[2]] - right.values()[w[2]]) > 1e-3);
}

TEST_CASE("convolution_operator_matrix: worked examples") {
  {
    auto ctx = build_pair("full/full");
    const auto m = convolution_operator_matrix(ctx.cosets, 0);
    REQUIRE(m.rows() == 1);
    CHECK(m(0, 0) == doctest::Approx(1.0));
  }
  {
    auto ctx = build_pair("z2");
    const auto m = convolution_operator_matrix(ctx.cosets, 1);
    CHECK(m(0, 0) == doctest::Approx(0.0));
    CHECK(m(0, 1) == doctest::Approx(0.5));
    CHECK(m(1, 0) == doctest::Approx(0.5));
    CHECK(m(1, 1) == doctest::Approx(0.0));
  }
  {
    auto ctx = build_pair("s3/s2");
    const auto m = convolution_operator_matrix(ctx.cosets, 0);
    CHECK((m - Eigen::MatrixXd::Identity(2, 2) / 3.0).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("operator matrices commute exactly for Gelfand pairs") {
  for (const char* name : {"s3/s2", "cube3", "d8", "z8"}) {
    auto ctx = build_pair(name);
    const StructureConstants sc(ctx.cosets);
    std::vector<Eigen::MatrixXd> ops;
    for (std::uint32_t i = 0; i < sc.class_count(); ++i) ops.push_back(sc.operator_matrix(i));
    for (std::size_t a = 0; a < ops.size(); ++a) {
      for (std::size_t b = a + 1; b < ops.size(); ++b) {
        CHECK((ops[a] * ops[b] - ops[b] * ops[a]).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("the algebra unit is (n/|K|) 1_K") {
  for (const char* name : {"s3/s2", "cube3", "d8"}) {
    auto ctx = build_pair(name);
    const double scale = static_cast<double>(ctx.group->order()) /
                         static_cast<double>(ctx.subgroup.size());
    const auto unit = scale * class_indicator(ctx.cosets, 0);
    const auto f = random_bi_invariant_function(ctx.cosets, 8);
    const auto conv = project_bi_invariant(convolve(unit.expand(), f.expand()), ctx.cosets);
    for (std::uint32_t c = 0; c < f.size(); ++c) {
      CHECK(std::abs(conv.value_on(c) - f.value_on(c)) < 1e-12);
    }
  }
}
