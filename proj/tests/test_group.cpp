#include <doctest.h>

#include "gelfand/catalog.hpp"
#include "gelfand/cosets.hpp"
#include "gelfand/group.hpp"
#include "gelfand/random.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

GroupPtr z4() {
  return make_group_from_table("z4", 4,
                               {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2});
}

GroupPtr s3() {
  return make_group_from_generators("s3", 3, {{1, 0, 2}, {1, 2, 0}});
}

}  // namespace

TEST_CASE("load_group: explicit Z2 table") {
  auto g = make_group_from_table("z2", 2, {0, 1, 1, 0});
  CHECK(g->order() == 2);
  CHECK(g->inv(0) == 0);
  CHECK(g->inv(1) == 1);
  CHECK(g->mul(1, 1) == 0);
}

TEST_CASE("load_group: permutation generators close to S3") {
  auto g = s3();
  // Independent closure oracle: brute-force set closure of the generators.
  const auto closed = oracles::perm_closure(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(closed.size() == 6);
  CHECK(g->order() == closed.size());
  for (const auto& p : g->permutations()) CHECK(closed.count(p) == 1);
  // Canonical order is deterministic: rebuilding yields the same table.
  auto again = s3();
  CHECK(g->permutations() == again->permutations());
  CHECK(g->mul(2, 3) == again->mul(2, 3));
}

TEST_CASE("load_group: repeated row entry is rejected") {
  CHECK_THROWS_WITH_AS(make_group_from_table("bad", 2, {0, 1, 1, 1}),
                       doctest::Contains("not a Latin square"), std::invalid_argument);
}

TEST_CASE("load_group: non-associative Latin square is rejected") {
  // An order-5 loop with identity 0: a valid Latin square that is not a group.
  const std::vector<std::uint32_t> loop = {
      0, 1, 2, 3, 4,  //
      1, 0, 3, 4, 2,  //
      2, 3, 4, 0, 1,  //
      3, 4, 1, 2, 0,  //
      4, 2, 0, 1, 3,
  };
  CHECK_THROWS_WITH_AS(make_group_from_table("loop5", 5, loop),
                       doctest::Contains("not associative"), std::invalid_argument);
}

TEST_CASE("load_group: misplaced identity is rejected") {
  CHECK_THROWS_AS(make_group_from_table("bad", 2, {1, 0, 0, 1}), std::invalid_argument);
}

TEST_CASE("load_group: generator closure respects the order cap") {
  CHECK_THROWS_WITH_AS(
      make_group_from_generators("s3", 3, {{1, 0, 2}, {1, 2, 0}}, 4),
      doctest::Contains("exceeds order cap"), std::invalid_argument);
}

TEST_CASE("haar measure normalizes to unit mass") {
  auto g = z4();
  CHECK(g->haar().carrier_size == 4);
  CHECK(g->haar().weight() == doctest::Approx(0.25).epsilon(1e-15));
  auto s = build_pair("s3/s2");
  CHECK(s.subgroup.haar().carrier_size == 2);
  // carrier_size * (1/carrier_size) = 1 exactly as a rational; the double
  // round trip is exact for these sizes too.
  CHECK(static_cast<double>(s.group->haar().carrier_size) * s.group->haar().weight() == 1.0);
}

TEST_CASE("load_group: generator that is not a permutation is rejected") {
  CHECK_THROWS_WITH_AS(make_group_from_generators("bad", 3, {{1, 1, 2}}),
                       doctest::Contains("not a permutation"), std::invalid_argument);
  CHECK_THROWS_AS(make_group_from_generators("bad", 3, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("bi-invariant norms agree with the expanded function") {
  auto ctx = build_pair("cube3");
  for (int t = 0; t < 20; ++t) {
    const auto f = random_bi_invariant_function(ctx.cosets, trial_seed(61, 0, t));
    for (double p : {1.0, 1.5, 2.0, 4.0, inf_p()}) {
      CHECK(lp_norm(f, p) == doctest::Approx(lp_norm(f.expand(), p)).epsilon(1e-13));
    }
    const auto g = random_bi_invariant_function(ctx.cosets, trial_seed(61, 1, t));
    CHECK(std::abs(inner_product(f, g) - inner_product(f.expand(), g.expand())) < 1e-13);
  }
}

TEST_CASE("load_subgroup: closure of a transposition in S3") {
  auto g = s3();
  // Oracle: index closure by brute force.
  const std::uint32_t t = 1;  // BFS order: identity, then (0 1)
  CHECK(g->permutations()[t] == std::vector<std::uint32_t>{1, 0, 2});
  auto k = Subgroup::closure(g, std::vector<std::uint32_t>{t});
  const auto closed = oracles::index_closure(*g, {t});
  CHECK(k.size() == 2);
  CHECK(std::vector<std::uint32_t>(closed.begin(), closed.end()) == k.members());
}

TEST_CASE("load_subgroup: empty seed gives the trivial subgroup") {
  auto g = s3();
  auto k = Subgroup::closure(g, {});
  CHECK(k.members() == std::vector<std::uint32_t>{0});
}

TEST_CASE("load_subgroup: element 2 of Z4 generates {0,2}") {
  auto g = z4();
  auto k = Subgroup::closure(g, std::vector<std::uint32_t>{2});
  CHECK(k.members() == std::vector<std::uint32_t>{0, 2});
  const auto closed = oracles::index_closure(*g, {2});
  CHECK(std::vector<std::uint32_t>(closed.begin(), closed.end()) == k.members());
}

TEST_CASE("load_subgroup: out-of-range index is rejected") {
  auto g = z4();
  CHECK_THROWS_AS(Subgroup::closure(g, std::vector<std::uint32_t>{7}), std::out_of_range);
}

TEST_CASE("double_cosets: trivial subgroup of Z4 gives singletons") {
  auto g = z4();
  auto dc = double_cosets(g, Subgroup::closure(g, {}));
  CHECK(dc->class_count() == 4);
  for (std::uint32_t c = 0; c < 4; ++c) {
    CHECK(dc->class_members(c) == std::vector<std::uint32_t>{c});
  }
}

TEST_CASE("double_cosets: (S3, S2) has classes of sizes 2 and 4") {
  auto ctx = build_pair("s3/s2");
  REQUIRE(ctx.cosets->class_count() == 2);
  CHECK(ctx.cosets->class_size(0) == 2);
  CHECK(ctx.cosets->class_size(1) == 4);
  // D_0 = K as a set.
  CHECK(ctx.cosets->class_members(0) ==
        std::vector<std::uint32_t>(ctx.subgroup.members().begin(),
                                   ctx.subgroup.members().end()));
  // Saturation oracle agrees on every class.
  for (std::uint32_t c = 0; c < ctx.cosets->class_count(); ++c) {
    const auto orbit = oracles::double_coset_of(
        *ctx.group, ctx.subgroup.members(), ctx.cosets->rep_of(c));
    CHECK(std::vector<std::uint32_t>(orbit.begin(), orbit.end()) == ctx.cosets->class_members(c));
  }
}

TEST_CASE("double_cosets: (G, G) is a single class") {
  auto ctx = build_pair("full/full");
  CHECK(ctx.cosets->class_count() == 1);
  CHECK(ctx.cosets->class_size(0) == ctx.group->order());
}

TEST_CASE("double coset classes are stable under K x K translation") {
  for (const char* name : {"s3/s2", "cube3", "d8"}) {
    auto ctx = build_pair(name);
    SplitMix64 rng(99);
    for (int t = 0; t < 200; ++t) {
      const auto x = static_cast<std::uint32_t>(rng.next() % ctx.group->order());
      const auto& members = ctx.subgroup.members();
      const std::uint32_t k1 = members[rng.next() % members.size()];
      const std::uint32_t k2 = members[rng.next() % members.size()];
      CHECK(ctx.cosets->class_of(ctx.group->mul(ctx.group->mul(k1, x), k2)) ==
            ctx.cosets->class_of(x));
    }
  }
}

TEST_CASE("project_bi_invariant: indicator of the transposition in (S3, S2)") {
  auto ctx = build_pair("s3/s2");
  // f = indicator of the nonidentity element of K.
  std::vector<Complex> values(6, Complex(0, 0));
  const std::uint32_t t = ctx.subgroup.members()[1];
  values[t] = Complex(1, 0);
  GroupFunction f(ctx.group, values);
  const auto proj = project_bi_invariant(f, ctx.cosets);
  CHECK(std::abs(proj.value_on(0) - Complex(0.5, 0)) < 1e-15);
  CHECK(std::abs(proj.value_on(1)) < 1e-15);
  // Double-average oracle agrees pointwise.
  const auto direct = oracles::project_by_double_average(f, ctx.subgroup);
  const auto expanded = proj.expand();
  for (std::uint32_t x = 0; x < 6; ++x) {
    CHECK(std::abs(direct[x] - expanded.values()[x]) < 1e-14);
  }
}

TEST_CASE("project_bi_invariant: idempotent and constant-preserving") {
  auto ctx = build_pair("s4/s3");
  const auto f = random_bi_invariant_function(ctx.cosets, 7);
  const auto again = project_bi_invariant(f.expand(), ctx.cosets);
  for (std::uint32_t c = 0; c < f.size(); ++c) {
    CHECK(std::abs(again.value_on(c) - f.value_on(c)) < 1e-14);
  }
  const auto constant = project_bi_invariant(constant_function(ctx.group, {2.5, -1.0}),
                                             ctx.cosets);
  for (std::uint32_t c = 0; c < constant.size(); ++c) {
    CHECK(std::abs(constant.value_on(c) - Complex(2.5, -1.0)) < 1e-14);
  }
}

TEST_CASE("project_bi_invariant: linear contraction in every L^p norm") {
  auto ctx = build_pair("s3/s2");
  for (int t = 0; t < 100; ++t) {
    const auto f = random_group_function(ctx.group, trial_seed(11, 1, t));
    const auto g = random_group_function(ctx.group, trial_seed(11, 2, t));
    // Linearity.
    const auto sum = project_bi_invariant(f + g, ctx.cosets);
    const auto split = project_bi_invariant(f, ctx.cosets) + project_bi_invariant(g, ctx.cosets);
    for (std::uint32_t c = 0; c < sum.size(); ++c) {
      CHECK(std::abs(sum.value_on(c) - split.value_on(c)) < 1e-13);
    }
    // Operator norm <= 1.
    for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0, inf_p()}) {
      CHECK(lp_norm(project_bi_invariant(f, ctx.cosets), p) <= lp_norm(f, p) + 1e-12);
    }
  }
}

TEST_CASE("lp_norm: worked values on Z4") {
  auto g = z4();
  const GroupFunction f = delta_identity(g);
  CHECK(lp_norm(f, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lp_norm(f, inf_p()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lp_norm(constant_function(g, {1, 0}), 3.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(lp_norm(f, 0.5), std::domain_error);
}

TEST_CASE("Hoelder duality |<f,g>| <= |f|_p |g|_p'") {
  auto ctx = build_pair("s4/s3");
  for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0}) {
    const double pc = (p == 1.0) ? inf_p() : p / (p - 1.0);
    for (int t = 0; t < 50; ++t) {
      const auto f = random_group_function(ctx.group, trial_seed(5, 10, t));
      const auto g = random_group_function(ctx.group, trial_seed(5, 11, t));
      CHECK(std::abs(inner_product(f, g)) <= lp_norm(f, p) * lp_norm(g, pc) + 1e-12);
    }
  }
}

TEST_CASE("group function arithmetic rejects mismatched groups") {
  auto a = z4();
  auto b = z4();  // distinct instance
  CHECK_THROWS_AS(delta_identity(a) + delta_identity(b), std::invalid_argument);
}

TEST_CASE("non-finite values are rejected") {
  auto g = z4();
  std::vector<Complex> bad(4, Complex(0, 0));
  bad[1] = Complex(std::numeric_limits<double>::infinity(), 0);
  CHECK_THROWS_AS(GroupFunction(g, bad), std::invalid_argument);
}
