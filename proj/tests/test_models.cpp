#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "rsg/models.hpp"
#include "rsg/oracle.hpp"

using namespace rsg;
using rsg::testing::matching_from_pairs;
using rsg::testing::perm_from_cycles;

TEST_SUITE_BEGIN("models");

namespace {

GluingInstance sampled(const ModelParams& p, std::uint64_t seed) {
  RngStream stream(seed);
  return build_instance(p, stream);
}

}  // namespace

TEST_CASE("parameter validation") {
  auto validate = [](ModelKind kind, std::int64_t n, std::int64_t m, std::int64_t t) {
    ModelParams{kind, n, m, t}.validate();
  };
  CHECK_THROWS_AS(validate(ModelKind::Sprime, 0, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelKind::Sprime, 1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelKind::S, 5, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelKind::Sprime, 4, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelKind::T, 2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate(ModelKind::T, 3, 0, 3), std::invalid_argument);  // odd t*n
  CHECK_THROWS_AS(validate(ModelKind::T, 2, 3, 3), std::invalid_argument);  // m > n
  CHECK_THROWS_AS(validate(ModelKind::Tprime, 2, 7, 3), std::invalid_argument);
  CHECK_NOTHROW(validate(ModelKind::Tprime, 2, 6, 3));
  CHECK_NOTHROW(validate(ModelKind::T, 3, 1, 4));
  CHECK(parse_model("tprime") == ModelKind::Tprime);
  CHECK(parse_model("prime") == std::nullopt);
}

TEST_CASE("sprime(2,0) is the unique sphere instance") {
  const GluingInstance inst = sampled({ModelKind::Sprime, 2, 0, 3}, 5);
  CHECK(inst.matching == matching_from_pairs(2, {{1, 2}}));
  CHECK(to_cycle_string(gamma_of(inst)) == "(1)(2)");

  const SurfaceSummary s = summarize(inst);
  CHECK(s.faces == 1);
  CHECK(s.edges == 1);
  CHECK(s.vertices == 2);
  CHECK(s.chi == 2);
  CHECK(s.B == 0);
  CHECK(s.I == 2);
  CHECK(s.genus == 0);
  CHECK(s.connected);

  const VertexClasses vc = vertex_classes(inst);
  CHECK(vc.internal == 2);
  CHECK(vc.boundary == 0);
  CHECK(boundary_walk(inst).cycles.empty());
}

TEST_CASE("sprime(2,1) is a disk") {
  const GluingInstance inst =
      assemble_instance({ModelKind::Sprime, 2, 1, 3}, {0}, matching_from_pairs(2, {{1, 2}}));
  const SurfaceSummary s = summarize(inst);
  CHECK(s.faces == 1);
  CHECK(s.edges == 2);
  CHECK(s.vertices == 2);
  CHECK(s.chi == 1);
  CHECK(s.B == 1);
  CHECK(s.I == 1);
  CHECK(s.genus == 0);

  const VertexClasses vc = vertex_classes(inst);
  CHECK(vc.internal == 1);
  CHECK(vc.boundary == 1);

  const BoundaryTrace trace = boundary_walk(inst);
  CHECK(trace.cycles.size() == 1);
  CHECK(trace.cycles[0] == std::vector<label_t>{0});
  CHECK(trace.total_boundary_vertices == 1);
}

TEST_CASE("gamma shortcut examples") {
  const auto gamma = perm_from_cycles(6, {{1, 2, 3}, {4, 5, 6}});
  const std::vector<label_t> both_on_first{0, 1};
  CHECK(boundary_shortcut(gamma, both_on_first).boundary == 1);
  CHECK(boundary_shortcut(gamma, both_on_first).internal == 1);

  CHECK(boundary_shortcut(gamma, {}).boundary == 0);
  CHECK(boundary_shortcut(gamma, {}).internal == 2);

  const auto id4 = Permutation::identity(4);
  const std::vector<label_t> corners{0, 2};
  CHECK(boundary_shortcut(id4, corners).boundary == 2);
  CHECK(boundary_shortcut(id4, corners).internal == 2);
}

TEST_CASE("gamma_of rejects unprimed instances with boundary") {
  CHECK_THROWS_AS(gamma_of(sampled({ModelKind::S, 4, 1, 3}, 3)), std::invalid_argument);
  CHECK_NOTHROW(gamma_of(sampled({ModelKind::S, 4, 0, 3}, 3)));
  CHECK_NOTHROW(gamma_of(sampled({ModelKind::T, 2, 0, 3}, 3)));
}

// Two triangles: gamma = (1 2 3)(4 5 6) o beta. Over the 15 matchings the
// achievable cycle counts are {1, 3} (Euler bound c <= 3 plus deterministic
// odd parity); the hand case beta = (1 4)(2 5)(3 6) is a single 6-cycle.
TEST_CASE("tprime n=2 gamma cycle counts") {
  const ModelParams p{ModelKind::Tprime, 2, 0, 3};
  const auto beta_hand = matching_from_pairs(6, {{1, 4}, {2, 5}, {3, 6}});
  CHECK(cycle_count(gamma_of(assemble_instance(p, {}, beta_hand))) == 1);

  std::map<std::size_t, int> count_freq;
  enumerate_matchings(6, [&](const Matching& beta) {
    ++count_freq[cycle_count(gamma_of(assemble_instance(p, {}, beta)))];
  });
  CHECK(count_freq.size() == 2);
  CHECK(count_freq[1] == 3);   // torus gluings
  CHECK(count_freq[3] == 12);  // sphere gluings
}

TEST_CASE("S placement walk: adjacent vs alternating boundary") {
  const ModelParams p{ModelKind::S, 2, 2, 3};
  const Matching beta = matching_from_pairs(2, {{1, 2}});

  const GluingInstance adjacent = assemble_instance(p, {0, 1}, beta);
  CHECK(boundary_walk(adjacent).cycles.size() == 1);
  CHECK(summarize(adjacent).genus == 0);  // disk

  const GluingInstance alternating = assemble_instance(p, {0, 2}, beta);
  CHECK(boundary_walk(alternating).cycles.size() == 2);
  const SurfaceSummary s = summarize(alternating);
  CHECK(s.genus == 0);  // annulus
  CHECK(s.B == 2);
}

TEST_CASE("S boundary placement is uniform over position subsets") {
  const int k_draws = 100'000;
  const double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / k_draws);

  // n=2, m=1: the placement is a uniform 1-subset of the 3 cyclic positions.
  SUBCASE("the position draw itself is uniform over C(3,1)") {
    std::map<label_t, int> freq;
    RngStream stream(31);
    for (int i = 0; i < k_draws; ++i) ++freq[sample_subset(3, 1, stream)[0]];
    CHECK(freq.size() == 3);
    for (const auto& [pos, count] : freq)
      CHECK(std::abs(static_cast<double>(count) / k_draws - 1.0 / 3.0) <= 3 * sigma);
  }

  // Positions 0 and 2 put the boundary side at the cyclic seam and label to
  // the same rotation, so distinct instances appear 2/3 : 1/3.
  SUBCASE("instances collapse 2:1 across the seam") {
    const ModelParams p{ModelKind::S, 2, 1, 3};
    std::map<std::vector<label_t>, int> freq;
    for (int i = 0; i < k_draws; ++i) {
      RngStream sub = RngStream::substream(31, static_cast<std::uint64_t>(i));
      const GluingInstance inst = build_instance(p, sub);
      ++freq[std::vector<label_t>(inst.rotation.images().begin(), inst.rotation.images().end())];
    }
    REQUIRE(freq.size() == 2);
    std::vector<double> fractions;
    for (const auto& [rot, count] : freq)
      fractions.push_back(static_cast<double>(count) / k_draws);
    std::sort(fractions.begin(), fractions.end());
    CHECK(std::abs(fractions[0] - 1.0 / 3.0) <= 3 * sigma);
    CHECK(std::abs(fractions[1] - 2.0 / 3.0) <= 3 * sigma);
  }
}

TEST_CASE("tprime joint placement x matching is uniform over 90 cases") {
  const ModelParams p{ModelKind::Tprime, 2, 1, 3};
  const int k_draws = 1'000'000;
  std::map<std::pair<std::vector<label_t>, label_t>, int> freq;
  for (int i = 0; i < k_draws; ++i) {
    RngStream stream = RngStream::substream(37, static_cast<std::uint64_t>(i));
    const GluingInstance inst = build_instance(p, stream);
    ++freq[{std::vector<label_t>(inst.matching.partners().begin(), inst.matching.partners().end()),
            inst.insertions[0]}];
  }
  CHECK(freq.size() == 90);
  const double pr = 1.0 / 90.0;
  const double sigma = std::sqrt(pr * (1 - pr) / k_draws);
  for (const auto& [key, count] : freq)
    CHECK(std::abs(static_cast<double>(count) / k_draws - pr) <= 3 * sigma);
}

TEST_CASE("vertex classes cross-validate the shortcut on random tprime") {
  const ModelParams p{ModelKind::Tprime, 10, 4, 3};
  for (int i = 0; i < 10'000; ++i) {
    RngStream stream = RngStream::substream(41, static_cast<std::uint64_t>(i));
    const GluingInstance inst = build_instance(p, stream);
    const SplitCounts sc = boundary_shortcut(gamma_of(inst), inst.insertions);
    const VertexClasses vc = vertex_classes(inst);
    REQUIRE(vc.internal == sc.internal);
    REQUIRE(vc.boundary == 4);
  }
}

TEST_CASE("walk equals shortcut on mixed primed models") {
  const std::vector<ModelParams> grid{
      {ModelKind::Sprime, 2, 1, 3},  {ModelKind::Sprime, 8, 3, 3},  {ModelKind::Sprime, 16, 16, 3},
      {ModelKind::Tprime, 2, 2, 3},  {ModelKind::Tprime, 6, 9, 3},  {ModelKind::Tprime, 4, 5, 4},
      {ModelKind::Tprime, 4, 11, 5},
  };
  for (std::size_t g = 0; g < grid.size(); ++g) {
    for (int i = 0; i < 3'000; ++i) {
      RngStream stream = RngStream::substream(43 + g, static_cast<std::uint64_t>(i));
      const GluingInstance inst = build_instance(grid[g], stream);
      const SplitCounts sc = boundary_shortcut(gamma_of(inst), inst.insertions);
      const BoundaryTrace trace = boundary_walk(inst);
      REQUIRE(static_cast<std::int64_t>(trace.cycles.size()) == sc.boundary);
      REQUIRE(trace.total_boundary_vertices == grid[g].m);
      std::set<label_t> seen;
      for (const auto& circuit : trace.cycles)
        for (label_t corner : circuit) seen.insert(corner);
      REQUIRE(seen == std::set<label_t>(inst.insertions.begin(), inst.insertions.end()));
    }
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(sampled({ModelKind::S, 8, 2, 3}, 47)) == 1);
  CHECK(connected_components(sampled({ModelKind::Sprime, 8, 2, 3}, 47)) == 1);
  CHECK(connected_components(sampled({ModelKind::Tprime, 2, 0, 3}, 47)) == 1);

  // beta pairing within polygons {1,2} and within {3,4} leaves two components
  const auto beta =
      matching_from_pairs(12, {{1, 4}, {2, 5}, {3, 6}, {7, 10}, {8, 11}, {9, 12}});
  const GluingInstance split = assemble_instance({ModelKind::Tprime, 4, 0, 3}, {}, beta);
  CHECK(connected_components(split) == 2);
  const SurfaceSummary s = summarize(split);
  CHECK(s.components == 2);
  CHECK_FALSE(s.connected);
  CHECK(s.chi == 2 * s.components - 2 * s.genus - s.B);
}

TEST_CASE("T model canonical squares") {
  const GluingInstance inst = sampled({ModelKind::T, 2, 1, 3}, 53);
  CHECK(inst.free_darts == std::vector<label_t>{6});
  CHECK(inst.rotation(2) == 6);  // boundary side closes the first polygon
  CHECK(inst.rotation(6) == 0);
  const SurfaceSummary s = summarize(inst);
  CHECK(s.B == 1);
  CHECK(s.faces == 2);
  CHECK(s.edges == 4);
  CHECK(s.chi == s.faces - s.edges + s.vertices);
}

TEST_CASE("ribbon endpoint: every vertex is boundary when m = n") {
  for (std::int64_t n : {2, 4, 10, 50}) {
    const ModelParams p{ModelKind::Sprime, n, n, 3};
    for (int i = 0; i < 200; ++i) {
      RngStream stream = RngStream::substream(59 + static_cast<std::uint64_t>(n), i);
      const SurfaceSummary s = summarize(build_instance(p, stream));
      REQUIRE(s.I == 0);
      REQUIRE(2 * s.genus + s.B == n / 2 + 1);
      REQUIRE(s.connected);
    }
  }
}

TEST_CASE("Euler identity and parity on random samples of all models") {
  const std::vector<ModelParams> grid{
      {ModelKind::T, 6, 3, 3},      {ModelKind::T, 5, 2, 4},      {ModelKind::T, 4, 4, 5},
      {ModelKind::Tprime, 6, 7, 3}, {ModelKind::Tprime, 3, 2, 4}, {ModelKind::S, 12, 5, 3},
      {ModelKind::S, 2, 7, 3},      {ModelKind::Sprime, 12, 6, 3}};
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const ModelParams& p = grid[g];
    for (int i = 0; i < 2'000; ++i) {
      RngStream stream = RngStream::substream(61 + g, static_cast<std::uint64_t>(i));
      const GluingInstance inst = build_instance(p, stream);
      const SurfaceSummary s = summarize(inst);
      REQUIRE(s.chi == s.faces - s.edges + s.vertices);
      REQUIRE(s.chi == 2 * s.components - 2 * s.genus - s.B);
      REQUIRE(s.genus >= 0);
      REQUIRE(s.B <= p.m);
      REQUIRE(s.B + s.I <= p.matched_darts());
      if (p.primed()) {
        const int expected = sign(inst.rotation) * ((p.matched_darts() / 2) % 2 == 0 ? 1 : -1);
        REQUIRE(sign(gamma_of(inst)) == expected);
      }
    }
  }
}

TEST_CASE("equality checks can detect a seeded fault") {
  // The shortcut comparison must have discriminating power: shifting the
  // insertion set of a fixed instance changes B for some sample.
  const ModelParams p{ModelKind::Sprime, 8, 2, 3};
  bool detected = false;
  for (int i = 0; i < 200 && !detected; ++i) {
    RngStream stream = RngStream::substream(67, static_cast<std::uint64_t>(i));
    const GluingInstance inst = build_instance(p, stream);
    const Permutation gamma = gamma_of(inst);
    std::vector<label_t> shifted;
    for (label_t c : inst.insertions) shifted.push_back((c + 1) % 8);
    std::sort(shifted.begin(), shifted.end());
    if (shifted == inst.insertions) continue;
    detected = boundary_shortcut(gamma, inst.insertions).boundary !=
               boundary_shortcut(gamma, shifted).boundary;
  }
  CHECK(detected);
}

TEST_SUITE_END();
