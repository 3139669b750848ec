#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "planeprox/constructions.hpp"
#include "planeprox/enumerate.hpp"
#include "planeprox/metrics.hpp"

using namespace planeprox;

TEST_CASE("canonical code is relabel-invariant") {
  const PlaneGraph g = build(Family::T, 9).graph;
  const CanonicalCode base = canonical_code(g);
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(g.relabeled(perm)) == base);
  }
}

TEST_CASE("K4 canonical code is unique over all 24 relabelings") {
  const PlaneGraph k4({{2, 1, 3}, {0, 2, 3}, {1, 0, 3}, {0, 1, 2}});
  const CanonicalCode base = canonical_code(k4);
  std::vector<Vertex> perm = {0, 1, 2, 3};
  do {
    CHECK(canonical_code(k4.relabeled(perm)) == base);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("mirror embedding has the same canonical code") {
  const PlaneGraph g = build(Family::Q3, 20).graph;  // includes a cube-like cap
  std::vector<std::vector<Vertex>> mirrored = g.rotation();
  for (auto& nbrs : mirrored) std::reverse(nbrs.begin(), nbrs.end());
  CHECK(canonical_code(PlaneGraph(std::move(mirrored))) == canonical_code(g));
}

TEST_CASE("triangulation counts match the published census") {
  const long expect[] = {1, 1, 2, 5, 14, 50, 233, 1249};  // n = 4..11
  for (int n = 4; n <= 11; ++n) {
    const auto all = enumerate_all({Kind::Triangulation, 3}, n);
    CHECK_MESSAGE(static_cast<long>(all.size()) == expect[n - 4], "n=" << n);
    std::set<CanonicalCode> codes;
    for (const PlaneGraph& g : all) {
      CHECK(is_triangulation(g));
      CHECK(codes.insert(canonical_code(g)).second);  // pairwise distinct
    }
  }
}

TEST_CASE("two triangulations on six vertices, distinguished by code") {
  const auto all = enumerate_all({Kind::Triangulation, 3}, 6);
  REQUIRE(all.size() == 2);
  CHECK(canonical_code(all[0]) != canonical_code(all[1]));
}

TEST_CASE("empty classes") {
  CHECK(enumerate_all({Kind::Triangulation, 5}, 13).empty());
  CHECK(enumerate_all({Kind::Quadrangulation, 3}, 9).empty());
}

TEST_CASE("every enumerated graph lies in its class") {
  for (int n = 8; n <= 10; ++n) {
    enumerate_class({Kind::Quadrangulation, 3}, n, [&](const PlaneGraph& g) {
      CHECK(is_quadrangulation(g));
      CHECK(vertex_connectivity(g) >= 3);
    });
    enumerate_class({Kind::Triangulation, 4}, n, [&](const PlaneGraph& g) {
      CHECK(is_triangulation(g));
      CHECK(vertex_connectivity(g) >= 4);
    });
  }
}

TEST_CASE("in-class generation agrees with connectivity filtering") {
  // 4-connected triangulations generated inside the class (used for n >= 14)
  // must reproduce the filtered census below
  for (int n = 6; n <= 12; ++n) {
    std::set<CanonicalCode> filtered;
    enumerate_class({Kind::Triangulation, 3}, n, [&](const PlaneGraph& g) {
      if (vertex_connectivity(g) >= 4) filtered.insert(canonical_code(g));
    });
    std::set<CanonicalCode> generated;
    enumerate_class({Kind::Triangulation, 4}, n,
                    [&](const PlaneGraph& g) { generated.insert(canonical_code(g)); });
    CHECK_MESSAGE(filtered == generated, "n=" << n);
  }
}

TEST_CASE("parallel enumeration yields the identical stream") {
  EnumerateOptions par;
  par.jobs = 4;
  for (int n : {9, 10}) {
    std::vector<CanonicalCode> serial, parallel;
    enumerate_class({Kind::Triangulation, 3}, n,
                    [&](const PlaneGraph& g) { serial.push_back(canonical_code(g)); });
    enumerate_class({Kind::Triangulation, 3}, n,
                    [&](const PlaneGraph& g) { parallel.push_back(canonical_code(g)); }, par);
    CHECK(serial == parallel);
  }
}

TEST_CASE("extremal rows carry counts and totals") {
  const auto rows = extremal_table({Kind::Triangulation, 3}, 7, 7);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].max_min_status == 7);
  CHECK(rows[0].count == 2);
  CHECK(rows[0].total_classes == 5);
}

TEST_CASE("unsupported ranges rejected") {
  CHECK_THROWS_AS(enumerate_all({Kind::Triangulation, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({Kind::Triangulation, 3}, 15), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({Kind::Quadrangulation, 3}, 7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_all({Kind::Triangulation, 5}, 11), std::invalid_argument);
}
