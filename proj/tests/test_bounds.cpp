#include <doctest.h>

#include <functional>

#include "planeprox/bounds.hpp"
#include "planeprox/constructions.hpp"
#include "planeprox/metrics.hpp"

using namespace planeprox;

namespace {

// exhaustive maximization over all admissible (r, sequence) pairs
long brute_force_F(const LayerConstraintProfile& profile, int n) {
  long best = -1;
  for (int r = 1; r < n; ++r) {
    std::vector<int> lb(r + 1, 1);
    long lbsum = 0;
    for (int i = 0; i <= r; ++i) {
      lb[i] = profile.lower_bound(i, r);
      lbsum += lb[i];
    }
    if (lbsum > n) continue;
    // distribute the surplus over positions 1..r in all ways
    std::function<void(int, long, long)> rec = [&](int i, long left, long f) {
      if (i == r) {
        f += static_cast<long>(r) * (lb[r] + left);
        if (f > best) best = f;
        return;
      }
      for (long add = 0; add <= left; ++add)
        rec(i + 1, left - add, f + static_cast<long>(i) * (lb[i] + add));
    };
    rec(1, n - lbsum, 0);
  }
  return best;
}

}  // namespace

TEST_CASE("theorem bound closed forms") {
  CHECK(theorem_bound({Kind::Triangulation, 3}, 12) == Rational(31, 12) + Rational(25, 33));
  CHECK(theorem_bound({Kind::Quadrangulation, 2}, 12) == Rational(23, 8) + Rational(9, 22));
  CHECK(theorem_bound({Kind::Triangulation, 5}, 12) == Rational(69, 20) + Rational(393, 110));
  CHECK_THROWS_AS(theorem_bound({Kind::Triangulation, 5}, 11), std::invalid_argument);
  CHECK_THROWS_AS(theorem_bound({Kind::Quadrangulation, 3}, 7), std::invalid_argument);
}

TEST_CASE("sigma bound for triangulations stays below the proof's closed form") {
  const LayerConstraintProfile profile = profile_for({Kind::Triangulation, 3});
  for (int n = 8; n <= 120; ++n) {
    const BoundResult b = maximize_F(profile, n);
    // (n^2 + 18n + 81) / 12
    CHECK(b.sigma_upper <= Rational(static_cast<long>(n) * n + 18 * n + 81, 12));
    long sum = 0;
    for (int x : b.witness_sequence) sum += x;
    CHECK(sum == n);
    CHECK(b.witness_sequence[0] == 1);
    CHECK(b.proximity_upper == b.sigma_upper / Rational(n - 1));
  }
}

TEST_CASE("the proof's surplus term peaks at 10") {
  // -x^2 + 20x attains its maximum 100 at x = 10
  long best = -1, arg = 0;
  for (long x = 0; x <= 20; ++x)
    if (-x * x + 20 * x > best) {
      best = -x * x + 20 * x;
      arg = x;
    }
  CHECK(best == 100);
  CHECK(arg == 10);
}

TEST_CASE("greedy oracle equals brute force for n <= 20") {
  const GraphClass classes[] = {{Kind::Triangulation, 3}, {Kind::Triangulation, 4},
                                {Kind::Triangulation, 5}, {Kind::Quadrangulation, 2},
                                {Kind::Quadrangulation, 3}};
  for (const GraphClass& c : classes) {
    const LayerConstraintProfile profile = profile_for(c);
    for (int n = 4; n <= 20; ++n) {
      const long brute = brute_force_F(profile, n);
      if (brute < 0) continue;
      CHECK_MESSAGE(maximize_F(profile, n).sigma_upper == Rational(brute),
                    class_name(c) << " n=" << n);
    }
  }
}

TEST_CASE("oracle never exceeds the closed-form bound on sigma") {
  const GraphClass classes[] = {{Kind::Triangulation, 3}, {Kind::Triangulation, 4},
                                {Kind::Triangulation, 5}, {Kind::Quadrangulation, 2},
                                {Kind::Quadrangulation, 3}};
  for (const GraphClass& c : classes) {
    const LayerConstraintProfile profile = profile_for(c);
    Rational prev(0);
    const int start = c.kind == Kind::Triangulation && c.min_connectivity == 5 ? 12 : 8;
    for (int n = start; n <= 120; ++n) {
      const BoundResult b = maximize_F(profile, n);
      CHECK(Rational(n - 1) * theorem_bound(c, n) >= b.sigma_upper);
      CHECK(b.sigma_upper >= prev);  // monotone in n
      prev = b.sigma_upper;
    }
  }
}

TEST_CASE("check_bound on concrete graphs") {
  const BoundCheck ic = check_bound(build(Family::T5, 12).graph);
  CHECK(ic.pi == Rational(18, 11));
  CHECK(ic.bound == Rational(69, 20) + Rational(393, 110));
  CHECK(ic.ok);
  const PlaneGraph k4({{2, 1, 3}, {0, 2, 3}, {1, 0, 3}, {0, 1, 2}});
  const BoundCheck kc = check_bound(k4);
  CHECK(kc.pi == Rational(1));
  CHECK(kc.ok);
  // a path is not classifiable
  CHECK_THROWS_AS(check_bound(PlaneGraph({{1}, {0, 2}, {1}})), std::invalid_argument);
}

TEST_CASE("profile ranges clip at the radius; icosahedron style radii are vacuous") {
  const LayerConstraintProfile p5 = profile_for({Kind::Triangulation, 5});
  // r = 3: only layers 1 and 2 constrained, both at 5
  CHECK(p5.lower_bound(1, 3) == 5);
  CHECK(p5.lower_bound(2, 3) == 5);
  CHECK(p5.lower_bound(3, 3) == 1);
  const LayerConstraintProfile pq = profile_for({Kind::Quadrangulation, 2});
  CHECK(pq.lower_bound(1, 3) == 2);
  CHECK(pq.lower_bound(2, 3) == 2);
  CHECK(pq.lower_bound(3, 3) == 1);
  CHECK(pq.lower_bound(3, 7) == 4);
}
