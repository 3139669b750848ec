#include "planeprox/bounds.hpp"

#include <stdexcept>

#include "planeprox/metrics.hpp"

namespace planeprox {

namespace {

bool in_clipped(int i, int lo, int hi, int r) {
  if (lo < 1) lo = 1;
  if (hi > r - 1) hi = r - 1;
  return lo <= i && i <= hi;
}

}  // namespace

int LayerConstraintProfile::lower_bound(int i, int r) const {
  if (i == 0) return 1;
  if (i >= r) return 1;
  int lb = 1;
  auto apply = [&](int value, int lo, int hi) {
    if (in_clipped(i, lo, hi, r) && value > lb) lb = value;
  };
  if (connectivity == 2) {
    // quadrangulation layer lemma
    apply(2, 1, 2);
    apply(2, r - 2, r - 1);
    apply(4, 3, r - 3);
    return lb;
  }
  const int h = ell / 2;
  if (connectivity == 3) {
    apply(3, 1, h);
    apply(3, r - h, r - 1);
    apply(4, h + 1, ell);
    apply(4, r - ell, r - h - 1);
    apply(6, ell + 1, r - ell - 1);
  } else if (connectivity == 4) {
    const int th = 3 * ell / 2;
    apply(4, 1, ell);
    apply(4, r - ell, r - 1);
    apply(6, ell + 1, th);
    apply(6, r - th, r - ell - 1);
    apply(8, th + 1, r - th - 1);
  } else {
    const int th = 3 * ell / 2;
    apply(5, 1, ell);
    apply(5, r - ell, r - 1);
    apply(6, ell + 1, th);
    apply(6, r - th, r - ell - 1);
    apply(8, th + 1, 2 * ell);
    apply(8, r - 2 * ell, r - th - 1);
    apply(10, 2 * ell + 1, r - 2 * ell - 1);
  }
  return lb;
}

LayerConstraintProfile profile_for(const GraphClass& c) {
  if (c.kind == Kind::Triangulation) return {c.min_connectivity, 3};
  if (c.min_connectivity == 3) return {3, 4};
  return {2, 4};
}

Rational theorem_bound(const GraphClass& c, int n) {
  if (c.kind == Kind::Triangulation) {
    const int nmin = c.min_connectivity == 3 ? 4 : c.min_connectivity == 4 ? 6 : 12;
    if (n < nmin) throw std::invalid_argument("theorem_bound: n below class minimum");
    switch (c.min_connectivity) {
      case 3: return Rational(n + 19, 12) + Rational(25, 3 * (n - 1));
      case 4: return Rational(n + 35, 16) + Rational(91, 4 * (n - 1));
      default: return Rational(n + 57, 20) + Rational(393, 10 * (n - 1));
    }
  }
  const int nmin = c.min_connectivity == 2 ? 4 : 8;
  if (n < nmin) throw std::invalid_argument("theorem_bound: n below class minimum");
  if (c.min_connectivity == 2) return Rational(n + 11, 8) + Rational(9, 2 * (n - 1));
  return Rational(n + 25, 12) + Rational(169, 12 * (n - 1));
}

BoundResult maximize_F(const LayerConstraintProfile& profile, int n) {
  // For fixed r the maximizer fills every n_i at its lower bound and puts
  // the surplus in n_r (pushing mass outward can only increase F).
  long best = -1;
  std::vector<int> witness;
  for (int r = 1; r < n; ++r) {
    long base = 0;
    long f = 0;
    std::vector<int> seq(r + 1);
    for (int i = 0; i < r; ++i) {
      seq[i] = profile.lower_bound(i, r);
      base += seq[i];
      f += static_cast<long>(i) * seq[i];
    }
    const long surplus = n - base;
    if (surplus < 1) continue;  // n_r >= 1 infeasible
    seq[r] = static_cast<int>(surplus);
    f += static_cast<long>(r) * surplus;
    if (f > best) {
      best = f;
      witness = seq;
    }
  }
  if (best < 0) throw std::invalid_argument("maximize_F: no admissible sequence");
  BoundResult res;
  res.sigma_upper = Rational(best);
  res.proximity_upper = Rational(best, n - 1);
  res.witness_sequence = std::move(witness);
  return res;
}

BoundCheck check_bound(const PlaneGraph& g) {
  const auto cls = classify(g);
  if (!cls) throw std::invalid_argument("check_bound: graph is unclassifiable");
  const InvariantReport inv = invariants(g);
  const Rational bound = theorem_bound(*cls, g.vertex_count());
  return {inv.proximity, bound, inv.proximity <= bound};
}

}  // namespace planeprox
