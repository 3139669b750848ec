#ifndef PLANEPROX_BOUNDS_HPP
#define PLANEPROX_BOUNDS_HPP

#include <vector>

#include "planeprox/plane_graph.hpp"
#include "planeprox/rational.hpp"

namespace planeprox {

// Per-layer lower bounds on n_i(v) for a central vertex v, as a function of
// the radius. Encodes the layer lemmas for 3-/4-/5-connected plane graphs
// (with maximal face length ell) and for quadrangulations; all index ranges
// are clipped to [1, r-1].
struct LayerConstraintProfile {
  int connectivity;  // 3, 4, 5, or 2 for the quadrangulation profile
  int ell;           // maximal face length (ignored for the quadrangulation profile)

  // lower bound on n_i for a graph of radius r (i in [0, r])
  int lower_bound(int i, int r) const;
};

LayerConstraintProfile profile_for(const GraphClass& c);

struct BoundResult {
  Rational sigma_upper;
  Rational proximity_upper;
  std::vector<int> witness_sequence;  // maximizing (n_0', ..., n_r')
};

// Closed-form upper bound on pi for the class at order n.
Rational theorem_bound(const GraphClass& c, int n);

// Exact maximization of F(X) = sum i*x_i over all radii r and integer
// sequences with x_0 = 1, x_r >= 1, sum = n and the profile's lower bounds;
// independent of the closed form.
BoundResult maximize_F(const LayerConstraintProfile& profile, int n);

struct BoundCheck {
  Rational pi;
  Rational bound;
  bool ok;
};

// pi(g) <= theorem_bound(classify(g), n); throws std::invalid_argument for
// unclassifiable graphs.
BoundCheck check_bound(const PlaneGraph& g);

}  // namespace planeprox

#endif
