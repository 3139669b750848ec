#ifndef PLANEPROX_METRICS_HPP
#define PLANEPROX_METRICS_HPP

#include <vector>

#include "planeprox/plane_graph.hpp"
#include "planeprox/rational.hpp"

namespace planeprox {

// BFS layer cardinalities from a root: counts[i] = |{u : d(root,u) = i}|,
// counts[0] = 1, last index is the root's eccentricity.
struct LayerSequence {
  Vertex root;
  std::vector<int> counts;

  int eccentricity() const { return static_cast<int>(counts.size()) - 1; }
};

struct InvariantReport {
  std::vector<long> sigma;  // per-vertex total distance
  long min_status;
  Rational proximity;
  Rational remoteness;
  long wiener;
  int radius;
  int diameter;
  std::vector<Vertex> central_vertices;
};

std::vector<int> bfs_distances(const PlaneGraph& g, Vertex v);

LayerSequence bfs_layers(const PlaneGraph& g, Vertex v);

// Throws std::invalid_argument for n = 1 (average distance undefined).
InvariantReport invariants(const PlaneGraph& g);

// A_i(v): vertices at distance i from v having a neighbour at distance i+1.
// Requires 1 <= i <= e(v) - 1.
std::vector<Vertex> active_vertices(const PlaneGraph& g, Vertex v, int i);

}  // namespace planeprox

#endif
