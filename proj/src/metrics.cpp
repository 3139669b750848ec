#include "planeprox/metrics.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace planeprox {

std::vector<int> bfs_distances(const PlaneGraph& g, Vertex v) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex u : g.neighbors(x))
      if (dist[u] < 0) {
        dist[u] = dist[x] + 1;
        q.push(u);
      }
  }
  return dist;
}

LayerSequence bfs_layers(const PlaneGraph& g, Vertex v) {
  const std::vector<int> dist = bfs_distances(g, v);
  const int e = *std::max_element(dist.begin(), dist.end());
  LayerSequence ls{v, std::vector<int>(e + 1, 0)};
  for (int d : dist) ++ls.counts[d];
  return ls;
}

InvariantReport invariants(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("invariants: need n >= 2");
  InvariantReport r;
  r.sigma.resize(n);
  std::vector<int> ecc(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::vector<int> dist = bfs_distances(g, v);
    long s = 0;
    int e = 0;
    for (int d : dist) {
      s += d;
      e = std::max(e, d);
    }
    r.sigma[v] = s;
    ecc[v] = e;
  }
  const auto [mn, mx] = std::minmax_element(r.sigma.begin(), r.sigma.end());
  r.min_status = *mn;
  r.proximity = Rational(*mn, n - 1);
  r.remoteness = Rational(*mx, n - 1);
  long total = 0;
  for (long s : r.sigma) total += s;
  r.wiener = total / 2;
  r.radius = *std::min_element(ecc.begin(), ecc.end());
  r.diameter = *std::max_element(ecc.begin(), ecc.end());
  for (Vertex v = 0; v < n; ++v)
    if (ecc[v] == r.radius) r.central_vertices.push_back(v);
  return r;
}

std::vector<Vertex> active_vertices(const PlaneGraph& g, Vertex v, int i) {
  const std::vector<int> dist = bfs_distances(g, v);
  const int e = *std::max_element(dist.begin(), dist.end());
  if (i < 1 || i > e - 1)
    throw std::invalid_argument("active_vertices: layer index out of range");
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (dist[w] != i) continue;
    for (Vertex u : g.neighbors(w))
      if (dist[u] == i + 1) {
        out.push_back(w);
        break;
      }
  }
  return out;
}

}  // namespace planeprox
