#include "planeprox/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <utility>

namespace planeprox {

std::string class_name(const GraphClass& c) {
  if (c.kind == Kind::Triangulation) return "triangulation-" + std::to_string(c.min_connectivity);
  return "quadrangulation-" + std::to_string(c.min_connectivity);
}

PlaneGraph::PlaneGraph(std::vector<std::vector<Vertex>> rotation)
    : rot_(std::move(rotation)) {
  const int n = vertex_count();
  if (n == 0) throw StructuralError("empty graph");
  long total = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::set<Vertex> seen;
    for (Vertex u : rot_[v]) {
      if (u < 0 || u >= n) throw StructuralError("neighbor id out of range");
      if (u == v) throw StructuralError("self-loop at vertex " + std::to_string(v));
      if (!seen.insert(u).second)
        throw StructuralError("repeated neighbor in rotation of " + std::to_string(v));
    }
    total += static_cast<long>(rot_[v].size());
  }
  if (total % 2 != 0) throw StructuralError("odd degree sum");
  edge_count_ = static_cast<int>(total / 2);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : rot_[v])
      if (!adjacent(u, v)) throw StructuralError("asymmetric adjacency");
  // connectivity
  if (n > 1) {
    std::vector<char> vis(n, 0);
    std::queue<Vertex> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex u : rot_[v])
        if (!vis[u]) {
          vis[u] = 1;
          ++cnt;
          q.push(u);
        }
    }
    if (cnt != n) throw StructuralError("graph not connected");
  }
  // Euler: face traversal must close into 2 - n + m faces
  if (n >= 3) {
    const int f = static_cast<int>(faces().size());
    if (f != 2 - n + edge_count_)
      throw StructuralError("rotation system violates Euler's formula");
  }
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = rot_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Face> PlaneGraph::faces() const {
  const int n = vertex_count();
  // position of u within rot_[v]
  std::vector<std::map<Vertex, int>> pos(n);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < degree(v); ++i) pos[v][rot_[v][i]] = i;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Face> out;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : rot_[v]) {
      if (seen.count({v, u})) continue;
      Face face;
      Vertex a = v, b = u;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        face.push_back(a);
        // next edge clockwise after arriving at b from a
        const int i = pos[b].at(a);
        Vertex w = rot_[b][(i + 1) % degree(b)];
        a = b;
        b = w;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

PlaneGraph PlaneGraph::relabeled(const std::vector<Vertex>& perm) const {
  const int n = vertex_count();
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& dst = rot[perm[v]];
    dst.reserve(rot_[v].size());
    for (Vertex u : rot_[v]) dst.push_back(perm[u]);
  }
  return PlaneGraph(std::move(rot));
}

PlaneGraph PlaneGraph::from_faces(int vertex_count, const std::vector<Face>& faces) {
  // each undirected edge must lie in exactly two faces
  std::map<std::pair<Vertex, Vertex>, std::vector<int>> edge_faces;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const Face& f = faces[fi];
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      Vertex a = f[i], b = f[(i + 1) % k];
      if (a == b) throw StructuralError("degenerate face edge");
      if (a > b) std::swap(a, b);
      edge_faces[{a, b}].push_back(fi);
    }
  }
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() != 2)
      throw StructuralError("edge lies in " + std::to_string(fs.size()) + " faces");

  // orient faces consistently: adjacent faces traverse a shared edge oppositely
  std::vector<Face> oriented(faces.size());
  std::vector<char> done(faces.size(), 0);
  for (int start = 0; start < static_cast<int>(faces.size()); ++start) {
    if (done[start]) continue;
    oriented[start] = faces[start];
    done[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int fi = stack.back();
      stack.pop_back();
      const Face& f = oriented[fi];
      const int k = static_cast<int>(f.size());
      for (int i = 0; i < k; ++i) {
        Vertex a = f[i], b = f[(i + 1) % k];
        Vertex lo = std::min(a, b), hi = std::max(a, b);
        for (int oi : edge_faces.at({lo, hi})) {
          if (oi == fi) continue;
          const Face& g = faces[oi];
          const int kk = static_cast<int>(g.size());
          bool same_dir = false;
          for (int j = 0; j < kk; ++j)
            if (g[j] == a && g[(j + 1) % kk] == b) same_dir = true;
          if (!done[oi]) {
            oriented[oi] = g;
            if (same_dir) std::reverse(oriented[oi].begin(), oriented[oi].end());
            done[oi] = 1;
            stack.push_back(oi);
          } else {
            bool has_rev = false;
            const Face& og = oriented[oi];
            for (int j = 0; j < kk; ++j)
              if (og[j] == b && og[(j + 1) % kk] == a) has_rev = true;
            if (!has_rev) throw StructuralError("face orientation conflict");
          }
        }
      }
    }
  }

  // successor pairs: face ... u -> v -> w  gives succ_v[u] = w
  std::vector<std::map<Vertex, Vertex>> succ(vertex_count);
  for (const Face& f : oriented) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      Vertex u = f[i], v = f[(i + 1) % k], w = f[(i + 2) % k];
      if (v < 0 || v >= vertex_count) throw StructuralError("face vertex out of range");
      if (!succ[v].emplace(u, w).second)
        throw StructuralError("duplicate corner at vertex " + std::to_string(v));
    }
  }
  std::vector<std::vector<Vertex>> rot(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (succ[v].empty()) throw StructuralError("isolated vertex in face list");
    Vertex start = succ[v].begin()->first;
    Vertex cur = start;
    do {
      rot[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) throw StructuralError("broken rotation cycle");
      cur = it->second;
      if (rot[v].size() > succ[v].size())
        throw StructuralError("rotation at vertex " + std::to_string(v) +
                              " is not a single cycle");
    } while (cur != start);
    if (rot[v].size() != succ[v].size())
      throw StructuralError("rotation at vertex " + std::to_string(v) +
                            " is not a single cycle");
  }
  return PlaneGraph(std::move(rot));
}

bool is_triangulation(const PlaneGraph& g) {
  if (g.vertex_count() < 4) return false;
  for (const Face& f : g.faces())
    if (f.size() != 3) return false;
  return true;
}

bool is_bipartite(const PlaneGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::queue<Vertex> q;
  color[0] = 0;
  q.push(0);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex u : g.neighbors(v)) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        q.push(u);
      } else if (color[u] == color[v]) {
        return false;
      }
    }
  }
  return true;
}

bool is_quadrangulation(const PlaneGraph& g) {
  if (g.vertex_count() < 4 || !is_bipartite(g)) return false;
  for (const Face& f : g.faces())
    if (f.size() != 4) return false;
  return true;
}

namespace {

// max number of internally vertex-disjoint s-t paths, stopped early at cap;
// unit-capacity flow on the split network, BFS augmenting paths
int vertex_flow(const PlaneGraph& g, Vertex s, Vertex t, int cap) {
  const int n = g.vertex_count();
  // node 2v = in, 2v+1 = out
  std::vector<std::vector<int>> adj(2 * n);
  std::map<std::pair<int, int>, int> capmap;
  auto add = [&](int a, int b, int c) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    capmap[{a, b}] += c;
    capmap[{b, a}] += 0;
  };
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? cap + 1 : 1);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) add(2 * v + 1, 2 * u, cap + 1);
  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  while (flow < cap) {
    std::vector<int> prev(2 * n, -1);
    std::queue<int> q;
    q.push(src);
    prev[src] = src;
    while (!q.empty() && prev[dst] == -1) {
      int v = q.front();
      q.pop();
      for (int u : adj[v])
        if (prev[u] == -1 && capmap[{v, u}] > 0) {
          prev[u] = v;
          q.push(u);
        }
    }
    if (prev[dst] == -1) break;
    for (int v = dst; v != src; v = prev[v]) {
      capmap[{prev[v], v}] -= 1;
      capmap[{v, prev[v]}] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
  // complete graph: kappa = n - 1
  int mindeg = n, minv = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < mindeg) {
      mindeg = g.degree(v);
      minv = v;
    }
  if (mindeg == n - 1) return n - 1;
  int best = mindeg;
  // Even's scheme: flows from a min-degree vertex to all non-neighbors, and
  // between all non-adjacent pairs of its neighbors.
  for (Vertex t = 0; t < n; ++t)
    if (t != minv && !g.adjacent(minv, t)) best = std::min(best, vertex_flow(g, minv, t, best));
  const auto& nb = g.neighbors(minv);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) best = std::min(best, vertex_flow(g, nb[i], nb[j], best));
  return best;
}

std::optional<GraphClass> classify(const PlaneGraph& g) {
  if (g.vertex_count() < 4) return std::nullopt;
  if (is_triangulation(g)) {
    int k = vertex_connectivity(g);
    k = std::min(k, 5);
    return GraphClass{Kind::Triangulation, std::max(k, 3)};
  }
  if (is_quadrangulation(g)) {
    int k = vertex_connectivity(g);
    k = std::min(k, 3);
    return GraphClass{Kind::Quadrangulation, std::max(k, 2)};
  }
  return std::nullopt;
}

}  // namespace planeprox
