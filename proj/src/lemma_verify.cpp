#include "planeprox/lemma_verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "planeprox/metrics.hpp"

namespace planeprox {

std::vector<LemmaViolation> check_layer_lemma(const PlaneGraph& g, int k) {
  std::vector<LemmaViolation> out;
  LayerConstraintProfile profile{};
  std::string name;
  if (k == 2) {
    if (!is_quadrangulation(g))
      throw std::invalid_argument("check_layer_lemma: quad mode needs a quadrangulation");
    profile = {2, 4};
    name = "layer-quad";
  } else {
    if (k < 3 || k > 5) throw std::invalid_argument("check_layer_lemma: k in {2,3,4,5}");
    if (vertex_connectivity(g) < k)
      throw std::invalid_argument("check_layer_lemma: graph is not " + std::to_string(k) +
                                  "-connected");
    int ell = 0;
    for (const Face& f : g.faces()) ell = std::max(ell, static_cast<int>(f.size()));
    profile = {k, ell};
    name = "layer-" + std::to_string(k);
  }
  const InvariantReport inv = invariants(g);
  const int r = inv.radius;
  for (Vertex v : inv.central_vertices) {
    const LayerSequence ls = bfs_layers(g, v);
    for (int i = 1; i <= ls.eccentricity(); ++i) {
      const int need = profile.lower_bound(i, r);
      if (ls.counts[i] < need)
        out.push_back({name, v, i, ls.counts[i], need});
    }
  }
  return out;
}

std::vector<LemmaViolation> check_active_face_lemma(const PlaneGraph& g) {
  if (!is_quadrangulation(g))
    throw std::invalid_argument("check_active_face_lemma: needs a quadrangulation");
  // vertex pairs sharing a face
  const int n = g.vertex_count();
  std::vector<std::set<Vertex>> coface(n);
  for (const Face& f : g.faces())
    for (Vertex a : f)
      for (Vertex b : f)
        if (a != b) coface[a].insert(b);
  std::vector<LemmaViolation> out;
  for (Vertex v = 0; v < n; ++v) {
    const std::vector<int> dist = bfs_distances(g, v);
    const int e = *std::max_element(dist.begin(), dist.end());
    for (int i = 1; i + 1 <= e; ++i) {
      const std::vector<Vertex> act = active_vertices(g, v, i);
      for (Vertex w : act) {
        bool ok = false;
        for (Vertex w2 : act)
          if (w2 != w && coface[w].count(w2)) {
            ok = true;
            break;
          }
        if (!ok) out.push_back({"active-face", w, i, 0, 1});
      }
    }
  }
  return out;
}

}  // namespace planeprox
