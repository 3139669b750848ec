#ifndef PLANEPROX_LEMMA_VERIFY_HPP
#define PLANEPROX_LEMMA_VERIFY_HPP

#include <string>
#include <vector>

#include "planeprox/bounds.hpp"
#include "planeprox/plane_graph.hpp"

namespace planeprox {

struct LemmaViolation {
  std::string lemma;     // "layer-3", "layer-4", "layer-5", "layer-quad", "active-face"
  Vertex vertex;         // central vertex (layer lemmas) or the active vertex
  int layer;             // layer index i
  int observed;          // observed n_i, or 0 for active-face violations
  int required;          // required lower bound, or 1
};

// Layer lemma for k-connected plane graphs (k in {3,4,5}; ell = maximal face
// length of g) or, with k = 2, the quadrangulation layer lemma. Checked at
// every central vertex. Throws std::invalid_argument when g does not satisfy
// the lemma's hypothesis.
std::vector<LemmaViolation> check_layer_lemma(const PlaneGraph& g, int k);

// For every vertex v, layer 1 <= i <= e(v)-1 and active vertex w in A_i(v),
// some other active vertex of A_i(v) shares a face with w. Quadrangulations
// only.
std::vector<LemmaViolation> check_active_face_lemma(const PlaneGraph& g);

}  // namespace planeprox

#endif
