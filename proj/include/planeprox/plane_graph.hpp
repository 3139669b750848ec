#ifndef PLANEPROX_PLANE_GRAPH_HPP
#define PLANEPROX_PLANE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planeprox {

// Raised when a rotation system or face list is not a valid embedding of a
// simple connected plane graph.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

using Vertex = int;
using Face = std::vector<Vertex>;

enum class Kind { Triangulation, Quadrangulation };

// The five legal (kind, min connectivity) pairs.
struct GraphClass {
  Kind kind;
  int min_connectivity;  // {3,4,5} for triangulations, {2,3} for quadrangulations

  bool operator==(const GraphClass&) const = default;
};

std::string class_name(const GraphClass& c);

// Simple connected plane graph as a rotation system: for each vertex the
// clockwise cyclic order of its neighbours. Immutable after construction;
// the constructor validates symmetry, simplicity and Euler's formula.
class PlaneGraph {
 public:
  explicit PlaneGraph(std::vector<std::vector<Vertex>> rotation);

  // Stitches rotations from a face list (each face a cyclic vertex sequence;
  // orientations may be mixed, they are made consistent here).
  static PlaneGraph from_faces(int vertex_count, const std::vector<Face>& faces);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return rot_[v]; }
  const std::vector<std::vector<Vertex>>& rotation() const { return rot_; }

  bool adjacent(Vertex u, Vertex v) const;

  // Face traversal of the rotation system; every directed edge lies in
  // exactly one face.
  std::vector<Face> faces() const;

  PlaneGraph relabeled(const std::vector<Vertex>& perm) const;

 private:
  std::vector<std::vector<Vertex>> rot_;
  int edge_count_ = 0;
};

bool is_triangulation(const PlaneGraph& g);
bool is_quadrangulation(const PlaneGraph& g);
bool is_bipartite(const PlaneGraph& g);

// Exact vertex connectivity via unit-capacity vertex flows. Throws
// std::invalid_argument on disconnected input or n < 2.
int vertex_connectivity(const PlaneGraph& g);

// Most specific legal class of g, or nullopt if g is neither a triangulation
// nor a quadrangulation.
std::optional<GraphClass> classify(const PlaneGraph& g);

}  // namespace planeprox

#endif
