#ifndef PLANEPROX_CONSTRUCTIONS_HPP
#define PLANEPROX_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "planeprox/plane_graph.hpp"
#include "planeprox/rational.hpp"

namespace planeprox {

struct UnsupportedOrder : std::invalid_argument {
  explicit UnsupportedOrder(const std::string& what) : std::invalid_argument(what) {}
};

// The five conjectured proximity-maximizing families.
enum class Family { T, T4, T5, Q, Q3 };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& s);
GraphClass family_class(Family f);
int family_period(Family f);  // 6, 8, 10, 4, 6

// Built construction together with its designated status witness (the vertex
// expected to attain the minimum status).
struct Construction {
  PlaneGraph graph;
  Vertex witness;
};

bool construction_supported(Family f, int n);
Construction build(Family f, int n);  // throws UnsupportedOrder

// Piecewise closed form for pi of the family at order n, by residue.
Rational formula_proximity(Family f, int n);
// (n-1) * formula_proximity
Rational formula_min_status(Family f, int n);

// Smallest supported order in the residue class at which the built graph's
// minimum status equals the closed form; nullopt for the one branch that
// never matches (T5, n = 10k+2).
std::optional<int> anchor_order(Family f, int residue);

struct VerifyReport {
  long built_min_status;
  Rational formula_min_status;
  bool match;
};

VerifyReport verify_construction(Family f, int n);

}  // namespace planeprox

#endif
