#ifndef PLANEPROX_ENUMERATE_HPP
#define PLANEPROX_ENUMERATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "planeprox/plane_graph.hpp"

namespace planeprox {

// Byte string identifying the embedded graph up to isomorphism including
// reflections: lexicographic minimum, over all root directed edges and both
// orientations, of the breadth-first rotation code.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const PlaneGraph& g);

struct EnumerateOptions {
  int jobs = 1;
};

// Isomorph-free stream of the class at order n, sorted by canonical code.
// Supported ranges: triangulations 4..14, 4-connected 6..16, 5-connected
// 12..18, quadrangulations 4..15, 3-connected quadrangulations 8..15.
void enumerate_class(const GraphClass& c, int n,
                     const std::function<void(const PlaneGraph&)>& visit,
                     const EnumerateOptions& opts = {});

std::vector<PlaneGraph> enumerate_all(const GraphClass& c, int n,
                                      const EnumerateOptions& opts = {});

bool enumerate_supported(const GraphClass& c, int n);

struct ExtremalRow {
  int order;
  long max_min_status;  // -1 when the class is empty at this order
  long count;           // isomorphism classes attaining the maximum
  long total_classes;
};

std::vector<ExtremalRow> extremal_table(const GraphClass& c, int n_min, int n_max,
                                        const EnumerateOptions& opts = {});

}  // namespace planeprox

#endif
