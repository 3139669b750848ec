#ifndef PLANEPROX_PAPER_TABLES_HPP
#define PLANEPROX_PAPER_TABLES_HPP

#include <optional>
#include <vector>

#include "planeprox/plane_graph.hpp"

namespace planeprox {

// One row of the published largest-minimum-status summaries: order, the
// maximum minimum status over the class (-1 when the class is empty at this
// order), and how many isomorphism classes attain it.
struct ReferenceRow {
  int order;
  long max_min_status;
  long count;
};

// Reference summary for the class; empty optional if none is embedded.
const std::vector<ReferenceRow>& reference_table(const GraphClass& c);

std::optional<ReferenceRow> reference_row(const GraphClass& c, int order);

}  // namespace planeprox

#endif
