#include "planeprox/paper_tables.hpp"

#include <stdexcept>

namespace planeprox {

namespace {

// Largest minimum status and number of optimal classes per order, for the
// five graph classes.
const std::vector<ReferenceRow> kTri3 = {
    {4, 3, 1},   {5, 4, 1},   {6, 6, 1},   {7, 7, 2},   {8, 9, 2},
    {9, 11, 1},  {10, 13, 1}, {11, 14, 44}, {12, 18, 1}, {13, 19, 2},
    {14, 22, 1}, {15, 24, 2}, {16, 27, 2},  {17, 30, 1}, {18, 33, 3},
};

const std::vector<ReferenceRow> kTri4 = {
    {6, 6, 1},    {7, 7, 1},    {8, 9, 1},    {9, 11, 1},   {10, 13, 1},
    {11, 14, 10}, {12, 18, 1},  {13, 19, 1},  {14, 21, 13}, {15, 24, 1},
    {16, 27, 1},  {17, 29, 5},  {18, 32, 2},  {19, 34, 28}, {20, 37, 13},
    {21, 40, 6},  {22, 44, 5},
};

const std::vector<ReferenceRow> kTri5 = {
    {12, 18, 1},  {13, -1, 0},  {14, 21, 1},  {15, 24, 1},  {16, 27, 1},
    {17, 29, 1},  {18, 32, 1},  {19, 34, 4},  {20, 37, 6},  {21, 40, 3},
    {22, 44, 2},  {23, 46, 5},  {24, 49, 19}, {25, 52, 18}, {26, 56, 3},
    {27, 60, 3},  {28, 63, 3},  {29, 66, 2},  {30, 69, 59}, {31, 73, 2},
    {32, 80, 1},
};

const std::vector<ReferenceRow> kQuad2 = {
    {4, 4, 1},   {5, 5, 1},   {6, 7, 1},   {7, 8, 2},   {8, 12, 1},
    {9, 13, 1},  {10, 16, 1}, {11, 18, 1}, {12, 20, 19}, {13, 23, 1},
    {14, 28, 1}, {15, 30, 1}, {16, 34, 2}, {17, 38, 1},  {18, 43, 1},
    {19, 47, 1}, {20, 52, 2},
};

const std::vector<ReferenceRow> kQuad3 = {
    {8, 12, 1},  {9, -1, 0},  {10, 15, 1}, {11, 18, 1}, {12, 20, 2},
    {13, 22, 1}, {14, 28, 1}, {15, 29, 1}, {16, 32, 4}, {17, 35, 1},
    {18, 39, 1}, {19, 41, 3}, {20, 44, 23}, {21, 47, 7}, {22, 55, 1},
    {23, 57, 1}, {24, 60, 16}, {25, 65, 1}, {26, 71, 1}, {27, 74, 3},
    {28, 80, 2},
};

}  // namespace

const std::vector<ReferenceRow>& reference_table(const GraphClass& c) {
  if (c.kind == Kind::Triangulation) {
    switch (c.min_connectivity) {
      case 3: return kTri3;
      case 4: return kTri4;
      case 5: return kTri5;
    }
  } else {
    switch (c.min_connectivity) {
      case 2: return kQuad2;
      case 3: return kQuad3;
    }
  }
  throw std::invalid_argument("reference_table: no such class");
}

std::optional<ReferenceRow> reference_row(const GraphClass& c, int order) {
  for (const ReferenceRow& row : reference_table(c))
    if (row.order == order) return row;
  return std::nullopt;
}

}  // namespace planeprox
