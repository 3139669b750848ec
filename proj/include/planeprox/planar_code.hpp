#ifndef PLANEPROX_PLANAR_CODE_HPP
#define PLANEPROX_PLANAR_CODE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "planeprox/plane_graph.hpp"

namespace planeprox {

// Malformed planar_code input; offset is the byte position of the problem.
struct FormatError : std::runtime_error {
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

inline constexpr char kPlanarCodeHeader[] = ">>planar_code<<";

// Binary planar_code: 15-byte header, then per graph one byte n followed by
// n zero-terminated clockwise neighbor lists (1-based). Single-byte mode
// only (n <= 255).
std::vector<PlaneGraph> read_planar_code(const std::string& bytes);
std::vector<PlaneGraph> read_planar_code_file(const std::string& path);

std::string write_planar_code(const std::vector<PlaneGraph>& graphs);
void write_planar_code_file(const std::string& path, const std::vector<PlaneGraph>& graphs);

void append_planar_code(std::string& out, const PlaneGraph& g);

}  // namespace planeprox

#endif
