#include "planeprox/planar_code.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

namespace planeprox {

std::vector<PlaneGraph> read_planar_code(const std::string& bytes) {
  const std::size_t hlen = std::strlen(kPlanarCodeHeader);
  if (bytes.size() < hlen || bytes.compare(0, hlen, kPlanarCodeHeader) != 0)
    throw FormatError(std::string("expected header \"") + kPlanarCodeHeader + "\"", 0);
  std::vector<PlaneGraph> out;
  std::size_t pos = hlen;
  while (pos < bytes.size()) {
    const int n = static_cast<unsigned char>(bytes[pos]);
    if (n == 0) throw FormatError("graph order byte is zero", pos);
    ++pos;
    std::vector<std::vector<Vertex>> rot(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) throw FormatError("truncated record", pos);
        const int b = static_cast<unsigned char>(bytes[pos]);
        ++pos;
        if (b == 0) break;
        if (b > n) throw FormatError("neighbor id out of range", pos - 1);
        rot[v].push_back(b - 1);
      }
    }
    try {
      out.emplace_back(std::move(rot));
    } catch (const StructuralError& e) {
      throw FormatError(std::string("invalid rotation system (") + e.what() + ")", pos);
    }
  }
  return out;
}

std::vector<PlaneGraph> read_planar_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_planar_code(ss.str());
}

void append_planar_code(std::string& out, const PlaneGraph& g) {
  const int n = g.vertex_count();
  if (n > 255)
    throw std::invalid_argument("planar_code single-byte mode requires n <= 255");
  out.push_back(static_cast<char>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) out.push_back(static_cast<char>(u + 1));
    out.push_back('\0');
  }
}

std::string write_planar_code(const std::vector<PlaneGraph>& graphs) {
  std::string out = kPlanarCodeHeader;
  for (const PlaneGraph& g : graphs) append_planar_code(out, g);
  return out;
}

void write_planar_code_file(const std::string& path, const std::vector<PlaneGraph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  const std::string bytes = write_planar_code(graphs);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace planeprox
