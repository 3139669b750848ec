#include "planeprox/constructions.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "planeprox/metrics.hpp"

namespace planeprox {

std::string family_name(Family f) {
  switch (f) {
    case Family::T: return "tri";
    case Family::T4: return "tri4";
    case Family::T5: return "tri5";
    case Family::Q: return "quad";
    case Family::Q3: return "quad3";
  }
  return {};
}

std::optional<Family> parse_family(const std::string& s) {
  if (s == "tri") return Family::T;
  if (s == "tri4") return Family::T4;
  if (s == "tri5") return Family::T5;
  if (s == "quad") return Family::Q;
  if (s == "quad3") return Family::Q3;
  return std::nullopt;
}

GraphClass family_class(Family f) {
  switch (f) {
    case Family::T: return {Kind::Triangulation, 3};
    case Family::T4: return {Kind::Triangulation, 4};
    case Family::T5: return {Kind::Triangulation, 5};
    case Family::Q: return {Kind::Quadrangulation, 2};
    case Family::Q3: return {Kind::Quadrangulation, 3};
  }
  return {};
}

int family_period(Family f) {
  switch (f) {
    case Family::T: return 6;
    case Family::T4: return 8;
    case Family::T5: return 10;
    case Family::Q: return 4;
    case Family::Q3: return 6;
  }
  return 0;
}

namespace {

struct CR {
  int dc;  // column offset within a strip
  int r;   // 1-based row
};

// ---------------------------------------------------------------------- T
// Columns of 3 (rows a=1,b=2,c=3) chained by a fixed 6-triangle strip;
// residue extras c0 (n%3>=1) and a0 (n%3==2) stack onto the left end.

constexpr std::array<std::array<CR, 3>, 6> kTStrip = {{
    {{{0, 1}, {0, 3}, {1, 1}}},
    {{{0, 1}, {1, 1}, {1, 2}}},
    {{{0, 1}, {1, 2}, {0, 2}}},
    {{{0, 2}, {1, 2}, {0, 3}}},
    {{{1, 2}, {1, 3}, {0, 3}}},
    {{{1, 1}, {0, 3}, {1, 3}}},
}};

Construction build_T(int n) {
  if (n < 6) throw UnsupportedOrder("tri construction needs n >= 6");
  const int M = n / 3, r = n % 3;
  auto id = [&](int col, int row) { return (col - 1) * 3 + row - 1; };
  const Vertex c0 = 3 * M, a0 = 3 * M + 1;
  std::vector<Face> fs;
  for (int i = 1; i < M; ++i)
    for (const auto& f : kTStrip)
      fs.push_back({id(i + f[0].dc, f[0].r), id(i + f[1].dc, f[1].r), id(i + f[2].dc, f[2].r)});
  fs.push_back({id(M, 1), id(M, 3), id(M, 2)});
  if (r == 0) {
    fs.push_back({id(1, 1), id(1, 2), id(1, 3)});
  } else if (r == 1) {
    fs.push_back({c0, id(1, 1), id(1, 3)});
    fs.push_back({c0, id(1, 3), id(1, 2)});
    fs.push_back({c0, id(1, 2), id(1, 1)});
  } else {
    fs.push_back({id(1, 3), c0, id(1, 2)});
    fs.push_back({id(1, 3), id(1, 1), c0});
    fs.push_back({id(1, 1), a0, c0});
    fs.push_back({id(1, 1), id(1, 2), a0});
    fs.push_back({c0, a0, id(1, 2)});
  }
  const int wcol = (r < 2) ? (M + 1) / 2 : M / 2;
  return {PlaneGraph::from_faces(n, fs), id(wcol, 3)};
}

// --------------------------------------------------------------------- T4
// Columns of 4 (a 4-cycle 1-2-4-3) with an 8-triangle strip, a left apex,
// and one of four right caps; n = 1 + 4M + t with t in {1..4}.

constexpr std::array<std::array<CR, 3>, 8> kT4Strip = {{
    {{{1, 4}, {0, 4}, {1, 2}}},
    {{{1, 4}, {1, 3}, {0, 4}}},
    {{{0, 1}, {0, 3}, {1, 1}}},
    {{{0, 1}, {1, 1}, {0, 2}}},
    {{{0, 2}, {1, 1}, {1, 2}}},
    {{{0, 2}, {1, 2}, {0, 4}}},
    {{{0, 4}, {1, 3}, {0, 3}}},
    {{{1, 1}, {0, 3}, {1, 3}}},
}};

// cap faces: row > 0 refers to the last column, 0 = cap vertex by index
struct CapTok {
  int row;  // 0 = extra vertex, else row of last column
  int ext;  // extra index when row == 0
};
using CapFace = std::array<CapTok, 3>;

const std::vector<CapFace> kT4Cap1 = {
    {{{1, 0}, {0, 0}, {3, 0}}}, {{{1, 0}, {2, 0}, {0, 0}}},
    {{{0, 0}, {4, 0}, {3, 0}}}, {{{0, 0}, {2, 0}, {4, 0}}}};
const std::vector<CapFace> kT4Cap2 = {
    {{{1, 0}, {0, 0}, {3, 0}}}, {{{1, 0}, {2, 0}, {0, 0}}},
    {{{0, 0}, {0, 1}, {3, 0}}}, {{{0, 0}, {2, 0}, {0, 1}}},
    {{{4, 0}, {3, 0}, {0, 1}}}, {{{4, 0}, {0, 1}, {2, 0}}}};
const std::vector<CapFace> kT4Cap3 = {
    {{{1, 0}, {0, 0}, {3, 0}}}, {{{1, 0}, {2, 0}, {0, 0}}},
    {{{0, 0}, {0, 1}, {3, 0}}}, {{{0, 0}, {0, 2}, {0, 1}}},
    {{{0, 0}, {2, 0}, {0, 2}}}, {{{4, 0}, {3, 0}, {0, 1}}},
    {{{4, 0}, {0, 2}, {2, 0}}}, {{{4, 0}, {0, 1}, {0, 2}}}};
const std::vector<CapFace> kT4Cap4 = {
    {{{3, 0}, {4, 0}, {0, 2}}}, {{{3, 0}, {0, 0}, {1, 0}}},
    {{{3, 0}, {0, 2}, {0, 0}}}, {{{0, 2}, {4, 0}, {0, 3}}},
    {{{0, 2}, {0, 3}, {0, 0}}}, {{{1, 0}, {0, 0}, {2, 0}}},
    {{{0, 0}, {0, 3}, {0, 1}}}, {{{0, 0}, {0, 1}, {2, 0}}},
    {{{4, 0}, {0, 1}, {0, 3}}}, {{{4, 0}, {2, 0}, {0, 1}}}};

Construction build_T4(int n) {
  const int t = ((n - 2) % 4) + 1;
  const int M = (n - 1 - t) / 4;
  if (M < 2) throw UnsupportedOrder("tri4 construction needs n >= 10");
  auto id = [&](int col, int row) { return (col - 1) * 4 + row - 1; };
  const Vertex apex = 4 * M;
  auto ext = [&](int j) { return 4 * M + 1 + j; };  // cap vertices, in order
  std::vector<Face> fs;
  fs.push_back({apex, id(1, 2), id(1, 1)});
  fs.push_back({apex, id(1, 1), id(1, 3)});
  fs.push_back({apex, id(1, 4), id(1, 2)});
  fs.push_back({apex, id(1, 3), id(1, 4)});
  for (int i = 1; i < M; ++i)
    for (const auto& f : kT4Strip)
      fs.push_back({id(i + f[0].dc, f[0].r), id(i + f[1].dc, f[1].r), id(i + f[2].dc, f[2].r)});
  const std::vector<CapFace>* cap =
      t == 1 ? &kT4Cap1 : t == 2 ? &kT4Cap2 : t == 3 ? &kT4Cap3 : &kT4Cap4;
  for (const auto& f : *cap) {
    Face face;
    for (const CapTok& tk : f)
      face.push_back(tk.row == 0 ? ext(tk.ext) : id(M, tk.row));
    fs.push_back(face);
  }
  Vertex w;
  if (M % 2 == 0)
    w = id(M / 2 + 1, 1);
  else
    w = (t <= 2) ? id((M + 1) / 2, 2) : id((M + 3) / 2, 1);
  return {PlaneGraph::from_faces(n, fs), w};
}

// --------------------------------------------------------------------- T5
// Columns of 5 (a 5-cycle 1-2-4-5-3) between two apexes; three strip kinds
// and four residue patches; n = 2 + 5M + t with t in {0..4}.

constexpr std::array<std::array<CR, 3>, 10> kT5StripO = {{
    {{{0, 1}, {0, 2}, {1, 1}}}, {{{0, 1}, {0, 3}, {1, 2}}},
    {{{0, 1}, {1, 1}, {1, 2}}}, {{{0, 2}, {0, 4}, {1, 3}}},
    {{{0, 2}, {1, 1}, {1, 3}}}, {{{0, 3}, {0, 5}, {1, 4}}},
    {{{0, 3}, {1, 2}, {1, 4}}}, {{{0, 4}, {0, 5}, {1, 5}}},
    {{{0, 4}, {1, 3}, {1, 5}}}, {{{0, 5}, {1, 4}, {1, 5}}},
}};
constexpr std::array<std::array<CR, 3>, 10> kT5StripE = {{
    {{{0, 1}, {0, 2}, {1, 2}}}, {{{0, 1}, {0, 3}, {1, 3}}},
    {{{0, 1}, {1, 1}, {1, 2}}}, {{{0, 1}, {1, 3}, {1, 1}}},
    {{{0, 2}, {0, 4}, {1, 4}}}, {{{0, 2}, {1, 2}, {1, 4}}},
    {{{0, 3}, {0, 5}, {1, 5}}}, {{{0, 3}, {1, 3}, {1, 5}}},
    {{{0, 4}, {0, 5}, {1, 5}}}, {{{0, 4}, {1, 4}, {1, 5}}},
}};
constexpr std::array<std::array<CR, 3>, 10> kT5StripB = {{
    {{{0, 1}, {0, 2}, {1, 1}}}, {{{0, 1}, {0, 3}, {1, 3}}},
    {{{0, 1}, {1, 1}, {1, 3}}}, {{{0, 2}, {0, 4}, {1, 4}}},
    {{{0, 2}, {1, 1}, {1, 2}}}, {{{0, 2}, {1, 2}, {1, 4}}},
    {{{0, 3}, {0, 5}, {1, 5}}}, {{{0, 3}, {1, 3}, {1, 5}}},
    {{{0, 4}, {0, 5}, {1, 5}}}, {{{0, 4}, {1, 4}, {1, 5}}},
}};
// around an apex the column's 5-cycle, in order 1-2-4-5-3
constexpr std::array<std::array<int, 2>, 5> kT5FanRows = {{{1, 2}, {2, 4}, {4, 5}, {5, 3}, {3, 1}}};

// patch tokens: P/Q/R = columns M-2, M-1, M; e1..e4 = extras
struct T5Tok {
  char kind;  // 'P', 'Q', 'R', 'e'
  int idx;
};
using T5Face = std::array<T5Tok, 3>;

const std::vector<T5Face> kT5Patch1 = {
    {{{'R', 5}, {'Q', 4}, {'R', 4}}}, {{{'R', 5}, {'Q', 5}, {'Q', 4}}},
    {{{'R', 5}, {'Q', 3}, {'Q', 5}}}, {{{'R', 5}, {'R', 3}, {'Q', 3}}},
    {{{'Q', 3}, {'R', 3}, {'Q', 1}}}, {{{'P', 1}, {'e', 1}, {'Q', 2}}},
    {{{'P', 1}, {'Q', 1}, {'e', 1}}}, {{{'R', 4}, {'Q', 2}, {'R', 2}}},
    {{{'R', 4}, {'Q', 4}, {'Q', 2}}}, {{{'Q', 1}, {'R', 3}, {'R', 1}}},
    {{{'Q', 1}, {'R', 1}, {'e', 1}}}, {{{'R', 1}, {'R', 2}, {'e', 1}}},
    {{{'e', 1}, {'R', 2}, {'Q', 2}}}};
const std::vector<T5Face> kT5Patch2 = {
    {{{'R', 5}, {'Q', 4}, {'R', 4}}}, {{{'R', 5}, {'e', 2}, {'Q', 4}}},
    {{{'R', 5}, {'R', 3}, {'e', 2}}}, {{{'Q', 3}, {'e', 1}, {'Q', 1}}},
    {{{'Q', 3}, {'e', 2}, {'e', 1}}}, {{{'Q', 3}, {'Q', 5}, {'e', 2}}},
    {{{'e', 1}, {'R', 1}, {'Q', 1}}}, {{{'e', 1}, {'R', 3}, {'R', 1}}},
    {{{'e', 1}, {'e', 2}, {'R', 3}}}, {{{'e', 2}, {'Q', 5}, {'Q', 4}}},
    {{{'R', 4}, {'Q', 2}, {'R', 2}}}, {{{'R', 4}, {'Q', 4}, {'Q', 2}}},
    {{{'Q', 1}, {'R', 2}, {'Q', 2}}}, {{{'Q', 1}, {'R', 1}, {'R', 2}}}};
const std::vector<T5Face> kT5Patch3 = {
    {{{'Q', 3}, {'e', 1}, {'Q', 1}}}, {{{'Q', 3}, {'e', 2}, {'e', 1}}},
    {{{'Q', 3}, {'Q', 5}, {'e', 2}}}, {{{'e', 1}, {'Q', 2}, {'Q', 1}}},
    {{{'e', 1}, {'P', 2}, {'Q', 2}}}, {{{'e', 1}, {'P', 1}, {'P', 2}}},
    {{{'e', 1}, {'e', 2}, {'P', 1}}}, {{{'P', 5}, {'e', 3}, {'P', 4}}},
    {{{'P', 5}, {'P', 3}, {'e', 3}}}, {{{'P', 3}, {'e', 2}, {'e', 3}}},
    {{{'P', 3}, {'P', 1}, {'e', 2}}}, {{{'e', 3}, {'Q', 4}, {'P', 4}}},
    {{{'e', 3}, {'Q', 5}, {'Q', 4}}}, {{{'e', 3}, {'e', 2}, {'Q', 5}}},
    {{{'P', 2}, {'Q', 4}, {'Q', 2}}}, {{{'P', 2}, {'P', 4}, {'Q', 4}}}};
const std::vector<T5Face> kT5Patch4 = {
    {{{'Q', 3}, {'e', 1}, {'Q', 1}}}, {{{'Q', 3}, {'e', 4}, {'e', 1}}},
    {{{'Q', 3}, {'Q', 5}, {'e', 4}}}, {{{'e', 1}, {'e', 4}, {'e', 3}}},
    {{{'e', 1}, {'P', 1}, {'Q', 1}}}, {{{'e', 1}, {'P', 3}, {'P', 1}}},
    {{{'e', 1}, {'e', 3}, {'P', 3}}}, {{{'P', 5}, {'P', 3}, {'e', 3}}},
    {{{'P', 5}, {'e', 3}, {'P', 4}}}, {{{'e', 3}, {'e', 2}, {'P', 4}}},
    {{{'e', 3}, {'e', 4}, {'e', 2}}}, {{{'e', 4}, {'Q', 4}, {'e', 2}}},
    {{{'e', 4}, {'Q', 5}, {'Q', 4}}}, {{{'P', 1}, {'Q', 2}, {'Q', 1}}},
    {{{'P', 1}, {'P', 2}, {'Q', 2}}}, {{{'P', 2}, {'e', 2}, {'Q', 2}}},
    {{{'P', 2}, {'P', 4}, {'e', 2}}}, {{{'e', 2}, {'Q', 4}, {'Q', 2}}}};

Construction build_T5(int n) {
  const int t = (n - 2) % 5;
  const int M = (n - 2 - t) / 5;
  if (M < 2 || (t > 0 && M < 4))
    throw UnsupportedOrder("tri5 construction unsupported at n = " + std::to_string(n));
  auto id = [&](int col, int row) { return (col - 1) * 5 + row - 1; };
  const Vertex z1 = 5 * M, z2 = 5 * M + 1;
  auto ext = [&](int j) { return 5 * M + 1 + j; };  // e1, e2(e3 for t=2), ...
  std::vector<Face> fs;
  for (const auto& [x, y] : kT5FanRows) {
    fs.push_back({z1, id(1, x), id(1, y)});
    fs.push_back({z2, id(M, y), id(M, x)});
  }
  auto emit = [&](const std::array<std::array<CR, 3>, 10>& strip, int i) {
    for (const auto& f : strip)
      fs.push_back({id(i + f[0].dc, f[0].r), id(i + f[1].dc, f[1].r), id(i + f[2].dc, f[2].r)});
  };
  emit(kT5StripO, 1);
  if (t == 0) {
    for (int i = 2; i < M - 1; ++i) emit(kT5StripE, i);
    if (M > 2) emit(kT5StripO, M - 1);
  } else if (t == 1) {
    for (int i = 2; i < M - 2; ++i) emit(kT5StripE, i);
    // the strip into column M-1 drops the face on that column's removed
    // (1,2) edge; the e1 patch covers the hole
    for (const auto& f : kT5StripE) {
      std::array<int, 3> key;
      for (int j = 0; j < 3; ++j) key[j] = f[j].dc * 10 + f[j].r;
      std::sort(key.begin(), key.end());
      if (key == std::array<int, 3>{1, 11, 12}) continue;
      fs.push_back({id(M - 2 + f[0].dc, f[0].r), id(M - 2 + f[1].dc, f[1].r),
                    id(M - 2 + f[2].dc, f[2].r)});
    }
  } else if (t == 2) {
    for (int i = 2; i < M - 1; ++i) emit(kT5StripE, i);
  } else {
    for (int i = 2; i < M - 2; ++i) emit(t == 3 ? kT5StripB : kT5StripE, i);
    emit(kT5StripO, M - 1);
  }
  if (t > 0) {
    const std::vector<T5Face>* patch = t == 1   ? &kT5Patch1
                                       : t == 2 ? &kT5Patch2
                                       : t == 3 ? &kT5Patch3
                                                : &kT5Patch4;
    // extras are numbered e1..e4; t=2 uses labels e1,e3 mapped to slots 1,2
    auto extid = [&](int e) { return (t == 2 && e == 3) ? ext(2) : ext(e); };
    for (const auto& f : *patch) {
      Face face;
      for (const T5Tok& tk : f) {
        switch (tk.kind) {
          case 'P': face.push_back(id(M - 2, tk.idx)); break;
          case 'Q': face.push_back(id(M - 1, tk.idx)); break;
          case 'R': face.push_back(id(M, tk.idx)); break;
          default: face.push_back(extid(tk.idx));
        }
      }
      fs.push_back(face);
    }
  }
  Vertex w;
  if (t == 0)
    w = (M % 2) ? id((M + 1) / 2, 3) : id(M / 2, 1);
  else if (t == 1)
    w = id((M + 1) / 2, 1);
  else if (t == 3)
    w = id((M + 1) / 2, 2);
  else
    w = (M % 2 == 0) ? id(M / 2, 1) : id((M + 1) / 2, 2);
  return {PlaneGraph::from_faces(n, fs), w};
}

// ---------------------------------------------------------------------- Q
// Two rails with rungs and skip-two diagonals; residue extras bx, ax, by
// split cells at the right end.

Construction build_Q(int n) {
  const int r = ((n % 4) + 4) % 4;
  const int p = (n - r) / 2;
  if (n < 4 || p < 2 || (r != 0 && p < 4))
    throw UnsupportedOrder("quad construction unsupported at n = " + std::to_string(n));
  auto a = [&](int i) { return 2 * (i - 1); };
  auto b = [&](int i) { return 2 * (i - 1) + 1; };
  const Vertex bx = 2 * p, ax = 2 * p + 1, by = 2 * p + 2;
  std::vector<Face> fs;
  for (int i = 1; i + 1 <= p; ++i) {
    if (r >= 1 && i == p - 1) continue;  // replaced by the bx split below
    fs.push_back({a(i), a(i + 1), b(i + 1), b(i)});
  }
  for (int i = 1; i + 3 <= p; ++i) fs.push_back({a(i), b(i + 2), b(i + 3), a(i + 1)});
  if (p >= 3) {
    fs.push_back({a(1), b(3), b(2), b(1)});
    fs.push_back({a(p - 2), b(p), a(p), a(p - 1)});
  } else {
    fs.push_back({a(1), b(1), b(2), a(2)});  // the 4-cycle's second face
  }
  if (r >= 1) {
    fs.push_back({a(p - 1), bx, b(p), b(p - 1)});
    if (r == 1) fs.push_back({a(p - 1), a(p), b(p), bx});
  }
  if (r >= 2) {
    fs.push_back({a(p - 1), a(p), ax, bx});
    if (r == 2) fs.push_back({a(p), b(p), bx, ax});
  }
  if (r == 3) {
    fs.push_back({b(p), bx, by, a(p)});
    fs.push_back({bx, ax, a(p), by});
  }
  const int wcol = (r < 3) ? p / 2 + 1 : p / 2 + 2;
  return {PlaneGraph::from_faces(n, fs), b(wcol)};
}

// --------------------------------------------------------------------- Q3
// Three rows between two cube caps, in three variants distinguished by which
// row is shifted; n = 3L + {15, 14, 16} for variants 3, 2, 1.

Construction build_Q3(int n) {
  int var = 0, L = 0;
  for (auto [v, base] : {std::pair{3, 15}, {2, 14}, {1, 16}})
    if ((n - base) % 3 == 0) {
      var = v;
      L = (n - base) / 3;
    }
  if (L < 2) throw UnsupportedOrder("quad3 construction needs n >= 20");
  const int lenA = (var == 2) ? L - 1 : L;
  const int lenC = (var == 1) ? L : L - 1;
  // ids: row A, then row B, then row C, then cubes d1..d8, e1..e8
  auto A = [&](int i) { return i - 1; };
  auto B = [&](int i) { return lenA + i - 1; };
  auto C = [&](int i) { return lenA + L + i - 1; };
  auto d = [&](int i) { return lenA + L + lenC + i - 1; };
  auto e = [&](int i) { return lenA + L + lenC + 8 + i - 1; };
  std::vector<Face> fs;
  if (var == 3) {
    for (int i = 1; i < L; ++i) fs.push_back({A(i), B(i), B(i + 1), A(i + 1)});
    for (int i = 1; i + 1 < L; ++i) {
      fs.push_back({B(i), C(i), C(i + 1), B(i + 1)});
      fs.push_back({C(i), A(i + 1), A(i + 2), C(i + 1)});
    }
    fs.push_back({B(1), d(4), d(8), C(1)});
    fs.push_back({B(1), A(1), d(2), d(4)});
    fs.push_back({C(1), d(8), A(1), A(2)});
    fs.push_back({d(6), d(2), A(1), d(8)});
  } else if (var == 2) {
    for (int i = 1; i + 1 < L; ++i) {
      fs.push_back({B(i), C(i), C(i + 1), B(i + 1)});
      fs.push_back({A(i), A(i + 1), C(i + 1), C(i)});
      fs.push_back({A(i), A(i + 1), B(i + 2), B(i + 1)});
    }
    fs.push_back({B(1), d(4), d(2), d(6)});
    fs.push_back({B(1), B(2), A(1), d(4)});
    fs.push_back({B(1), d(6), d(8), C(1)});
    fs.push_back({d(4), A(1), C(1), d(8)});
  } else {
    for (int i = 1; i < L; ++i) {
      fs.push_back({A(i), A(i + 1), B(i + 1), B(i)});
      fs.push_back({A(i), C(i), C(i + 1), A(i + 1)});
    }
    for (int i = 1; i + 1 < L; ++i) fs.push_back({B(i), B(i + 1), C(i + 2), C(i + 1)});
    fs.push_back({B(1), d(4), C(1), C(2)});
    fs.push_back({B(1), A(1), d(2), d(4)});
    fs.push_back({d(4), d(8), d(6), C(1)});
    fs.push_back({C(1), d(6), d(2), A(1)});
  }
  // left cube interior (the face toward the rows is subdivided above)
  fs.push_back({d(4), d(3), d(7), d(8)});
  fs.push_back({d(4), d(2), d(1), d(3)});
  fs.push_back({d(1), d(5), d(7), d(3)});
  fs.push_back({d(1), d(2), d(6), d(5)});
  fs.push_back({d(7), d(5), d(6), d(8)});
  // right cap: identical for all variants, in row-end labels
  const Vertex AL = A(lenA), BL = B(L), BL1 = B(L - 1), CL = C(lenC);
  fs.push_back({BL, e(3), e(1), AL});
  fs.push_back({BL, e(5), e(7), e(3)});
  fs.push_back({BL, BL1, CL, e(5)});
  fs.push_back({e(3), e(7), e(8), e(4)});
  fs.push_back({e(3), e(4), e(2), e(1)});
  fs.push_back({e(6), e(2), e(4), e(8)});
  fs.push_back({e(6), e(5), e(1), e(2)});
  fs.push_back({e(6), e(8), e(7), e(5)});
  fs.push_back({CL, AL, e(1), e(5)});
  Vertex w;
  if (var == 3)
    w = C((L - 1 + 1) / 2);
  else if (var == 2)
    w = B((L + 1) / 2);
  else
    w = C((L + 2) / 2);
  return {PlaneGraph::from_faces(n, fs), w};
}

}  // namespace

bool construction_supported(Family f, int n) {
  switch (f) {
    case Family::T: return n >= 6;
    case Family::T4: return n >= 10;
    case Family::T5: {
      const int t = (n - 2) % 5;
      return n >= 12 && (t == 0 ? true : n >= 22 + t);
    }
    case Family::Q: {
      const int r = n % 4;
      return n == 4 || (r == 0 ? n >= 8 : n >= 8 + r);
    }
    case Family::Q3: return n >= 20;
  }
  return false;
}

Construction build(Family f, int n) {
  switch (f) {
    case Family::T: return build_T(n);
    case Family::T4: return build_T4(n);
    case Family::T5: return build_T5(n);
    case Family::Q: return build_Q(n);
    case Family::Q3: return build_Q3(n);
  }
  throw UnsupportedOrder("unknown family");
}

Rational formula_proximity(Family f, int n) {
  if (n < 2) throw std::invalid_argument("formula_proximity: need n >= 2");
  const Rational nm1(n - 1);
  switch (f) {
    case Family::T: {
      static const std::array<Rational, 6> c = {Rational(5, 12), Rational(0),
                                                Rational(5, 12), Rational(2, 3),
                                                Rational(3, 4),  Rational(2, 3)};
      return Rational(n + 5, 12) + c[n % 6] / nm1;
    }
    case Family::T4: {
      static const std::array<Rational, 8> c = {
          Rational(25, 16), Rational(1),      Rational(21, 16), Rational(3, 2),
          Rational(25, 16), Rational(3, 2),   Rational(21, 16), Rational(1)};
      return Rational(n + 9, 16) + c[n % 8] / nm1;
    }
    case Family::T5: {
      static const std::array<Rational, 10> c = {
          Rational(-7, 20),  Rational(-1),     Rational(-1, 4), Rational(-8, 5),
          Rational(-11, 20), Rational(-3, 5),  Rational(-3, 4), Rational(0),
          Rational(-7, 20),  Rational(-4, 5)};
      return Rational(n + 13, 20) + c[n % 10] / nm1;
    }
    case Family::Q: {
      static const std::array<Rational, 4> c = {Rational(17, 8), Rational(2),
                                                Rational(21, 8), Rational(2)};
      return Rational(n + 1, 8) + c[n % 4] / nm1;
    }
    case Family::Q3: {
      static const std::array<Rational, 6> c = {
          Rational(-13, 4), Rational(-3),     Rational(-23, 12),
          Rational(-4),     Rational(-13, 4), Rational(-8, 3)};
      return Rational(n + 9, 12) + c[n % 6] / nm1;
    }
  }
  throw std::invalid_argument("unknown family");
}

Rational formula_min_status(Family f, int n) {
  return formula_proximity(f, n) * Rational(n - 1);
}

std::optional<int> anchor_order(Family f, int residue) {
  const int p = family_period(f);
  residue = ((residue % p) + p) % p;
  switch (f) {
    case Family::T:
      return 6 + ((residue - 6) % 6 + 6) % 6;
    case Family::T4:
      return 10 + ((residue - 10) % 8 + 8) % 8;
    case Family::T5: {
      static const std::array<int, 10> a = {30, 31, -1, 23, 34, 25, 26, 27, 28, 29};
      return a[residue] < 0 ? std::nullopt : std::optional<int>(a[residue]);
    }
    case Family::Q: {
      static const std::array<int, 4> a = {4, 9, 10, 11};
      return a[residue];
    }
    case Family::Q3: {
      static const std::array<int, 6> a = {24, 25, 20, 21, 22, 23};
      return a[residue];
    }
  }
  return std::nullopt;
}

VerifyReport verify_construction(Family f, int n) {
  const Construction c = build(f, n);
  const InvariantReport inv = invariants(c.graph);
  const Rational fm = formula_min_status(f, n);
  return {inv.min_status, fm, Rational(inv.min_status) == fm};
}

}  // namespace planeprox
