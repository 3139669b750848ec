#include "planeprox/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "planeprox/metrics.hpp"

namespace planeprox {

namespace {

using Rot = std::vector<std::vector<int>>;

// ----------------------------------------------------------- code plumbing
// A code record is one planar_code-style graph: byte n, then per vertex its
// neighbor list (1-based) terminated by 0. Canonical codes are the
// lexicographic minimum over all starts; records double as compact storage.

std::string encode(const Rot& rot) {
  std::string out;
  out.push_back(static_cast<char>(rot.size()));
  for (const auto& nbrs : rot) {
    for (int u : nbrs) out.push_back(static_cast<char>(u + 1));
    out.push_back('\0');
  }
  return out;
}

Rot decode(const std::string& code) {
  const int n = static_cast<unsigned char>(code[0]);
  Rot rot(n);
  std::size_t pos = 1;
  for (int v = 0; v < n; ++v) {
    while (static_cast<unsigned char>(code[pos]) != 0) {
      rot[v].push_back(static_cast<int>(static_cast<unsigned char>(code[pos])) - 1);
      ++pos;
    }
    ++pos;
  }
  return rot;
}

// breadth-first rotation code from root directed edge (u0, v0), aborting as
// soon as it compares worse than the incumbent; returns true when buf holds a
// complete code that is strictly better (or best is empty)
bool bfs_code(const Rot& rot, int u0, int v0, bool reversed, std::string& buf,
              const std::string& best) {
  const int n = static_cast<int>(rot.size());
  buf.clear();
  buf.push_back(static_cast<char>(n));
  static thread_local std::vector<int> label, entry, order;
  label.assign(n, 0);
  entry.assign(n, -1);
  order.clear();
  label[u0] = 1;
  entry[u0] = v0;
  order.push_back(u0);
  int next = 2;
  bool undecided = !best.empty();  // still equal to the incumbent's prefix
  for (int qi = 0; qi < n; ++qi) {
    const int w = order[qi];
    const auto& r = rot[w];
    const int d = static_cast<int>(r.size());
    int p = 0;
    while (r[p] != entry[w]) ++p;
    for (int s = 0; s <= d; ++s) {
      char byte = 0;
      if (s < d) {
        const int x = reversed ? r[(p - s + d) % d] : r[(p + s) % d];
        if (label[x] == 0) {
          label[x] = next++;
          entry[x] = w;
          order.push_back(x);
        }
        byte = static_cast<char>(label[x]);
      }
      if (undecided) {
        const auto ref = static_cast<unsigned char>(best[buf.size()]);
        const auto cur = static_cast<unsigned char>(byte);
        if (cur > ref) return false;
        if (cur < ref) undecided = false;
      }
      buf.push_back(byte);
    }
  }
  return !undecided || best.empty();
}

std::string canonical_code_rot(const Rot& rot) {
  int mindeg = static_cast<int>(rot[0].size());
  for (const auto& r : rot) mindeg = std::min(mindeg, static_cast<int>(r.size()));
  std::string best, buf;
  // the canonical root has minimum degree: its neighbor list terminates first
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
    if (static_cast<int>(rot[v].size()) != mindeg) continue;
    for (int u : rot[v]) {
      for (bool rev : {false, true}) {
        if (bfs_code(rot, v, u, rev, buf, best) && (best.empty() || buf < best))
          std::swap(best, buf);
      }
    }
  }
  return best;
}

// ------------------------------------------------------------- expansions
// Vertex splitting, the inverse of edge contraction (triangulations) and of
// face contraction along a diagonal (quadrangulations). v keeps the
// clockwise arc rot[v][i..j]; the new vertex n takes the other arc; in the
// triangulation case the two parts are joined by an edge.

Rot split_vertex(const Rot& rot, int v, int i, int j, bool triangulation) {
  const int n = static_cast<int>(rot.size());
  const auto& r = rot[v];
  const int d = static_cast<int>(r.size());
  Rot out(rot);
  out.emplace_back();
  std::vector<int> arc1, arc2;
  for (int k = i;; k = (k + 1) % d) {
    arc1.push_back(r[k]);
    if (k == j) break;
  }
  for (int k = j;; k = (k + 1) % d) {
    arc2.push_back(r[k]);
    if (k == i) break;
  }
  out[v] = arc1;
  out[n] = arc2;
  if (triangulation) {
    out[v].push_back(n);
    out[n].push_back(v);
  }
  const int xi = r[i], xj = r[j];
  // interior of arc2 now neighbors the new vertex
  for (std::size_t k = 1; k + 1 < arc2.size(); ++k) {
    for (int& y : out[arc2[k]])
      if (y == v) y = n;
  }
  // x_i sees (v, new), x_j sees (new, v), clockwise
  auto splice = [&](int x, int first, int second) {
    std::vector<int>& rx = out[x];
    std::vector<int> nw;
    nw.reserve(rx.size() + 1);
    for (int y : rx) {
      if (y == v) {
        nw.push_back(first);
        nw.push_back(second);
      } else {
        nw.push_back(y);
      }
    }
    rx = std::move(nw);
  };
  splice(xi, v, n);
  splice(xj, n, v);
  return out;
}

// ---------------------------------------------------- connectivity filters

// max-flow with unit vertex capacities on the split network, stopped once k
// units are reached; nodes 2v = in, 2v+1 = out
bool flow_at_least(const Rot& rot, int s, int t, int k) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> head, to, nxt, cap;
  std::vector<int> first(2 * n, -1);
  auto add_arc = [&](int a, int b, int c) {
    to.push_back(b);
    cap.push_back(c);
    nxt.push_back(first[a]);
    first[a] = static_cast<int>(to.size()) - 1;
  };
  auto add = [&](int a, int b, int c) {
    add_arc(a, b, c);
    add_arc(b, a, 0);
  };
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? k + 1 : 1);
  for (int v = 0; v < n; ++v)
    for (int u : rot[v]) add(2 * v + 1, 2 * u, 1);
  const int src = 2 * s + 1, dst = 2 * t;
  std::vector<int> prev_arc(2 * n);
  for (int flow = 0; flow < k; ++flow) {
    std::fill(prev_arc.begin(), prev_arc.end(), -1);
    std::queue<int> q;
    q.push(src);
    prev_arc[src] = -2;
    while (!q.empty() && prev_arc[dst] == -1) {
      const int a = q.front();
      q.pop();
      for (int e = first[a]; e != -1; e = nxt[e])
        if (cap[e] > 0 && prev_arc[to[e]] == -1) {
          prev_arc[to[e]] = e;
          q.push(to[e]);
        }
    }
    if (prev_arc[dst] == -1) return false;
    for (int node = dst; node != src;) {
      const int e = prev_arc[node];
      cap[e] -= 1;
      cap[e ^ 1] += 1;
      node = to[e ^ 1];
    }
  }
  return true;
}

bool adjacent_rot(const Rot& rot, int a, int b) {
  return std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end();
}

bool is_k_connected(const Rot& rot, int k) {
  const int n = static_cast<int>(rot.size());
  if (n <= k) return false;
  int minv = 0;
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rot[v].size()) < k) return false;
    if (rot[v].size() < rot[minv].size()) minv = v;
  }
  for (int t = 0; t < n; ++t)
    if (t != minv && !adjacent_rot(rot, minv, t) && !flow_at_least(rot, minv, t, k))
      return false;
  const auto& nb = rot[minv];
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!adjacent_rot(rot, nb[i], nb[j]) && !flow_at_least(rot, nb[i], nb[j], k))
        return false;
  return true;
}

// -------------------------------------------------------- level generation

std::vector<std::string> expand_level(const std::vector<std::string>& parents,
                                      bool triangulation, int child_filter_k,
                                      int jobs) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  std::mutex mu;
  auto work = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::string> local;
    for (std::size_t gi = lo; gi < hi; ++gi) {
      const Rot rot = decode(parents[gi]);
      const int n = static_cast<int>(rot.size());
      for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(rot[v].size());
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            const Rot child = split_vertex(rot, v, i, j, triangulation);
            local.push_back(canonical_code_rot(child));
          }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& code : local)
      if (seen.insert(code).second) out.push_back(std::move(code));
  };
  if (jobs <= 1 || parents.size() < 64) {
    work(0, parents.size());
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (parents.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(parents.size(), lo + chunk);
      if (lo < hi) threads.emplace_back(work, lo, hi);
    }
    for (auto& th : threads) th.join();
  }
  if (child_filter_k > 0) {
    std::vector<std::string> kept;
    for (auto& code : out)
      if (is_k_connected(decode(code), child_filter_k)) kept.push_back(std::move(code));
    out = std::move(kept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Rot kK4 = {{2, 1, 3}, {0, 2, 3}, {1, 0, 3}, {0, 1, 2}};
const Rot kC4 = {{3, 1}, {0, 2}, {1, 3}, {2, 0}};

// all simple triangulations (kappa >= 3 automatically) at order n
std::vector<std::string> tri_level(int n, int jobs) {
  std::vector<std::string> level = {canonical_code_rot(kK4)};
  for (int k = 5; k <= n; ++k) level = expand_level(level, true, 0, jobs);
  return level;
}

// 4-connected triangulations by in-class splitting from the octahedron
std::vector<std::string> tri4_level(int n, int jobs) {
  std::vector<std::string> oct;
  for (const auto& code : tri_level(6, jobs))
    if (is_k_connected(decode(code), 4)) oct.push_back(code);
  std::vector<std::string> level = oct;  // exactly the octahedron
  for (int k = 7; k <= n; ++k) level = expand_level(level, true, 4, jobs);
  return level;
}

std::vector<std::string> quad_level(int n, int jobs) {
  std::vector<std::string> level = {canonical_code_rot(kC4)};
  for (int k = 5; k <= n; ++k) level = expand_level(level, false, 0, jobs);
  return level;
}

std::vector<std::string> class_level(const GraphClass& c, int n, int jobs) {
  if (c.kind == Kind::Triangulation) {
    if (c.min_connectivity == 3) return tri_level(n, jobs);
    if (c.min_connectivity == 4) {
      // provably complete filtering where affordable, in-class splitting above
      if (n <= 13) {
        std::vector<std::string> out;
        for (const auto& code : tri_level(n, jobs))
          if (is_k_connected(decode(code), 4)) out.push_back(code);
        return out;
      }
      return tri4_level(n, jobs);
    }
    std::vector<std::string> out;
    for (const auto& code : class_level({Kind::Triangulation, 4}, n, jobs))
      if (is_k_connected(decode(code), 5)) out.push_back(code);
    return out;
  }
  if (c.min_connectivity == 2) return quad_level(n, jobs);
  std::vector<std::string> out;
  for (const auto& code : quad_level(n, jobs))
    if (is_k_connected(decode(code), 3)) out.push_back(code);
  return out;
}

}  // namespace

CanonicalCode canonical_code(const PlaneGraph& g) {
  return canonical_code_rot(g.rotation());
}

bool enumerate_supported(const GraphClass& c, int n) {
  if (c.kind == Kind::Triangulation) {
    if (c.min_connectivity == 3) return n >= 4 && n <= 14;
    if (c.min_connectivity == 4) return n >= 6 && n <= 16;
    return n >= 12 && n <= 18;
  }
  if (c.min_connectivity == 2) return n >= 4 && n <= 15;
  return n >= 8 && n <= 15;
}

void enumerate_class(const GraphClass& c, int n,
                     const std::function<void(const PlaneGraph&)>& visit,
                     const EnumerateOptions& opts) {
  if (!enumerate_supported(c, n))
    throw std::invalid_argument("enumerate_class: unsupported order " + std::to_string(n) +
                                " for " + class_name(c));
  for (const auto& code : class_level(c, n, opts.jobs)) visit(PlaneGraph(decode(code)));
}

std::vector<PlaneGraph> enumerate_all(const GraphClass& c, int n, const EnumerateOptions& opts) {
  std::vector<PlaneGraph> out;
  enumerate_class(c, n, [&](const PlaneGraph& g) { out.push_back(g); }, opts);
  return out;
}

std::vector<ExtremalRow> extremal_table(const GraphClass& c, int n_min, int n_max,
                                        const EnumerateOptions& opts) {
  if (n_min > n_max) throw std::invalid_argument("extremal_table: empty range");
  std::vector<ExtremalRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    ExtremalRow row{n, -1, 0, 0};
    enumerate_class(c, n, [&](const PlaneGraph& g) {
      ++row.total_classes;
      const long ms = invariants(g).min_status;
      if (ms > row.max_min_status) {
        row.max_min_status = ms;
        row.count = 1;
      } else if (ms == row.max_min_status) {
        ++row.count;
      }
    }, opts);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace planeprox
