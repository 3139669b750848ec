// Acceptance suite: runs every criterion end to end and prints one line per
// criterion. Exit code = number of failed criteria.
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <vector>

#include "planeprox/bounds.hpp"
#include "planeprox/constructions.hpp"
#include "planeprox/enumerate.hpp"
#include "planeprox/lemma_verify.hpp"
#include "planeprox/metrics.hpp"
#include "planeprox/paper_tables.hpp"
#include "planeprox/planar_code.hpp"

using namespace planeprox;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct CorpusStats {
  long graphs = 0;
  long bound_failures = 0;
  long lemma_violations = 0;
  long oracle_mismatches = 0;  // invariants vs all-pairs, n <= 8
  bool rows_ok = true;
  std::string row_detail;
};

std::vector<std::vector<int>> all_pairs(const PlaneGraph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

CorpusStats sweep_class(const GraphClass& c, int n_min, int n_max) {
  CorpusStats st;
  for (int n = n_min; n <= n_max; ++n) {
    long total = 0, best = -1, count = 0;
    enumerate_class(c, n, [&](const PlaneGraph& g) {
      ++total;
      ++st.graphs;
      const InvariantReport inv = invariants(g);
      if (inv.min_status > best) {
        best = inv.min_status;
        count = 1;
      } else if (inv.min_status == best) {
        ++count;
      }
      // criterion 8: Theorem 1 soundness over the whole corpus
      const Rational bound = theorem_bound(c, n);
      if (!(inv.proximity <= bound)) ++st.bound_failures;
      // criterion 9: layer lemmas (and the active-face lemma on quads)
      if (c.kind == Kind::Triangulation) {
        st.lemma_violations += static_cast<long>(check_layer_lemma(g, c.min_connectivity).size());
      } else {
        st.lemma_violations += static_cast<long>(check_layer_lemma(g, 2).size());
        if (c.min_connectivity == 3)
          st.lemma_violations += static_cast<long>(check_layer_lemma(g, 3).size());
        st.lemma_violations += static_cast<long>(check_active_face_lemma(g).size());
      }
      // criterion 11: brute-force metric oracle at n <= 8
      if (n <= 8 && c.min_connectivity <= 3) {
        const auto d = all_pairs(g);
        long wiener = 0;
        for (int v = 0; v < n; ++v) {
          const long s = std::accumulate(d[v].begin(), d[v].end(), 0L);
          if (s != inv.sigma[v]) ++st.oracle_mismatches;
          wiener += s;
        }
        if (inv.wiener != wiener / 2) ++st.oracle_mismatches;
      }
    });
    const auto ref = reference_row(c, n);
    if (!ref || ref->max_min_status != best || ref->count != count) {
      st.rows_ok = false;
      st.row_detail += " n=" + std::to_string(n) + " computed(" + std::to_string(best) + "," +
                       std::to_string(count) + ")";
      if (ref)
        st.row_detail += " reference(" + std::to_string(ref->max_min_status) + "," +
                         std::to_string(ref->count) + ")";
    }
  }
  return st;
}

const Family kFamilies[] = {Family::T, Family::T4, Family::T5, Family::Q, Family::Q3};

}  // namespace

int main() {
  // ---- criteria 1-5: table reproduction (also feeds criteria 8, 9, 11)
  const CorpusStats tri = sweep_class({Kind::Triangulation, 3}, 4, 11);
  report(1, tri.rows_ok, "triangulation rows 4..11 match the reference table" + tri.row_detail);
  const CorpusStats tri4 = sweep_class({Kind::Triangulation, 4}, 6, 13);
  report(2, tri4.rows_ok,
         "4-connected triangulation rows 6..13 match the reference table" + tri4.row_detail);
  const CorpusStats tri5 = sweep_class({Kind::Triangulation, 5}, 12, 16);
  report(3, tri5.rows_ok,
         "5-connected triangulation rows 12..16 match (empty class at 13)" + tri5.row_detail);
  const CorpusStats quad = sweep_class({Kind::Quadrangulation, 2}, 4, 13);
  report(4, quad.rows_ok, "quadrangulation rows 4..13 match the reference table" + quad.row_detail);
  const CorpusStats quad3 = sweep_class({Kind::Quadrangulation, 3}, 8, 14);
  report(5, quad3.rows_ok,
         "3-connected quadrangulation rows 8..14 match (empty class at 9)" + quad3.row_detail);

  // ---- criterion 6: pinned construction/formula agreements
  {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::pair<Family, int>, long>> pins = {
        {{Family::T, 18}, 33},  {{Family::Q, 12}, 20},  {{Family::Q, 16}, 34},
        {{Family::Q, 20}, 52},  {{Family::Q3, 20}, 44}, {{Family::Q3, 26}, 71},
    };
    for (const auto& [key, want] : pins) {
      const VerifyReport r = verify_construction(key.first, key.second);
      if (r.built_min_status != want || !r.match ||
          r.formula_min_status != Rational(want)) {
        ok = false;
        detail += " " + family_name(key.first) + std::to_string(key.second) + "=" +
                  std::to_string(r.built_min_status);
      }
    }
    report(6, ok, "pinned construction values match the closed forms exactly" + detail);
  }

  // ---- criterion 7: anchored residues hold up to n = 200; the rest reported
  {
    bool ok = true;
    std::string detail;
    for (Family f : kFamilies) {
      const int p = family_period(f);
      for (int r = 0; r < p; ++r) {
        const auto anchor = anchor_order(f, r);
        if (!anchor) {
          std::printf("  note: %s residue %d has no matching branch; built values "
                      "reported, not asserted\n", family_name(f).c_str(), r);
          continue;
        }
        for (int n = r; n <= 200; n += p) {
          if (!construction_supported(f, n)) continue;
          const VerifyReport v = verify_construction(f, n);
          if (n >= *anchor) {
            if (!v.match) {
              ok = false;
              detail += " " + family_name(f) + std::to_string(n);
            }
          } else if (!v.match) {
            std::printf("  note: %s n=%d below anchor %d: built %ld, formula %s\n",
                        family_name(f).c_str(), n, *anchor, v.built_min_status,
                        v.formula_min_status.str().c_str());
          }
        }
      }
    }
    report(7, ok, "anchored residue branches match their formulas for all supported n <= 200" +
                      detail);
  }

  // ---- criterion 8: bound soundness (corpora above + constructions <= 200)
  {
    long construction_failures = 0;
    for (Family f : kFamilies)
      for (int n = 4; n <= 200; ++n) {
        if (!construction_supported(f, n)) continue;
        const Construction c = build(f, n);
        const InvariantReport inv = invariants(c.graph);
        if (!(inv.proximity <= theorem_bound(family_class(f), n))) ++construction_failures;
      }
    const long enum_failures = tri.bound_failures + tri4.bound_failures + tri5.bound_failures +
                               quad.bound_failures + quad3.bound_failures;
    report(8, enum_failures == 0 && construction_failures == 0,
           "pi <= Theorem-1 bound over " +
               std::to_string(tri.graphs + tri4.graphs + tri5.graphs + quad.graphs +
                              quad3.graphs) +
               " enumerated and all constructed graphs (failures: " +
               std::to_string(enum_failures + construction_failures) + ")");
  }

  // ---- criterion 9: lemma suites over the enumerated corpora
  {
    const long v = tri.lemma_violations + tri4.lemma_violations + tri5.lemma_violations +
                   quad.lemma_violations + quad3.lemma_violations;
    report(9, v == 0, "layer and active-face lemmas: " + std::to_string(v) + " violations");
  }

  // ---- criterion 10: maximize_F oracle vs brute force and the proof bound
  {
    bool ok = true;
    const GraphClass classes[] = {{Kind::Triangulation, 3}, {Kind::Triangulation, 4},
                                  {Kind::Triangulation, 5}, {Kind::Quadrangulation, 2},
                                  {Kind::Quadrangulation, 3}};
    for (const GraphClass& c : classes) {
      const LayerConstraintProfile profile = profile_for(c);
      for (int n = 4; n <= 20; ++n) {
        long brute = -1;
        std::function<void(int, int, long, long, const std::vector<int>&)> noop;
        for (int r = 1; r < n; ++r) {
          std::vector<int> lb(r + 1);
          long lbsum = 0;
          for (int i = 0; i <= r; ++i) lbsum += (lb[i] = profile.lower_bound(i, r));
          if (lbsum > n) continue;
          std::function<void(int, long, long)> rec = [&](int i, long left, long f) {
            if (i == r) {
              f += static_cast<long>(r) * (lb[r] + left);
              if (f > brute) brute = f;
              return;
            }
            for (long add = 0; add <= left; ++add)
              rec(i + 1, left - add, f + static_cast<long>(i) * (lb[i] + add));
          };
          rec(1, n - lbsum, 0);
        }
        if (brute < 0) continue;
        if (maximize_F(profile, n).sigma_upper != Rational(brute)) ok = false;
      }
    }
    const LayerConstraintProfile tri_profile = profile_for({Kind::Triangulation, 3});
    for (int n = 8; n <= 120; ++n)
      if (!(maximize_F(tri_profile, n).sigma_upper <=
            Rational(static_cast<long>(n) * n + 18L * n + 81, 12)))
        ok = false;
    report(10, ok, "maximize_F equals brute force (n <= 20) and respects (n^2+18n+81)/12");
  }

  // ---- criterion 11: metric oracle agreement collected during the sweeps
  {
    const long mism = tri.oracle_mismatches + quad.oracle_mismatches;
    report(11, mism == 0,
           "invariants agree with all-pairs shortest paths on the n <= 8 corpora");
  }

  // ---- criterion 12: planar_code round trips and committed fixtures
  {
    bool ok = true;
    for (Family f : kFamilies)
      for (int n = 4; n <= 200; ++n) {
        if (!construction_supported(f, n)) continue;
        const PlaneGraph g = build(f, n).graph;
        const auto back = read_planar_code(write_planar_code({g}));
        if (back.size() != 1 || canonical_code(back[0]) != canonical_code(g)) ok = false;
      }
    std::string detail = "round trips ok";
    try {
      const auto fx = read_planar_code_file(std::string(PLANEPROX_FIXTURE_DIR) + "/tri/10.plc");
      long best = -1, count = 0;
      for (const PlaneGraph& g : fx) {
        if (!is_triangulation(g)) ok = false;
        const long ms = invariants(g).min_status;
        if (ms > best) {
          best = ms;
          count = 1;
        } else if (ms == best) {
          ++count;
        }
      }
      if (fx.size() != 233 || best != 13 || count != 1) {
        ok = false;
        detail = "fixture tri/10.plc: " + std::to_string(fx.size()) + " graphs, row (" +
                 std::to_string(best) + "," + std::to_string(count) + ")";
      } else {
        detail += "; fixture has 233 triangulations with extremal row (13,1)";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("fixture error: ") + e.what();
    }
    report(12, ok, "planar_code round-trip identity and plantri-format fixture checks: " + detail);
  }

  std::printf("%s (%d criterion failures)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
              failures);
  return failures;
}
