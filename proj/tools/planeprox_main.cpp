#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planeprox/bounds.hpp"
#include "planeprox/constructions.hpp"
#include "planeprox/enumerate.hpp"
#include "planeprox/lemma_verify.hpp"
#include "planeprox/metrics.hpp"
#include "planeprox/paper_tables.hpp"
#include "planeprox/plane_graph.hpp"
#include "planeprox/planar_code.hpp"

namespace {

using namespace planeprox;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::optional<GraphClass> parse_class(const std::string& s) {
  const auto fam = parse_family(s);
  if (!fam) return std::nullopt;
  return family_class(*fam);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

int cmd_invariants(const std::string& input, const std::string& format,
                   const std::string& out_path) {
  std::vector<PlaneGraph> graphs = read_planar_code_file(input);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (format == "csv")
    out << "index,n,min_status,proximity_num,proximity_den,remoteness_num,"
           "remoteness_den,wiener,radius,diameter\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const InvariantReport r = invariants(graphs[i]);
    const int n = graphs[i].vertex_count();
    if (format == "csv") {
      out << i << ',' << n << ',' << r.min_status << ',' << r.proximity.num() << ','
          << r.proximity.den() << ',' << r.remoteness.num() << ',' << r.remoteness.den()
          << ',' << r.wiener << ',' << r.radius << ',' << r.diameter << '\n';
    } else if (format == "json") {
      out << "{\"index\":" << i << ",\"n\":" << n << ",\"min_status\":" << r.min_status
          << ",\"proximity\":[" << r.proximity.num() << ',' << r.proximity.den()
          << "],\"remoteness\":[" << r.remoteness.num() << ',' << r.remoteness.den()
          << "],\"wiener\":" << r.wiener << ",\"radius\":" << r.radius
          << ",\"diameter\":" << r.diameter << "}\n";
    } else {
      out << "graph " << i << ": n=" << n << " min_status=" << r.min_status
          << " pi=" << r.proximity << " rho=" << r.remoteness << " wiener=" << r.wiener
          << " radius=" << r.radius << " diameter=" << r.diameter << '\n';
    }
  }
  return kExitOk;
}

int cmd_construct(const std::string& family_str, int n, const std::string& out_path) {
  const auto fam = parse_family(family_str);
  if (!fam) {
    std::cerr << "unknown family: " << family_str << "\n";
    return kExitUsage;
  }
  Construction c = build(*fam, n);
  if (!out_path.empty()) write_planar_code_file(out_path, {c.graph});
  const auto cls = classify(c.graph);
  if (!cls || !(*cls == family_class(*fam))) {
    std::cerr << "construction failed classification\n";
    return kExitVerification;
  }
  const InvariantReport inv = invariants(c.graph);
  const Rational fm = formula_min_status(*fam, n);
  const bool match = Rational(inv.min_status) == fm;
  std::cout << family_name(*fam) << " n=" << n << " min_status=" << inv.min_status
            << " formula=" << fm << (match ? " match" : " formula-mismatch")
            << " witness_sigma=" << inv.sigma[c.witness] << "\n";
  return kExitOk;
}

void print_row(std::ostream& out, const ExtremalRow& row, const std::string& format) {
  if (format == "csv") {
    out << row.order << ',';
    if (row.max_min_status < 0) out << ',';
    else out << row.max_min_status << ',';
    out << row.count << ',' << row.total_classes << '\n';
  } else if (format == "json") {
    out << "{\"order\":" << row.order << ",\"max_min_status\":";
    if (row.max_min_status < 0) out << "null";
    else out << row.max_min_status;
    out << ",\"count\":" << row.count << ",\"total_classes\":" << row.total_classes << "}\n";
  } else {
    out << row.order << "  ";
    if (row.max_min_status < 0) out << "---";
    else out << row.max_min_status;
    out << "  " << row.count << "  (classes: " << row.total_classes << ")\n";
  }
}

int cmd_table(const std::string& class_str, int n_min, int n_max, const std::string& format,
              bool compare_paper, int jobs, const std::string& out_path) {
  const auto cls = parse_class(class_str);
  if (!cls) {
    std::cerr << "unknown class: " << class_str << "\n";
    return kExitUsage;
  }
  if (!enumerate_supported(*cls, n_min) || !enumerate_supported(*cls, n_max)) {
    std::cerr << "unsupported range for " << class_name(*cls) << "\n";
    return kExitUsage;
  }
  EnumerateOptions opts;
  opts.jobs = jobs;
  const std::vector<ExtremalRow> rows = extremal_table(*cls, n_min, n_max, opts);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (format == "csv") out << "order,max_min_status,count,total_classes\n";
  for (const ExtremalRow& row : rows) print_row(out, row, format);
  if (!compare_paper) return kExitOk;
  int mismatches = 0;
  for (const ExtremalRow& row : rows) {
    const auto ref = reference_row(*cls, row.order);
    if (!ref) {
      std::cerr << "no reference row for n=" << row.order << "\n";
      ++mismatches;
    } else if (ref->max_min_status != row.max_min_status || ref->count != row.count) {
      std::cerr << "mismatch at n=" << row.order << ": computed (" << row.max_min_status
                << "," << row.count << ") reference (" << ref->max_min_status << ","
                << ref->count << ")\n";
      ++mismatches;
    }
  }
  if (mismatches == 0) {
    std::cout << "all " << rows.size() << " rows match the reference tables\n";
    return kExitOk;
  }
  return kExitVerification;
}

int cmd_enumerate(const std::string& class_str, int n, const std::string& format, int jobs,
                  const std::string& out_path) {
  const auto cls = parse_class(class_str);
  if (!cls) {
    std::cerr << "unknown class: " << class_str << "\n";
    return kExitUsage;
  }
  if (!enumerate_supported(*cls, n)) {
    std::cerr << "unsupported order " << n << " for " << class_name(*cls) << "\n";
    return kExitUsage;
  }
  EnumerateOptions opts;
  opts.jobs = jobs;
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (format == "planar_code") {
    std::string bytes = kPlanarCodeHeader;
    enumerate_class(*cls, n, [&](const PlaneGraph& g) { append_planar_code(bytes, g); }, opts);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  } else {
    long count = 0;
    enumerate_class(*cls, n, [&](const PlaneGraph& g) {
      const InvariantReport r = invariants(g);
      out << count << ": n=" << g.vertex_count() << " m=" << g.edge_count()
          << " min_status=" << r.min_status << '\n';
      ++count;
    }, opts);
    out << count << " isomorphism classes\n";
  }
  return kExitOk;
}

struct VerifyStats {
  long graphs = 0;
  long unclassifiable = 0;
  long bound_failures = 0;
  long lemma_violations = 0;
};

void verify_graph(const PlaneGraph& g, bool lemmas, bool bou, VerifyStats& st,
                  std::ostream& out) {
  ++st.graphs;
  const auto cls = classify(g);
  if (!cls) {
    ++st.unclassifiable;
    out << "unclassifiable graph (n=" << g.vertex_count() << ")\n";
    return;
  }
  if (bou) {
    const BoundCheck bc = check_bound(g);
    if (!bc.ok) {
      ++st.bound_failures;
      out << "bound failure: pi=" << bc.pi << " bound=" << bc.bound << "\n";
    }
  }
  if (lemmas) {
    std::vector<LemmaViolation> v;
    if (cls->kind == Kind::Triangulation) {
      v = check_layer_lemma(g, cls->min_connectivity);
    } else {
      v = check_layer_lemma(g, 2);
      if (cls->min_connectivity == 3) {
        auto v3 = check_layer_lemma(g, 3);
        v.insert(v.end(), v3.begin(), v3.end());
      }
      auto va = check_active_face_lemma(g);
      v.insert(v.end(), va.begin(), va.end());
    }
    st.lemma_violations += static_cast<long>(v.size());
    for (const LemmaViolation& lv : v)
      out << "{\"lemma\":\"" << lv.lemma << "\",\"vertex\":" << lv.vertex
          << ",\"layer\":" << lv.layer << ",\"observed\":" << lv.observed
          << ",\"required\":" << lv.required << "}\n";
  }
}

int cmd_verify(const std::string& input, const std::string& class_str, int n_min, int n_max,
               bool constructions, int cons_max, bool lemmas, bool bounds_flag, int jobs) {
  VerifyStats st;
  const bool both_default = !lemmas && !bounds_flag;
  const bool do_lemmas = lemmas || both_default;
  const bool do_bounds = bounds_flag || both_default;
  if (!input.empty()) {
    for (const PlaneGraph& g : read_planar_code_file(input))
      verify_graph(g, do_lemmas, do_bounds, st, std::cout);
  } else if (constructions) {
    for (Family fam : {Family::T, Family::T4, Family::T5, Family::Q, Family::Q3}) {
      for (int n = 4; n <= cons_max; ++n) {
        if (!construction_supported(fam, n)) continue;
        const Construction c = build(fam, n);
        verify_graph(c.graph, do_lemmas, do_bounds, st, std::cout);
      }
    }
  } else {
    const auto cls = parse_class(class_str);
    if (!cls) {
      std::cerr << "unknown class: " << class_str << "\n";
      return kExitUsage;
    }
    if (!enumerate_supported(*cls, n_min) || !enumerate_supported(*cls, n_max)) {
      std::cerr << "unsupported range for " << class_name(*cls) << "\n";
      return kExitUsage;
    }
    EnumerateOptions opts;
    opts.jobs = jobs;
    for (int n = n_min; n <= n_max; ++n)
      enumerate_class(*cls, n,
                      [&](const PlaneGraph& g) { verify_graph(g, do_lemmas, do_bounds, st, std::cout); },
                      opts);
  }
  std::cout << "checked " << st.graphs << " graphs: " << st.bound_failures
            << " bound failures, " << st.lemma_violations << " lemma violations, "
            << st.unclassifiable << " unclassifiable\n";
  return (st.bound_failures || st.lemma_violations || st.unclassifiable) ? kExitVerification
                                                                         : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance invariants, extremal constructions and exhaustive "
               "enumeration for plane triangulations and quadrangulations"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "text", class_str, family_str;
  int n = 0, n_min = 0, n_max = 0, jobs = 1, cons_max = 100;
  bool compare_paper = false, lemmas = false, bounds_flag = false, constructions = false;

  auto* inv = app.add_subcommand("invariants", "distance invariants of a planar_code file");
  inv->add_option("input", in_path, "planar_code file")->required();
  inv->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  inv->add_option("--out", out_path);

  auto* con = app.add_subcommand("construct", "build a family member and verify its formula");
  con->add_option("family", family_str, "tri|tri4|tri5|quad|quad3")->required();
  con->add_option("n", n, "order")->required();
  con->add_option("--out", out_path, "write planar_code here");

  auto* tab = app.add_subcommand("table", "largest minimum status per order");
  tab->add_option("class", class_str, "tri|tri4|tri5|quad|quad3")->required();
  tab->add_option("n_min", n_min)->required();
  tab->add_option("n_max", n_max)->required();
  tab->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  tab->add_flag("--compare-paper", compare_paper, "diff against the embedded reference tables");
  tab->add_option("--jobs", jobs);
  tab->add_option("--out", out_path);

  auto* enu = app.add_subcommand("enumerate", "isomorph-free stream of a class");
  enu->add_option("class", class_str)->required();
  enu->add_option("n", n)->required();
  enu->add_option("--format", format)->check(CLI::IsMember({"text", "planar_code"}));
  enu->add_option("--jobs", jobs);
  enu->add_option("--out", out_path);

  auto* ver = app.add_subcommand("verify", "bound and lemma checks over a corpus");
  ver->add_option("--in", in_path, "planar_code file");
  ver->add_option("--class", class_str);
  ver->add_option("--n-min", n_min);
  ver->add_option("--n-max", n_max);
  ver->add_flag("--constructions", constructions, "verify all construction families");
  ver->add_option("--cons-max", cons_max, "construction order limit");
  ver->add_flag("--lemmas", lemmas);
  ver->add_flag("--bounds", bounds_flag);
  ver->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(in_path, format, out_path);
    if (con->parsed()) return cmd_construct(family_str, n, out_path);
    if (tab->parsed())
      return cmd_table(class_str, n_min, n_max, format, compare_paper, jobs, out_path);
    if (enu->parsed()) return cmd_enumerate(class_str, n, format, jobs, out_path);
    if (ver->parsed())
      return cmd_verify(in_path, class_str, n_min, n_max, constructions, cons_max, lemmas,
                        bounds_flag, jobs);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UnsupportedOrder& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
