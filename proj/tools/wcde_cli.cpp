#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "wcde/cde.hpp"
#include "wcde/errors.hpp"
#include "wcde/parallel.hpp"
#include "wcde/rook.hpp"

using json = nlohmann::ordered_json;
using namespace wcde;

namespace {

struct Options {
  std::string format = "json";
  int threads = 0;
  std::uint64_t seed = 1;
  std::string out;
  bool dot = false;
};

// A lattice given on the command line: a permutation (weak interval [e,w]) or a skew shape
// (interval of Young's lattice).
struct Target {
  std::optional<WeakInterval> iv;
  std::optional<FiniteLattice> young;
  std::optional<SkewShape> shape;

  const Hasse& hasse() const { return iv ? iv->hasse() : young->hasse(); }
  GammaLabeling labeling() const { return iv ? iv->gamma_labeling() : gamma_labeling(*young); }
};

Target load(const std::string& text) {
  Target t;
  if (text.find('/') != std::string::npos || text.find(',') != std::string::npos) {
    t.shape = SkewShape::parse(text);
    t.young = young_interval(*t.shape);
  } else {
    t.iv = WeakInterval::build(Permutation::parse(text));
  }
  return t;
}

std::string q(const Rational& r) { return to_string(r); }

std::vector<int> ranks(const Hasse& h) {
  std::vector<int> r(h.size(), 0);
  for (int x : h.topo())
    for (int y : h.up(x)) r[y] = std::max(r[y], r[x] + 1);
  return r;
}

std::string dot(const Target& t) {
  const Hasse& h = t.hasse();
  GammaLabeling gl = t.labeling();
  auto r = ranks(h);
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int x = 0; x < h.size(); ++x) os << "  n" << x << " [label=\"" << h.payload(x) << "\"];\n";
  int top = *std::max_element(r.begin(), r.end());
  for (int k = 0; k <= top; ++k) {
    os << "  { rank=same;";
    for (int x = 0; x < h.size(); ++x)
      if (r[x] == k) os << " n" << x << ";";
    os << " }\n";
  }
  for (int e = 0; e < h.edge_count(); ++e) {
    const Edge& ed = h.edges()[e];
    std::string label = t.iv ? t.iv->edge_label(e).str() : h.payload(gl.label(e));
    os << "  n" << ed.lo << " -> n" << ed.hi << " [label=\"" << label << "\", dir=none];\n";
  }
  os << "}\n";
  return os.str();
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Flat objects become key/value lines; arrays of objects become a table.
std::string tsv(const json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << "# " << k << "\n";
      bool first = true;
      for (const auto& row : v) {
        if (first) {
          std::string sep;
          for (const auto& [c, x] : row.items()) {
            (void)x;
            os << sep << c;
            sep = "\t";
          }
          os << "\n";
          first = false;
        }
        std::string sep;
        for (const auto& [c, x] : row.items()) {
          os << sep << (x.is_structured() ? x.dump() : scalar(x));
          sep = "\t";
        }
        os << "\n";
      }
    } else {
      os << k << "\t" << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
    }
  }
  return os.str();
}

class Output {
 public:
  explicit Output(const Options& o) : opt_(o) {}
  void emit(const json& j, const Target* t = nullptr) const {
    std::string text;
    if (opt_.format == "dot" || opt_.dot) {
      if (!t) throw ParseError("dot output needs a lattice argument");
      text = dot(*t);
    } else if (opt_.format == "tsv") {
      text = tsv(j);
    } else {
      text = j.dump(2) + "\n";
    }
    if (opt_.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(opt_.out);
      if (!f) throw std::runtime_error("cannot write " + opt_.out);
      f << text;
    }
  }

 private:
  const Options& opt_;
};

int cmd_classify(const std::string& text, const Output& out) {
  Permutation w = Permutation::parse(text);
  PermClass c = classify(w);
  auto sv = match_skew_shape(rothe_diagram(w));
  json j;
  j["w"] = w.str();
  j["n"] = w.size();
  j["length"] = w.length();
  j["grassmannian"] = c.grassmannian;
  j["inverse_grassmannian"] = c.inverse_grassmannian;
  j["dominant"] = c.dominant;
  j["vexillary"] = c.vexillary;
  j["fully_commutative"] = c.fully_commutative;
  j["skew_vexillary"] = sv.has_value();
  j["shape"] = sv ? json(sv->shape.str()) : json(nullptr);
  bool connected = sv && sv->shape.size() > 0 && sv->shape.connected();
  j["connected"] = connected;
  j["balanced"] = connected && is_balanced(sv->shape);
  out.emit(j);
  return 0;
}

int cmd_census(int n, const Output& out) {
  CensusCounts c = census(n);
  json j;
  j["n"] = c.n;
  j["total"] = c.total;
  j["skew_vexillary"] = c.skew_vexillary;
  j["vexillary"] = c.vexillary;
  j["grassmannian"] = c.grassmannian;
  j["inverse_grassmannian"] = c.inverse_grassmannian;
  j["dominant"] = c.dominant;
  j["fully_commutative"] = c.fully_commutative;
  j["connected_balanced"] = c.connected_balanced;
  out.emit(j);
  return 0;
}

int cmd_interval(const std::string& text, const Output& out) {
  Target t = load(text);
  const Hasse& h = t.hasse();
  GammaLabeling gl = t.labeling();
  CdeReport c = cde_check(h);
  json j;
  j["elements"] = h.size();
  j["edges"] = h.edge_count();
  j["density"] = q(c.edge_density);
  j["join_irreducibles"] = gl.irreducibles().size();
  j["uniform_ddeg"] = q(c.uniform_expectation);
  j["maxchain_ddeg"] = q(c.maxchain_expectation);
  json els = json::array();
  for (int x = 0; x < h.size(); ++x) els.push_back(h.payload(x));
  j["payloads"] = els;
  json cov = json::array();
  for (int e = 0; e < h.edge_count(); ++e) {
    const Edge& ed = h.edges()[e];
    cov.push_back({{"lo", h.payload(ed.lo)}, {"hi", h.payload(ed.hi)}, {"label", h.payload(gl.label(e))}});
  }
  j["covers"] = cov;
  out.emit(j, &t);
  return 0;
}

int cmd_cde(const std::string& text, const Output& out) {
  Target t = load(text);
  CdeReport c = cde_check(t.hasse());
  json j;
  j["cde"] = c.is_cde;
  j["uniform_ddeg"] = q(c.uniform_expectation);
  j["maxchain_ddeg"] = q(c.maxchain_expectation);
  j["density"] = q(c.edge_density);
  out.emit(j);
  return 0;
}

int cmd_tcde(const std::string& text, const Output& out) {
  Target t = load(text);
  const Hasse& h = t.hasse();
  TcdeResult r = tcde_check(t.labeling());
  json j;
  j["tcde"] = r.is_tcde();
  j["density"] = q(r.density);
  if (r.certificate) {
    j["constant"] = q(r.certificate->constant);
    json co = json::array();
    for (const auto& [p, a] : r.certificate->coeffs)
      if (sgn(a) != 0) co.push_back({{"irreducible", h.payload(p)}, {"coefficient", q(a)}});
    j["coefficients"] = co;
  } else {
    json wt = json::array();
    for (int x = 0; x < h.size(); ++x) wt.push_back({{"element", h.payload(x)}, {"weight", q(r.witness->weights[x])}});
    j["witness"] = wt;
    j["witness_ddeg"] = q(r.witness_expectation);
  }
  out.emit(j);
  return 0;
}

int cmd_mcde(const std::string& text, int m_max, const Output& out) {
  Target t = load(text);
  McdeReport r = mcde_scan(t.hasse(), m_max);
  json j;
  json vals = json::array();
  for (std::size_t m = 0; m < r.values.size(); ++m) vals.push_back({{"m", m}, {"ddeg", q(r.values[m])}});
  j["mcde_up_to_m"] = !r.first_difference.has_value();
  j["first_difference"] = r.first_difference ? json(*r.first_difference) : json(nullptr);
  j["values"] = vals;
  out.emit(j);
  return 0;
}

int cmd_rowmotion(const std::string& text, const Output& out) {
  Target t = load(text);
  const Hasse& h = t.hasse();
  GammaLabeling gl = t.labeling();
  Rowmotion row(gl);
  HomomesyReport hr = homomesy_check(gl, ddeg(h));
  json j;
  j["orbit_count"] = row.orbits().size();
  j["order"] = row.order().get_str();
  j["ddeg_homomesic"] = hr.homomesic;
  json orbs = json::array();
  for (std::size_t k = 0; k < row.orbits().size(); ++k) {
    json members = json::array();
    for (int x : row.orbits()[k]) members.push_back(h.payload(x));
    orbs.push_back({{"size", row.orbits()[k].size()}, {"ddeg_average", q(hr.orbits[k].average)}, {"elements", members}});
  }
  j["orbits"] = orbs;
  out.emit(j);
  return 0;
}

int cmd_rook_verify(const std::string& text, const Output& out) {
  Permutation w = Permutation::parse(text);
  RookCensus rc = verify_perm_rooks_for(w, true);
  json j;
  j["w"] = w.str();
  j["anchors"] = rc.anchors;
  j["evaluations"] = rc.evaluations;
  j["failures"] = rc.failures;
  out.emit(j);
  return rc.failures.empty() ? 0 : 1;
}

int cmd_certificate(const std::string& text, const Output& out, std::uint64_t seed) {
  Permutation w = Permutation::parse(text);
  CertificateReport r = theorem_certificate(w, seed);
  json j;
  j["w"] = w.str();
  j["shape"] = r.shape.str();
  j["a"] = r.a;
  j["b"] = r.b;
  json co = json::array();
  for (const auto& [box, c] : r.coefficients)
    if (c != 0) co.push_back({{"i", box.row}, {"j", box.col}, {"c", c}});
  j["coefficients"] = co;
  j["constant"] = r.constant;
  j["density"] = q(r.density);
  j["distributions_checked"] = r.distributions_checked;
  out.emit(j);
  return 0;
}

int cmd_theorem(int n, const Output& out) {
  TheoremReport r = verify_main_theorem(n);
  json j;
  j["n"] = n;
  j["permutations"] = r.permutations;
  j["instances"] = r.records.size();
  j["violations"] = r.violations;
  json recs = json::array();
  for (const auto& rec : r.records)
    recs.push_back({{"w", rec.w.str()},
                    {"shape", rec.shape.str()},
                    {"a", rec.a},
                    {"b", rec.b},
                    {"elements", rec.elements},
                    {"edges", rec.edges},
                    {"density", q(rec.density)},
                    {"tcde", rec.tcde},
                    {"cde", rec.cde}});
  j["records"] = recs;
  out.emit(j);
  return r.violations.empty() ? 0 : 1;
}

int cmd_balanced(int a, int b, const Output& out) {
  auto shapes = enumerate_balanced(a, b);
  const int g = std::gcd(a, b);
  long expect = 1, expect_straight = 1;
  for (int k = 1; k < g; ++k) {
    expect *= 3;
    expect_straight *= 2;
  }
  long straight = 0;
  json list = json::array();
  for (const auto& s : shapes) {
    straight += s.straight();
    list.push_back(s.str());
  }
  const bool ok = static_cast<long>(shapes.size()) == expect && straight == expect_straight;
  json j;
  j["a"] = a;
  j["b"] = b;
  j["count"] = shapes.size();
  j["straight"] = straight;
  j["expected_count"] = expect;
  j["expected_straight"] = expect_straight;
  j["ok"] = ok;
  j["shapes"] = list;
  out.emit(j);
  return ok ? 0 : 1;
}

int cmd_export(const std::string& text, const Output& out) {
  Target t = load(text);
  const Hasse& h = t.hasse();
  json j;
  j["elements"] = h.payloads();
  json cov = json::array();
  for (const Edge& e : h.edges()) cov.push_back({e.lo, e.hi});
  j["covers"] = cov;
  out.emit(j, &t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak order intervals, toggle-symmetric distributions and rooks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "tsv", "dot"}));
  app.add_option("--threads", opt.threads, "Worker threads (default: WCDE_THREADS or OpenMP default)");
  app.add_option("--seed", opt.seed, "Seed for sampled distributions");
  app.add_option("--out", opt.out, "Write output to this path");

  std::string arg;
  int n = 0, m_max = 0, a = 0, b = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a permutation");
  classify_cmd->add_option("w", arg)->required();
  auto* census_cmd = app.add_subcommand("census", "Count permutation classes in S_n");
  census_cmd->add_option("n", n)->required()->check(CLI::Range(1, 10));
  auto* interval_cmd = app.add_subcommand("interval", "Build [e,w] or a Young interval");
  interval_cmd->add_option("target", arg)->required();
  interval_cmd->add_flag("--dot", opt.dot, "Emit Graphviz DOT");
  auto* cde_cmd = app.add_subcommand("cde", "Uniform vs maxchain expected down-degree");
  cde_cmd->add_option("target", arg)->required();
  auto* tcde_cmd = app.add_subcommand("tcde", "Decide tCDE: certificate or witness");
  tcde_cmd->add_option("target", arg)->required();
  auto* mcde_cmd = app.add_subcommand("mcde", "Multichain expectations for m = 0..m_max");
  mcde_cmd->add_option("target", arg)->required();
  mcde_cmd->add_option("m_max", m_max)->required()->check(CLI::Range(0, 64));
  auto* row_cmd = app.add_subcommand("rowmotion", "Rowmotion orbits and ddeg homomesy");
  row_cmd->add_option("target", arg)->required();
  auto* rook_cmd = app.add_subcommand("rook-verify", "Evaluate every permutation rook on [e,w]");
  rook_cmd->add_option("w", arg)->required();
  auto* cert_cmd = app.add_subcommand("certificate", "Rook certificate for a balanced skew-vexillary w");
  cert_cmd->add_option("w", arg)->required();
  auto* thm_cmd = app.add_subcommand("theorem", "Check every connected balanced instance in S_n");
  thm_cmd->add_option("n", n)->required()->check(CLI::Range(1, 8));
  auto* bal_cmd = app.add_subcommand("balanced", "Enumerate balanced shapes in an a x b box");
  bal_cmd->add_option("a", a)->required()->check(CLI::Range(1, 12));
  bal_cmd->add_option("b", b)->required()->check(CLI::Range(1, 12));
  auto* export_cmd = app.add_subcommand("export", "Export a lattice");
  export_cmd->add_option("target", arg)->required();
  export_cmd->add_flag("--dot", opt.dot, "Emit Graphviz DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_threads(opt.threads);
  Output out(opt);
  try {
    if (*classify_cmd) return cmd_classify(arg, out);
    if (*census_cmd) return cmd_census(n, out);
    if (*interval_cmd) return cmd_interval(arg, out);
    if (*cde_cmd) return cmd_cde(arg, out);
    if (*tcde_cmd) return cmd_tcde(arg, out);
    if (*mcde_cmd) return cmd_mcde(arg, m_max, out);
    if (*row_cmd) return cmd_rowmotion(arg, out);
    if (*rook_cmd) return cmd_rook_verify(arg, out);
    if (*cert_cmd) return cmd_certificate(arg, out, opt.seed);
    if (*thm_cmd) return cmd_theorem(n, out);
    if (*bal_cmd) return cmd_balanced(a, b, out);
    if (*export_cmd) return cmd_export(arg, out);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
