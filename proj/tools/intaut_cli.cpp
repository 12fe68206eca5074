// Command-line front end: field-info, spheres, verify, recognize, export,
// sample-map. Exit codes: 0 all checks in their predicted state, 1 a
// mathematical check failed, 2 usage or configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "intaut/affine_space.hpp"
#include "intaut/finite_field.hpp"
#include "intaut/graph_aut.hpp"
#include "intaut/orbit_analysis.hpp"
#include "intaut/permutation.hpp"
#include "intaut/transform_group.hpp"

namespace {

using namespace intaut;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

enum class OutputMode { Text, Tsv };

struct RunConfig {
  std::uint64_t p = 0;
  unsigned h = 1;
  unsigned n = 0;
  std::vector<Residue> modulus;
  std::uint64_t max_points = kDefaultMaxPoints;
  unsigned threads = 1;
  OutputMode output = OutputMode::Text;
};

/// Ordered key/value report, printed as "key: value" or "key<TAB>value".
class Report {
 public:
  explicit Report(OutputMode mode) : mode_(mode) {}

  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    rows_.emplace_back(key, s.str());
  }

  void print(std::ostream& out) const {
    for (const auto& [k, v] : rows_) out << k << (mode_ == OutputMode::Tsv ? "\t" : ": ") << v << '\n';
  }

 private:
  OutputMode mode_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out;
}

std::string format_counts(const SphereCardinalities& c) {
  return std::to_string(c.s0) + " " + std::to_string(c.s_plus) + " " + std::to_string(c.s_minus);
}

FieldRef field_of(const RunConfig& cfg) {
  return make_field(cfg.p, cfg.h,
                    cfg.modulus.empty() ? std::nullopt : std::optional<std::vector<Residue>>(cfg.modulus));
}

AffineSpace space_of(const RunConfig& cfg) {
  if (cfg.n == 0) throw Error(ErrorCode::DimensionMismatch, "--n must be >= 1");
  return AffineSpace(field_of(cfg), cfg.n, cfg.max_points);
}

int cmd_field_info(const RunConfig& cfg) {
  const auto field = field_of(cfg);
  Report r(cfg.output);
  r.add("p", field->p());
  r.add("h", field->h());
  r.add("q", field->q());
  std::string coeffs;
  for (std::size_t k = 0; k < field->modulus().size(); ++k)
    coeffs += (k ? "," : "") + std::to_string(field->modulus()[k]);
  r.add("modulus", field->describe_modulus());
  r.add("modulus_coeffs", coeffs);
  r.add("primitive_element", field->primitive_element());
  std::vector<std::size_t> squares;
  for (ElemIndex x = 0; x < field->q(); ++x)
    if (field->is_square(x)) squares.push_back(x);
  r.add("squares", squares.size());
  r.add("nonsquares", field->q() - squares.size());
  r.add("square_elements", "{" + join(squares) + "}");
  r.print(std::cout);
  return kOk;
}

int cmd_spheres(const RunConfig& cfg) {
  const auto field = field_of(cfg);
  if (cfg.n == 0) throw Error(ErrorCode::DimensionMismatch, "--n must be >= 1");
  const auto formula = sphere_counts_formula(field, cfg.n);
  const auto counted = sphere_counts_enumerated(field, cfg.n, cfg.max_points);
  const bool match = formula == counted;
  Report r(cfg.output);
  r.add("q", field->q());
  r.add("n", cfg.n);
  r.add("epsilon", formula.epsilon);
  r.add("formula", format_counts(formula));
  r.add("enumerated", format_counts(counted));
  r.add("status", match ? "MATCH" : "MISMATCH");
  r.print(std::cout);
  return match ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& cfg, bool corrupt) {
  const auto space = space_of(cfg);
  if (space.n() < 2) throw Error(ErrorCode::DimensionMismatch, "verify needs n >= 2");
  auto graph = build_integral_graph(space).graph;
  if (corrupt) graph.toggle_edge(0, 1);

  Report r(cfg.output);
  bool all_ok = true;
  const auto check = [&](const std::string& key, bool ok) {
    r.add(key, ok ? "pass" : "FAIL");
    all_ok = all_ok && ok;
  };

  const auto report = verify_classification(space, graph);
  r.add("q", space.q());
  r.add("n", space.n());
  r.add("orthogonal_group_order", report.orthogonal_count);
  r.add("semiaffine_order", report.semiaffine_order);
  r.add("aut_order", report.aut_order);
  r.add("search_nodes", report.aut.node_count);
  r.add("semiaffine_contained", report.semiaffine_contained ? "yes" : "no");
  r.add("verdict", to_string(report.verdict));
  r.add("predicted", report.predicted ? std::string(to_string(*report.predicted)) : "none");
  if (report.verdict == Verdict::StrictlyLarger) {
    r.add("index", BigInt(report.aut_order / report.semiaffine_order));
    r.add("non_semiaffine_generators", report.extra_generators.size());
  }
  check("classification", report.as_predicted());

  const auto counts = space.sphere_counts();
  check("sphere_formula", counts == sphere_counts_formula(space.field(), space.n()));
  check("m_orbits", m_orbits(space) == classify_partition(space));

  const SphereClass classes[] = {SphereClass::Isotropic, SphereClass::SquareNonzero, SphereClass::NonSquare};
  for (auto cls : classes) {
    const auto conn = orbital_connected(space, cls);
    const std::string key = "orbital_" + std::string(to_string(cls));
    if (conn.degenerate) {
      r.add(key, "degenerate");
    } else {
      check(key, conn.connected);
    }
  }

  // Both properties are closed under composition, so checking generators
  // covers the whole group.
  if (space.n() >= 3) {
    bool zero_iff = true, cones = true, recognized = true;
    for (const auto& g : report.aut.generators) {
      zero_iff = zero_iff && satisfies_zero_iff(g, space);
      cones = cones && preserves_cones(g, space);
      const auto m = recognize_semiaffine(g, space);
      recognized = recognized && m && to_permutation(*m, space) == g;
    }
    check("zero_iff", zero_iff);
    check("cones", cones);
    check("recognized", recognized);
  }

  // Generators fixing the first base point generate its stabilizer.
  if (!report.aut.base.empty() && report.aut.base.front() == 0) {
    std::vector<PointPermutation> stab;
    for (const auto& g : report.aut.generators)
      if (g[0] == 0) stab.push_back(g);
    const auto orbits = orbits_under(stab, space.size());
    const auto sub = orbits.subdegrees(0);
    r.add("rank", orbits.rank());
    r.add("subdegrees", join(sub));
    if (space.n() >= 3) {
      std::vector<std::size_t> expected;
      for (auto s : {counts.s0, counts.s_plus, counts.s_minus})
        if (s > 0) expected.push_back(s);
      std::sort(expected.begin(), expected.end());
      check("rank", sub == expected);
    }
  }

  r.add("status", all_ok ? "OK" : "FAILED");
  r.print(std::cout);
  return all_ok ? kOk : kCheckFailed;
}

std::string format_element(const FieldElement& x) { return std::to_string(x.index()); }

int cmd_recognize(const RunConfig& cfg, const std::string& path) {
  const auto space = space_of(cfg);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  const auto perm = read_permutation(in, space.size());
  const auto m = recognize_semiaffine(perm, space);
  Report r(cfg.output);
  if (!m) {
    r.add("result", "NOT-SEMIAFFINE");
    r.print(std::cout);
    return kCheckFailed;
  }
  r.add("result", "SEMIAFFINE");
  r.add("a", format_element(m->a));
  r.add("i", m->i);
  if (m->A.is_identity()) {
    r.add("A", "I");
  } else {
    std::string rows;
    for (unsigned row = 0; row < space.n(); ++row) {
      rows += row ? ";" : "";
      for (unsigned c = 0; c < space.n(); ++c) rows += (c ? "," : "") + std::to_string(m->A.at(row, c));
    }
    r.add("A", rows);
  }
  const PointIndex b = canonical_index(m->b);
  if (b == 0) {
    r.add("b", "0");
  } else {
    std::string coords;
    for (unsigned j = 0; j < space.n(); ++j) coords += (j ? "," : "") + format_element(m->b.coords[j]);
    r.add("b", coords);
  }
  r.add("round_trip", to_permutation(*m, space) == perm ? "ok" : "FAILED");
  r.print(std::cout);
  return to_permutation(*m, space) == perm ? kOk : kCheckFailed;
}

int cmd_export(const RunConfig& cfg, const std::string& format, const std::string& path) {
  const auto space = space_of(cfg);
  const auto graph = build_integral_graph(space).graph;
  const auto text = export_graph(graph, format == "graph6" ? GraphFormat::Graph6 : GraphFormat::Dimacs);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
  Report r(cfg.output);
  r.add("vertices", graph.num_vertices());
  r.add("edges", graph.num_edges());
  r.add("format", format);
  r.add("out", path);
  r.print(std::cout);
  return kOk;
}

int cmd_sample_map(const RunConfig& cfg, std::uint64_t seed, const std::string& path) {
  const auto space = space_of(cfg);
  const auto orth = enumerate_orthogonal(space);
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::uint64_t bound) { return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng); };
  const SemiaffineMap m{FieldElement(space.field(), static_cast<ElemIndex>(1 + pick(space.q() - 1))),
                        static_cast<unsigned>(pick(space.f().h())), orth[pick(orth.size())],
                        space.point(static_cast<PointIndex>(pick(space.size())))};
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  std::ostringstream comment;
  comment << "semiaffine map a=" << m.a.index() << " i=" << m.i << " b=" << canonical_index(m.b);
  write_permutation(out, to_permutation(m, space), comment.str());
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InternalInconsistency:
    case ErrorCode::NotAGroup: return kCheckFailed;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral automorphisms of AG(n, q): construction and verification"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  RunConfig cfg;
  std::string output = "text";
  std::string modulus;

  const auto add_field_flags = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime characteristic")->required();
    sub->add_option("--h", cfg.h, "extension degree")->capture_default_str();
    sub->add_option("--modulus", modulus, "monic irreducible, comma-separated coefficients, constant first");
    sub->add_option("--max-points", cfg.max_points, "bound on q^n for enumeration")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker count")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--output", output, "text or tsv")->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();
  };

  auto* field_info = app.add_subcommand("field-info", "field order, modulus and square census");
  add_field_flags(field_info);

  auto* spheres = app.add_subcommand("spheres", "closed-form versus enumerated |S_0|, |S_+|, |S_-|");
  add_field_flags(spheres);
  spheres->add_option("--n", cfg.n, "dimension")->required();

  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "classification, orbit, cone and rank checks");
  add_field_flags(verify);
  verify->add_option("--n", cfg.n, "dimension")->required();
  verify->add_flag("--corrupt", corrupt, "flip the adjacency bit between vertices 0 and 1 (negative control)");

  std::string perm_file;
  auto* recognize = app.add_subcommand("recognize", "decompose a point permutation as x -> a x^(sigma^i) A + b");
  add_field_flags(recognize);
  recognize->add_option("--n", cfg.n, "dimension")->required();
  recognize->add_option("--perm-file", perm_file, "permutation file")->required();

  std::string format, out_path;
  auto* exporter = app.add_subcommand("export", "write the integral-distance graph");
  add_field_flags(exporter);
  exporter->add_option("--n", cfg.n, "dimension")->required();
  exporter->add_option("--format", format, "graph6 or dimacs")->required()->check(CLI::IsMember({"graph6", "dimacs"}));
  exporter->add_option("--out", out_path, "output path")->required();

  std::uint64_t seed = 1;
  auto* sample = app.add_subcommand("sample-map", "write the permutation of a random semiaffine map");
  add_field_flags(sample);
  sample->add_option("--n", cfg.n, "dimension")->required();
  sample->add_option("--seed", seed, "random seed")->capture_default_str();
  sample->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cfg.output = output == "tsv" ? OutputMode::Tsv : OutputMode::Text;
    if (!modulus.empty()) {
      std::istringstream in(modulus);
      for (std::string tok; std::getline(in, tok, ',');) cfg.modulus.push_back(static_cast<Residue>(std::stoul(tok)));
    }
    if (*field_info) return cmd_field_info(cfg);
    if (*spheres) return cmd_spheres(cfg);
    if (*verify) return cmd_verify(cfg, corrupt);
    if (*recognize) return cmd_recognize(cfg, perm_file);
    if (*exporter) return cmd_export(cfg, format, out_path);
    if (*sample) return cmd_sample_map(cfg, seed, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
