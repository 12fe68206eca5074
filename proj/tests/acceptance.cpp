// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "intaut/graph_aut.hpp"
#include "intaut/orbit_analysis.hpp"
#include "intaut/transform_group.hpp"
#include "oracles.hpp"

using namespace intaut;

namespace {

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<bool(std::ostream&)> run;
};

AffineSpace space(std::uint32_t p, unsigned h, unsigned n) { return AffineSpace(make_field(p, h), n); }

std::vector<SphereClass> nonempty_classes(const AffineSpace& s) {
  const auto c = s.sphere_counts();
  std::vector<SphereClass> out;
  if (c.s0) out.push_back(SphereClass::Isotropic);
  if (c.s_plus) out.push_back(SphereClass::SquareNonzero);
  if (c.s_minus) out.push_back(SphereClass::NonSquare);
  return out;
}

std::vector<PointPermutation> full_aut_group(const AffineSpace& s, std::size_t max_elements) {
  const auto g = build_integral_graph(s).graph;
  return generate_group(automorphism_group(g).generators, s.size(), max_elements);
}

bool sphere_grid(std::ostream& log) {
  std::size_t checked = 0;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned h : {1u, 2u})
      for (unsigned n = 2; n <= 5; ++n) {
        const auto field = make_field(p, h);
        if (std::pow(double(field->q()), n) > 20000) continue;
        const auto f = sphere_counts_formula(field, n);
        if (!(f == sphere_counts_enumerated(field, n))) {
          log << "mismatch at (" << p << "," << h << "," << n << ")";
          return false;
        }
        ++checked;
      }
  const auto c = sphere_counts_formula(3, 3);
  log << checked << " instances; (3,3): s0=" << c.s0 << " s-=" << c.s_minus;
  return c.s0 == 8 && c.s_minus == 12;
}

bool classification_333(std::ostream& log) {
  const auto s = space(3, 1, 3);
  const auto aut = automorphism_group(build_integral_graph(s).graph).order;
  const auto semi = semiaffine_group(s).size();
  const auto orth = oracle::orthogonal_count_prime(3, 3);
  const std::uint64_t cross = 27 * 1 * (2 * orth) / 2;
  log << "aut=" << aut << " semiaffine=" << semi << " |O|=" << orth << " formula=" << cross;
  return orth == 48 && semi == 1296 && cross == 1296 && aut == 1296;
}

bool classification_large(std::ostream& log) {
  bool ok = true;
  for (const auto& [p, n] : {std::pair{5u, 3u}, {3u, 4u}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_classification(space(p, 1, n));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << "(" << p << ",1," << n << ") " << to_string(r.verdict) << " |Aut|=" << r.aut_order << " in " << secs
        << "s; ";
    ok = ok && r.verdict == Verdict::Equal && secs < 600;
  }
  return ok;
}

bool plane_dichotomy(std::ostream& log) {
  const std::tuple<std::uint32_t, unsigned, Verdict> cases[] = {
      {3, 1, Verdict::Equal}, {7, 1, Verdict::Equal}, {5, 1, Verdict::StrictlyLarger}, {3, 2, Verdict::StrictlyLarger}};
  bool ok = true;
  for (const auto& [p, h, want] : cases) {
    const auto r = verify_classification(space(p, h, 2));
    log << "(" << p << "," << h << ",2) " << to_string(r.verdict) << "; ";
    ok = ok && r.verdict == want;
  }
  return ok;
}

bool m_orbit_partition(std::ostream& log) {
  std::size_t checked = 0;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (unsigned h : {1u, 2u})
      for (unsigned n = 2; n <= 5; ++n) {
        const auto field = make_field(p, h);
        if (std::pow(double(field->q()), n) > 3200) continue;
        const AffineSpace s(field, n);
        if (!(m_orbits(s) == classify_partition(s))) {
          log << "mismatch at (" << p << "," << h << "," << n << ")";
          return false;
        }
        ++checked;
      }
  log << checked << " instances";
  return true;
}

bool orbital_connectivity(std::ostream& log) {
  bool ok = true;
  for (const auto& [p, n] : {std::pair{3u, 3u}, {5u, 3u}, {3u, 4u}}) {
    const auto s = space(p, 1, n);
    const auto classes = nonempty_classes(s);
    ok = ok && classes.size() == 3;
    for (auto cls : classes) {
      const auto c = orbital_connected(s, cls);
      ok = ok && c.connected && !c.degenerate;
    }
  }
  const auto iso = orbital_connected(space(3, 1, 2), SphereClass::Isotropic);
  log << "S0 at (3,1,2): " << (iso.degenerate ? "degenerate" : "not degenerate");
  return ok && iso.degenerate;
}

bool aut_elements_are_semiaffine(std::ostream& log) {
  const auto s = space(3, 1, 3);
  const auto group = full_aut_group(s, 10000);
  std::size_t passed = 0;
  for (const auto& g : group) {
    const auto m = recognize_semiaffine(g, s);
    if (satisfies_zero_iff(g, s) && preserves_cones(g, s) && m && to_permutation(*m, s) == g) ++passed;
  }
  log << passed << "/" << group.size() << " elements";
  return group.size() == 1296 && passed == group.size();
}

bool rank_check(std::ostream& log) {
  bool ok = true;
  for (const auto& [p, n] : {std::pair{3u, 3u}, {5u, 3u}}) {
    const auto s = space(p, 1, n);
    const auto group = full_aut_group(s, 200000);
    const auto orb = stabilizer_orbits(group, 0);
    const auto c = s.sphere_counts();
    std::vector<std::size_t> want{c.s0, c.s_plus, c.s_minus};
    std::sort(want.begin(), want.end());
    const auto sub = orb.subdegrees(0);
    log << "(" << p << ",1," << n << ") |G|=" << group.size() << " rank=" << orb.rank() << "; ";
    ok = ok && orb.rank() == 4 && sub == want;
  }
  return ok;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(INTAUT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool property_suites(std::ostream& log) {
  // Field axioms, exhaustively for q <= 81.
  for (auto [p, h] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {7u, 2u}, {3u, 3u}, {3u, 4u}}) {
    const auto f = make_field(p, h);
    const auto q = f->q();
    for (ElemIndex x = 0; x < q; ++x) {
      if (x && f->mul(x, f->inv(x)) != 1) return log << "inverse", false;
      ElemIndex it = x;
      for (unsigned k = 0; k < h; ++k) it = f->pow(it, p);
      if (it != x) return log << "frobenius order", false;
      for (ElemIndex y = 0; y < q; ++y) {
        if (f->add(x, y) != f->add(y, x) || f->mul(x, y) != f->mul(y, x)) return log << "commutativity", false;
        if (x && y && f->is_square(f->mul(x, y)) != (f->is_square(x) == f->is_square(y)))
          return log << "square classes", false;
        for (ElemIndex z = 0; z < q; ++z) {
          if (f->add(f->add(x, y), z) != f->add(x, f->add(y, z))) return log << "add assoc", false;
          if (f->mul(f->mul(x, y), z) != f->mul(x, f->mul(y, z))) return log << "mul assoc", false;
          if (f->mul(x, f->add(y, z)) != f->add(f->mul(x, y), f->mul(x, z))) return log << "distributivity", false;
        }
      }
    }
  }

  std::mt19937 rng(2026);
  for (std::uint32_t n : {1u, 27u, 125u}) {
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 0u);
    std::shuffle(images.begin(), images.end(), rng);
    const PointPermutation perm(std::move(images));
    std::stringstream buf;
    write_permutation(buf, perm, "round trip");
    if (!(read_permutation(buf, n) == perm)) return log << "permutation file", false;
  }
  for (const auto& [p, h, n] : {std::tuple{3u, 1u, 3u}, {5u, 1u, 2u}, {3u, 2u, 2u}}) {
    const auto g = build_integral_graph(space(p, h, n)).graph;
    for (auto fmt : {GraphFormat::Graph6, GraphFormat::Dimacs})
      if (!(import_graph(export_graph(g, fmt), fmt) == g)) return log << "graph format", false;
  }

  const auto s = space(3, 1, 2);
  auto corrupted = build_integral_graph(s).graph;
  corrupted.toggle_edge(0, 1);
  if (verify_classification(s, corrupted).verdict != Verdict::Violation) return log << "corruption undetected", false;
  const int corrupt_exit = run_cli("verify --p 3 --n 2 --corrupt");
  if (corrupt_exit != 1) return log << "cli --corrupt exit " << corrupt_exit, false;

  const auto s3 = space(3, 1, 3);
  std::vector<std::uint32_t> images(27);
  std::iota(images.begin(), images.end(), 0u);
  std::swap(images[4], images[22]);
  const PointPermutation swap(std::move(images));
  if (recognize_semiaffine(swap, s3) || preserves_integral(swap, s3)) return log << "transposition accepted", false;

  log << "fields, permutation files, graph formats, negative controls";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sphere formula vs enumeration", 10, sphere_grid},
      {2, "classification at (3,1,3)", 60, classification_333},
      {3, "classification at (5,1,3) and (3,1,4)", 1200, classification_large},
      {4, "plane dichotomy", 60, plane_dichotomy},
      {5, "M-orbits are the sphere classes", 60, m_orbit_partition},
      {6, "orbital connectivity", 60, orbital_connectivity},
      {7, "Aut elements at (3,1,3) are semiaffine", 300, aut_elements_are_semiaffine},
      {8, "stabilizer rank", 300, rank_check},
      {9, "property suites", 60, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.time_limit_s) {
      ok = false;
      log << " (over time limit " << c.time_limit_s << "s)";
    }
    failures += !ok;
    std::printf("criterion %d %s: %s [%.2fs] %s\n", c.id, c.title, ok ? "PASS" : "FAIL", secs, log.str().c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
