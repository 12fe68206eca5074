#include "intaut/graph_aut.hpp"
#include "intaut/transform_group.hpp"

namespace intaut {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::StrictlyLarger: return "StrictlyLarger";
    case Verdict::Violation: return "Violation";
  }
  return "Unknown";
}

std::optional<Verdict> predicted_verdict(std::uint32_t q, unsigned n) {
  if (n >= 3) return Verdict::Equal;
  if (n == 2) return q % 4 == 3 ? Verdict::Equal : Verdict::StrictlyLarger;
  return std::nullopt;
}

namespace {

bool preserves_edges(const Graph& graph, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                     const PointPermutation& perm) {
  // A bijection mapping every edge to an edge is an automorphism of a finite graph.
  for (const auto& [u, v] : edges)
    if (!graph.adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace

ClassificationReport verify_classification(const AffineSpace& space) {
  return verify_classification(space, build_integral_graph(space).graph);
}

ClassificationReport verify_classification(const AffineSpace& space, const Graph& graph) {
  if (graph.num_vertices() != space.size())
    throw Error(ErrorCode::SizeMismatch, "graph does not match the point set");
  ClassificationReport report;
  report.predicted = predicted_verdict(space.q(), space.n());
  report.orthogonal_count = enumerate_orthogonal(space).size();
  const auto semiaffine = semiaffine_group(space);
  report.semiaffine_order = semiaffine.size();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < graph.num_vertices(); ++u)
    for (std::uint32_t v = u + 1; v < graph.num_vertices(); ++v)
      if (graph.adjacent(u, v)) edges.emplace_back(u, v);
  report.semiaffine_contained = true;
  for (const auto& g : semiaffine) {
    if (!preserves_edges(graph, edges, g)) {
      report.semiaffine_contained = false;
      break;
    }
  }

  report.aut = automorphism_group(graph);
  report.aut_order = report.aut.order;
  for (const auto& g : report.aut.generators)
    if (!recognize_semiaffine(g, space)) report.extra_generators.push_back(g);

  const BigInt semi = report.semiaffine_order;
  if (!report.semiaffine_contained) {
    report.verdict = Verdict::Violation;
  } else if (report.aut_order == semi) {
    report.verdict = report.extra_generators.empty() ? Verdict::Equal : Verdict::Violation;
  } else if (report.aut_order > semi && report.aut_order % semi == 0 && !report.extra_generators.empty()) {
    report.verdict = Verdict::StrictlyLarger;
  } else {
    report.verdict = Verdict::Violation;
  }
  return report;
}

}  // namespace intaut
