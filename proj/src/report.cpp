#include "balcx/report.hpp"

namespace balcx {

Json char_sweep_report(const Complex& complex, const std::vector<std::uint64_t>& characteristics,
                       const SolverOptions& options) {
  Json rows = Json::array();
  Json balanceable_at = Json::array();
  for (auto p : characteristics) {
    const FieldSpec field(p);
    const auto verdict = decide_balanceable(complex, field, options);
    rows.push_back(Json{{"char", p},
                        {"balanceable", verdict.balanceable},
                        {"minimal", is_minimal(complex, field)},
                        {"dim", verdict.nullspace_dimension},
                        {"witness", verdict.witness ? to_json(*verdict.witness) : Json(nullptr)}});
    if (verdict.balanceable) balanceable_at.push_back(p);
  }
  return Json{{"report", "char-sweep"},
              {"complex", to_json(complex)},
              {"results", std::move(rows)},
              {"balanceable_at", std::move(balanceable_at)}};
}

Json catalogue_report(int max_vertices, FieldSpec field, const EnumerationOptions& options) {
  Json graphs = Json::array();
  Json counts = Json::object();
  Json mismatches = Json::array();
  for (const auto& graph : enumerate_minimal_graphs(max_vertices, field, options)) {
    const auto shape = classify_graph(graph, field);
    Json entry = to_json(graph);
    entry["shape"] = to_json(shape);
    const std::string tag = to_string(shape.tag);
    counts[tag] = counts.value(tag, 0) + 1;
    if (!shape.is_minimal()) mismatches.push_back(entry);
    graphs.push_back(std::move(entry));
  }
  const auto mismatch_count = mismatches.size();
  return Json{{"report", "catalogue"},
              {"vertices", max_vertices},
              {"char", field.characteristic()},
              {"count", graphs.size()},
              {"tags", std::move(counts)},
              {"mismatch_count", mismatch_count},
              {"mismatches", std::move(mismatches)},
              {"graphs", std::move(graphs)}};
}

}  // namespace balcx
