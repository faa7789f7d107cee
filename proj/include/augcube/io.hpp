#pragma once

// JSON artifacts and DOT drawings. Every artifact carries an "artifact" tag
// naming its kind so verify_artifact can re-check it without context.

#include <string>
#include <vector>

#include <json.hpp>

#include "augcube/fault_model.hpp"
#include "augcube/hamiltonicity.hpp"
#include "augcube/oracle.hpp"
#include "augcube/reciprocity.hpp"

namespace augcube {

using Json = nlohmann::ordered_json;

Json edges_to_json(std::span<const Edge> edges, int n);
std::vector<Edge> edges_from_json(const Json& j, int n);

Json graph_to_json(const CubeGraph& g);
Json subcube_to_json(const SpanningSubcube& sub);
Json pair_to_json(const SubcubePair& pair);
Json fn_table_to_json(int max_n);
Json subcubes_to_json(int n);

Json cycle_to_json(const CycleSequence& c, int n);
CycleSequence cycle_from_json(const Json& j, int n);
Json edhc_report_to_json(const EdhcReport& r, int n);
Json bundle_to_json(const EdhcBundle& b);
EdhcBundle bundle_from_json(const Json& j);

/// A fault set is a JSON list of canonical [low, high] label pairs.
Json fault_set_to_json(const FaultSet& f);
FaultSet fault_set_from_json(const Json& j, int n);

Json verdict_to_json(const SubcubeVerdict& v);
Json trial_to_json(const TrialReport& t, int n, bool with_cycles);

/// Oracle verdicts. Each compares a brute-force count with the claimed value.
Json subgraph_count_to_json(int n);
Json four_cycles_to_json(int n);
Json table1_check_to_json(const std::vector<Table1Row>& rows);

struct ArtifactCheck {
  bool pass = true;
  std::string detail;
};

/// Re-derives an emitted artifact from its own contents and reports the
/// first disagreement. Malformed input is a failure, not an exception.
ArtifactCheck verify_artifact(const Json& artifact);

/// Hypercube edges solid, augmented edges dashed, labelled with their
/// dimension. `groups` colours edge sets (cycles or pair members) in order.
std::string to_dot(int n, std::span<const Edge> edges, const std::vector<std::vector<Edge>>& groups = {});

}  // namespace augcube
