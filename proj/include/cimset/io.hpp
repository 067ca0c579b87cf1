#pragma once

// JSON on disk uses node names; everything in memory uses positions.

#include <string>

#include "json.hpp"

#include "cimset/graphs.hpp"
#include "cimset/learn.hpp"
#include "cimset/oracle.hpp"
#include "cimset/scoring.hpp"

namespace cimset {

using Json = nlohmann::ordered_json;

// { "ordering": [...], "floor": [[...],...], "ceiling": [[...],...], "max_parents": null|K }
// "floor" defaults to all-empty; "max_parents" is optional.
FamilySpec family_from_json(const Json& j);
Json family_to_json(const FamilySpec& spec);

// { "ordering": [...], "parents": [[...],...] }. When `ordering` is given
// the file must list the same names in the same order.
ParentMap graph_from_json(const Json& j, const OrderingPtr& ordering = nullptr);
Json graph_to_json(const ParentMap& g);

// Score fixtures hold a family plus either
//   "local_scores": [{ "child": c, "parents": [...], "score": x }, ...]
// with every admissible cell listed, or
//   "data_vector":  [{ "child": c, "parents": [...], "value": x }, ...]
// with optional "offsets": { child: x } (default 0), unlisted coordinates 0.
struct ScoreFixture {
  FamilySpec family;
  ScoreTable table;
};
ScoreFixture score_fixture_from_json(const Json& j);

Json learn_result_to_json(const LearnResult& r);
Json comparison_to_json(const ComparisonReport& report);

// One JSON object per certificate; cloud indices are mapped to graphs.
Json certificate_to_json(const Certificate& cert, const std::vector<ParentMap>& vertices);

Json load_json(const std::string& path);
FamilySpec load_family(const std::string& path);
ParentMap load_graph(const std::string& path, const OrderingPtr& ordering = nullptr);
ScoreFixture load_score_fixture(const std::string& path);

}  // namespace cimset
