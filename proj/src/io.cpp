#include "cimset/io.hpp"

#include <fstream>

#include "cimset/errors.hpp"

namespace cimset {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> name_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError(what + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<Subset> per_child_sets(const Json& j, const NodeOrdering& ordering, const std::string& what) {
  if (!j.is_array() || j.size() != ordering.size())
    throw FormatError("'" + what + "' needs one list per node (" + std::to_string(ordering.size()) + ")");
  std::vector<Subset> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(ordering.subset_of(name_list(j[i], what)));
  return out;
}

Json names_json(const NodeOrdering& ordering, Subset s) { return Json(ordering.names_of(s)); }

OrderingPtr ordering_from(const Json& j, const OrderingPtr& expected) {
  auto names = name_list(field(j, "ordering"), "'ordering'");
  if (expected) {
    if (names != expected->names()) throw DomainError("graph ordering differs from the family ordering");
    return expected;
  }
  return make_ordering(std::move(names));
}

std::size_t child_position(const Json& entry, const NodeOrdering& ordering) {
  const auto& c = field(entry, "child");
  if (!c.is_string()) throw FormatError("'child' must be a node name");
  return ordering.position(c.get<std::string>());
}

double number(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) throw FormatError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

FamilySpec family_from_json(const Json& j) {
  const auto ordering = ordering_from(j, nullptr);
  const std::size_t n = ordering->size();
  std::vector<Subset> floor(n, 0);
  if (j.contains("floor")) floor = per_child_sets(j["floor"], *ordering, "floor");
  const auto ceiling = per_child_sets(field(j, "ceiling"), *ordering, "ceiling");
  std::optional<unsigned> cap;
  if (j.contains("max_parents") && !j["max_parents"].is_null()) {
    if (!j["max_parents"].is_number_unsigned()) throw FormatError("'max_parents' must be a nonnegative integer or null");
    cap = j["max_parents"].get<unsigned>();
  }
  return FamilySpec(ordering, floor, ceiling, cap);
}

Json family_to_json(const FamilySpec& spec) {
  const auto& o = spec.ordering();
  Json floor = Json::array(), ceiling = Json::array();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    floor.push_back(names_json(o, spec.floor(i)));
    ceiling.push_back(names_json(o, spec.ceiling(i)));
  }
  Json j;
  j["ordering"] = o.names();
  j["floor"] = floor;
  j["ceiling"] = ceiling;
  j["max_parents"] = spec.has_cap() ? Json(*spec.max_parents()) : Json(nullptr);
  return j;
}

ParentMap graph_from_json(const Json& j, const OrderingPtr& ordering) {
  const auto o = ordering_from(j, ordering);
  return ParentMap(o, per_child_sets(field(j, "parents"), *o, "parents"));
}

Json graph_to_json(const ParentMap& g) {
  Json parents = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) parents.push_back(names_json(g.ordering(), g.parents(i)));
  Json j;
  j["ordering"] = g.ordering().names();
  j["parents"] = parents;
  return j;
}

ScoreFixture score_fixture_from_json(const Json& j) {
  const FamilySpec spec = family_from_json(field(j, "family"));
  const auto& o = spec.ordering();
  const bool has_scores = j.contains("local_scores");
  const bool has_vector = j.contains("data_vector");
  if (has_scores == has_vector) throw FormatError("score fixture needs exactly one of 'local_scores' or 'data_vector'");

  if (has_scores) {
    ScoreTable table(spec);
    std::vector<std::vector<bool>> seen(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) seen[i].assign(table.parent_sets(i).size(), false);
    for (const auto& e : j["local_scores"]) {
      const auto child = child_position(e, o);
      const Subset p = o.subset_of(name_list(field(e, "parents"), "'parents'"));
      const auto slot = table.slot(child, p);
      if (seen[child][slot]) throw FormatError("duplicate local score for '" + o.name(child) + "' {" + o.format(p) + "}");
      seen[child][slot] = true;
      table.set_at(child, slot, number(e, "score"));
    }
    for (std::size_t i = 0; i < spec.size(); ++i)
      for (std::size_t pos = 0; pos < seen[i].size(); ++pos)
        if (!seen[i][pos])
          throw FormatError("missing local score for '" + o.name(i) + "' {" + o.format(table.parent_sets(i)[pos]) + "}");
    return ScoreFixture{spec, std::move(table)};
  }

  const auto index = coordinate_index(spec);
  std::vector<double> values(index->size(), 0.0);
  for (const auto& e : j["data_vector"]) {
    const auto child = child_position(e, o);
    const Subset p = o.subset_of(name_list(field(e, "parents"), "'parents'"));
    values[index->position(child, p)] = number(e, "value");
  }
  std::vector<double> offsets(spec.size(), 0.0);
  if (j.contains("offsets")) {
    const auto& off = j["offsets"];
    if (!off.is_object()) throw FormatError("'offsets' must map node names to numbers");
    for (const auto& [name, v] : off.items()) {
      if (!v.is_number()) throw FormatError("offset of '" + name + "' must be a number");
      offsets[o.position(name)] = v.get<double>();
    }
  }
  DataVector dv(index, std::move(values), std::move(offsets));
  return ScoreFixture{spec, score_table_from_data_vector(dv)};
}

Json learn_result_to_json(const LearnResult& r) {
  const auto& o = r.graph.ordering();
  Json per_child = Json::array();
  for (const auto& c : r.per_child) {
    Json e;
    e["child"] = o.name(c.child);
    e["parents"] = names_json(o, c.parents);
    e["score"] = snap(c.score);
    e["candidates"] = c.candidates;
    per_child.push_back(e);
  }
  Json j;
  j["method"] = to_string(r.method);
  j["score"] = r.total_score;
  j["graph"] = graph_to_json(r.graph);
  j["per_child"] = per_child;
  return j;
}

Json comparison_to_json(const ComparisonReport& report) {
  Json j;
  for (const MethodReport* m : {&report.exact, &report.forward, &report.backward}) {
    Json e = learn_result_to_json(m->result);
    e.erase("method");
    e["gap"] = m->gap;
    e["shd"] = m->shd;
    Json agree = Json::object();
    for (std::size_t i = 0; i < m->agrees.size(); ++i) agree[m->result.graph.ordering().name(i)] = bool(m->agrees[i]);
    e["agrees_with_exact"] = agree;
    j[to_string(m->result.method)] = e;
  }
  return j;
}

Json certificate_to_json(const Certificate& cert, const std::vector<ParentMap>& vertices) {
  Json j;
  j["kind"] = to_string(cert.kind);
  j["verified"] = cert.verified;
  Json subjects = Json::array();
  for (auto s : cert.subjects) subjects.push_back(graph_to_json(vertices.at(s))["parents"]);
  j["subjects"] = subjects;
  Json witness = Json::array();
  for (const auto& w : cert.witness) witness.push_back(to_string(w));
  j["witness"] = witness;
  if (!cert.support.empty()) {
    Json support = Json::array();
    for (auto s : cert.support) support.push_back(graph_to_json(vertices.at(s))["parents"]);
    j["support"] = support;
  }
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

namespace {

template <class F>
auto with_source(const std::string& path, F&& f) {
  try {
    return f(load_json(path));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const FormatError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw FormatError(path + ": " + what);
  }
}

}  // namespace

FamilySpec load_family(const std::string& path) {
  return with_source(path, [](const Json& j) { return family_from_json(j); });
}

ParentMap load_graph(const std::string& path, const OrderingPtr& ordering) {
  return with_source(path, [&](const Json& j) { return graph_from_json(j, ordering); });
}

ScoreFixture load_score_fixture(const std::string& path) {
  return with_source(path, [](const Json& j) { return score_fixture_from_json(j); });
}

}  // namespace cimset
