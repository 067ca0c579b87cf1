#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cimset/errors.hpp"
#include "cimset/geometry.hpp"
#include "cimset/imsets.hpp"
#include "cimset/io.hpp"
#include "cimset/learn.hpp"
#include "cimset/oracle.hpp"
#include "cimset/scoring.hpp"

namespace cimset::cli {

namespace {

struct Globals {
  std::string format = "text";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool json() const { return format == "json"; }
};

// "a1<-{} a2<-{} b1<-{a1,a2}"
std::string graph_line(const ParentMap& g) {
  std::string line;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) line += ' ';
    line += g.ordering().name(i) + "<-{" + g.ordering().format(g.parents(i)) + "}";
  }
  return line;
}

std::string braces(const NodeOrdering& o, Subset s) { return "{" + o.format(s) + "}"; }

// Runs f(i) for i in [0, n) across `threads` workers; callers write results
// into preallocated slots so output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const Globals& g, const std::string& family_path, std::uint64_t limit, bool count_only,
                  std::ostream& out) {
  const auto spec = load_family(family_path);
  FamilyEnumerator it(spec, limit);
  if (count_only) {
    if (g.json()) out << Json{{"members", it.size()}}.dump() << '\n';
    else out << it.size() << '\n';
    return kExitOk;
  }
  while (auto m = it.next()) out << (g.json() ? graph_to_json(*m).dump() : graph_line(*m)) << '\n';
  return kExitOk;
}

int cmd_imset(const Globals& g, const std::string& graph_path, const std::string& family_path, bool full,
              std::ostream& out) {
  if (full) {
    const auto graph = family_path.empty() ? load_graph(graph_path) : load_graph(graph_path, load_family(family_path).ordering_ptr());
    const auto entries = full_imset(graph);
    if (g.json()) {
      Json arr = Json::array();
      for (const auto& e : entries) arr.push_back(Json{{"set", graph.ordering().names_of(e.set)}, {"value", e.value}});
      out << Json{{"imset", arr}}.dump(2) << '\n';
    } else {
      for (const auto& e : entries) out << graph.ordering().format(e.set) << ' ' << int(e.value) << '\n';
    }
    return kExitOk;
  }
  if (family_path.empty()) throw DomainError("imset needs --family unless --full is given");
  const auto spec = load_family(family_path);
  const auto graph = load_graph(graph_path, spec.ordering_ptr());
  const auto index = coordinate_index(spec);
  const auto c = characteristic_imset(graph, index);
  if (g.json()) {
    Json arr = Json::array();
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
      const auto coord = index->coordinate(pos);
      arr.push_back(Json{{"child", spec.ordering().name(coord.child)},
                         {"parents", spec.ordering().names_of(coord.parents)},
                         {"value", c[pos]}});
    }
    out << Json{{"imset", arr}}.dump(2) << '\n';
  } else {
    out << imset_text(c);
  }
  return kExitOk;
}

int cmd_facets(const Globals& g, const std::string& family_path, const std::string& child_name,
               const std::optional<std::string>& row_text, std::ostream& out) {
  const auto spec = load_family(family_path);
  const auto& o = spec.ordering();
  if (spec.has_cap()) product_structure(spec);  // raises the unsupported error
  const auto index = coordinate_index(spec);
  const std::size_t child = o.position(child_name);
  std::optional<Subset> row;
  if (row_text) {
    std::vector<std::string> names;
    std::stringstream ss(*row_text);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) names.push_back(item);
    row = o.subset_of(names);
  }
  const auto facets = block_facets(*index, child, row);
  Json arr = Json::array();
  for (const auto& f : facets) {
    if (g.json()) {
      Json terms = Json::array();
      for (const auto& [pos, coef] : f.terms)
        terms.push_back(Json{{"parents", o.names_of(index->coordinate(pos).parents)}, {"coefficient", coef}});
      arr.push_back(Json{{"row", o.names_of(f.row)}, {"constant", f.constant}, {"terms", terms}});
      continue;
    }
    std::string line = std::to_string(f.constant);
    for (const auto& [pos, coef] : f.terms)
      line += std::string(coef > 0 ? " +" : " -") + braces(o, index->coordinate(pos).parents);
    out << line << " >= 0\n";
  }
  if (g.json()) out << Json{{"child", child_name}, {"facets", arr}}.dump(2) << '\n';
  return kExitOk;
}

int cmd_neighbors(const Globals& g, const std::string& family_path, const std::string& graph_path,
                  std::ostream& out) {
  const auto spec = load_family(family_path);
  const auto graph = load_graph(graph_path, spec.ordering_ptr());
  NeighborEnumerator it(spec, graph);
  while (auto h = it.next()) out << (g.json() ? graph_to_json(*h).dump() : graph_line(*h)) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct CheckRow {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<Certificate> falsified;
};

struct VerifyOptions {
  std::set<std::string> checks;
  std::uint64_t limit = 1024;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
  std::string certificates;
};

CheckRow check_product(const FamilySpec& spec, const std::vector<CharImset>& cloud) {
  CheckRow row{"product", true, {}, {}};
  const auto product = product_structure(spec);
  const auto& index = cloud.front().index();
  std::uint64_t expected = 1;
  std::string detail;
  for (const auto& f : product.factors) {
    std::set<std::vector<std::uint8_t>> slices;
    for (const auto& v : cloud) {
      const auto s = block_slice(v, f.child);
      slices.emplace(s.begin(), s.end());
    }
    const std::uint64_t vertices = f.dimension + 1;
    if (slices.size() != vertices) {
      row.passed = false;
      detail += spec.ordering().name(f.child) + " has " + std::to_string(slices.size()) + " block vertices, expected " +
                std::to_string(vertices) + "; ";
    }
    expected *= slices.size();
  }
  std::set<std::vector<std::uint8_t>> distinct;
  for (const auto& v : cloud) distinct.emplace(v.bits().begin(), v.bits().end());
  // Distinct points mapping into the product of slice sets, with equal counts,
  // means the map is onto: the cloud is the full cartesian product.
  if (distinct.size() != expected) {
    row.passed = false;
    detail += std::to_string(distinct.size()) + " vertices but the slice product has " + std::to_string(expected);
  }
  (void)index;
  if (row.passed)
    detail = std::to_string(product.factors.size()) + " simplex factors, dimension " +
             std::to_string(product.total_dimension);
  row.detail = detail;
  return row;
}

CheckRow check_dimension(const FamilySpec& spec, const std::vector<CharImset>& cloud) {
  const auto expected = product_structure(spec).total_dimension;
  const auto rank = affine_dimension(cloud);
  Certificate cert{ClaimKind::dimension, rank == expected, {}, {Rational(static_cast<long>(rank))}, {}, {}};
  CheckRow row{"dimension", cert.verified, "affine rank " + std::to_string(rank) + ", formula " + std::to_string(expected), {}};
  if (!cert.verified) {
    cert.note = row.detail;
    row.falsified.push_back(cert);
  }
  return row;
}

CheckRow check_adjacency(const FamilySpec& spec, const std::vector<ParentMap>& members,
                         const std::vector<CharImset>& cloud, const VerifyOptions& opt, unsigned threads,
                         std::vector<Certificate>& certs) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = cloud.size();
  if (opt.sample > 0 && n >= 2) {
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t k = 0; k < opt.sample; ++k) {
      const std::size_t i = rng() % n;
      std::size_t j = rng() % (n - 1);
      if (j >= i) ++j;
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  AdjacencyOptions ao;
  ao.synthesize_witness = !opt.certificates.empty();
  std::vector<Certificate> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    results[p] = oracle_adjacent(cloud, pairs[p].first, pairs[p].second, ao);
  });

  CheckRow row{"adjacency", true, {}, {}};
  std::vector<std::size_t> degree(n, 0);
  std::size_t mismatches = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto& cert = results[p];
    const bool oracle = cert.kind == ClaimKind::adjacency;
    const bool formula = are_neighbors(members[pairs[p].first], members[pairs[p].second], spec);
    if (oracle) {
      ++degree[pairs[p].first];
      ++degree[pairs[p].second];
    }
    if (oracle != formula || !cert.verified) {
      ++mismatches;
      cert.verified = false;
      if (cert.note.empty())
        cert.note = std::string("closed form says ") + (formula ? "adjacent" : "not adjacent");
      row.falsified.push_back(cert);
    }
    certs.push_back(std::move(cert));
  }
  row.passed = mismatches == 0;
  std::string detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(mismatches) + " mismatches";
  if (opt.sample == 0 && n > 0) {
    const auto [lo, hi] = std::minmax_element(degree.begin(), degree.end());
    detail += *lo == *hi ? ", " + std::to_string(*lo) + " neighbors per vertex"
                         : ", " + std::to_string(*lo) + "-" + std::to_string(*hi) + " neighbors per vertex";
  }
  row.detail = detail;
  return row;
}

CheckRow check_facets(const FamilySpec& spec, const std::vector<ParentMap>& members,
                      const std::vector<CharImset>& cloud, std::vector<Certificate>& certs) {
  CheckRow row{"facets", true, {}, {}};
  const auto& index = cloud.front().index();
  const auto dim = affine_dimension(cloud);
  std::size_t total = 0;
  for (const auto& block : index.blocks()) {
    if (spec.free(block.child) == 0) continue;
    for (const auto& f : block_facets(index, block.child)) {
      ++total;
      Certificate cert{ClaimKind::facet, true, {}, {}, {}, {}};
      cert.witness.assign(index.size() + 1, Rational(0));
      cert.witness[0] = f.constant;
      for (const auto& [pos, coef] : f.terms) cert.witness[pos + 1] = coef;
      std::vector<CharImset> tight;
      const Subset target = spec.floor(block.child) | f.row;
      for (std::size_t v = 0; v < cloud.size() && cert.verified; ++v) {
        std::int64_t value = f.constant;
        for (const auto& [pos, coef] : f.terms) value += coef * cloud[v][pos];
        const bool on_target = members[v].parents(block.child) == target;
        if (value < 0 || (value == 0) == on_target) {
          cert.verified = false;
          cert.note = "row {" + spec.ordering().format(f.row) + "} of " + spec.ordering().name(block.child) +
                      " evaluates to " + std::to_string(value) + " at " + graph_line(members[v]);
        }
        if (value == 0) tight.push_back(cloud[v]);
        else cert.subjects.push_back(v);
      }
      if (cert.verified) {
        const auto rank = tight.empty() ? 0 : affine_dimension(tight);
        if (rank + 1 != dim) {
          cert.verified = false;
          cert.note = "equality set of row {" + spec.ordering().format(f.row) + "} of " +
                      spec.ordering().name(block.child) + " has rank " + std::to_string(rank);
        }
      }
      if (!cert.verified) row.falsified.push_back(cert);
      certs.push_back(std::move(cert));
    }
  }
  row.passed = row.falsified.empty();
  row.detail = std::to_string(total) + " facets, " + std::to_string(row.falsified.size()) + " falsified";
  return row;
}

int cmd_verify(const Globals& g, const std::string& family_path, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err) {
  const auto spec = load_family(family_path);
  if (spec.has_cap()) product_structure(spec);
  const auto members = enumerate_family(spec, opt.limit);
  const auto index = coordinate_index(spec);
  std::vector<CharImset> cloud;
  cloud.reserve(members.size());
  for (const auto& m : members) cloud.push_back(characteristic_imset(m, index));

  std::vector<CheckRow> rows;
  std::vector<Certificate> certs;
  CheckRow vertices{"vertices", true, {}, {}};
  {
    std::set<std::vector<std::uint8_t>> distinct;
    for (const auto& v : cloud) distinct.emplace(v.bits().begin(), v.bits().end());
    vertices.passed = distinct.size() == members.size();
    vertices.detail = std::to_string(members.size()) + " vertices, " + std::to_string(index->size()) + " coordinates";
  }
  rows.push_back(vertices);
  const auto wants = [&](const char* name) { return opt.checks.count(name) > 0; };
  if (wants("product")) rows.push_back(check_product(spec, cloud));
  if (wants("dimension")) rows.push_back(check_dimension(spec, cloud));
  if (wants("adjacency")) rows.push_back(check_adjacency(spec, members, cloud, opt, g.threads, certs));
  if (wants("facets") && !cloud.empty()) rows.push_back(check_facets(spec, members, cloud, certs));

  bool all_passed = true;
  for (const auto& r : rows) all_passed = all_passed && r.passed;

  if (g.json()) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    out << Json{{"family", family_path}, {"passed", all_passed}, {"checks", arr}}.dump(2) << '\n';
  } else {
    out << "check      result  detail\n";
    for (const auto& r : rows) {
      std::string name = r.name;
      name.resize(11, ' ');
      out << name << (r.passed ? "pass    " : "FAIL    ") << r.detail << '\n';
    }
  }
  for (const auto& r : rows)
    for (const auto& c : r.falsified) err << certificate_to_json(c, members).dump() << '\n';

  if (!opt.certificates.empty()) {
    std::ofstream file(opt.certificates);
    if (!file) throw FormatError("cannot write '" + opt.certificates + "'");
    for (const auto& c : certs) file << certificate_to_json(c, members).dump() << '\n';
  }
  return all_passed ? kExitOk : kExitFalsified;
}

// ---------------------------------------------------------------------------
// learn / compare-k2

struct LearnInputs {
  std::string data, scores, family, criterion = "bic", out;
  std::optional<unsigned> max_parents;
  bool rational = false;
};

ScoreTable restrict_table(const ScoreTable& table, const FamilySpec& narrower) {
  ScoreTable out(narrower);
  for (std::size_t i = 0; i < narrower.size(); ++i) {
    const auto& sets = out.parent_sets(i);
    for (std::size_t pos = 0; pos < sets.size(); ++pos) out.set_at(i, pos, table.local(i, sets[pos]));
  }
  return out;
}

std::pair<FamilySpec, ScoreTable> learning_problem(const LearnInputs& in, unsigned threads) {
  if (in.data.empty() == in.scores.empty()) throw DomainError("give exactly one of --data or --scores");
  std::optional<FamilySpec> spec;
  std::optional<ScoreTable> table;
  if (!in.scores.empty()) {
    if (!in.family.empty()) throw DomainError("--scores files carry their own family; drop --family");
    auto fixture = load_score_fixture(in.scores);
    spec = fixture.family;
    table = std::move(fixture.table);
  } else {
    if (in.family.empty()) throw DomainError("--data needs --family");
    spec = load_family(in.family);
    const auto criterion = parse_criterion(in.criterion);
    const auto data = load_csv(in.data, spec->ordering_ptr());
    table = build_score_table(data, *spec, criterion, threads);
  }
  if (in.max_parents) {
    std::vector<Subset> floor, ceiling;
    for (std::size_t i = 0; i < spec->size(); ++i) {
      floor.push_back(spec->floor(i));
      ceiling.push_back(spec->ceiling(i));
    }
    FamilySpec capped(spec->ordering_ptr(), floor, ceiling, in.max_parents);
    table = restrict_table(*table, capped);
    spec = capped;
  }
  return {*spec, std::move(*table)};
}

std::string exact_score(const ScoreTable& table, const ParentMap& g) {
  const auto exact = to_exact(table);
  const auto dv = mobius_data_vector(exact, coordinate_index(table.spec()));
  const Rational q = score_graph(dv, g);
  if (q != table_score(exact, g)) throw Error("internal: exact data vector disagrees with the score table");
  return to_string(q);
}

void write_graph(const std::string& path, const ParentMap& g) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw FormatError("cannot write '" + path + "'");
  file << graph_to_json(g).dump(2) << '\n';
}

int cmd_learn(const Globals& g, const LearnInputs& in, const std::string& method_name, std::ostream& out) {
  auto [spec, table] = learning_problem(in, g.threads);
  if (in.rational && spec.has_cap()) throw UnsupportedError("--rational needs a family without a max_parents cap");
  std::vector<Method> methods;
  if (method_name == "all") methods = {Method::exact, Method::k2_forward, Method::k2_backward};
  else methods = {parse_method(method_name)};

  Json report = Json::object();
  for (const auto m : methods) {
    const auto r = learn(table, spec, m);
    Json j = learn_result_to_json(r);
    if (in.rational) j["exact_score"] = exact_score(table, r.graph);
    if (!g.json()) {
      out << to_string(m) << "  score " << r.total_score;
      if (in.rational) out << " (exact " << j["exact_score"].get<std::string>() << ")";
      out << "  " << graph_line(r.graph) << '\n';
    }
    report[to_string(m)] = j;
    if (m == methods.front()) write_graph(in.out, r.graph);
  }
  if (g.json()) out << (methods.size() == 1 ? report.front() : report).dump(2) << '\n';
  return kExitOk;
}

int cmd_compare(const Globals& g, const LearnInputs& in, std::ostream& out) {
  auto [spec, table] = learning_problem(in, g.threads);
  const auto report = compare(table, spec);
  if (g.json()) {
    out << comparison_to_json(report).dump(2) << '\n';
    return kExitOk;
  }
  out << "method       score  gap  shd  graph\n";
  for (const MethodReport* m : {&report.exact, &report.forward, &report.backward}) {
    std::string name = to_string(m->result.method);
    name.resize(12, ' ');
    out << name << ' ' << m->result.total_score << "  " << m->gap << "  " << m->shd << "  "
        << graph_line(m->result.graph) << '\n';
  }
  write_graph(in.out, report.exact.result.graph);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic-imset polytopes and exact structure learning under a fixed node ordering", "cimset"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", globals.threads, "Worker threads (default: all cores)")->check(CLI::PositiveNumber);

  std::string family, graph;
  std::function<int()> action;

  auto* enumerate = app.add_subcommand("enumerate", "List every member of a family");
  std::uint64_t enum_limit = enumeration_limit();
  bool count_only = false;
  enumerate->add_option("--family", family, "Family JSON")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--limit", enum_limit, "Refuse families larger than this");
  enumerate->add_flag("--count", count_only, "Print only the number of members");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(globals, family, enum_limit, count_only, out); }; });

  auto* imset = app.add_subcommand("imset", "Characteristic imset of a graph");
  bool full = false;
  imset->add_option("--graph", graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  imset->add_option("--family", family, "Family JSON")->check(CLI::ExistingFile);
  imset->add_flag("--full", full, "Every node subset of size >= 2 instead of the family coordinates");
  imset->callback([&] { action = [&] { return cmd_imset(globals, graph, family, full, out); }; });

  auto* facets = app.add_subcommand("facets", "Facet inequalities of one child's simplex block");
  std::string child;
  std::optional<std::string> row;
  facets->add_option("--family", family, "Family JSON")->required()->check(CLI::ExistingFile);
  facets->add_option("--child", child, "Child node name")->required();
  facets->add_option("--row", row, "Comma-separated free parents naming one facet");
  facets->callback([&] { action = [&] { return cmd_facets(globals, family, child, row, out); }; });

  auto* neighbors = app.add_subcommand("neighbors", "Vertices adjacent to a graph's imset");
  neighbors->add_option("--family", family, "Family JSON")->required()->check(CLI::ExistingFile);
  neighbors->add_option("--graph", graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  neighbors->callback([&] { action = [&] { return cmd_neighbors(globals, family, graph, out); }; });

  auto* verify = app.add_subcommand("verify", "Certify the closed-form geometry with the exact oracle");
  VerifyOptions vopt;
  std::string checks = "all";
  verify->add_option("--family", family, "Family JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--checks", checks, "Comma-separated: adjacency,facets,dimension,product or all");
  verify->add_option("--limit", vopt.limit, "Refuse families with more members than this");
  verify->add_option("--sample", vopt.sample, "Check this many random vertex pairs instead of all");
  verify->add_option("--seed", vopt.seed, "Seed for --sample");
  verify->add_option("--certificates", vopt.certificates, "Write every certificate as JSON lines");
  verify->callback([&] {
    action = [&] {
      std::stringstream ss(checks);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item == "all") {
          vopt.checks.insert({"adjacency", "facets", "dimension", "product"});
        } else if (item == "adjacency" || item == "facets" || item == "dimension" || item == "product") {
          vopt.checks.insert(item);
        } else if (!item.empty()) {
          throw DomainError("unknown check '" + item + "'");
        }
      }
      return cmd_verify(globals, family, vopt, out, err);
    };
  });

  LearnInputs lin;
  std::string method = "exact";
  auto add_learning_inputs = [&](CLI::App* sub) {
    sub->add_option("--data", lin.data, "CSV data")->check(CLI::ExistingFile);
    sub->add_option("--scores", lin.scores, "Score fixture JSON")->check(CLI::ExistingFile);
    sub->add_option("--family", lin.family, "Family JSON")->check(CLI::ExistingFile);
    sub->add_option("--criterion", lin.criterion, "ll, bic or aic")->check(CLI::IsMember({"ll", "bic", "aic"}));
    sub->add_option("--max-parents", lin.max_parents, "In-degree cap");
    sub->add_option("--out", lin.out, "Write the (first) learned graph here");
  };
  auto* learn_cmd = app.add_subcommand("learn", "Learn the optimal graph in a family");
  add_learning_inputs(learn_cmd);
  learn_cmd->add_option("--method", method, "exact, k2f, k2b, bruteforce or all");
  learn_cmd->add_flag("--rational", lin.rational, "Also report the score through the exact data vector");
  learn_cmd->callback([&] { action = [&] { return cmd_learn(globals, lin, method, out); }; });

  auto* compare_cmd = app.add_subcommand("compare-k2", "Exact learning against both K2 greedy variants");
  add_learning_inputs(compare_cmd);
  compare_cmd->callback([&] { action = [&] { return cmd_compare(globals, lin, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace cimset::cli
