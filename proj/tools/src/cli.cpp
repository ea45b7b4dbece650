#include "orient_cli/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "orient/flow_orient.hpp"
#include "orient/io.hpp"
#include "orient/list_orient.hpp"
#include "orient/modulo_orient.hpp"
#include "orient/oracle.hpp"
#include "orient/pq_orient.hpp"
#include "orient/rational.hpp"
#include "orient/tree_packing.hpp"
#include "orient_cli/json_io.hpp"

namespace orient::cli {

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
      return 1;
    case ErrorCode::kInvalidInput:
    case ErrorCode::kPrecondition:
    case ErrorCode::kSumMismatch:
    case ErrorCode::kNonIntegral:
    case ErrorCode::kInsufficientConnectivity:
      return 2;
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kSearchExhausted:
    case ErrorCode::kIndeterminate:
    case ErrorCode::kStageFailure:
    case ErrorCode::kInternal:
      return 3;
  }
  return 3;
}

namespace {

struct Options {
  std::string graph, upper, lower, target, orientation, modulo, pq, lists, floors;
  std::string tree, trees, odd, l0, eps;
  int k = 0, k0 = 0, z = -1, vertex = -1, m = 1, pairs = -1, count = -1;
  std::int64_t budget = -1;
  bool pretty = false;
  bool seed_check = true;
  bool allow_unguaranteed = false;
  bool trusted = false;
  bool defective = false;
  bool no_prune = false;
};

struct Reply {
  int status = 0;
  json body;
};

template <typename T>
json to_json_list(std::span<const T> values) {
  return json(std::vector<T>(values.begin(), values.end()));
}

MultiGraph load_graph(const Options& o) {
  std::ifstream in = open_input(o.graph);
  return read_graph(in);
}

VertexIntMap load_map(const std::string& path, const MultiGraph& g) {
  std::ifstream in = open_input(path);
  return read_vertex_map(in, g.vertex_count());
}

json orientation_body(const Orientation& d) {
  return {{"verdict", "FEASIBLE"},
          {"orientation", orientation_to_json(d)},
          {"out_degrees", to_json_list(d.out_degrees())}};
}

std::string bound_name(ViolatedBound b) {
  switch (b) {
    case ViolatedBound::kUpper: return "upper";
    case ViolatedBound::kLower: return "lower";
    case ViolatedBound::kNone: break;
  }
  return "none";
}

class Commands {
 public:
  explicit Commands(const Options& o) : o_(o) {}

  // Re-checks an orientation before it leaves the process.
  void seal(const MultiGraph& g, const Orientation& d, const OrientationPredicate& pred) const {
    if (!o_.seed_check) return;
    const auto problems = check_predicate(g, d, pred);
    if (!problems.empty()) {
      throw Error(ErrorCode::kInternal, "self-check failed: " + problems.front());
    }
  }

  Reply check_upper() const {
    const MultiGraph g = load_graph(o_);
    const auto q = load_map(o_.upper, g);
    return certificate(g, check_upper_feasible(g, q), upper_predicate(q));
  }

  Reply check_bounded() const {
    const MultiGraph g = load_graph(o_);
    const auto p = load_map(o_.lower, g);
    const auto q = load_map(o_.upper, g);
    return certificate(g, check_bounded_feasible(g, p, q), bounded_predicate(p, q));
  }

  Reply orient() const {
    const MultiGraph g = load_graph(o_);
    const auto q = load_map(o_.upper, g);
    if (o_.lower.empty()) {
      const Orientation d = orient_upper(g, q);
      seal(g, d, upper_predicate(q));
      return {0, orientation_body(d)};
    }
    const auto p = load_map(o_.lower, g);
    const Orientation d = orient_bounded(g, p, q);
    seal(g, d, bounded_predicate(p, q));
    return {0, orientation_body(d)};
  }

  Reply orient_exact() const {
    const MultiGraph g = load_graph(o_);
    const auto t = load_map(o_.target, g);
    const Orientation d = orient::orient_exact(g, t);
    seal(g, d, exact_predicate(t));
    return {0, orientation_body(d)};
  }

  Reply orient_lambda() const {
    const MultiGraph g = load_graph(o_);
    const auto q = load_map(o_.upper, g);
    const Orientation d = orient::orient_lambda(g, q);
    seal(g, d, upper_predicate(q));
    json body = orientation_body(d);
    body["lambda"] = lambda_requirement(g, q);
    return {0, body};
  }

  Reply reorient_eps() const {
    const MultiGraph g = load_graph(o_);
    const Orientation d0 = orientation_from_json(g, read_json_file(o_.orientation));
    const Rational eps = parse_rational(o_.eps);
    const Orientation d = reorient_epsilon(g, d0, eps);
    const auto f = epsilon_targets(g, d0, eps);
    VertexIntMap t(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) t[v] = f[v].numerator();
    seal(g, d, exact_predicate(t));
    return {0, orientation_body(d)};
  }

  Reply reorient_odd() const {
    const MultiGraph g = load_graph(o_);
    const Orientation d0 = orientation_from_json(g, read_json_file(o_.orientation));
    const Orientation d = reorient_scale_odd(g, d0, o_.k, o_.k0);
    if (o_.seed_check) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::int64_t before = 2 * d0.out_degree(v) - g.degree(v);
        const std::int64_t after = 2 * d.out_degree(v) - g.degree(v);
        if (after * o_.k != before * o_.k0) {
          throw Error(ErrorCode::kInternal, "self-check failed at vertex " + std::to_string(v));
        }
      }
    }
    return {0, orientation_body(d)};
  }

  Reply orient_mod() const {
    const MultiGraph g = load_graph(o_);
    const ModuloSpec spec = load_modulo(g);
    ModuloSearchOptions options;
    if (o_.budget > 0) options.candidate_budget = static_cast<int>(o_.budget);
    const Orientation d = find_modulo_orientation(g, spec, options);
    seal(g, d, modulo_predicate(g, spec));
    return {0, orientation_body(d)};
  }

  Reply orient_pq() const {
    const MultiGraph g = load_graph(o_);
    const PQSpec spec = load_pq(g);
    const VertexId z = o_.z >= 0 ? o_.z : spec.z.value_or(0);
    std::optional<VertexIntMap> t;
    if (!o_.target.empty()) t = load_map(o_.target, g);
    const ExactResult res = exact_pq(g, spec, t, z, PQOptions{o_.allow_unguaranteed});
    seal(g, res.orientation, pq_predicate(spec, res.t, z));
    json body = orientation_body(res.orientation);
    body["guaranteed"] = res.guaranteed;
    body["t"] = to_json_list(res.t.values());
    body["s"] = to_json_list(res.s.values());
    body["zero_sum_set"] = res.zero_sum_set;
    body["zero_sum_mass"] = res.zero_sum_mass;
    body["mass_bound"] = res.mass_bound;
    return {0, body};
  }

  Reply orient_pq_defective() const {
    const MultiGraph g = load_graph(o_);
    PQSpec spec = load_pq(g);
    if (o_.z >= 0) spec.z = o_.z;
    const DefectiveResult res = defective_pq(g, spec, PQOptions{o_.allow_unguaranteed});
    seal(g, res.orientation, defective_predicate(spec));
    json body = orientation_body(res.orientation);
    body["guaranteed"] = res.guaranteed;
    json stages = json::array();
    for (const auto& st : res.stages) {
      stages.push_back({{"modulus", st.modulus},
                        {"edges", st.edges.size()},
                        {"x_in", to_string(st.x_in)},
                        {"z_deviation", to_string(st.z_deviation)}});
    }
    body["stages"] = stages;
    return {0, body};
  }

  Reply orient_list() const {
    const MultiGraph g = load_graph(o_);
    const SparseListProblem prob = load_list_problem(g);
    ListSolveOptions options;
    if (o_.budget > 0) options.budget = o_.budget;
    const ListResult res = sparse_list_orientation(prob, options);
    seal(g, res.orientation, list_predicate(normalize(prob)));
    json body = orientation_body(res.orientation);
    json trace = json::array();
    for (const auto& step : res.trace) {
      trace.push_back({{"depth", step.depth},
                       {"vertices", step.vertex_count},
                       {"step", std::string(to_string(step.step))},
                       {"vertex", step.vertex}});
    }
    body["trace"] = trace;
    return {0, body};
  }

  Reply decompose_trees() const {
    const MultiGraph g = load_graph(o_);
    if (!o_.l0.empty()) {
      const PartitionSpec spec{o_.m, load_map(o_.l0, g)};
      const auto dec = is_partition_connected(g, spec);
      if (!dec) return {1, {{"verdict", "INFEASIBLE"}, {"m", o_.m}}};
      return {0,
              {{"verdict", "FEASIBLE"},
               {"trees", dec->trees},
               {"rest", dec->rest},
               {"rest_tails", dec->rest_tails},
               {"floor_edges", dec->floor_edges}}};
    }
    const int c = tree_connectivity(g);
    const TreePacking packing = pack_spanning_trees(g, o_.count >= 0 ? o_.count : c);
    validate_packing(g, packing);
    return {0,
            {{"verdict", "FEASIBLE"},
             {"tree_connectivity", c},
             {"trees", packing.trees},
             {"remainder", packing.remainder}}};
  }

  Reply eulerian_split() const {
    const MultiGraph g = load_graph(o_);
    std::vector<EdgeSet> trees;
    if (!o_.trees.empty()) {
      trees = edge_sets_from_json(read_json_file(o_.trees));
      if (trees.size() < 2) throw Error(ErrorCode::kInvalidInput, "need two trees");
    } else {
      trees = pack_spanning_trees(g, 2).trees;
    }
    const EulerianSplit split = spanning_eulerian_from_pair(g, trees[0], trees[1]);
    return {0,
            {{"verdict", "FEASIBLE"},
             {"eulerian", split.eulerian},
             {"leftovers", split.leftovers},
             {"odd_vertices", odd_vertices(g, split.eulerian)}}};
  }

  Reply parity_forest() const {
    const MultiGraph g = load_graph(o_);
    const json doc = read_json_file(o_.tree);
    const EdgeSet tree = edge_sets_from_json(json::array({doc})).front();
    VertexSet odd;
    std::stringstream ss(o_.odd);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        odd.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidInput, "bad vertex '" + tok + "' in --odd");
      }
    }
    const EdgeSet forest = orient::parity_forest(g, tree, odd);
    return {0,
            {{"verdict", "FEASIBLE"},
             {"forest", forest},
             {"odd_vertices", odd_vertices(g, forest)}}};
  }

  Reply lift() const {
    const MultiGraph g = load_graph(o_);
    PartitionSpec spec{o_.m, o_.l0.empty() ? VertexIntMap(g.vertex_count()) : load_map(o_.l0, g)};
    LiftOptions options;
    if (o_.pairs >= 0) options.pair_count = o_.pairs;
    if (o_.budget > 0) options.verification_budget = static_cast<int>(o_.budget);
    const LiftResult res = lift_preserving(g, o_.vertex, spec, options);
    json pairs = json::array();
    for (const auto& [a, b] : res.lifted_pairs) pairs.push_back({a, b});
    return {0,
            {{"verdict", "FEASIBLE"},
             {"graph", graph_to_json(res.graph)},
             {"lifted_pairs", pairs},
             {"unlifted", res.unlifted},
             {"vertex_map", res.vertex_map}}};
  }

  Reply verify() const {
    const MultiGraph g = load_graph(o_);
    const Orientation d = orientation_from_json(g, read_json_file(o_.orientation));
    const auto problems = check_predicate(g, d, predicate(g));
    if (problems.empty()) return {0, {{"verdict", "VALID"}}};
    return {1, {{"verdict", "INVALID"}, {"violations", problems}}};
  }

  Reply oracle_search() const {
    const MultiGraph g = load_graph(o_);
    const auto found = enumerate_orientations(g, predicate(g));
    if (!found) return {1, {{"verdict", "NONE"}}};
    return {0, orientation_body(*found)};
  }

  Reply oracle_count() const {
    const MultiGraph g = load_graph(o_);
    const auto n = count_orientations(g, predicate(g), CountOptions{!o_.no_prune});
    return {0, {{"verdict", "COUNTED"}, {"count", n}}};
  }

  Reply connectivity() const {
    const MultiGraph g = load_graph(o_);
    json body = {{"verdict", "OK"},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"connected", is_connected(g)}};
    if (g.vertex_count() >= 2) {
      body["edge_connectivity"] = edge_connectivity(g);
      body["tree_connectivity"] = tree_connectivity(g);
    }
    return {0, body};
  }

 private:
  Reply certificate(const MultiGraph& g, const FeasibilityCertificate& cert,
                    const OrientationPredicate& pred) const {
    if (cert.feasible()) {
      seal(g, *cert.orientation, pred);
      return {0, orientation_body(*cert.orientation)};
    }
    return {1,
            {{"verdict", "INFEASIBLE"},
             {"witness_set", cert.witness_set},
             {"violated", bound_name(cert.violated)}}};
  }

  ModuloSpec load_modulo(const MultiGraph& g) const {
    std::ifstream in = open_input(o_.modulo);
    return read_modulo_spec(in, g.vertex_count());
  }

  PQSpec load_pq(const MultiGraph& g) const {
    std::ifstream in = open_input(o_.pq);
    return read_pq_spec(in, g.vertex_count());
  }

  SparseListProblem load_list_problem(const MultiGraph& g) const {
    std::ifstream lists = open_input(o_.lists);
    std::ifstream floors_in = open_input(o_.floors);
    const ListFloors floors = read_floors(floors_in, g.vertex_count());
    SparseListProblem prob{g,        o_.z < 0 ? 0 : o_.z, read_lists(lists, g.vertex_count()),
                           floors.s, floors.s0,           floors.l0,
                           o_.trusted};
    return prob;
  }

  // Constraint bundle named by the flags, most specific first.
  OrientationPredicate predicate(const MultiGraph& g) const {
    if (!o_.lists.empty()) return list_predicate(normalize(load_list_problem(g)));
    if (!o_.pq.empty()) {
      PQSpec spec = load_pq(g);
      if (o_.z >= 0) spec.z = o_.z;
      validate_pq_spec(g, spec);
      if (o_.defective) return defective_predicate(spec);
      std::optional<VertexIntMap> t;
      if (!o_.target.empty()) t = load_map(o_.target, g);
      return pq_predicate(spec, t, spec.z);
    }
    if (!o_.modulo.empty()) return modulo_predicate(g, load_modulo(g));
    if (!o_.target.empty()) return exact_predicate(load_map(o_.target, g));
    if (!o_.upper.empty()) {
      const auto q = load_map(o_.upper, g);
      if (o_.lower.empty()) return upper_predicate(q);
      return bounded_predicate(load_map(o_.lower, g), q);
    }
    if (!o_.lower.empty()) {
      const auto p = load_map(o_.lower, g);
      VertexIntMap q(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) q[v] = g.degree(v);
      return bounded_predicate(p, q);
    }
    return OrientationPredicate{};
  }

  const Options& o_;
};

json error_body(const Error& err) {
  json body;
  if (err.code() == ErrorCode::kInfeasible) {
    const std::string msg = err.what();
    body["verdict"] = msg.rfind("NONE", 0) == 0 ? "NONE" : "INFEASIBLE";
  } else if (err.code() == ErrorCode::kIndeterminate) {
    body["verdict"] = "INDETERMINATE";
  } else {
    body["verdict"] = "ERROR";
  }
  body["error"] = std::string(to_string(err.code()));
  body["message"] = err.what();
  return body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Degree-constrained graph orientations"};
  app.name("orient");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json-pretty", o.pretty, "Indent JSON output");
  app.add_flag("--seed-check,!--no-seed-check", o.seed_check,
               "Re-verify every produced orientation (default on)");

  Commands cmd(o);
  std::map<CLI::App*, std::function<Reply()>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<Reply()> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--graph", o.graph, "Graph file")->required();
    handlers[s] = std::move(fn);
    return s;
  };
  auto constraints = [&](CLI::App* s) {
    s->add_option("--upper", o.upper, "Upper bound map q");
    s->add_option("--lower", o.lower, "Lower bound map p");
    s->add_option("--target", o.target, "Exact target map t");
    s->add_option("--modulo", o.modulo, "Modulo spec file");
    s->add_option("--pq", o.pq, "PQ spec file");
    s->add_flag("--defective", o.defective, "Check the z-defective form of --pq");
    s->add_option("--lists", o.lists, "List file");
    s->add_option("--floors", o.floors, "Floor file");
    s->add_option("--z", o.z, "Special vertex");
  };

  CLI::App* s = nullptr;
  s = sub("check-upper", "Decide d+ <= q with a witness set", [&] { return cmd.check_upper(); });
  s->add_option("--upper", o.upper)->required();
  s = sub("check-bounded", "Decide p <= d+ <= q with a witness set",
          [&] { return cmd.check_bounded(); });
  s->add_option("--lower", o.lower)->required();
  s->add_option("--upper", o.upper)->required();
  s = sub("orient", "Orientation with d+ <= q (and d+ >= p with --lower)",
          [&] { return cmd.orient(); });
  s->add_option("--upper", o.upper)->required();
  s->add_option("--lower", o.lower);
  s = sub("orient-exact", "Orientation with d+ = t", [&] { return cmd.orient_exact(); });
  s->add_option("--target", o.target)->required();
  s = sub("orient-lambda", "Orientation with d+ <= q on a lambda-edge-connected graph",
          [&] { return cmd.orient_lambda(); });
  s->add_option("--upper", o.upper)->required();
  s = sub("reorient-eps", "Interpolate an orientation toward balance",
          [&] { return cmd.reorient_eps(); });
  s->add_option("--orientation", o.orientation)->required();
  s->add_option("--eps", o.eps)->required();
  s = sub("reorient-odd", "Rescale +-k/2 deviations to +-k0/2", [&] { return cmd.reorient_odd(); });
  s->add_option("--orientation", o.orientation)->required();
  s->add_option("--k", o.k)->required();
  s->add_option("--k0", o.k0)->required();
  s = sub("orient-mod", "Modulo orientation within the n-window", [&] { return cmd.orient_mod(); });
  s->add_option("--modulo", o.modulo)->required();
  s->add_option("--budget", o.budget, "Candidate vector budget");
  s = sub("orient-pq", "Orientation with d+ in {p, q} and d+(z) = t(z)",
          [&] { return cmd.orient_pq(); });
  s->add_option("--pq", o.pq)->required();
  s->add_option("--target", o.target);
  s->add_option("--z", o.z);
  s->add_flag("--allow-unguaranteed", o.allow_unguaranteed);
  s = sub("orient-pq-defective", "Orientation with d+ in {p, q} off z, windowed at z",
          [&] { return cmd.orient_pq_defective(); });
  s->add_option("--pq", o.pq)->required();
  s->add_option("--z", o.z);
  s->add_flag("--allow-unguaranteed", o.allow_unguaranteed);
  s = sub("orient-list", "z-defective list orientation with floors",
          [&] { return cmd.orient_list(); });
  s->add_option("--lists", o.lists)->required();
  s->add_option("--floors", o.floors)->required();
  s->add_option("--z", o.z)->required();
  s->add_flag("--trusted", o.trusted, "Skip the partition-connectivity check");
  s->add_option("--budget", o.budget);
  s = sub("decompose-trees", "Edge-disjoint spanning trees", [&] { return cmd.decompose_trees(); });
  s->add_option("--count", o.count, "Number of trees (default: all)");
  s->add_option("--m", o.m, "Trees for the partition test with --l0");
  s->add_option("--l0", o.l0, "Floor map for the partition test");
  s = sub("eulerian-split", "Spanning Eulerian subgraph from two trees",
          [&] { return cmd.eulerian_split(); });
  s->add_option("--trees", o.trees, "JSON list with two edge-id lists");
  s = sub("parity-forest", "Subforest of a tree with given odd set",
          [&] { return cmd.parity_forest(); });
  s->add_option("--tree", o.tree, "JSON list of edge ids")->required();
  s->add_option("--odd", o.odd, "Comma-separated vertex list");
  s = sub("lift", "Lift pairs at a vertex preserving partition-connectivity",
          [&] { return cmd.lift(); });
  s->add_option("--vertex", o.vertex)->required();
  s->add_option("--m", o.m);
  s->add_option("--l0", o.l0);
  s->add_option("--pairs", o.pairs);
  s->add_option("--budget", o.budget);
  s = sub("verify", "Check an orientation against constraints", [&] { return cmd.verify(); });
  s->add_option("--orientation", o.orientation)->required();
  constraints(s);
  s = sub("oracle-search", "Exhaustive search for a satisfying orientation",
          [&] { return cmd.oracle_search(); });
  constraints(s);
  s = sub("oracle-count", "Count satisfying orientations", [&] { return cmd.oracle_count(); });
  constraints(s);
  s->add_flag("--no-prune", o.no_prune);
  sub("connectivity", "Edge and tree connectivity", [&] { return cmd.connectivity(); });

  std::vector<std::string> argv_store{"orient"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  Reply reply;
  std::string command = "orient";
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (auto& [app_ptr, fn] : handlers) {
      if (app_ptr->parsed()) {
        command = app_ptr->get_name();
        reply = fn();
      }
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    reply = {2, {{"verdict", "ERROR"}, {"error", "USAGE"}, {"message", e.what()}}};
  } catch (const InfeasibleError& e) {
    reply = {1,
             {{"verdict", "INFEASIBLE"},
              {"witness_set", e.witness()},
              {"violated", bound_name(e.bound())},
              {"message", e.what()}}};
  } catch (const Error& e) {
    reply = {exit_status(e.code()), error_body(e)};
  } catch (const std::exception& e) {
    reply = {3, {{"verdict", "ERROR"}, {"error", "INTERNAL"}, {"message", e.what()}}};
  }
  out << reply.body.dump(o.pretty ? 2 : -1) << '\n';
  err << command << ": " << reply.body.value("verdict", "?");
  if (reply.body.contains("message")) err << " (" << reply.body["message"].get<std::string>() << ")";
  err << '\n';
  return reply.status;
}

}  // namespace orient::cli
