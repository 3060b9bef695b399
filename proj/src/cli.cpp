#include "expresso/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <optional>

#include "expresso/error.hpp"
#include "expresso/expressibility.hpp"
#include "expresso/partition.hpp"
#include "expresso/permutation.hpp"
#include "expresso/stability.hpp"
#include "expresso/text_format.hpp"

namespace expresso::cli {

namespace {

struct Options {
  std::string db;
  std::string target;
  std::string instances;
  std::string criterion = "all";
  std::string set = "both";
  bool cycles = false;
  bool cross = false;
  std::optional<std::size_t> max_arity;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> instance_cap;
};

struct Settings {
  Limits limits;
  std::optional<std::size_t> max_arity;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> k_max;
};

Settings resolve(const Options& o, const char* env) {
  Settings s;
  if (env != nullptr && *env != '\0') {
    const auto ov = parse_limit_overrides(env);
    s.max_arity = ov.max_arity;
    s.max_depth = ov.max_depth;
    s.k_max = ov.k_max;
    if (ov.instance_cap) s.limits.instance_cap = *ov.instance_cap;
    if (ov.relation_cap) s.limits.relation_cap = *ov.relation_cap;
    if (ov.subgroup_order_cap) s.limits.subgroup_order_cap = *ov.subgroup_order_cap;
  }
  if (o.max_arity) s.max_arity = o.max_arity;
  if (o.max_depth) s.max_depth = o.max_depth;
  if (o.k_max) s.k_max = o.k_max;
  if (o.instance_cap) s.limits.instance_cap = *o.instance_cap;
  return s;
}

ClosureBounds bounds_for(const RelationalDatabase& db, const Settings& s) {
  ClosureBounds b = default_bounds(db);
  if (s.max_arity) b.max_arity = *s.max_arity;
  if (s.max_depth) b.max_depth = *s.max_depth;
  b.relation_cap = s.limits.relation_cap;
  return b;
}

RelationalDatabase load_db(const Options& o) { return parse_database(read_file(o.db)); }

Relation load_target(const Options& o, const RelationalDatabase& db) {
  return parse_relation(read_file(o.target), db.universe_size()).relation;
}

GraphDatabase load_graph(const Options& o) {
  auto db = parse_graph_database(read_file(o.db));
  const auto problems = db.validate();
  if (!problems.empty()) throw Error(ErrorCode::kInvalidDatabase, problems.front());
  return db;
}

std::vector<Instance> load_instances(const Options& o, const GraphDatabase& db) {
  if (o.instances.empty()) return {ext_instance(db)};
  return parse_instances(read_file(o.instances), db);
}

std::string labelled(const GraphDatabase& db, const Partition& p) {
  return p.to_string([&](int y) { return db.structure().label(static_cast<std::size_t>(y)); });
}

std::vector<Criterion> criteria(const std::string& name) {
  if (name == "all") return {std::begin(kAllCriteria), std::end(kAllCriteria)};
  if (name == "paredaens") return {Criterion::kParedaens};
  if (name == "aut") return {Criterion::kAutEquality};
  if (name == "op") return {Criterion::kOrbitPartition};
  return {Criterion::kCyclePartition};
}

int cmd_aut(const Options& o, const Settings&, std::ostream& out) {
  const auto g = aut(load_db(o));
  out << (o.cycles ? write_group_cycles(g) : write_group_table(g));
  return kOk;
}

int cmd_cgr(const Options& o, const Settings&, std::ostream& out) {
  const auto db = load_db(o);
  out << "domain " << db.universe_size() << "\n" << write_relation({"cgr", cgr(db)});
  return kOk;
}

int cmd_partitions(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_db(o);
  if (o.set != "cp") {
    for (const auto& p : op_set(db, s.limits)) out << "op " << p.to_string() << "\n";
  }
  if (o.set != "op") {
    for (const auto& p : cp_set(db)) out << "cp " << p.to_string() << "\n";
  }
  return kOk;
}

int cmd_decide(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_db(o);
  const auto target = load_target(o, db);
  bool all = true;
  for (Criterion c : criteria(o.criterion)) {
    const auto v = decide(c, target, db, s.limits);
    out << v.to_string() << "\n";
    all = all && v.expressible;
  }
  return all ? kOk : kNotExpressible;
}

int cmd_cross_check(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_db(o);
  const auto target = load_target(o, db);
  const auto report = cross_check(target, db, bounds_for(db, s), s.limits);
  for (const auto& v : report.verdicts) out << v.to_string() << "\n";
  out << "bounded " << (*report.bounded == BoundedAnswer::kYes ? "yes" : "unknown") << "\n";
  out << (report.consistent() ? "consistent" : "inconsistent") << "\n";
  if (!report.consistent()) return kInconsistent;
  return report.verdicts.front().expressible ? kOk : kNotExpressible;
}

int cmd_closure(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_db(o);
  const auto closure = bi_closure_bounded(db, bounds_for(db, s));
  std::vector<NamedRelation> named;
  for (const auto& r : closure) named.push_back({"c" + std::to_string(named.size() + 1), r});
  out << write_database(RelationalDatabase(db.universe_size(), std::move(named)));
  return kOk;
}

int cmd_validate(const Options& o, const Settings&, std::ostream& out) {
  const auto db = parse_graph_database(read_file(o.db));
  const auto problems = db.validate();
  if (problems.empty()) {
    out << "valid\n";
    return kOk;
  }
  for (const auto& p : problems) out << "violation: " << p << "\n";
  return kInputError;
}

int cmd_canonical(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_graph(o);
  const InstanceSet is(db, load_instances(o, db));
  out << labelled(db, canonical_partition(is, s.k_max.value_or(default_k_max(db)), s.limits)) << "\n";
  return kOk;
}

int cmd_graph_decide(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_graph(o);
  const InstanceSet is(db, load_instances(o, db));
  const auto targets = parse_instances(read_file(o.target), db);
  if (targets.size() != 1) throw Error(ErrorCode::kParseError, "target file must hold exactly one instance");
  const auto v = decide_expressible_graph(targets.front(), is, s.k_max.value_or(default_k_max(db)), s.limits);
  out << "canonical " << labelled(db, v.before) << "\n";
  out << "canonical-with-target " << labelled(db, v.after) << "\n";
  out << (v.expressible ? "expressible" : "not-expressible") << "\n";
  if (o.cross) {
    const auto closure = bi_closure_graph(is, s.limits);
    const bool member = std::binary_search(closure.begin(), closure.end(), targets.front());
    out << "closure-member " << (member ? "yes" : "no") << "\n";
    if (member != v.expressible) {
      out << "inconsistent\n";
      return kInconsistent;
    }
  }
  return v.expressible ? kOk : kNotExpressible;
}

int cmd_graph_closure(const Options& o, const Settings& s, std::ostream& out) {
  const auto db = load_graph(o);
  const InstanceSet is(db, load_instances(o, db));
  out << write_instances(db, bi_closure_graph(is, s.limits));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* limits_env) {
  CLI::App app{"Expressibility analysis for relational and graph databases", "expresso"};
  app.require_subcommand(1);
  Options o;

  auto db_opt = [&](CLI::App* sub) { sub->add_option("--db", o.db, "database file")->required(); };
  auto target_opt = [&](CLI::App* sub) { sub->add_option("--target", o.target, "target file")->required(); };
  auto closure_opts = [&](CLI::App* sub) {
    sub->add_option("--max-arity", o.max_arity, "largest arity kept in the bounded closure");
    sub->add_option("--max-depth", o.max_depth, "rounds of the bounded closure");
  };
  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--instances", o.instances, "instance file (default: Ext)");
    sub->add_option("--k-max", o.k_max, "longest path length considered by stability");
    sub->add_option("--instance-cap", o.instance_cap, "graph closure size limit");
  };

  std::vector<std::pair<CLI::App*, std::function<int(const Options&, const Settings&, std::ostream&)>>> verbs;
  auto verb = [&](const char* name, const char* help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, handler);
    return sub;
  };

  auto* aut_cmd = verb("aut", "print Aut(R) as a cogroup table", cmd_aut);
  db_opt(aut_cmd);
  aut_cmd->add_flag("--cycles", o.cycles, "print cycle notation instead");
  db_opt(verb("cgr", "print cgr(R) as a relation file", cmd_cgr));
  auto* part_cmd = verb("partitions", "print OP(R) and CP(R)", cmd_partitions);
  db_opt(part_cmd);
  part_cmd->add_option("--set", o.set, "op, cp or both")->check(CLI::IsMember({"op", "cp", "both"}));
  auto* decide_cmd = verb("decide", "decide whether the target is expressible", cmd_decide);
  db_opt(decide_cmd);
  target_opt(decide_cmd);
  decide_cmd->add_option("--criterion", o.criterion, "paredaens, aut, op, cp or all")
      ->check(CLI::IsMember({"paredaens", "aut", "op", "cp", "all"}));
  auto* closure_cmd = verb("closure", "print the bounded closure", cmd_closure);
  db_opt(closure_cmd);
  closure_opts(closure_cmd);
  auto* cross_cmd = verb("cross-check", "run every criterion and the bounded closure", cmd_cross_check);
  db_opt(cross_cmd);
  target_opt(cross_cmd);
  closure_opts(cross_cmd);
  db_opt(verb("validate", "check a graph database", cmd_validate));
  auto* canon_cmd = verb("canonical", "print the canonical partition", cmd_canonical);
  db_opt(canon_cmd);
  graph_opts(canon_cmd);
  auto* gdec_cmd = verb("graph-decide", "decide whether a target instance is expressible", cmd_graph_decide);
  db_opt(gdec_cmd);
  target_opt(gdec_cmd);
  graph_opts(gdec_cmd);
  gdec_cmd->add_flag("--cross-check", o.cross, "also test membership in the exact closure");
  auto* gclo_cmd = verb("graph-closure", "print the exact graph closure", cmd_graph_closure);
  db_opt(gclo_cmd);
  graph_opts(gclo_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const Settings settings = resolve(o, limits_env);
    for (const auto& [sub, handler] : verbs) {
      if (sub->parsed()) return handler(o, settings, out);
    }
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kResourceLimit: return kResourceLimit;
      case ErrorCode::kInternal: return kInconsistent;
      default: return kInputError;
    }
  }
}

}  // namespace expresso::cli
