#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lved/approx.hpp"
#include "lved/cli.hpp"
#include "lved/oracle.hpp"
#include "lved/tree_solver.hpp"

namespace lved::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// The labelled format starts with a lone vertex count; the edge list starts
// with "n m".
bool looks_labelled(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream tok(line);
    std::string a, b;
    if (!(tok >> a)) continue;
    return !(tok >> b);
  }
  return false;
}

std::vector<Vertex> to_vec(const VertexSet& s) { return s.members(); }

std::string set_text(const std::vector<Vertex>& s) {
  std::ostringstream o;
  o << '{';
  for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
  o << '}';
  return o.str();
}

struct Property {
  enum Kind { kLve, kKve, kLiars, kVc, kLkt } kind = kLve;
  int k = 0;
};

Property parse_property(const std::string& s) {
  if (s == "lve") return {Property::kLve};
  if (s == "liars") return {Property::kLiars};
  if (s == "vc") return {Property::kVc};
  if (s == "lkt") return {Property::kLkt};
  if (s.rfind("kve:", 0) == 0) {
    const std::string num = s.substr(4);
    if (num.empty() || num.size() > 4 || !std::all_of(num.begin(), num.end(), ::isdigit)) {
      throw InputError("bad problem '" + s + "'");
    }
    const int k = std::stoi(num);
    if (k < 1) throw InputError("kve needs k >= 1");
    return {Property::kKve, k};
  }
  throw InputError("unknown problem '" + s + "' (lve, kve:k, liars, vc, lkt)");
}

Verdict check(const Property& p, const Graph& g, const LabelledTree* t, const VertexSet& s) {
  switch (p.kind) {
    case Property::kLve: return verify_lveds(g, s);
    case Property::kKve: return verify_kveds(g, s, p.k);
    case Property::kLiars: return verify_liars_ds(g, s);
    case Property::kVc: return verify_vertex_cover(g, s);
    case Property::kLkt: return verify_lkt(*t, s);
  }
  return Verdict::pass();
}

void put_set(json& j, const VertexSet& s) {
  j["size"] = s.size();
  j["set"] = to_vec(s);
}

// Solves each component of a forest separately and merges the answers.
VertexSet solve_forest(const Graph& g) {
  std::size_t count = 0;
  const auto comp = g.components(&count);
  if (g.edge_count() + count != g.vertex_count()) throw StructureError("input is not a forest");
  if (count == 1) return solve_tree_lveds(g);
  std::vector<std::vector<Vertex>> parts(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) parts[comp[v]].push_back(v);
  std::vector<Vertex> out;
  for (const auto& part : parts) {
    if (part.size() < 2) continue;
    for (Vertex local : solve_tree_lveds(induced_subgraph(g, part))) out.push_back(part[local]);
  }
  return VertexSet(g.vertex_count(), std::move(out));
}

}  // namespace

CommandResult cmd_solve_tree(const std::string& path, const Common& common) {
  const auto t0 = Clock::now();
  const std::string text = slurp(path);
  CommandResult r;
  json& j = r.report;
  j["command"] = "solve-tree";
  j["input"] = path;
  VertexSet sol;
  Verdict verdict;
  std::string status = "optimal";
  if (looks_labelled(text)) {
    const LabelledTree t = parse_labelled_tree(text);
    sol = solve_lkt(t);
    verdict = verify_lkt(t, sol);
    // The sweep is exact for labellings reachable from the uniform one, not
    // for arbitrary labels.
    const bool uniform = std::all_of(t.demand.begin(), t.demand.end(), [](auto k) { return k == 2; }) &&
                         std::all_of(t.tag.begin(), t.tag.end(), [](Tag x) { return x == Tag::kB; });
    status = uniform ? "optimal" : "unproven";
    j["format"] = "labelled";
    j["instance"] = instance_summary(t.tree);
  } else {
    const Graph g = parse_edge_list(text);
    sol = solve_forest(g);
    verdict = verify_lveds(g, sol);
    j["format"] = "edge-list";
    j["instance"] = instance_summary(g);
  }
  put_set(j, sol);
  j["valid"] = to_json(verdict);
  j["status"] = status;
  if (common.timing) j["wall_ms"] = ms_since(t0);
  r.exit_code = verdict.ok ? kOk : kViolated;
  r.human = "solve-tree: size " + std::to_string(sol.size()) + " " + set_text(sol.members()) +
            (verdict.ok ? " verified\n" : " FAILED verification: " + describe(*verdict.witness) + "\n");
  return r;
}

CommandResult cmd_exact(const std::string& path, const std::string& problem, std::uint64_t budget,
                        const Common& common) {
  const auto t0 = Clock::now();
  const Property prop = parse_property(problem);
  const std::string text = slurp(path);
  std::optional<LabelledTree> t;
  Graph g;
  if (prop.kind == Property::kLkt) {
    t = looks_labelled(text) ? parse_labelled_tree(text) : init_labels(parse_edge_list(text));
    g = t->tree;
  } else {
    g = parse_edge_list(text);
  }
  if (g.vertex_count() > 64) throw InputError("exact solvers handle at most 64 vertices");
  OracleOptions opt;
  opt.budget = budget;
  OracleResult res;
  switch (prop.kind) {
    case Property::kLve: res = min_lveds_exact(g, opt); break;
    case Property::kKve: res = min_kveds_exact(g, prop.k, opt); break;
    case Property::kLiars: res = min_liars_ds_exact(g, opt); break;
    case Property::kVc: res = min_vc_exact(g, opt); break;
    case Property::kLkt: res = min_lkt_exact(*t, opt); break;
  }
  CommandResult r;
  json& j = r.report;
  j["command"] = "exact";
  j["input"] = path;
  j["problem"] = problem;
  j["budget"] = budget;
  j["instance"] = instance_summary(g);
  j["status"] = to_string(res.status);
  j["examined"] = res.examined;
  r.human = "exact " + problem + ": " + to_string(res.status);
  if (res.optimal()) {
    put_set(j, res.set);
    const Verdict v = check(prop, g, t ? &*t : nullptr, res.set);
    j["valid"] = to_json(v);
    r.exit_code = v.ok ? kOk : kViolated;
    r.human += ", size " + std::to_string(res.set.size()) + " " + set_text(res.set.members());
  } else {
    j["size"] = nullptr;
    j["set"] = json::array();
    j["valid"] = nullptr;
    r.exit_code = res.status == OracleStatus::kBudget ? kBudgetExceeded : kOk;
  }
  if (common.timing) j["wall_ms"] = ms_since(t0);
  r.human += '\n';
  return r;
}

CommandResult cmd_approx(const std::string& path, bool compare_exact, std::uint64_t budget,
                         const Common& common) {
  const auto t0 = Clock::now();
  const Graph g = read_edge_list_file(path);
  const ApproxResult a = approx_lveds_detailed(g);
  const Verdict v = verify_lveds(g, a.set);
  CommandResult r;
  json& j = r.report;
  j["command"] = "approx";
  j["input"] = path;
  j["instance"] = instance_summary(g);
  put_set(j, a.set);
  j["valid"] = to_json(v);
  j["two_ve_size"] = a.two_ve.size();
  j["cover_size"] = a.cover.size();
  j["universe_size"] = a.universe_size;
  j["max_set_size"] = a.max_set_size;
  const std::size_t delta = g.max_degree();
  j["ratio_bound"] = delta >= 2 ? json(approx_ratio_bound(delta)) : json(nullptr);
  r.human = "approx: size " + std::to_string(a.set.size()) + (v.ok ? " verified" : " FAILED");
  if (compare_exact) {
    json cmp;
    if (g.vertex_count() > 64) {
      cmp["status"] = "skipped";
    } else {
      OracleOptions opt;
      opt.budget = budget;
      const OracleResult e = min_lveds_exact(g, opt);
      cmp["status"] = to_string(e.status);
      if (e.optimal()) {
        cmp["optimum"] = e.set.size();
        const double ratio = e.set.empty() ? 1.0 : double(a.set.size()) / double(e.set.size());
        cmp["ratio"] = ratio;
        r.human += ", optimum " + std::to_string(e.set.size());
      }
    }
    j["exact"] = cmp;
  }
  if (common.timing) j["wall_ms"] = ms_since(t0);
  r.exit_code = v.ok ? kOk : kViolated;
  r.human += '\n';
  return r;
}

CommandResult cmd_verify(const std::string& path, const std::string& property,
                         const std::vector<Vertex>& set) {
  const Property prop = parse_property(property);
  const std::string text = slurp(path);
  std::optional<LabelledTree> t;
  Graph g;
  if (prop.kind == Property::kLkt) {
    t = looks_labelled(text) ? parse_labelled_tree(text) : init_labels(parse_edge_list(text));
    g = t->tree;
  } else {
    g = parse_edge_list(text);
  }
  const VertexSet s(g.vertex_count(), set);
  const Verdict v = check(prop, g, t ? &*t : nullptr, s);
  CommandResult r;
  r.report = to_json(v);
  r.exit_code = v.ok ? kOk : kViolated;
  r.human = "verify " + property + ": " + (v.ok ? "ok" : describe(*v.witness)) + "\n";
  return r;
}

CommandResult cmd_reduce(const std::string& path, const ReduceOptions& opt) {
  const Graph g = read_edge_list_file(path);
  const bool vc = opt.kind == "vc";
  if (!vc && opt.kind != "ld") throw InputError("unknown reduction '" + opt.kind + "' (vc, ld)");
  if (opt.emit != "instance" && opt.emit != "solution") throw InputError("--emit is instance or solution");
  if (opt.direction != "forward" && opt.direction != "backward") {
    throw InputError("--direction is forward or backward");
  }
  const Reduction red = vc ? vc_to_lve_instance(g) : ld_to_lve_instance(g);
  CommandResult r;
  json& j = r.report;
  j["command"] = "reduce";
  j["reduction"] = opt.kind;
  j["input"] = path;
  j["original"] = instance_summary(g);
  j["instance"] = instance_summary(red.graph);
  j["map"] = to_json(red.map);
  if (opt.out) {
    std::ofstream out(*opt.out, std::ios::binary);
    if (!out) throw InputError("cannot write '" + *opt.out + "'");
    out << emit_edge_list(red.graph);
    j["written"] = *opt.out;
  }
  if (opt.emit == "instance") {
    json edges = json::array();
    for (const Edge& e : red.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    r.human = "reduce " + opt.kind + ": " + std::to_string(red.graph.vertex_count()) + " vertices, " +
              std::to_string(red.graph.edge_count()) + " edges\n";
    return r;
  }

  OracleOptions oo;
  oo.budget = opt.budget;
  auto need_oracle = [&](const Graph& h) {
    if (h.vertex_count() > 64) throw InputError("no --set given and the graph is too large for the oracle");
  };
  j["direction"] = opt.direction;
  if (opt.direction == "forward") {
    VertexSet src;
    if (opt.set) {
      src = VertexSet(g.vertex_count(), *opt.set);
    } else {
      need_oracle(g);
      const OracleResult e = vc ? min_vc_exact(g, oo) : min_liars_ds_exact(g, oo);
      if (!e.optimal()) {
        j["status"] = to_string(e.status);
        r.exit_code = e.status == OracleStatus::kBudget ? kBudgetExceeded : kViolated;
        r.human = "reduce: source problem " + to_string(e.status) + "\n";
        return r;
      }
      src = e.set;
    }
    const Verdict sv = vc ? verify_vertex_cover(g, src) : verify_liars_ds(g, src);
    j["source_size"] = src.size();
    j["source_set"] = to_vec(src);
    j["source_valid"] = to_json(sv);
    if (!sv.ok) {
      r.exit_code = kViolated;
      r.human = "reduce: source set invalid: " + describe(*sv.witness) + "\n";
      return r;
    }
    const VertexSet mapped = vc ? vc_to_lve_solution(g, src, red.map) : ld_to_lve_solution(g, src, red.map);
    const Verdict mv = verify_lveds(red.graph, mapped);
    put_set(j, mapped);
    j["valid"] = to_json(mv);
    r.exit_code = mv.ok ? kOk : kViolated;
  } else {
    VertexSet src;
    if (opt.set) {
      src = VertexSet(red.graph.vertex_count(), *opt.set);
    } else {
      src = approx_lveds(red.graph);
      j["source_solver"] = "approx";
    }
    const Verdict sv = verify_lveds(red.graph, src);
    j["source_size"] = src.size();
    j["source_set"] = to_vec(src);
    j["source_valid"] = to_json(sv);
    if (!sv.ok) {
      r.exit_code = kViolated;
      r.human = "reduce: source set invalid: " + describe(*sv.witness) + "\n";
      return r;
    }
    const VertexSet mapped =
        vc ? lve_to_vc_solution(red.graph, src, red.map) : lve_to_ld_solution(red.graph, src, red.map);
    const Verdict mv = vc ? verify_vertex_cover(g, mapped) : verify_liars_ds(g, mapped);
    put_set(j, mapped);
    j["valid"] = to_json(mv);
    r.exit_code = mv.ok ? kOk : kViolated;
  }
  r.human = "reduce " + opt.kind + " " + opt.direction + ": size " + std::to_string(j["size"].get<std::size_t>()) +
            (r.exit_code == kOk ? " verified\n" : " FAILED\n");
  return r;
}

CommandResult cmd_gen(const std::string& kind, std::size_t n, double p, std::uint64_t seed) {
  const Graph g = gen_instance(parse_instance_kind(kind), n, p, seed);
  CommandResult r;
  r.report = {{"command", "gen"}, {"kind", kind}, {"seed", seed}, {"instance", instance_summary(g)}};
  if (kind == "gnp") r.report["p"] = p;
  r.text = emit_edge_list(g);
  r.human = "gen " + kind + ": n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + "\n";
  return r;
}

BenchResult bench_tree_scaling(const std::vector<std::size_t>& sizes, std::size_t reps,
                               std::uint64_t seed) {
  if (reps == 0) throw InputError("bench needs at least one repetition");
  BenchResult out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Graph t = gen_instance(InstanceKind::kRandomTree, sizes[i], 0.0, seed + i);
    std::vector<double> times;
    BenchRow row;
    row.n = sizes[i];
    for (std::size_t rep = 0; rep < reps; ++rep) {
      const auto t0 = Clock::now();
      const VertexSet s = solve_tree_lveds(t);
      times.push_back(ms_since(t0));
      row.solution_size = s.size();
    }
    std::sort(times.begin(), times.end());
    row.median_ms = times[times.size() / 2];
    row.min_ms = times.front();
    out.rows.push_back(row);
  }
  // Ordinary least squares on (log n, log t).
  if (out.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = double(out.rows.size());
    for (const BenchRow& row : out.rows) {
      const double x = std::log(double(row.n)), y = std::log(std::max(row.median_ms, 1e-6));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    out.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }
  return out;
}

CommandResult cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t seed) {
  const BenchResult b = bench_tree_scaling(sizes, reps, seed);
  CommandResult r;
  json rows = json::array();
  std::ostringstream table;
  table << "        n   median_ms      min_ms   |L|\n";
  for (const BenchRow& row : b.rows) {
    rows.push_back({{"n", row.n}, {"median_ms", row.median_ms}, {"min_ms", row.min_ms},
                    {"size", row.solution_size}});
    char line[96];
    std::snprintf(line, sizeof line, "%9zu %11.3f %11.3f %5zu\n", row.n, row.median_ms, row.min_ms,
                  row.solution_size);
    table << line;
  }
  table << "slope " << b.slope << '\n';
  r.report = {{"command", "bench"}, {"seed", seed}, {"reps", reps}, {"rows", rows},
              {"slope", b.rows.size() >= 2 ? json(b.slope) : json(nullptr)}};
  r.human = table.str();
  return r;
}

}  // namespace lved::cli
