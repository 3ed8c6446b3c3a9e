#pragma once

// Verifiers for every set property used by the solvers, and the sentinel
// report model behind liar's vertex-edge domination.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lved/graph.hpp"
#include "lved/labelled_tree.hpp"

namespace lved {

namespace witness {
/// |N[e] ∩ S| fell short of the demand.
struct EdgeDeficit {
  EdgeId edge;
  std::size_t achieved;
  std::size_t required;
};
/// |(N[e] ∪ N[f]) ∩ S| fell short of the pair demand.
struct EdgePairDeficit {
  EdgeId first;
  EdgeId second;
  std::size_t achieved;
  std::size_t required;
};
struct VertexDeficit {
  Vertex vertex;
  std::size_t achieved;
  std::size_t required;
};
struct VertexPairDeficit {
  Vertex first;
  Vertex second;
  std::size_t achieved;
  std::size_t required;
};
struct UncoveredEdge {
  EdgeId edge;
};
/// An R-tagged vertex that is not in the set.
struct MissingRequired {
  Vertex vertex;
};
}  // namespace witness

using Witness = std::variant<witness::EdgeDeficit, witness::EdgePairDeficit, witness::VertexDeficit,
                             witness::VertexPairDeficit, witness::UncoveredEdge,
                             witness::MissingRequired>;

/// ok is true exactly when no witness is present. Witnesses are the first
/// violation in canonical order: single conditions by id, then pairs
/// lexicographically.
struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

std::string describe(const Witness& w);

/// |N[e] ∩ L| >= 2 for all edges and |(N[e] ∪ N[f]) ∩ L| >= 3 for all
/// distinct edge pairs.
Verdict verify_lveds(const Graph& g, const VertexSet& l);
/// |N[e] ∩ D| >= k for all edges; k >= 1.
Verdict verify_kveds(const Graph& g, const VertexSet& d, int k);
/// Vertex analogue of verify_lveds.
Verdict verify_liars_ds(const Graph& g, const VertexSet& d);
/// R-tagged vertices in D, per-edge demand k(e), pair demand k(e)+k(f)-1.
Verdict verify_lkt(const LabelledTree& t, const VertexSet& d);
Verdict verify_vertex_cover(const Graph& g, const VertexSet& c);

// ---------------------------------------------------------------------------
// Sentinel model. Exactly one edge is damaged. Honest sentinels report the
// damaged edge when it lies in their view (edges e with v ∈ N[e]) and are
// silent otherwise. At most one sentinel lies: it claims some edge in its own
// view or stays silent.

/// Thrown for scenarios that break the model's rules.
class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Scenario {
  EdgeId damaged = 0;
  std::optional<Vertex> liar;
  std::optional<EdgeId> claim;  // only with a liar; nullopt = liar silent
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// One entry per sentinel, aligned with the sorted members of L.
struct ReportVector {
  std::vector<Vertex> sentinels;
  std::vector<std::optional<EdgeId>> reports;
  friend bool operator==(const ReportVector&, const ReportVector&) = default;
};

ReportVector simulate_reports(const Graph& g, const VertexSet& l, const Scenario& s);

/// Every scenario admitted by the model for sentinels at L, in canonical
/// order (damaged edge, then no liar, then liars by id: silent, claims by id).
std::vector<Scenario> enumerate_scenarios(const Graph& g, const VertexSet& l);

struct DecodeResult {
  enum class Kind { kUnique, kAmbiguous, kInconsistent };
  Kind kind = Kind::kInconsistent;
  std::optional<EdgeId> damaged;      // set for kUnique
  std::vector<Scenario> survivors;    // every scenario reproducing the reports
};

/// Consistent-scenario elimination over all scenarios.
DecodeResult decode_reports(const Graph& g, const VertexSet& l, const ReportVector& r);

/// True when every scenario's reports decode uniquely to its damaged edge.
bool check_identifiability(const Graph& g, const VertexSet& l);

}  // namespace lved
