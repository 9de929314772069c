#pragma once

#include <map>
#include <string>
#include <vector>

namespace icsrisk {

struct Arc {
  std::string from;
  std::string to;
  double time = 0.0;  // exploitation time, >= 0

  bool operator==(const Arc&) const = default;
};

// Directed graph of security states. Nodes are attack states; an arc (i,j)
// is the exploitation that activates state j once state i is held. Target
// states (one per sensor / controller) are sinks until augment() attaches
// the super sink.
struct AttackGraph {
  std::vector<std::string> nodes;
  std::vector<Arc> arcs;
  std::vector<std::string> initial;      // initial vulnerable states
  std::vector<std::string> sensors;      // N_s, target states compromising a sensor
  std::vector<std::string> controllers;  // N_c, target states compromising a controller

  // Set by augment().
  bool augmented = false;
  std::string source;  // single source, start time 0
  std::string sink;    // super sink receiving K units of flow

  bool has_node(const std::string& id) const;
  bool is_target(const std::string& id) const;
  std::vector<std::string> targets() const;  // sensors then controllers
  std::size_t node_index(const std::string& id) const;  // throws if absent
};

// Adds the single source (only when several initial states exist) and the
// super sink with zero-time arcs from every target. Augmenting twice is an
// error so variable name maps stay stable.
AttackGraph augment(const AttackGraph& graph);

// Earliest arrival time from the source under OR semantics (shortest path
// over summed exploitation times). Unreachable nodes map to +infinity.
// Requires an augmented graph.
std::map<std::string, double> earliest_arrival(const AttackGraph& graph);

enum class TopologyKind { high, medium, low };

// Random 12-state network with three sensor and three controller targets
// hanging off precondition states whose sharing pattern depends on `kind`:
// high shares one precondition set across all six targets, medium splits
// sensors from controllers, low wires three sensor-controller pairs to
// three separate preconditions. Arc times are U(1,50). Deterministic in
// `seed`.
AttackGraph generate_topology(TopologyKind kind, std::uint64_t seed);

}  // namespace icsrisk
