#include "icsrisk/attack_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "icsrisk/rng.hpp"

namespace icsrisk {

bool AttackGraph::has_node(const std::string& id) const {
  return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

bool AttackGraph::is_target(const std::string& id) const {
  return std::find(sensors.begin(), sensors.end(), id) != sensors.end() ||
         std::find(controllers.begin(), controllers.end(), id) != controllers.end();
}

std::vector<std::string> AttackGraph::targets() const {
  std::vector<std::string> out = sensors;
  out.insert(out.end(), controllers.begin(), controllers.end());
  return out;
}

std::size_t AttackGraph::node_index(const std::string& id) const {
  auto it = std::find(nodes.begin(), nodes.end(), id);
  if (it == nodes.end()) throw std::invalid_argument("unknown node: " + id);
  return static_cast<std::size_t>(it - nodes.begin());
}

AttackGraph augment(const AttackGraph& graph) {
  if (graph.augmented) throw std::invalid_argument("graph already augmented");
  if (graph.initial.empty()) throw std::invalid_argument("graph has no initial state");

  AttackGraph g = graph;
  if (g.initial.size() == 1) {
    g.source = g.initial.front();
  } else {
    std::string src = "0";
    while (g.has_node(src)) src += "_";
    g.source = src;
    g.nodes.push_back(src);
    for (const auto& init : graph.initial) g.arcs.push_back({src, init, 0.0});
  }

  std::string sink = "nu";
  while (g.has_node(sink)) sink += "_";
  g.sink = sink;
  g.nodes.push_back(sink);
  for (const auto& t : g.sensors) g.arcs.push_back({t, sink, 0.0});
  for (const auto& t : g.controllers) g.arcs.push_back({t, sink, 0.0});

  g.augmented = true;
  return g;
}

std::map<std::string, double> earliest_arrival(const AttackGraph& graph) {
  if (!graph.augmented) throw std::invalid_argument("earliest_arrival needs an augmented graph");
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::unordered_map<std::string, std::vector<std::pair<std::string, double>>> out_arcs;
  for (const auto& a : graph.arcs) out_arcs[a.from].push_back({a.to, a.time});

  std::map<std::string, double> dist;
  for (const auto& n : graph.nodes) dist[n] = kInf;
  dist[graph.source] = 0.0;

  using Item = std::pair<double, std::string>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.push({0.0, graph.source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    auto it = out_arcs.find(u);
    if (it == out_arcs.end()) continue;
    for (const auto& [v, t] : it->second) {
      if (d + t < dist[v]) {
        dist[v] = d + t;
        heap.push({dist[v], v});
      }
    }
  }
  return dist;
}

namespace {

double arc_time(std::uint64_t seed, std::uint64_t k) {
  return rng::uniform_in(1.0, 50.0, seed, 0x41, k, 0, 0);
}

}  // namespace

AttackGraph generate_topology(TopologyKind kind, std::uint64_t seed) {
  AttackGraph g;
  const int kStates = 12;  // security states n0..n11, n0 initial
  for (int i = 0; i < kStates; ++i) g.nodes.push_back("n" + std::to_string(i));
  g.sensors = {"s1", "s2", "s3"};
  g.controllers = {"c1", "c2", "c3"};
  for (const auto& t : g.targets()) g.nodes.push_back(t);
  g.initial = {"n0"};

  // Spanning arborescence over the security states keeps every state
  // reachable; a few extra arcs vary the path structure.
  std::uint64_t k = 1;
  for (int i = 1; i < kStates; ++i) {
    int parent = static_cast<int>(rng::pick(static_cast<std::uint64_t>(i), seed, 0x50, k++, 0, 0));
    g.arcs.push_back({"n" + std::to_string(parent), "n" + std::to_string(i), arc_time(seed, k++)});
  }
  for (int i = 2; i < kStates; ++i) {
    if (rng::uniform(seed, 0x51, k++, 0, 0) < 0.3) {
      int parent = static_cast<int>(rng::pick(static_cast<std::uint64_t>(i - 1), seed, 0x52, k++, 0, 0));
      if ("n" + std::to_string(parent) != g.arcs[static_cast<std::size_t>(i - 1)].from)
        g.arcs.push_back({"n" + std::to_string(parent), "n" + std::to_string(i), arc_time(seed, k++)});
    }
  }

  auto deep_state = [&](std::uint64_t salt) {
    // preconditions sit in the deeper half of the state list
    return "n" + std::to_string(6 + rng::pick(6, seed, 0x53, salt, 0, 0));
  };

  switch (kind) {
    case TopologyKind::high: {
      // all six targets share one precondition set
      std::string p1 = deep_state(1);
      std::string p2 = deep_state(2);
      if (p2 == p1) p2 = "n" + std::to_string(6 + (std::stoi(p1.substr(1)) - 6 + 1) % 6);
      for (const auto& t : g.targets()) {
        g.arcs.push_back({p1, t, arc_time(seed, k++)});
        g.arcs.push_back({p2, t, arc_time(seed, k++)});
      }
      break;
    }
    case TopologyKind::medium: {
      // sensors hang off one precondition state, controllers off another
      std::string ps = deep_state(3);
      std::string pc = deep_state(4);
      if (pc == ps) pc = "n" + std::to_string(6 + (std::stoi(ps.substr(1)) - 6 + 1) % 6);
      for (const auto& t : g.sensors) g.arcs.push_back({ps, t, arc_time(seed, k++)});
      for (const auto& t : g.controllers) g.arcs.push_back({pc, t, arc_time(seed, k++)});
      break;
    }
    case TopologyKind::low: {
      // three sensor-controller pairs on three separate preconditions;
      // controller assignment is a random permutation of the sensors
      int c_perm[3] = {0, 1, 2};
      int swap1 = static_cast<int>(rng::pick(3, seed, 0x54, 1, 0, 0));
      int swap2 = static_cast<int>(rng::pick(3, seed, 0x54, 2, 0, 0));
      std::swap(c_perm[0], c_perm[swap1]);
      std::swap(c_perm[1], c_perm[std::max(swap2, 1)]);
      int used[3] = {-1, -1, -1};
      for (int pair = 0; pair < 3; ++pair) {
        int p;
        bool fresh;
        std::uint64_t salt = 10 + static_cast<std::uint64_t>(pair);
        do {
          p = 6 + static_cast<int>(rng::pick(6, seed, 0x55, salt, 0, 0));
          fresh = p != used[0] && p != used[1] && p != used[2];
          ++salt;
        } while (!fresh);
        used[pair] = p;
        std::string pre = "n" + std::to_string(p);
        g.arcs.push_back({pre, g.sensors[static_cast<std::size_t>(pair)], arc_time(seed, k++)});
        g.arcs.push_back({pre, g.controllers[static_cast<std::size_t>(c_perm[pair])], arc_time(seed, k++)});
      }
      break;
    }
  }
  return g;
}

}  // namespace icsrisk
