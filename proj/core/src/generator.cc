#include "wcp/generator.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "wcp/errors.h"

namespace wcp {

std::string_view SizeClassName(SizeClass c) {
  switch (c) {
    case SizeClass::kN1:
      return "n1-like";
    case SizeClass::kN2:
      return "n2-like";
    case SizeClass::kN3:
      return "n3-like";
    case SizeClass::kN4:
      return "n4-like";
    case SizeClass::kN5:
      return "n5-like";
  }
  return "?";
}

std::optional<SizeClass> ParseSizeClass(std::string_view name) {
  std::string key;
  for (char ch : name) {
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (SizeClass c : {SizeClass::kN1, SizeClass::kN2, SizeClass::kN3,
                      SizeClass::kN4, SizeClass::kN5}) {
    const std::string_view full = SizeClassName(c);
    if (key == full || key == full.substr(0, 2)) return c;
  }
  return std::nullopt;
}

std::vector<CableType> DefaultCables() {
  return {{3, ToFixed(1.0)}, {6, ToFixed(1.7)}, {10, ToFixed(2.6)}};
}

GeneratorSpec DefaultGeneratorSpec(SizeClass c, std::int64_t divisor) {
  if (divisor < 1) throw InputError("divisor must be positive");
  GeneratorSpec spec;
  spec.size_class = c;
  switch (c) {
    case SizeClass::kN1:
      spec.min_turbines = 10, spec.max_turbines = 79;
      spec.min_substations = 1, spec.max_substations = 1;
      break;
    case SizeClass::kN2:
      spec.min_turbines = 20, spec.max_turbines = 79;
      spec.min_substations = 2, spec.max_substations = 3;
      break;
    case SizeClass::kN3:
      spec.min_turbines = 80, spec.max_turbines = 180;
      spec.min_substations = 2, spec.max_substations = 4;
      break;
    case SizeClass::kN4:
      spec.min_turbines = 200, spec.max_turbines = 499;
      spec.min_substations = 3, spec.max_substations = 6;
      break;
    case SizeClass::kN5:
      spec.min_turbines = 80, spec.max_turbines = 180;
      spec.min_substations = 2, spec.max_substations = 4;
      spec.connectivity = Connectivity::kComplete;
      break;
  }
  spec.min_turbines = std::max<std::int64_t>(1, spec.min_turbines / divisor);
  spec.max_turbines = std::max<std::int64_t>(1, spec.max_turbines / divisor);
  return spec;
}

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, 1); bit-exact across standard libraries.
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::int64_t Between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void Join(std::size_t a, std::size_t b) { parent[Find(a)] = Find(b); }
  std::vector<std::size_t> parent;
};

double Distance(const Vertex& a, const Vertex& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Every component holds a substation.
bool AllReachSubstation(const std::vector<Vertex>& vertices,
                        const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  DisjointSets sets(vertices.size());
  for (const auto& [a, b] : edges) sets.Join(a, b);
  std::vector<char> has_substation(vertices.size(), 0);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].is_substation()) has_substation[sets.Find(v)] = 1;
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!has_substation[sets.Find(v)]) return false;
  }
  return true;
}

}  // namespace

WindFarm Generate(const GeneratorSpec& spec) {
  if (spec.min_turbines < 1 || spec.max_turbines < spec.min_turbines) {
    throw InputError("generator needs at least one turbine");
  }
  if (spec.min_substations < 1 || spec.max_substations < spec.min_substations) {
    throw InputError("generator needs at least one substation");
  }
  if (spec.k < 1) throw InputError("k must be positive");
  Rng rng(spec.seed);
  const std::int64_t num_turbines = rng.Between(spec.min_turbines, spec.max_turbines);
  const std::int64_t num_substations =
      rng.Between(spec.min_substations, spec.max_substations);
  const std::vector<CableType> cables =
      spec.cables.empty() ? DefaultCables() : spec.cables;
  const std::int64_t max_capacity = cables.back().capacity;
  const double side = 1000.0 * std::sqrt(static_cast<double>(num_turbines));
  const std::int64_t capacity = static_cast<std::int64_t>(std::ceil(
      spec.capacity_slack * static_cast<double>(num_turbines) /
      static_cast<double>(num_substations)));

  std::vector<Vertex> vertices;
  for (std::int64_t i = 0; i < num_turbines; ++i) {
    const double x = std::round(rng.Unit() * side);
    const double y = std::round(rng.Unit() * side);
    vertices.push_back({i, x, y, VertexKind::kTurbine, 0});
  }
  for (std::int64_t i = 0; i < num_substations; ++i) {
    const double t = std::round(rng.Unit() * side);
    double x = 0.0;
    double y = 0.0;
    switch (rng.Between(0, 3)) {
      case 0: x = t, y = 0.0; break;
      case 1: x = side, y = t; break;
      case 2: x = t, y = side; break;
      default: x = 0.0, y = t; break;
    }
    vertices.push_back({num_turbines + i, std::round(x), std::round(y),
                        VertexKind::kSubstation, capacity});
  }

  const std::size_t n = vertices.size();
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    if (vertices[a].is_substation() && vertices[b].is_substation()) return;
    pairs.insert(std::minmax(a, b));
  };
  auto nearest = [&](std::size_t from, bool turbines_only) {
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == from) continue;
      if (turbines_only && vertices[v].is_substation()) continue;
      others.push_back(v);
    }
    std::sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(Distance(vertices[from], vertices[a]), a) <
             std::pair(Distance(vertices[from], vertices[b]), b);
    });
    return others;
  };

  if (spec.connectivity == Connectivity::kComplete) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) add(a, b);
    }
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      const bool substation = vertices[v].is_substation();
      std::int64_t degree = spec.k;
      if (substation) {
        // Enough incident cables to absorb the substation's capacity twice.
        degree = std::max<std::int64_t>(
            degree, (2 * capacity + max_capacity - 1) / max_capacity);
      }
      const auto order = nearest(v, substation);
      for (std::size_t i = 0; i < order.size() && static_cast<std::int64_t>(i) < degree;
           ++i) {
        add(v, order[i]);
      }
    }
    // Join components without a substation to the nearest vertex outside.
    while (!AllReachSubstation(vertices, pairs)) {
      DisjointSets sets(n);
      for (const auto& [a, b] : pairs) sets.Join(a, b);
      std::vector<char> has_substation(n, 0);
      for (std::size_t v = 0; v < n; ++v) {
        if (vertices[v].is_substation()) has_substation[sets.Find(v)] = 1;
      }
      std::size_t orphan = n;
      for (std::size_t v = 0; v < n && orphan == n; ++v) {
        if (!has_substation[sets.Find(v)]) orphan = v;
      }
      const std::size_t root = sets.Find(orphan);
      std::pair<double, std::pair<std::size_t, std::size_t>> best{HUGE_VAL, {n, n}};
      for (std::size_t a = 0; a < n; ++a) {
        if (sets.Find(a) != root) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (sets.Find(b) == root) continue;
          best = std::min(best, {Distance(vertices[a], vertices[b]), {a, b}});
        }
      }
      add(best.second.first, best.second.second);
    }
  }

  if (spec.max_edges && pairs.size() > *spec.max_edges) {
    std::vector<std::pair<std::size_t, std::size_t>> by_length(pairs.begin(),
                                                               pairs.end());
    std::sort(by_length.begin(), by_length.end(), [&](const auto& a, const auto& b) {
      return std::pair(Distance(vertices[a.first], vertices[a.second]), a) >
             std::pair(Distance(vertices[b.first], vertices[b.second]), b);
    });
    for (const auto& edge : by_length) {
      if (pairs.size() <= *spec.max_edges) break;
      pairs.erase(edge);
      if (!AllReachSubstation(vertices, pairs)) pairs.insert(edge);
    }
  }

  std::vector<EdgeSpec> edges;
  for (const auto& [a, b] : pairs) {
    // Turbine-substation edges point into the substation.
    std::size_t tail = a;
    std::size_t head = b;
    if (vertices[tail].is_substation()) std::swap(tail, head);
    edges.push_back({vertices[tail].id, vertices[head].id, std::nullopt});
  }
  return WindFarm::Create(std::move(vertices), edges, cables);
}

}  // namespace wcp
