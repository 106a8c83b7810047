#pragma once

// Generic finite-action machinery: subgroup closure and orbit decomposition.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "spincover/forms.hpp"
#include "spincover/gf2.hpp"

namespace spincover {

struct Orbit {
  std::string label;
  std::vector<GF2Vec> members;  // ascending bitstring order

  std::size_t size() const { return members.size(); }
  const GF2Vec& smallest() const { return members.front(); }
};

struct OrbitReport {
  std::vector<Orbit> orbits;

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> s;
    for (const auto& o : orbits) s.push_back(o.size());
    return s;
  }

  std::vector<std::size_t> sorted_sizes() const {
    auto s = sizes();
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Index of the orbit containing p, or orbits.size() when absent.
  std::size_t orbit_of(const GF2Vec& p) const {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), p)) return i;
    }
    return orbits.size();
  }

  bool same_orbit(const GF2Vec& a, const GF2Vec& b) const {
    auto i = orbit_of(a);
    return i < orbits.size() && i == orbit_of(b);
  }

  /// Orbits ordered by (size, smallest member).
  void sort_by_size() {
    std::stable_sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.smallest() < b.smallest();
    });
  }

  /// Canonical partition as a sorted list of member lists, labels ignored.
  std::vector<std::vector<GF2Vec>> partition() const {
    std::vector<std::vector<GF2Vec>> p;
    for (const auto& o : orbits) p.push_back(o.members);
    std::sort(p.begin(), p.end());
    return p;
  }
};

/// Assigns labels and fails if two members of one orbit disagree.
inline void label_orbits(OrbitReport& report, const std::function<std::string(const GF2Vec&)>& label) {
  for (auto& orbit : report.orbits) {
    orbit.label = label(orbit.smallest());
    for (const auto& m : orbit.members) {
      if (label(m) != orbit.label) {
        throw DefectError("orbit label is not constant: " + m.to_string() + " vs " + orbit.smallest().to_string());
      }
    }
  }
}

/// Partitions points into orbits of the group generated by gens, by
/// breadth-first search from unvisited seeds in ascending bitstring order.
/// act(point, gen) must return another point of the set.
template <class Gen, class Act>
OrbitReport orbit_decompose(std::vector<GF2Vec> points, const std::vector<Gen>& gens, Act&& act) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::unordered_map<GF2Vec, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);

  std::vector<bool> seen(points.size(), false);
  OrbitReport report;
  for (std::size_t seed = 0; seed < points.size(); ++seed) {
    if (seen[seed]) continue;
    Orbit orbit;
    std::deque<std::size_t> queue{seed};
    seen[seed] = true;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      orbit.members.push_back(points[cur]);
      for (const auto& g : gens) {
        GF2Vec image = act(points[cur], g);
        auto it = index.find(image);
        if (it == index.end()) throw DomainError("orbit_decompose: action not closed, escaping point " + image.to_string());
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

/// The subgroup generated by square matrices under multiplication, by
/// breadth-first right multiplication from the identity. Sorted output.
inline std::vector<GF2Mat> matrix_closure(const std::vector<GF2Mat>& gens, std::size_t n,
                                          std::size_t limit = 50'000'000) {
  std::unordered_set<GF2Mat> seen;
  std::vector<GF2Mat> order{GF2Mat::identity(n)};
  seen.insert(order.front());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& g : gens) {
      GF2Mat next = order[i] * g;
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > limit) throw GuardError("closure: group exceeds element limit");
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

/// The subgroup generated by isometries of one space.
inline std::vector<Isometry> closure(const std::vector<Isometry>& gens, const SpacePtr& space) {
  std::vector<GF2Mat> mats;
  for (const auto& g : gens) {
    if (g.space_ptr() != space && !(g.space().gram() == space->gram())) {
      throw ShapeError("closure: generators act on different spaces");
    }
    mats.push_back(g.mat());
  }
  std::vector<Isometry> out;
  for (auto& m : matrix_closure(mats, space->dim())) out.push_back(Isometry::trusted(space, std::move(m)));
  return out;
}

inline std::vector<Isometry> closure(const std::vector<Isometry>& gens) {
  if (gens.empty()) throw ShapeError("closure: empty generator list has no space; pass it explicitly");
  return closure(gens, gens.front().space_ptr());
}

/// Sorted matrices of a group given as isometries, for set comparisons.
inline std::vector<GF2Mat> sorted_matrices(const std::vector<Isometry>& group) {
  std::vector<GF2Mat> m;
  m.reserve(group.size());
  for (const auto& g : group) m.push_back(g.mat());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

}  // namespace spincover
