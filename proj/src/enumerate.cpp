#include "dessin/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "dessin/errors.hpp"

namespace dessin {

namespace {

// Ordered rooted tree shape; edges = |children| + edges of the subtrees.
struct OTree {
  std::vector<OTree> children;
};

const std::vector<OTree>& ordered_trees(int edges) {
  static std::map<int, std::vector<OTree>> cache;
  auto it = cache.find(edges);
  if (it != cache.end()) return it->second;
  std::vector<OTree> out;
  if (edges == 0) {
    out.emplace_back();
  } else {
    // split off the first child subtree (j edges below it + its own edge)
    for (int j = 0; j <= edges - 1; ++j) {
      const auto& firsts = ordered_trees(j);
      const auto& rests = ordered_trees(edges - 1 - j);
      for (const auto& rest : rests) {
        for (const auto& first : firsts) {
          OTree t;
          t.children.reserve(1 + rest.children.size());
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.children.begin(),
                            rest.children.end());
          out.push_back(std::move(t));
        }
      }
    }
  }
  return cache.emplace(edges, std::move(out)).first->second;
}

PlaneMap tree_to_map(const OTree& root, int root_color) {
  PlaneMap m;
  int edge_counter = 0;
  std::function<void(const OTree&, int, int)> emit =
      [&](const OTree& node, int color, int parent_dart) {
        int v = (int)m.cycles.size();
        m.cycles.emplace_back();
        m.color.push_back(color);
        if (parent_dart >= 0) m.cycles[v].push_back(parent_dart);
        std::vector<std::pair<const OTree*, int>> pending;
        for (const auto& child : node.children) {
          int e = edge_counter++;
          m.cycles[v].push_back(2 * e);
          pending.emplace_back(&child, 2 * e + 1);
        }
        for (const auto& [child, dart] : pending) emit(*child, 1 - color, dart);
      };
  emit(root, root_color, -1);
  return m;
}

// One dart per Aut-orbit of corners at vertices of the given color; the
// isolated vertex contributes the sentinel corner -1.
std::vector<int> corner_reps(const PlaneMap& m, int color) {
  if (m.dart_count() == 0) {
    if (m.color.at(0) == color) return {-1};
    return {};
  }
  auto owner = m.dart_vertex();
  std::set<Code> seen;
  std::vector<int> reps;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (m.color[owner[d]] != color) continue;
    if (seen.insert(rooted_code(m, d)).second) reps.push_back(d);
  }
  return reps;
}

void insert_after(std::vector<int>& cycle, int dart, int first, int second) {
  if (dart < 0) {
    cycle = {first, second};
    return;
  }
  auto it = std::find(cycle.begin(), cycle.end(), dart);
  cycle.insert(it + 1, {first, second});
}

// Doubles an edge between the corner after dart d (white side, tree t1) and
// the corner after dart g (black side, tree t2). The new darts are laid out
// so that the bounded face is the 2-gon between the two copies.
PlaneMap attach(const PlaneMap& t1, int d, const PlaneMap& t2, int g) {
  PlaneMap m;
  m.cycles = t1.cycles;
  m.color = t1.color;
  int dart_off = t1.dart_count();
  int vertex_off = t1.vertex_count();
  for (const auto& cycle : t2.cycles) {
    std::vector<int> shifted;
    shifted.reserve(cycle.size());
    for (int dd : cycle) shifted.push_back(dd + dart_off);
    m.cycles.push_back(std::move(shifted));
  }
  m.color.insert(m.color.end(), t2.color.begin(), t2.color.end());

  int base = dart_off + t2.dart_count();
  int v = d < 0 ? 0 : t1.dart_vertex()[d];
  int u = vertex_off + (g < 0 ? 0 : t2.dart_vertex()[g]);
  insert_after(m.cycles[v], d, base, base + 2);
  insert_after(m.cycles[u], g < 0 ? -1 : g + dart_off, base + 3, base + 1);
  return m;
}

}  // namespace

std::vector<TreeClass> enumerate_plane_trees(int edges, int guard) {
  if (edges < 0) throw std::invalid_argument("negative edge count");
  if (edges > guard)
    throw BudgetExceeded("tree enumeration above the edge guard");
  std::map<Code, TreeClass> classes;
  if (edges == 0) {
    for (int color : {0, 1}) {
      PlaneMap m;
      m.cycles = {{}};
      m.color = {color};
      classes.emplace(canonical_code(m), TreeClass{m, 1});
    }
  } else {
    for (const auto& shape : ordered_trees(edges)) {
      for (int color : {0, 1}) {
        PlaneMap m = tree_to_map(shape, color);
        Code code = canonical_code(m);
        if (!classes.count(code))
          classes.emplace(std::move(code), TreeClass{decode(canonical_code(m)),
                                                     aut_order(m)});
      }
    }
  }
  std::vector<TreeClass> out;
  out.reserve(classes.size());
  for (auto& [code, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::vector<PlaneMap> enumerate_21maps(int edges, int guard) {
  if (edges < 2) throw std::invalid_argument("a 2^1-map has at least 2 edges");
  if (edges > guard)
    throw BudgetExceeded("2^1-map enumeration above the edge guard");
  std::map<Code, PlaneMap> classes;
  for (int e1 = 0; e1 <= edges - 2; ++e1) {
    int e2 = edges - 2 - e1;
    auto whites = enumerate_plane_trees(e1, guard);
    auto blacks = enumerate_plane_trees(e2, guard);
    for (const auto& t1 : whites) {
      auto wcorners = corner_reps(t1.map, 0);
      if (wcorners.empty()) continue;
      for (const auto& t2 : blacks) {
        for (int g : corner_reps(t2.map, 1)) {
          for (int d : wcorners) {
            PlaneMap m = attach(t1.map, d, t2.map, g);
            m.validate();
            std::vector<int> expected{2, 2 * edges - 2};
            std::sort(expected.begin(), expected.end());
            if (face_degrees(m) != expected)
              throw std::logic_error("doubled edge did not bound a 2-gon");
            Code code = canonical_code(m);
            if (!classes.emplace(code, decode(code)).second)
              throw std::logic_error("2^1-map class constructed twice");
          }
        }
      }
    }
  }
  std::vector<PlaneMap> out;
  out.reserve(classes.size());
  for (auto& [code, m] : classes) out.push_back(std::move(m));
  return out;
}

Rational weighted_tree_count(const Passport& p) {
  p.validate();
  Integer num =
      factorial(p.white_count() - 1) * factorial(p.black_count() - 1);
  Integer den = 1;
  for (const auto& [deg, mult] : p.white) den *= factorial(mult);
  for (const auto& [deg, mult] : p.black) den *= factorial(mult);
  return Rational(num, den);
}

}  // namespace dessin
