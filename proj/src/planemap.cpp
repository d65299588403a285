#include "dessin/planemap.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dessin/errors.hpp"

namespace dessin {

int PlaneMap::dart_count() const {
  int n = 0;
  for (const auto& cycle : cycles) n += (int)cycle.size();
  return n;
}

std::vector<int> PlaneMap::sigma() const {
  std::vector<int> next(dart_count(), -1);
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      next[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return next;
}

std::vector<int> PlaneMap::dart_vertex() const {
  std::vector<int> owner(dart_count(), -1);
  for (int v = 0; v < vertex_count(); ++v)
    for (int d : cycles[v]) owner[d] = v;
  return owner;
}

int PlaneMap::face_count() const {
  int n = dart_count();
  if (n == 0) return 1;
  auto next = sigma();
  std::vector<bool> seen(n, false);
  int faces = 0;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    ++faces;
    int e = d;
    do {
      seen[e] = true;
      e = next[alpha(e)];
    } while (e != d);
  }
  return faces;
}

void PlaneMap::validate() const {
  int n = dart_count();
  if ((int)color.size() != vertex_count())
    throw std::invalid_argument("color/vertex size mismatch");
  if (n % 2 != 0) throw std::invalid_argument("odd dart count");
  auto next = sigma();
  for (int d = 0; d < n; ++d)
    if (next[d] < 0) throw std::invalid_argument("darts not 0..2E-1");
  auto owner = dart_vertex();
  for (int d = 0; d < n; ++d)
    if (color[owner[d]] == color[owner[alpha(d)]])
      throw std::invalid_argument("not bipartite");
  if (n > 0) {
    // connectivity of <sigma, alpha> on darts
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 0;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      ++visited;
      for (int e : {next[d], alpha(d)}) {
        if (!seen[e]) {
          seen[e] = true;
          stack.push_back(e);
        }
      }
    }
    if (visited != n) throw std::invalid_argument("map not connected");
  }
  int euler = vertex_count() - n / 2 + face_count();
  if (euler != 2) throw std::invalid_argument("map not planar (V-E+F != 2)");
}

Code rooted_code(const PlaneMap& m, int root) {
  int n = m.dart_count();
  auto next = m.sigma();
  auto owner = m.dart_vertex();
  std::vector<int> pos(n, -1);
  std::vector<int> order;
  order.reserve(n);
  pos[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int e : {next[d], PlaneMap::alpha(d)}) {
      if (pos[e] < 0) {
        pos[e] = (int)order.size();
        order.push_back(e);
      }
    }
  }
  Code code;
  code.reserve(1 + 3 * n);
  code.push_back(n);
  for (int d : order) {
    code.push_back(pos[next[d]]);
    code.push_back(pos[PlaneMap::alpha(d)]);
    code.push_back(m.color[owner[d]]);
  }
  return code;
}

Code canonical_code(const PlaneMap& m) {
  int n = m.dart_count();
  if (n == 0) return Code{0, m.color.at(0)};
  Code best;
  for (int root = 0; root < n; ++root) {
    Code c = rooted_code(m, root);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

PlaneMap decode(const Code& code) {
  int n = code.at(0);
  if (n == 0) {
    PlaneMap m;
    m.cycles = {{}};
    m.color = {code.at(1)};
    return m;
  }
  std::vector<int> next(n), al(n), col(n);
  for (int d = 0; d < n; ++d) {
    next[d] = code.at(1 + 3 * d);
    al[d] = code.at(2 + 3 * d);
    col[d] = code.at(3 + 3 * d);
  }
  // relabel so edge ends are the pairs (2i, 2i+1)
  std::vector<int> fresh(n, -1);
  int id = 0;
  for (int d = 0; d < n; ++d) {
    if (fresh[d] >= 0) continue;
    fresh[d] = id;
    fresh[al[d]] = id + 1;
    id += 2;
  }
  std::vector<int> next2(n);
  std::vector<int> col2(n);
  for (int d = 0; d < n; ++d) {
    next2[fresh[d]] = fresh[next[d]];
    col2[fresh[d]] = col[d];
  }
  // vertex cycles = orbits of sigma, ordered by smallest dart
  PlaneMap m;
  std::vector<bool> seen(n, false);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    std::vector<int> cycle;
    int e = d;
    do {
      seen[e] = true;
      cycle.push_back(e);
      e = next2[e];
    } while (e != d);
    m.cycles.push_back(std::move(cycle));
    m.color.push_back(col2[d]);
  }
  return m;
}

PlaneMap canonical_form(const PlaneMap& m) { return decode(canonical_code(m)); }

int aut_order(const PlaneMap& m) {
  int n = m.dart_count();
  if (n == 0) return 1;
  if (m.face_count() != 1) throw NotATree("automorphism order needs a tree");
  std::set<Code> codes;
  for (int root = 0; root < n; ++root) codes.insert(rooted_code(m, root));
  return n / (int)codes.size();
}

Passport passport_of(const PlaneMap& m) {
  Passport p;
  for (int v = 0; v < m.vertex_count(); ++v) {
    auto& side = m.color[v] == 0 ? p.white : p.black;
    side[(int)m.cycles[v].size()] += 1;
  }
  return p;
}

std::vector<int> face_degrees(const PlaneMap& m) {
  int n = m.dart_count();
  auto next = m.sigma();
  std::vector<bool> seen(n, false);
  std::vector<int> degrees;
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    int len = 0;
    int e = d;
    do {
      seen[e] = true;
      ++len;
      e = next[PlaneMap::alpha(e)];
    } while (e != d);
    degrees.push_back(len);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::string to_text(const PlaneMap& m) {
  std::ostringstream os;
  os << "darts " << m.dart_count() << "\n";
  for (int v = 0; v < m.vertex_count(); ++v) {
    os << (m.color[v] == 0 ? "w:" : "b:");
    for (int d : m.cycles[v]) os << " " << d;
    os << "\n";
  }
  return os.str();
}

}  // namespace dessin
