#include "springweb/webs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "springweb/error.hpp"

namespace springweb {

namespace {

std::pair<int, int> key(int p, int q) { return p < q ? std::pair{p, q} : std::pair{q, p}; }

int wrap(int label, int n) { return ((label - 1) % n + n) % n + 1; }

void triangulate_face(const WeightedPolygon& p, const std::vector<int>& face, FanApex apex,
                      std::map<std::pair<int, int>, int>& chords) {
  const int size = static_cast<int>(face.size());
  if (size <= 3) return;
  for (int x = 0; x < size; ++x) {
    for (int y = x + 2; y < size; ++y) {
      if (x == 0 && y == size - 1) continue;  // a side of this face
      if (p.weight(face[x], face[y]) > 0) {
        std::vector<int> left(face.begin() + x, face.begin() + y + 1);
        std::vector<int> right(face.begin() + y, face.end());
        right.insert(right.end(), face.begin(), face.begin() + x + 1);
        triangulate_face(p, left, apex, chords);
        triangulate_face(p, right, apex, chords);
        return;
      }
    }
  }
  int a = 0;
  for (int x = 1; x < size; ++x) {
    if (p.least_label(face[x]) < p.least_label(face[a])) a = x;
  }
  if (apex == FanApex::SuccessorOfLeast) a = (a + 1) % size;
  for (int t = 2; t <= size - 2; ++t) {
    chords.emplace(key(face[a], face[(a + t) % size]), 0);
  }
}

// Cyclic run of polygon vertices from `from` clockwise to `to`, inclusive.
std::vector<int> arc(int from, int to, int s) {
  std::vector<int> out{from};
  for (int v = from; v != to;) {
    v = (v + 1) % s;
    out.push_back(v);
  }
  return out;
}

int chord_weight_within(const WeightedPolygon& p, const std::vector<int>& region) {
  int total = 0;
  for (const auto& [c, w] : p.chords) {
    const bool a = std::find(region.begin(), region.end(), c.first) != region.end();
    const bool b = std::find(region.begin(), region.end(), c.second) != region.end();
    if (a && b) total += w;
  }
  return total;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Dense index for every internal vertex id.
std::map<int, int> index_vertices(const HourglassWeb& w) {
  std::map<int, int> idx;
  for (int id : w.internal_vertices()) idx.emplace(id, static_cast<int>(idx.size()));
  return idx;
}

}  // namespace

int WeightedPolygon::weight(int p, int q) const {
  const auto it = chords.find(key(p, q));
  return it == chords.end() ? 0 : it->second;
}

bool WeightedPolygon::has_chord(int p, int q) const { return chords.contains(key(p, q)); }

int WeightedPolygon::least_label(int p) const {
  const auto& iv = intervals.at(static_cast<std::size_t>(p));
  return *std::min_element(iv.begin(), iv.end());
}

std::vector<std::array<int, 3>> WeightedPolygon::triangles() const {
  const int s = size();
  std::vector<std::array<int, 3>> out;
  if (s < 3) return out;
  auto joined = [&](int a, int b) { return (b - a == 1) || (a == 0 && b == s - 1) || has_chord(a, b); };
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      if (!joined(a, b)) continue;
      for (int c = b + 1; c < s; ++c) {
        if (joined(a, c) && joined(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

WeightedPolygon dissect(const NoncrossingMatching& m) {
  if (m.k() < 2) throw DegenerateMatching("web construction needs k >= 2, got k=" + std::to_string(m.k()));
  const int n = m.n();
  const auto cuts = short_edges_mod(m);
  const int s = static_cast<int>(cuts.size());

  WeightedPolygon p;
  p.k = m.k();
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (int j = 0; j < s; ++j) {
    const int start = cuts[j] + 1;
    const int stop = j + 1 < s ? cuts[j + 1] : cuts[0] + n;
    std::vector<int> labels;
    for (int v = start; v <= stop; ++v) {
      labels.push_back(wrap(v, n));
      owner[wrap(v, n)] = j;
    }
    p.intervals.push_back(std::move(labels));
  }
  for (const auto& [a, b] : m.edges()) {
    if (owner[a] == owner[b]) {
      throw DegenerateMatching("matching edge {" + std::to_string(a) + "," + std::to_string(b) +
                               "} stays inside one interval");
    }
    ++p.chords[key(owner[a], owner[b])];
  }
  return p;
}

WeightedPolygon triangulate(const WeightedPolygon& p, FanApex apex) {
  WeightedPolygon out = p;
  std::vector<int> face(static_cast<std::size_t>(p.size()));
  std::iota(face.begin(), face.end(), 0);
  triangulate_face(p, face, apex, out.chords);
  return out;
}

HourglassWeb::HourglassWeb(int k, std::vector<Claw> claws, std::vector<int> filled, std::vector<Edge> edges)
    : k_(k), claws_(std::move(claws)), filled_(std::move(filled)), edges_(std::move(edges)) {
  if (k_ < 2) throw InvalidInput("web needs k >= 2");
  const int n = 2 * k_;
  if (claws_.size() < 2) throw InvalidInput("web needs at least two claws");

  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::set<int> ids;
  std::map<int, int> degree;
  std::set<int> claw_ids;
  for (const auto& c : claws_) {
    if (c.boundary.empty()) throw InvalidInput("empty claw");
    for (std::size_t t = 0; t < c.boundary.size(); ++t) {
      const int b = c.boundary[t];
      if (b < 1 || b > n) throw InvalidInput("boundary label " + std::to_string(b) + " outside [1, 2k]");
      if (seen[b]) throw InvalidInput("boundary label " + std::to_string(b) + " in two claws");
      seen[b] = true;
      if (t > 0 && b != wrap(c.boundary[t - 1] + 1, n)) {
        throw InvalidInput("claw boundary is not a clockwise cyclic interval");
      }
    }
    if (!ids.insert(c.vertex).second) throw InvalidInput("duplicate vertex id " + std::to_string(c.vertex));
    claw_ids.insert(c.vertex);
    degree[c.vertex] = static_cast<int>(c.boundary.size());
  }
  for (int b = 1; b <= n; ++b) {
    if (!seen[b]) throw InvalidInput("boundary label " + std::to_string(b) + " in no claw");
  }
  for (int f : filled_) {
    if (!ids.insert(f).second) throw InvalidInput("duplicate vertex id " + std::to_string(f));
    degree[f] = 0;
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : edges_) {
    if (!ids.contains(e.u) || !ids.contains(e.v)) throw InvalidInput("edge references an unknown vertex");
    if (e.mult <= 0) throw InvalidInput("edge multiplicity must be positive");
    if (claw_ids.contains(e.u) == claw_ids.contains(e.v)) {
      throw InvalidInput("edges must join an unfilled and a filled vertex");
    }
    if (!pairs.insert(key(e.u, e.v)).second) throw InvalidInput("parallel edges must be one hourglass");
    degree[e.u] += e.mult;
    degree[e.v] += e.mult;
  }
  for (const auto& [id, d] : degree) {
    if (d != k_) {
      throw InvalidInput("vertex " + std::to_string(id) + " has degree " + std::to_string(d) + ", expected " +
                         std::to_string(k_));
    }
  }
  const auto s = claws_.size();
  if (filled_.size() != s - 2) {
    throw InvalidInput("a web with " + std::to_string(s) + " claws needs " + std::to_string(s - 2) +
                       " filled vertices");
  }
}

int HourglassWeb::claw_of(int label) const {
  for (std::size_t c = 0; c < claws_.size(); ++c) {
    const auto& b = claws_[c].boundary;
    if (std::find(b.begin(), b.end(), label) != b.end()) return static_cast<int>(c);
  }
  throw InvalidInput("label " + std::to_string(label) + " is not on the boundary");
}

int HourglassWeb::multiplicity(int u, int v) const {
  for (const auto& e : edges_) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.mult;
  }
  return 0;
}

std::vector<int> HourglassWeb::internal_vertices() const {
  std::vector<int> out;
  for (const auto& c : claws_) out.push_back(c.vertex);
  out.insert(out.end(), filled_.begin(), filled_.end());
  return out;
}

HourglassWeb web_from_polygon(const WeightedPolygon& p) {
  const int s = p.size();
  std::vector<HourglassWeb::Claw> claws;
  for (int v = 0; v < s; ++v) claws.push_back({v, p.intervals[v]});
  std::vector<int> filled;
  std::vector<HourglassWeb::Edge> edges;
  const auto tris = p.triangles();
  if (s >= 3 && static_cast<int>(tris.size()) != s - 2) {
    throw InvalidInput("polygon is not fully triangulated");
  }
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const int f = s + static_cast<int>(t);
    filled.push_back(f);
    const auto [a, b, c] = tris[t];
    // Corner -> clockwise arc across the opposite side.
    const std::array<std::pair<int, std::vector<int>>, 3> corners{{
        {a, arc(b, c, s)},
        {b, arc(c, a, s)},
        {c, arc(a, b, s)},
    }};
    for (const auto& [corner, region] : corners) {
      const int mult = chord_weight_within(p, region);
      if (mult > 0) edges.push_back({corner, f, mult});
    }
  }
  return HourglassWeb(p.k, std::move(claws), std::move(filled), std::move(edges));
}

HourglassWeb web_from_matching(const NoncrossingMatching& m, FanApex apex) {
  return web_from_polygon(triangulate(dissect(m), apex));
}

HourglassWeb web_from_tableau(const TwoColumnTableau& t, FanApex apex) {
  return web_from_matching(matching_from_tableau(t), apex);
}

std::optional<std::vector<int>> find_cycle(const HourglassWeb& w) {
  const auto idx = index_vertices(w);
  const auto verts = w.internal_vertices();
  UnionFind uf(static_cast<int>(verts.size()));
  std::vector<std::vector<int>> adj(verts.size());
  for (const auto& e : w.edges()) {
    const int a = idx.at(e.u);
    const int b = idx.at(e.v);
    if (!uf.unite(a, b)) {
      // Path b -> a in the forest so far closes the cycle with edge (a, b).
      std::vector<int> prev(verts.size(), -1);
      std::queue<int> q;
      q.push(b);
      prev[b] = b;
      while (!q.empty()) {
        const int x = q.front();
        q.pop();
        if (x == a) break;
        for (int y : adj[x]) {
          if (prev[y] == -1) {
            prev[y] = x;
            q.push(y);
          }
        }
      }
      std::vector<int> cycle;
      for (int x = a; x != b; x = prev[x]) cycle.push_back(verts[x]);
      cycle.push_back(verts[b]);
      return cycle;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return std::nullopt;
}

bool is_forest(const HourglassWeb& w) { return !find_cycle(w).has_value(); }

int components(const HourglassWeb& w) {
  const auto idx = index_vertices(w);
  UnionFind uf(static_cast<int>(idx.size()));
  int count = static_cast<int>(idx.size());
  for (const auto& e : w.edges()) {
    if (uf.unite(idx.at(e.u), idx.at(e.v))) --count;
  }
  return count;
}

bool is_tree(const HourglassWeb& w) { return is_forest(w) && components(w) == 1; }

std::vector<std::vector<int>> claw_sets(const HourglassWeb& w) {
  std::vector<std::vector<int>> out;
  for (const auto& c : w.claws()) out.push_back(c.boundary);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

std::vector<int> breaks(const HourglassWeb& w) {
  const int n = w.boundary_size();
  std::vector<int> owner(static_cast<std::size_t>(n) + 1);
  for (std::size_t c = 0; c < w.claws().size(); ++c) {
    for (int b : w.claws()[c].boundary) owner[b] = static_cast<int>(c);
  }
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (owner[j] != owner[wrap(j + 1, n)]) out.push_back(j);
  }
  return out;
}

int first_claw(const HourglassWeb& w) {
  const int n = w.boundary_size();
  const int c1 = w.claw_of(1);
  if (w.claw_of(n) != c1) return c1;
  return w.claw_of(wrap(w.claws()[c1].boundary.back() + 1, n));
}

std::vector<int> claws_from_first(const HourglassWeb& w) {
  const int n = w.boundary_size();
  std::vector<int> out{first_claw(w)};
  while (out.size() < w.claws().size()) {
    out.push_back(w.claw_of(wrap(w.claws()[out.back()].boundary.back() + 1, n)));
  }
  return out;
}

HourglassWeb rotate(const HourglassWeb& w, int steps) {
  const int n = w.boundary_size();
  auto claws = w.claws();
  for (auto& c : claws) {
    for (int& b : c.boundary) b = wrap(b + steps, n);
  }
  return HourglassWeb(w.k(), std::move(claws), w.filled(), w.edges());
}

HourglassWeb reflect(const HourglassWeb& w) {
  const int n = w.boundary_size();
  auto claws = w.claws();
  for (auto& c : claws) {
    for (int& b : c.boundary) b = n + 1 - b;
    std::reverse(c.boundary.begin(), c.boundary.end());
  }
  return HourglassWeb(w.k(), std::move(claws), w.filled(), w.edges());
}

std::vector<int> transform_breaks(const std::vector<int>& brk, int k, int rotation, bool reflected) {
  const int n = 2 * k;
  std::vector<int> out;
  out.reserve(brk.size());
  for (int j : brk) {
    // Arc (j, j+1) maps to arc (n-j, n-j+1) under i -> n+1-i.
    const int r = reflected ? wrap(n - j, n) : j;
    out.push_back(wrap(r + rotation, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DihedralOrbit dihedral_orbit(const HourglassWeb& w) {
  if (!is_forest(w)) throw NonForestWeb("dihedral orbits are only canonicalised for forest webs");
  const auto brk = breaks(w);
  std::set<std::vector<int>> orbit;
  for (int reflected = 0; reflected < 2; ++reflected) {
    for (int t = 0; t < w.boundary_size(); ++t) orbit.insert(transform_breaks(brk, w.k(), t, reflected != 0));
  }
  return {*orbit.begin(), static_cast<int>(orbit.size())};
}

}  // namespace springweb
