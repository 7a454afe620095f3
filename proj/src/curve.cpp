#include "tropsev/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tropsev {

int TropicalCurve::add_vertex(int weight, Vec2q pos) {
  int id = next_id_++;
  vertices_.push_back({id, weight, std::move(pos)});
  return id;
}

int TropicalCurve::add_edge(int v, int w, Rat length, Vec2i slope) {
  vertex(v);
  vertex(w);
  int id = next_id_++;
  edges_.push_back({id, v, w, std::move(length), slope});
  return id;
}

int TropicalCurve::add_leg(int v, Vec2i slope) {
  vertex(v);
  int id = next_id_++;
  legs_.push_back({id, v, slope});
  return id;
}

std::size_t TropicalCurve::vindex(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  fail("UnknownId", "no vertex with id " + std::to_string(id));
}

bool TropicalCurve::has_vertex(int id) const {
  for (const auto& v : vertices_)
    if (v.id == id) return true;
  return false;
}

TropVertex& TropicalCurve::vertex(int id) { return vertices_[vindex(id)]; }
const TropVertex& TropicalCurve::vertex(int id) const { return vertices_[vindex(id)]; }

TropEdge& TropicalCurve::edge(int id) {
  for (auto& e : edges_)
    if (e.id == id) return e;
  fail("UnknownId", "no edge with id " + std::to_string(id));
}
const TropEdge& TropicalCurve::edge(int id) const {
  return const_cast<TropicalCurve*>(this)->edge(id);
}

TropLeg& TropicalCurve::leg(int id) {
  for (auto& l : legs_)
    if (l.id == id) return l;
  fail("UnknownId", "no leg with id " + std::to_string(id));
}
const TropLeg& TropicalCurve::leg(int id) const {
  return const_cast<TropicalCurve*>(this)->leg(id);
}

std::vector<StarGerm> TropicalCurve::star(int vertex_id) const {
  std::vector<StarGerm> out;
  for (const auto& e : edges_) {
    if (e.v == vertex_id) out.push_back({e.slope, false, e.id});
    if (e.w == vertex_id) out.push_back({-e.slope, false, e.id});
  }
  for (const auto& l : legs_)
    if (l.v == vertex_id) out.push_back({l.slope, true, l.id});
  return out;
}

int TropicalCurve::valence(int vertex_id) const {
  return static_cast<int>(star(vertex_id).size());
}

int TropicalCurve::b0() const {
  std::map<int, int> comp;
  for (const auto& v : vertices_) comp[v.id] = v.id;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& e : edges_) comp[find(e.v)] = find(e.w);
  std::set<int> roots;
  for (const auto& v : vertices_) roots.insert(find(v.id));
  return static_cast<int>(roots.size());
}

int TropicalCurve::b1() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + b0();
}

std::int64_t TropicalCurve::genus() const {
  std::int64_t w = 0;
  for (const auto& v : vertices_) w += v.weight;
  return 1 - (b0() - b1()) + w;
}

std::optional<int> TropicalCurve::balancing_violation() const {
  for (const auto& v : vertices_) {
    Vec2i sum{0, 0};
    for (const auto& g : star(v.id)) sum = sum + g.slope;
    if (!sum.is_zero()) return v.id;
  }
  return std::nullopt;
}

bool TropicalCurve::is_stable() const {
  for (const auto& v : vertices_) {
    int val = valence(v.id);
    if (v.weight == 0 && val < 3) return false;
    if (v.weight == 1 && val < 1) return false;
  }
  return true;
}

bool TropicalCurve::is_immersed() const {
  for (const auto& e : edges_)
    if (e.is_contracted()) return false;
  for (const auto& v : vertices_) {
    auto germs = star(v.id);
    for (std::size_t i = 0; i < germs.size(); ++i) {
      if (germs[i].slope.is_zero()) continue;
      for (std::size_t j = i + 1; j < germs.size(); ++j) {
        if (germs[j].slope.is_zero()) continue;
        if (primitive(germs[i].slope) == primitive(germs[j].slope)) return false;
      }
    }
  }
  return true;
}

std::vector<Vec2i> TropicalCurve::degree() const {
  std::vector<Vec2i> out;
  for (const auto& l : legs_)
    if (!l.is_contracted()) out.push_back(l.slope);
  std::sort(out.begin(), out.end());
  return out;
}

bool TropicalCurve::is_dual_to(const LatticePolygon& p, const TangencyProfile& d) const {
  return degree() == dual_degree(p, d);
}

std::vector<Vec2q> TropicalCurve::evaluate() const {
  std::vector<Vec2q> out;
  for (const auto& l : legs_)
    if (l.is_contracted()) out.push_back(vertex(l.v).pos);
  return out;
}

std::vector<int> TropicalCurve::contracted_leg_ids() const {
  std::vector<int> out;
  for (const auto& l : legs_)
    if (l.is_contracted()) out.push_back(l.id);
  return out;
}

void TropicalCurve::validate() const {
  for (const auto& e : edges_) {
    require(e.length > 0, "InvalidCurve", "edge length must be positive");
    if (e.is_loop()) {
      require(e.is_contracted(), "InvalidCurve", "loops must have slope zero");
      continue;
    }
    Vec2q delta = vertex(e.w).pos - vertex(e.v).pos;
    Vec2q expect = {e.length * Rat(static_cast<long>(e.slope.x)),
                    e.length * Rat(static_cast<long>(e.slope.y))};
    require(delta == expect, "InvalidCurve",
            "edge " + std::to_string(e.id) + " violates position compatibility");
  }
  auto bad = balancing_violation();
  require(!bad, "InvalidCurve",
          "balancing fails at vertex " + std::to_string(bad ? *bad : -1));
}

void TropicalCurve::remove_leg(int leg_id) {
  leg(leg_id);
  legs_.erase(std::remove_if(legs_.begin(), legs_.end(),
                             [&](const TropLeg& l) { return l.id == leg_id; }),
              legs_.end());
}

void TropicalCurve::suppress_two_valent(int vertex_id) {
  const auto& v = vertex(vertex_id);
  require(v.weight == 0, "InvalidSurgery", "can only suppress weightless vertices");
  auto germs = star(vertex_id);
  require(germs.size() == 2 && !germs[0].is_leg && !germs[1].is_leg, "InvalidSurgery",
          "vertex is not 2-valent with two edges");
  require(germs[0].slope == -germs[1].slope, "InvalidSurgery",
          "germs at a removable 2-valent vertex must be opposite");
  require(germs[0].id != germs[1].id, "InvalidSurgery", "cannot suppress a loop vertex");
  TropEdge a = edge(germs[0].id), b = edge(germs[1].id);
  auto far_end = [&](const TropEdge& e) { return e.v == vertex_id ? e.w : e.v; };
  auto slope_away = [&](const TropEdge& e) {
    return e.v == vertex_id ? e.slope : -e.slope;
  };
  TropEdge merged;
  merged.id = std::min(a.id, b.id);
  merged.v = far_end(a);
  merged.w = far_end(b);
  merged.length = a.length + b.length;
  // oriented from a's far end, through v, out along b
  merged.slope = slope_away(b);
  int ida = a.id, idb = b.id;
  edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                              [&](const TropEdge& e) { return e.id == ida || e.id == idb; }),
               edges_.end());
  edges_.push_back(merged);
  vertices_.erase(std::remove_if(vertices_.begin(), vertices_.end(),
                                 [&](const TropVertex& x) { return x.id == vertex_id; }),
                  vertices_.end());
}

void TropicalCurve::contract_edges(const std::vector<int>& edge_ids) {
  std::set<int> contracted(edge_ids.begin(), edge_ids.end());
  std::map<int, int> parent;
  for (const auto& v : vertices_) parent[v.id] = v.id;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Union endpoint classes; count independent cycles of the contracted
  // subgraph so the merged vertex can absorb them as weight.
  std::map<int, int> class_cycles;
  for (const auto& e : edges_) {
    if (!contracted.count(e.id)) continue;
    require(vertex(e.v).pos == vertex(e.w).pos, "InvalidSurgery",
            "contract_edges expects coincident endpoint positions");
    int a = find(e.v), b = find(e.w);
    if (a == b) {
      class_cycles[a] += 1;
    } else {
      int keep = std::min(a, b), drop = std::max(a, b);
      parent[drop] = keep;
      class_cycles[keep] += class_cycles[drop];
      class_cycles.erase(drop);
    }
  }
  std::map<int, int> class_weight;
  for (const auto& v : vertices_) class_weight[find(v.id)] += v.weight;
  std::vector<TropVertex> new_vertices;
  for (const auto& v : vertices_) {
    if (find(v.id) != v.id) continue;
    TropVertex nv = v;
    nv.weight = class_weight[v.id] + class_cycles[v.id];
    new_vertices.push_back(nv);
  }
  vertices_ = std::move(new_vertices);
  std::vector<TropEdge> new_edges;
  for (const auto& e : edges_) {
    if (contracted.count(e.id)) continue;
    TropEdge ne = e;
    ne.v = find(ne.v);
    ne.w = find(ne.w);
    new_edges.push_back(ne);
  }
  edges_ = std::move(new_edges);
  for (auto& l : legs_) l.v = find(l.v);
}

bool operator==(const TropicalCurve& a, const TropicalCurve& b) {
  auto key = [](const TropicalCurve& c) {
    std::ostringstream os;
    for (const auto& v : c.vertices_)
      os << "v" << v.id << ":" << v.weight << ":" << rat_to_string(v.pos.x) << ","
         << rat_to_string(v.pos.y) << ";";
    for (const auto& e : c.edges_)
      os << "e" << e.id << ":" << e.v << ":" << e.w << ":" << rat_to_string(e.length)
         << ":" << e.slope.x << "," << e.slope.y << ";";
    for (const auto& l : c.legs_)
      os << "l" << l.id << ":" << l.v << ":" << l.slope.x << "," << l.slope.y << ";";
    return os.str();
  };
  return key(a) == key(b);
}

std::int64_t multiplicity(const TropicalCurve& c, int edge_id) {
  const auto& e = c.edge(edge_id);
  require(!e.is_contracted(), "ContractedEdge",
          "multiplicity undefined for contracted edges");
  return lattice_length(e.slope);
}

std::int64_t leg_multiplicity(const TropicalCurve& c, int leg_id) {
  const auto& l = c.leg(leg_id);
  require(!l.is_contracted(), "ContractedEdge",
          "multiplicity undefined for contracted legs");
  return lattice_length(l.slope);
}

CombinatorialType CombinatorialType::of(const TropicalCurve& c) {
  CombinatorialType t;
  for (const auto& v : c.vertices()) t.vertices.push_back({v.id, v.weight});
  for (const auto& e : c.edges()) t.edges.push_back({e.id, e.v, e.w, e.slope});
  for (const auto& l : c.legs()) t.legs.push_back({l.id, l.v, l.slope});
  return t;
}

std::string CombinatorialType::signature() const {
  // Sound isomorphism invariant: vertex records carry (weight, sorted star
  // slopes); edges are recorded between vertex records. Distinct signatures
  // imply non-isomorphic types.
  std::map<int, std::vector<std::string>> starinv;
  auto slope_str = [](Vec2i s) {
    return std::to_string(s.x) + "," + std::to_string(s.y);
  };
  std::map<int, int> weight_of;
  for (const auto& v : vertices) {
    starinv[v.id] = {};
    weight_of[v.id] = v.weight;
  }
  for (const auto& e : edges) {
    starinv[e.v].push_back("e" + slope_str(e.slope));
    starinv[e.w].push_back("e" + slope_str(-e.slope));
  }
  for (const auto& l : legs) starinv[l.v].push_back("L" + slope_str(l.slope));
  std::map<int, std::string> local;
  for (const auto& v : vertices) {
    auto inv = starinv[v.id];
    std::sort(inv.begin(), inv.end());
    std::string s = "w" + std::to_string(v.weight);
    for (const auto& x : inv) s += "|" + x;
    local[v.id] = s;
  }
  std::ostringstream os;
  std::vector<std::string> vrec, erec, lrec;
  for (const auto& v : vertices) vrec.push_back(local[v.id]);
  for (const auto& e : edges) {
    const std::string &a = local.at(e.v), &b = local.at(e.w);
    std::string s = a <= b ? a + ">" + slope_str(e.slope) + ">" + b
                           : b + ">" + slope_str(-e.slope) + ">" + a;
    erec.push_back(s);
  }
  int idx = 0;
  for (const auto& l : legs)
    lrec.push_back(std::to_string(idx++) + "@" + local.at(l.v) + ">" + slope_str(l.slope));
  std::sort(vrec.begin(), vrec.end());
  std::sort(erec.begin(), erec.end());
  for (const auto& s : vrec) os << "V{" << s << "}";
  for (const auto& s : erec) os << "E{" << s << "}";
  for (const auto& s : lrec) os << "L{" << s << "}";
  return os.str();
}

bool operator==(const CombinatorialType& a, const CombinatorialType& b) {
  auto key = [](const CombinatorialType& t) {
    std::ostringstream os;
    for (const auto& v : t.vertices) os << "v" << v.id << ":" << v.weight << ";";
    for (const auto& e : t.edges)
      os << "e" << e.id << ":" << e.v << ":" << e.w << ":" << e.slope.x << ","
         << e.slope.y << ";";
    for (const auto& l : t.legs)
      os << "l" << l.id << ":" << l.v << ":" << l.slope.x << "," << l.slope.y << ";";
    return os.str();
  };
  return key(a) == key(b);
}

}  // namespace tropsev
