#ifndef TROPSEV_CURVE_HPP
#define TROPSEV_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropsev/error.hpp"
#include "tropsev/polygon.hpp"
#include "tropsev/rat.hpp"
#include "tropsev/vec.hpp"

namespace tropsev {

struct TropVertex {
  int id = -1;
  int weight = 0;
  Vec2q pos;
};

/// Bounded edge; slope is oriented from v to w, so the reverse orientation
/// carries -slope. Loops (v == w) must be contracted (slope zero).
struct TropEdge {
  int id = -1;
  int v = -1;
  int w = -1;
  Rat length;
  Vec2i slope;

  bool is_loop() const { return v == w; }
  bool is_contracted() const { return slope.is_zero(); }
};

/// Half-infinite edge, oriented away from its vertex. Contracted legs
/// (slope zero) are the marked points; their order in the leg list is the
/// marking order.
struct TropLeg {
  int id = -1;
  int v = -1;
  Vec2i slope;

  bool is_contracted() const { return slope.is_zero(); }
};

/// One germ of the star of a vertex: an outgoing orientation of an incident
/// edge or leg.
struct StarGerm {
  Vec2i slope;
  bool is_leg = false;
  int id = -1;  // edge or leg id
};

/// Parametrized tropical curve: weighted graph, positive rational edge
/// lengths, integral slopes, rational vertex images. validate() enforces
/// balancing, edge-position compatibility and the loop convention.
class TropicalCurve {
 public:
  int add_vertex(int weight, Vec2q pos);
  int add_edge(int v, int w, Rat length, Vec2i slope);
  int add_leg(int v, Vec2i slope);

  const std::vector<TropVertex>& vertices() const { return vertices_; }
  const std::vector<TropEdge>& edges() const { return edges_; }
  const std::vector<TropLeg>& legs() const { return legs_; }

  TropVertex& vertex(int id);
  const TropVertex& vertex(int id) const;
  TropEdge& edge(int id);
  const TropEdge& edge(int id) const;
  TropLeg& leg(int id);
  const TropLeg& leg(int id) const;
  bool has_vertex(int id) const;

  std::vector<StarGerm> star(int vertex_id) const;
  int valence(int vertex_id) const;

  int b0() const;
  int b1() const;
  std::int64_t genus() const;

  /// First violating vertex id when unbalanced.
  std::optional<int> balancing_violation() const;
  bool is_balanced() const { return !balancing_violation().has_value(); }

  bool is_stable() const;

  /// Locally injective away from contracted legs: no contracted bounded
  /// edges, and no two germs at a vertex with positively proportional
  /// nonzero slopes.
  bool is_immersed() const;

  /// Multiset of non-contracted leg slopes, sorted.
  std::vector<Vec2i> degree() const;
  bool is_dual_to(const LatticePolygon& p, const TangencyProfile& d) const;

  /// Positions of the contracted legs, in leg order.
  std::vector<Vec2q> evaluate() const;
  std::vector<int> contracted_leg_ids() const;

  /// Throws on any violated structural invariant.
  void validate() const;

  // --- surgery (used by the move engine; each returns fresh ids where
  //     applicable and keeps all other ids stable) ---

  void remove_leg(int leg_id);

  /// Merges the two edges at a weightless 2-valent vertex whose germs are
  /// s and -s; keeps the lower-id edge, adds lengths.
  void suppress_two_valent(int vertex_id);

  /// Contracts the given zero-length edges; merged vertex takes the summed
  /// weight plus the first Betti number of the contracted subgraph. The id
  /// of the surviving vertex per merged class is the smallest involved.
  void contract_edges(const std::vector<int>& edge_ids);

  int fresh_id() { return next_id_++; }

  friend bool operator==(const TropicalCurve& a, const TropicalCurve& b);

 private:
  std::vector<TropVertex> vertices_;
  std::vector<TropEdge> edges_;
  std::vector<TropLeg> legs_;
  int next_id_ = 0;

  std::size_t vindex(int id) const;
};

/// Lattice length of the slope of e; errors on contracted edges.
std::int64_t multiplicity(const TropicalCurve& c, int edge_id);
std::int64_t leg_multiplicity(const TropicalCurve& c, int leg_id);

/// The curve minus lengths and positions.
struct CombinatorialType {
  struct V {
    int id;
    int weight;
  };
  struct E {
    int id;
    int v, w;
    Vec2i slope;
  };
  struct L {
    int id;
    int v;
    Vec2i slope;
  };
  std::vector<V> vertices;
  std::vector<E> edges;
  std::vector<L> legs;

  static CombinatorialType of(const TropicalCurve& c);

  /// Type invariant: equal strings are produced by isomorphic types in all
  /// cases arising here; unequal strings always mean non-isomorphic.
  std::string signature() const;

  friend bool operator==(const CombinatorialType& a, const CombinatorialType& b);
};

}  // namespace tropsev

#endif
