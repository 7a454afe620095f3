#ifndef TROPSEV_POLYGON_HPP
#define TROPSEV_POLYGON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropsev/error.hpp"
#include "tropsev/rat.hpp"
#include "tropsev/vec.hpp"

namespace tropsev {

/// One side of a lattice polygon, with its primitive data.
struct Side {
  Vec2i tail;
  Vec2i head;
  Vec2i primitive_direction;    // head - tail = lattice_length * primitive_direction
  Vec2i primitive_outer_normal; // perpendicular, pointing out of the polygon
  std::int64_t lattice_length = 0;

  bool is_horizontal() const { return primitive_direction.y == 0; }
};

/// Strictly convex lattice polygon. Vertices are canonicalized on
/// construction to counterclockwise order starting from the
/// lexicographically smallest vertex, so equality is structural equality.
class LatticePolygon {
 public:
  /// Accepts the vertex cycle in either orientation; rejects non-convex
  /// input, repeated vertices, collinear triples and zero area.
  explicit LatticePolygon(std::vector<Vec2i> vertices);

  const std::vector<Vec2i>& vertices() const { return vertices_; }
  std::vector<Side> sides() const;

  bool is_h_transverse() const;

  /// Unimodular U with U * this h-transverse, or nullopt when no choice of
  /// coordinates works. Exhaustive over the (finite) candidate functionals.
  std::optional<Mat2i> h_transverse_coordinates() const;

  /// Maximal lattice length of a horizontal slice. Requires h-transversality.
  std::int64_t width() const;

  /// max y - min y over vertices.
  std::int64_t height() const;

  std::vector<Vec2i> interior_lattice_points() const;

  LatticePolygon transformed(const Mat2i& u) const;

  /// Index [N : N_Delta] of the sublattice spanned by the primitive outer
  /// normals; 0 is the infinity marker (normals of a genuine polygon always
  /// span, so 0 never occurs for valid input).
  std::int64_t normal_sublattice_index() const;

  /// 5 * max over sides of the squared Euclidean length of the primitive
  /// direction.
  std::int64_t monodromy_threshold() const;

  friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<Vec2i> vertices_;  // CCW, starting at lex-smallest
};

/// Kite with parameters k >= 0, k' >= k, k' > 0: convex hull of
/// (0,0), (k,1), (k,-1), (k+k',0). For k = 0 the hull degenerates to a
/// triangle; the constructor re-derives the vertex list from the hull.
LatticePolygon kite(std::int64_t k, std::int64_t kprime);

/// Per-side multisets of positive integers summing to the side lattice
/// lengths (intersection multiplicities with the toric boundary).
struct TangencyProfile {
  std::vector<std::vector<std::int64_t>> tangencies;  // indexed like sides()

  std::int64_t total_points() const;  // |d| = sum of multiset sizes
};

TangencyProfile trivial_profile(const LatticePolygon& p);

/// Validates the profile invariants against the polygon's sides.
bool profile_matches(const LatticePolygon& p, const TangencyProfile& d);

/// True iff every non-horizontal side carries only 1's.
bool profile_valid_for_theorem(const LatticePolygon& p, const TangencyProfile& d);

/// Multiset of leg slopes d_{i,j} * n_i; sums to zero for a valid profile.
std::vector<Vec2i> dual_degree(const LatticePolygon& p, const TangencyProfile& d);

/// |d| + g - 1.
std::int64_t severi_dimension(const TangencyProfile& d, std::int64_t g);

/// Hypothesis check results for the three theorem families, with the names
/// of the violated conditions.
struct HypothesisReport {
  bool main_theorem = false;
  bool zariski = false;
  bool monodromy = false;
  /// Boundary-divisor degree check only; full ampleness over all curves is
  /// not verified, so a passing monodromy report is marked partial.
  bool monodromy_check_partial = true;
  std::int64_t width = 0;
  std::int64_t threshold_l = 0;
  std::int64_t normal_index = 0;
  std::vector<std::string> violations;
};

/// char_k is 0 or a prime; g the target genus. Requires h-transversality.
HypothesisReport hypothesis_report(const LatticePolygon& p, const TangencyProfile& d,
                                   std::int64_t g, std::int64_t char_k);

/// Exact endpoints of the slice {y = level}, or nullopt when empty.
std::optional<std::pair<Rat, Rat>> slice_interval(const LatticePolygon& p,
                                                  std::int64_t level);

/// Lattice length of the slice {y = level} of p; 0 when empty or a point.
std::int64_t slice_length(const LatticePolygon& p, std::int64_t level);

bool is_zero_or_prime(std::int64_t p);

}  // namespace tropsev

#endif
