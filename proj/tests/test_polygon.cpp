#include <doctest.h>

#include <algorithm>
#include <set>

#include "tropsev/linalg.hpp"
#include "tropsev/polygon.hpp"
#include "tropsev/prng.hpp"

using namespace tropsev;

namespace {

LatticePolygon unit_triangle() { return LatticePolygon({{0, 0}, {1, 0}, {0, 1}}); }

LatticePolygon scaled_triangle(std::int64_t d) {
  return LatticePolygon({{0, 0}, {d, 0}, {0, d}});
}

LatticePolygon square(std::int64_t a) {
  return LatticePolygon({{0, 0}, {a, 0}, {a, a}, {0, a}});
}

std::multiset<Vec2i> normal_multiset(const LatticePolygon& p) {
  std::multiset<Vec2i> out;
  for (const auto& s : p.sides()) out.insert(s.primitive_outer_normal);
  return out;
}

// Slice-based h-transversality: every nonempty integer-height slice is a
// lattice interval.
bool h_transverse_by_slices(const LatticePolygon& p) {
  std::int64_t ymin = p.vertices()[0].y, ymax = ymin;
  for (auto v : p.vertices()) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (std::int64_t y = ymin; y <= ymax; ++y) {
    auto iv = slice_interval(p, y);
    if (!iv) continue;
    if (!is_integer(iv->first) || !is_integer(iv->second)) return false;
  }
  return true;
}

// Random convex lattice polygon: convex hull of random points.
LatticePolygon random_polygon(Prng& rng) {
  while (true) {
    std::vector<Vec2i> pts;
    int n = static_cast<int>(rng.range(3, 7));
    for (int i = 0; i < n; ++i) pts.push_back({rng.range(-5, 5), rng.range(-5, 5)});
    // convex hull (monotone chain)
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [](Vec2i a, Vec2i b) { return a == b; }),
              pts.end());
    if (pts.size() < 3) continue;
    auto cross = [](Vec2i o, Vec2i a, Vec2i b) { return det(a - o, b - o); };
    std::vector<Vec2i> hull;
    for (auto p : pts) {
      while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
        hull.pop_back();
      hull.push_back(p);
    }
    std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
      while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() < 3) continue;
    return LatticePolygon(hull);
  }
}

}  // namespace

TEST_CASE("sides of basic polygons") {
  auto t = unit_triangle();
  auto ss = t.sides();
  REQUIRE(ss.size() == 3);
  for (const auto& s : ss) CHECK(s.lattice_length == 1);
  CHECK(normal_multiset(t) == std::multiset<Vec2i>{{0, -1}, {1, 1}, {-1, 0}});

  auto k33 = kite(3, 3);
  CHECK(normal_multiset(k33) ==
        std::multiset<Vec2i>{{-1, -3}, {1, -3}, {1, 3}, {-1, 3}});
  for (const auto& s : k33.sides()) CHECK(s.lattice_length == 1);

  for (const auto& s : square(2).sides()) CHECK(s.lattice_length == 2);
}

TEST_CASE("side invariants") {
  for (auto& p : {unit_triangle(), kite(1, 2), kite(3, 3), square(2), scaled_triangle(3)}) {
    for (const auto& s : p.sides()) {
      CHECK(lattice_length(s.primitive_direction) == 1);
      CHECK(s.head - s.tail == s.lattice_length * s.primitive_direction);
      CHECK(dot(s.primitive_direction, s.primitive_outer_normal) == 0);
      // outwardness: every other vertex is strictly on the inner side
      for (auto v : p.vertices()) {
        CHECK(dot(v - s.tail, s.primitive_outer_normal) <= 0);
      }
    }
  }
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}}), Error);
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), Error);  // collinear triple
  CHECK_THROWS_AS(LatticePolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), Error);  // self-crossing
}

TEST_CASE("canonical vertex order") {
  LatticePolygon a({{0, 0}, {1, 0}, {0, 1}});
  LatticePolygon b({{1, 0}, {0, 1}, {0, 0}});
  LatticePolygon c({{0, 1}, {1, 0}, {0, 0}});  // clockwise input
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.vertices()[0] == Vec2i{0, 0});
}

TEST_CASE("h-transversality") {
  CHECK(kite(1, 2).is_h_transverse());
  CHECK(unit_triangle().is_h_transverse());
  CHECK_FALSE(LatticePolygon({{0, 1}, {1, -1}, {6, -1}}).is_h_transverse());

  // definition equivalence on random polygons
  Prng rng(2024);
  for (int i = 0; i < 200; ++i) {
    auto p = random_polygon(rng);
    CHECK(p.is_h_transverse() == h_transverse_by_slices(p));
  }
}

TEST_CASE("h-transverse coordinates") {
  // no choice of coordinates works for this triangle
  LatticePolygon bad({{0, 1}, {1, -1}, {6, -1}});
  CHECK_FALSE(bad.h_transverse_coordinates().has_value());

  // identity-like answer for an already h-transverse polygon
  auto u = kite(1, 2).h_transverse_coordinates();
  REQUIRE(u.has_value());
  CHECK(kite(1, 2).transformed(*u).is_h_transverse());

  // a sheared triangle becomes h-transverse again
  LatticePolygon sheared({{0, 0}, {2, 3}, {0, 1}});
  CHECK_FALSE(sheared.is_h_transverse());
  auto v = sheared.h_transverse_coordinates();
  REQUIRE(v.has_value());
  CHECK((v->determinant() == 1 || v->determinant() == -1));
  CHECK(sheared.transformed(*v).is_h_transverse());
}

TEST_CASE("width") {
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t kp = k; kp <= 6; ++kp) CHECK(kite(k, kp).width() == k + kp);
  CHECK(unit_triangle().width() == 1);
  for (std::int64_t d = 1; d <= 5; ++d) CHECK(scaled_triangle(d).width() == d);
  CHECK_THROWS_AS(LatticePolygon({{0, 1}, {1, -1}, {6, -1}}).width(), Error);
}

TEST_CASE("width is invariant under horizontal-preserving unimodular maps") {
  Prng rng(77);
  for (int i = 0; i < 100; ++i) {
    auto p = random_polygon(rng);
    if (!p.is_h_transverse()) continue;
    Mat2i u;
    u.r0 = {rng.next() % 2 ? 1 : -1, rng.range(-3, 3)};
    u.r1 = {0, rng.next() % 2 ? 1 : -1};
    CHECK(p.transformed(u).width() == p.width());
  }
}

TEST_CASE("height") {
  CHECK(kite(1, 2).height() == 2);
  CHECK(kite(3, 3).height() == 2);
  CHECK(unit_triangle().height() == 1);
  CHECK(square(2).height() == 2);
}

TEST_CASE("interior lattice points") {
  CHECK(unit_triangle().interior_lattice_points().empty());
  auto c = scaled_triangle(3).interior_lattice_points();
  REQUIRE(c.size() == 1);
  CHECK(c[0] == Vec2i{1, 1});
  auto k = kite(3, 3).interior_lattice_points();
  std::set<Vec2i> got(k.begin(), k.end());
  CHECK(got == std::set<Vec2i>{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
}

TEST_CASE("profiles") {
  auto t3 = scaled_triangle(3);
  auto d0 = trivial_profile(t3);
  REQUIRE(d0.tangencies.size() == 3);
  for (const auto& side : d0.tangencies) CHECK(side == std::vector<std::int64_t>{1, 1, 1});
  CHECK(profile_matches(t3, d0));
  CHECK(d0.total_points() == 9);

  auto dk = trivial_profile(kite(3, 3));
  CHECK(dk.total_points() == 4);

  CHECK(profile_valid_for_theorem(t3, d0));
  // order-3 tangency on a horizontal side is allowed
  TangencyProfile dh = d0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (t3.sides()[i].is_horizontal()) dh.tangencies[i] = {3};
  }
  CHECK(profile_valid_for_theorem(t3, dh));
  // order-2 tangency on a non-horizontal side is not
  TangencyProfile dbad = d0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!t3.sides()[i].is_horizontal()) {
      dbad.tangencies[i] = {2, 1};
      break;
    }
  }
  CHECK_FALSE(profile_valid_for_theorem(t3, dbad));
}

TEST_CASE("dual degree") {
  auto t = unit_triangle();
  auto deg = dual_degree(t, trivial_profile(t));
  CHECK(std::multiset<Vec2i>(deg.begin(), deg.end()) ==
        std::multiset<Vec2i>{{0, -1}, {1, 1}, {-1, 0}});

  auto t3 = scaled_triangle(3);
  auto deg3 = dual_degree(t3, trivial_profile(t3));
  CHECK(deg3.size() == 9);

  auto k = kite(3, 3);
  auto degk = dual_degree(k, trivial_profile(k));
  CHECK(std::multiset<Vec2i>(degk.begin(), degk.end()) ==
        std::multiset<Vec2i>{{-1, -3}, {1, -3}, {1, 3}, {-1, 3}});

  // zero-sum property on random polygons
  Prng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto p = random_polygon(rng);
    Vec2i sum{0, 0};
    for (auto s : dual_degree(p, trivial_profile(p))) sum = sum + s;
    CHECK(sum == Vec2i{0, 0});
  }
}

TEST_CASE("severi dimension") {
  auto t3 = scaled_triangle(3);
  CHECK(severi_dimension(trivial_profile(t3), 0) == 8);
  CHECK(severi_dimension(trivial_profile(t3), 1) == trivial_profile(t3).total_points());
  CHECK(severi_dimension(trivial_profile(kite(3, 3)), 1) == 4);

  // -L.K + g - 1 form for the trivial profile
  Prng rng(6);
  for (int i = 0; i < 50; ++i) {
    auto p = random_polygon(rng);
    std::int64_t boundary = 0;
    for (const auto& s : p.sides()) boundary += s.lattice_length;
    CHECK(severi_dimension(trivial_profile(p), 2) == boundary + 1);
  }
}

TEST_CASE("normal sublattice index") {
  CHECK(kite(1, 2).normal_sublattice_index() == 1);
  CHECK(unit_triangle().normal_sublattice_index() == 1);
  // gcd closed form for kites against the generic computation
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (std::int64_t kp = std::max<std::int64_t>(k, 1); kp <= 6; ++kp) {
      std::int64_t expect;
      if (k == 0) {
        // degenerate hull: triangle with normals (-1,0),(1,kp),(1,-kp)
        expect = sublattice_index({{-1, 0}, {1, kp}, {1, -kp}});
      } else {
        expect = gcd64(k + kp, kp - k);
      }
      CHECK(kite(k, kp).normal_sublattice_index() == expect);
    }
  }
  CHECK(kite(3, 3).normal_sublattice_index() == 6);
  CHECK(kite(3, 3).normal_sublattice_index() != 1);
}

TEST_CASE("monodromy threshold") {
  CHECK(unit_triangle().monodromy_threshold() == 10);
  CHECK(kite(3, 3).monodromy_threshold() == 50);
  CHECK(square(1).monodromy_threshold() == 5);
  CHECK(square(7).monodromy_threshold() == 5);
}

TEST_CASE("hypothesis report") {
  auto k33 = kite(3, 3);
  auto d = trivial_profile(k33);

  auto r0 = hypothesis_report(k33, d, 1, 0);
  CHECK(r0.main_theorem);
  CHECK(r0.zariski);
  CHECK_FALSE(r0.monodromy);

  auto r3 = hypothesis_report(k33, d, 1, 3);
  CHECK_FALSE(r3.main_theorem);  // width 6, need char > 3

  auto r5 = hypothesis_report(k33, d, 1, 5);
  CHECK(r5.main_theorem);
  CHECK_FALSE(r5.zariski);  // char must exceed width 6

  auto t = unit_triangle();
  auto rt = hypothesis_report(t, trivial_profile(t), 0, 0);
  CHECK(rt.main_theorem);
  CHECK(rt.zariski);
  CHECK_FALSE(rt.monodromy);  // sides shorter than l = 10
  CHECK(rt.normal_index == 1);

  CHECK_THROWS_AS(hypothesis_report(k33, d, 1, 4), Error);  // 4 is not prime
}

TEST_CASE("kite constructor") {
  auto k12 = kite(1, 2);
  CHECK(k12.vertices().size() == 4);
  CHECK(normal_multiset(k12) == std::multiset<Vec2i>{{-1, -1}, {1, -2}, {1, 2}, {-1, 1}});

  auto k01 = kite(0, 1);
  CHECK(k01.vertices().size() == 3);  // degenerate hull drops (0,0)
  CHECK(k01.is_h_transverse());
  CHECK(k01.width() == 1);

  CHECK_THROWS_AS(kite(-1, 2), Error);
  CHECK_THROWS_AS(kite(2, 1), Error);
  CHECK_THROWS_AS(kite(0, 0), Error);
}

TEST_CASE("slice interval") {
  auto k = kite(3, 3);
  CHECK(slice_length(k, 0) == 6);
  CHECK(slice_length(k, 1) == 0);   // single point
  CHECK(slice_length(k, 2) == 0);   // empty
  auto iv = slice_interval(k, 0);
  REQUIRE(iv.has_value());
  CHECK(iv->first == Rat(0));
  CHECK(iv->second == Rat(6));
}
