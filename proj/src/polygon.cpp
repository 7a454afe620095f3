#include "tropsev/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropsev/linalg.hpp"

namespace tropsev {

namespace {

std::int64_t twice_signed_area(const std::vector<Vec2i>& v) {
  std::int64_t a = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2i p = v[i], q = v[(i + 1) % v.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

}  // namespace

LatticePolygon::LatticePolygon(std::vector<Vec2i> vertices) {
  require(vertices.size() >= 3, "NonConvexInput", "need at least 3 vertices");
  std::int64_t area2 = twice_signed_area(vertices);
  require(area2 != 0, "NonConvexInput", "degenerate polygon (zero area)");
  if (area2 < 0) std::reverse(vertices.begin(), vertices.end());

  // Strict convexity: every turn is a strict left turn.
  std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2i a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
    require(det(b - a, c - b) > 0, "NonConvexInput",
            "vertex cycle is not strictly convex");
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (vertices[i] < vertices[start]) start = i;
  std::rotate(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(start),
              vertices.end());
  vertices_ = std::move(vertices);
}

std::vector<Side> LatticePolygon::sides() const {
  std::vector<Side> out;
  std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Side s;
    s.tail = vertices_[i];
    s.head = vertices_[(i + 1) % n];
    Vec2i d = s.head - s.tail;
    s.lattice_length = lattice_length(d);
    s.primitive_direction = primitive(d);
    // CCW orientation: rotating the direction by -90 degrees points outward.
    s.primitive_outer_normal = {s.primitive_direction.y, -s.primitive_direction.x};
    out.push_back(s);
  }
  return out;
}

bool LatticePolygon::is_h_transverse() const {
  for (const auto& s : sides()) {
    std::int64_t dy = s.primitive_direction.y;
    if (dy > 1 || dy < -1) return false;
  }
  return true;
}

std::optional<Mat2i> LatticePolygon::h_transverse_coordinates() const {
  // A functional u works iff |<u, m_i>| <= 1 for every primitive edge
  // direction m_i. Two independent directions pin u to one of nine rational
  // candidates; the rest is filtering.
  auto ss = sides();
  Vec2i m1 = ss[0].primitive_direction;
  Vec2i m2{0, 0};
  for (const auto& s : ss) {
    if (det(m1, s.primitive_direction) != 0) {
      m2 = s.primitive_direction;
      break;
    }
  }
  require(!m2.is_zero(), "NonConvexInput", "edge directions do not span");
  std::int64_t d = det(m1, m2);
  for (std::int64_t s1 = -1; s1 <= 1; ++s1) {
    for (std::int64_t s2 = -1; s2 <= 1; ++s2) {
      // Solve <u,m1> = s1, <u,m2> = s2 over Q; keep integral solutions.
      std::int64_t ux_num = s1 * m2.y - s2 * m1.y;
      std::int64_t uy_num = s2 * m1.x - s1 * m2.x;
      if (ux_num % d != 0 || uy_num % d != 0) continue;
      Vec2i u{ux_num / d, uy_num / d};
      if (u.is_zero() || lattice_length(u) != 1) continue;
      bool ok = true;
      for (const auto& s : ss) {
        std::int64_t v = dot(u, s.primitive_direction);
        if (v > 1 || v < -1) { ok = false; break; }
      }
      if (!ok) continue;
      // Complete u to a unimodular matrix with u as the second row (the new
      // vertical functional).
      std::int64_t a, b;  // a*u.x + b*u.y = 1
      {
        std::int64_t x0 = u.x, y0 = u.y, s = 1, t = 0, sp = 0, tp = 1;
        while (y0 != 0) {
          std::int64_t q = x0 / y0;
          std::int64_t r = x0 - q * y0;
          x0 = y0; y0 = r;
          std::int64_t ns = sp, nt = tp;
          sp = s - q * sp; tp = t - q * tp;
          s = ns; t = nt;
        }
        if (x0 < 0) { x0 = -x0; s = -s; t = -t; }
        a = s; b = t;  // a*u.x + b*u.y = gcd = 1
      }
      // det [[b, -a], [u.x, u.y]] = b*u.y + a*u.x = 1
      Mat2i m;
      m.r0 = {b, -a};
      m.r1 = u;
      return m;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Rat, Rat>> slice_interval(const LatticePolygon& p,
                                                  std::int64_t level) {
  // Exact slice of a convex polygon at height y = level.
  bool any = false;
  Rat lo, hi;
  std::size_t n = p.vertices().size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2i a = p.vertices()[i], b = p.vertices()[(i + 1) % n];
    if (a.y == b.y) {
      if (a.y != level) continue;
      Rat xs[2] = {Rat(static_cast<long>(a.x)), Rat(static_cast<long>(b.x))};
      for (const Rat& x : xs) {
        if (!any) { lo = hi = x; any = true; }
        else { lo = std::min(lo, x); hi = std::max(hi, x); }
      }
      continue;
    }
    std::int64_t ymin = std::min(a.y, b.y), ymax = std::max(a.y, b.y);
    if (level < ymin || level > ymax) continue;
    Rat x = Rat(static_cast<long>(a.x)) +
            Rat(static_cast<long>(level - a.y), 1) *
                rat(b.x - a.x, b.y - a.y);
    if (!any) { lo = hi = x; any = true; }
    else { lo = std::min(lo, x); hi = std::max(hi, x); }
  }
  if (!any) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::int64_t slice_length(const LatticePolygon& p, std::int64_t level) {
  auto iv = slice_interval(p, level);
  if (!iv) return 0;
  Rat len = iv->second - iv->first;
  if (!is_integer(len)) fail("NotHTransverse", "non-integral slice encountered");
  return to_long(len.get_num());
}

std::int64_t LatticePolygon::width() const {
  require(is_h_transverse(), "NotHTransverse", "width needs an h-transverse polygon");
  std::int64_t ymin = vertices_[0].y, ymax = vertices_[0].y;
  for (const auto& v : vertices_) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  std::int64_t w = 0;
  for (std::int64_t y = ymin; y <= ymax; ++y) w = std::max(w, slice_length(*this, y));
  return w;
}

std::int64_t LatticePolygon::height() const {
  std::int64_t ymin = vertices_[0].y, ymax = vertices_[0].y;
  for (const auto& v : vertices_) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  return ymax - ymin;
}

std::vector<Vec2i> LatticePolygon::interior_lattice_points() const {
  std::int64_t xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
  for (const auto& v : vertices_) {
    xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
  }
  auto ss = sides();
  std::vector<Vec2i> out;
  for (std::int64_t y = ymin + 1; y < ymax; ++y) {
    for (std::int64_t x = xmin + 1; x < xmax; ++x) {
      bool inside = true;
      for (const auto& s : ss) {
        if (dot(Vec2i{x, y} - s.tail, s.primitive_outer_normal) >= 0) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back({x, y});
    }
  }
  return out;
}

LatticePolygon LatticePolygon::transformed(const Mat2i& u) const {
  std::vector<Vec2i> vs;
  vs.reserve(vertices_.size());
  for (const auto& v : vertices_) vs.push_back(u.apply(v));
  return LatticePolygon(std::move(vs));
}

std::int64_t LatticePolygon::normal_sublattice_index() const {
  std::vector<Vec2i> normals;
  for (const auto& s : sides()) normals.push_back(s.primitive_outer_normal);
  return sublattice_index(normals);
}

std::int64_t LatticePolygon::monodromy_threshold() const {
  std::int64_t m = 0;
  for (const auto& s : sides()) {
    Vec2i d = s.primitive_direction;
    m = std::max(m, d.x * d.x + d.y * d.y);
  }
  return 5 * m;
}

LatticePolygon kite(std::int64_t k, std::int64_t kprime) {
  require(k >= 0 && kprime >= k && kprime > 0, "InvalidKiteParameters",
          "need k >= 0, k' >= k, k' > 0");
  std::vector<Vec2i> pts = {{0, 0}, {k, -1}, {k + kprime, 0}, {k, 1}};
  if (k == 0) {
    // (0,0) lies on the segment between (0,-1) and (0,1): drop it.
    pts = {{0, -1}, {kprime, 0}, {0, 1}};
  }
  return LatticePolygon(pts);
}

std::int64_t TangencyProfile::total_points() const {
  std::int64_t n = 0;
  for (const auto& side : tangencies) n += static_cast<std::int64_t>(side.size());
  return n;
}

TangencyProfile trivial_profile(const LatticePolygon& p) {
  TangencyProfile d;
  for (const auto& s : p.sides())
    d.tangencies.emplace_back(static_cast<std::size_t>(s.lattice_length), 1);
  return d;
}

bool profile_matches(const LatticePolygon& p, const TangencyProfile& d) {
  auto ss = p.sides();
  if (d.tangencies.size() != ss.size()) return false;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    std::int64_t sum = 0;
    for (auto t : d.tangencies[i]) {
      if (t <= 0) return false;
      sum += t;
    }
    if (sum != ss[i].lattice_length) return false;
  }
  return true;
}

bool profile_valid_for_theorem(const LatticePolygon& p, const TangencyProfile& d) {
  require(p.is_h_transverse(), "NotHTransverse", "hypothesis check needs h-transversality");
  require(profile_matches(p, d), "ProfileMismatch", "profile does not fit the polygon");
  auto ss = p.sides();
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (ss[i].is_horizontal()) continue;
    for (auto t : d.tangencies[i])
      if (t != 1) return false;
  }
  return true;
}

std::vector<Vec2i> dual_degree(const LatticePolygon& p, const TangencyProfile& d) {
  require(profile_matches(p, d), "ProfileMismatch", "profile does not fit the polygon");
  std::vector<Vec2i> slopes;
  auto ss = p.sides();
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (auto t : d.tangencies[i]) slopes.push_back(t * ss[i].primitive_outer_normal);
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

std::int64_t severi_dimension(const TangencyProfile& d, std::int64_t g) {
  return d.total_points() + g - 1;
}

bool is_zero_or_prime(std::int64_t p) {
  if (p == 0) return true;
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

HypothesisReport hypothesis_report(const LatticePolygon& p, const TangencyProfile& d,
                                   std::int64_t g, std::int64_t char_k) {
  require(p.is_h_transverse(), "NotHTransverse", "hypothesis check needs h-transversality");
  require(is_zero_or_prime(char_k), "InvalidCharacteristic", "char must be 0 or prime");
  HypothesisReport r;
  r.width = p.width();
  r.threshold_l = p.monodromy_threshold();
  r.normal_index = p.normal_sublattice_index();

  std::int64_t interior = static_cast<std::int64_t>(p.interior_lattice_points().size());

  r.main_theorem = true;
  if (!(char_k == 0 || 2 * char_k > r.width)) {
    r.main_theorem = false;
    r.violations.push_back("main: char must be 0 or > width/2");
  }
  if (!profile_valid_for_theorem(p, d)) {
    r.main_theorem = false;
    r.violations.push_back("main: profile not trivial on non-horizontal sides");
  }
  if (!(g >= 0 && g <= interior)) {
    r.main_theorem = false;
    r.violations.push_back("main: genus outside [0, #interior points]");
  }

  r.zariski = r.main_theorem;
  if (!(char_k == 0 || char_k > r.width)) {
    r.zariski = false;
    r.violations.push_back("zariski: char must be 0 or > width");
  }

  r.monodromy = true;
  if (char_k != 0) {
    r.monodromy = false;
    r.violations.push_back("monodromy: needs char 0");
  }
  if (r.normal_index != 1) {
    r.monodromy = false;
    r.violations.push_back("monodromy: normals do not span the full lattice");
  }
  for (const auto& s : p.sides()) {
    if (s.lattice_length < r.threshold_l) {
      r.monodromy = false;
      r.violations.push_back("monodromy: a boundary divisor has degree < l");
      break;
    }
  }
  return r;
}

}  // namespace tropsev
