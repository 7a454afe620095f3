#ifndef TROPSEV_VEC_HPP
#define TROPSEV_VEC_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "tropsev/rat.hpp"

namespace tropsev {

/// Integer 2-vector: lattice points, slopes, primitive directions, normals.
struct Vec2i {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend Vec2i operator+(Vec2i a, Vec2i b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2i operator-(Vec2i a, Vec2i b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2i operator-(Vec2i a) { return {-a.x, -a.y}; }
  friend Vec2i operator*(std::int64_t k, Vec2i a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Vec2i a, Vec2i b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Vec2i a, Vec2i b) { return !(a == b); }
  friend bool operator<(Vec2i a, Vec2i b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend std::ostream& operator<<(std::ostream& os, Vec2i v) {
    return os << "(" << v.x << "," << v.y << ")";
  }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline std::int64_t dot(Vec2i a, Vec2i b) { return a.x * b.x + a.y * b.y; }
inline std::int64_t det(Vec2i a, Vec2i b) { return a.x * b.y - a.y * b.x; }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

/// Lattice length of v: the positive integer g with v = g * primitive(v).
inline std::int64_t lattice_length(Vec2i v) { return gcd64(v.x, v.y); }

inline Vec2i primitive(Vec2i v) {
  std::int64_t g = lattice_length(v);
  return g == 0 ? v : Vec2i{v.x / g, v.y / g};
}

/// Rational 2-vector: vertex images, marked-point positions.
struct Vec2q {
  Rat x = 0;
  Rat y = 0;

  friend Vec2q operator+(const Vec2q& a, const Vec2q& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2q operator-(const Vec2q& a, const Vec2q& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2q operator*(const Rat& k, const Vec2q& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const Vec2q& a, const Vec2q& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2q& a, const Vec2q& b) { return !(a == b); }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Vec2q to_vec2q(Vec2i v) { return {Rat(static_cast<long>(v.x)), Rat(static_cast<long>(v.y))}; }

/// Unimodular 2x2 integer matrix acting on lattice points by u * v.
struct Mat2i {
  // rows
  Vec2i r0{1, 0};
  Vec2i r1{0, 1};

  Vec2i apply(Vec2i v) const { return {dot(r0, v), dot(r1, v)}; }
  std::int64_t determinant() const { return r0.x * r1.y - r0.y * r1.x; }
  friend bool operator==(const Mat2i& a, const Mat2i& b) { return a.r0 == b.r0 && a.r1 == b.r1; }
};

}  // namespace tropsev

#endif
