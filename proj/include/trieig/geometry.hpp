#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "trieig/errors.hpp"

namespace trieig {

struct Point {
  double x = 0.0, y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }

// A nondegenerate triangle by its three vertices.
class TriangleDomain {
 public:
  TriangleDomain(Point v1, Point v2, Point v3) : v_{v1, v2, v3} {
    if (signed_area() == 0.0)
      throw std::domain_error("TriangleDomain: vertices are collinear");
  }

  Point vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }

  double signed_area() const {
    return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]);
  }
  double area() const { return std::fabs(signed_area()); }

  // side(i) is opposite vertex(i)
  double side(int i) const {
    return norm(v_[static_cast<std::size_t>((i + 1) % 3)] -
                v_[static_cast<std::size_t>((i + 2) % 3)]);
  }

 private:
  std::array<Point, 3> v_;
};

// T(a, b): vertices (-1, 0), (1, 0) and the apex (a, b) with b > 0.
inline TriangleDomain triangle(double apex_x, double apex_y) {
  if (!(apex_y > 0.0))
    throw std::domain_error("triangle: apex height must be positive");
  return TriangleDomain({-1.0, 0.0}, {1.0, 0.0}, {apex_x, apex_y});
}

// The special triangles of the minimization argument.
inline TriangleDomain equilateral_triangle() { return triangle(0.0, std::sqrt(3.0)); }
inline TriangleDomain right_triangle_plus() { return triangle(1.0, 2.0 * std::sqrt(3.0)); }
inline TriangleDomain right_triangle_minus() { return triangle(-1.0, 2.0 * std::sqrt(3.0)); }
inline constexpr double kEndpointApexHeight = 2.14;
inline TriangleDomain endpoint_triangle() { return triangle(0.0, kEndpointApexHeight); }

// Longest side; for a triangle this is the diameter.
inline double diameter(const TriangleDomain& t) {
  return std::max({t.side(0), t.side(1), t.side(2)});
}

enum class TriangleClass { equilateral, subequilateral, superequilateral, scalene };

struct ApertureInfo {
  std::optional<double> aperture;  // angle between the equal sides, if isosceles
  TriangleClass cls = TriangleClass::scalene;
};

// Isosceles detection uses a relative tolerance of 1e-12: these triangles
// are constructed, not measured.
inline constexpr double kIsoscelesTolerance = 1e-12;

inline ApertureInfo aperture_and_class(const TriangleDomain& t) {
  const double s[3] = {t.side(0), t.side(1), t.side(2)};
  const double scale = std::max({s[0], s[1], s[2]});
  auto equal = [&](int i, int j) {
    return std::fabs(s[i] - s[j]) <= kIsoscelesTolerance * scale;
  };
  if (equal(0, 1) && equal(1, 2))
    return {std::numbers::pi / 3.0, TriangleClass::equilateral};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if (!equal(i, j)) continue;
    // sides i and j meet at the remaining vertex; the angle there is the
    // aperture, found from the law of cosines with the base side k
    const int k = 3 - i - j;
    const double base = s[k];
    const double leg = 0.5 * (s[i] + s[j]);
    const double c = 1.0 - base * base / (2.0 * leg * leg);
    const double aperture = std::acos(std::clamp(c, -1.0, 1.0));
    const TriangleClass cls = aperture < std::numbers::pi / 3.0
                                  ? TriangleClass::subequilateral
                                  : TriangleClass::superequilateral;
    return {aperture, cls};
  }
  return {std::nullopt, TriangleClass::scalene};
}

struct AffineMap {
  // row-major linear part, then the shift
  std::array<double, 4> linear = {1.0, 0.0, 0.0, 1.0};
  Point shift = {0.0, 0.0};

  Point operator()(Point p) const {
    return {linear[0] * p.x + linear[1] * p.y + shift.x,
            linear[2] * p.x + linear[3] * p.y + shift.y};
  }
  double det() const { return linear[0] * linear[3] - linear[1] * linear[2]; }
};

inline AffineMap scaling(double s) { return {{s, 0.0, 0.0, s}, {0.0, 0.0}}; }
inline AffineMap axis_scaling(double sx, double sy) {
  return {{sx, 0.0, 0.0, sy}, {0.0, 0.0}};
}
inline AffineMap rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {{c, -s, s, c}, {0.0, 0.0}};
}
// Exact coordinate swap-and-negate; used where the pi/2 rotation must not
// pick up trigonometric rounding.
inline AffineMap quarter_turn() { return {{0.0, -1.0, 1.0, 0.0}, {0.0, 0.0}}; }

inline TriangleDomain transformed(const TriangleDomain& t, const AffineMap& map) {
  return TriangleDomain(map(t.vertex(0)), map(t.vertex(1)), map(t.vertex(2)));
}

// One-directional dilation: the coordinate along `axis` is multiplied by
// `factor`, the perpendicular coordinate is kept.
inline TriangleDomain stretch(const TriangleDomain& t, double factor, Point axis) {
  if (!(factor > 1.0)) throw std::domain_error("stretch: factor must exceed 1");
  const double len = norm(axis);
  if (!(len > 0.0)) throw std::domain_error("stretch: axis must be nonzero");
  const Point u{axis.x / len, axis.y / len};
  const double g = factor - 1.0;
  AffineMap map{{1.0 + g * u.x * u.x, g * u.x * u.y, g * u.x * u.y,
                 1.0 + g * u.y * u.y},
                {0.0, 0.0}};
  return transformed(t, map);
}

struct Subequilateralized {
  TriangleDomain triangle;
  bool already_equilateral = false;
};

// Reduction step of the minimization proof: stretch perpendicular to the
// longest side until another side reaches the same length.  The result is
// isosceles with both longest sides equal to the original diameter, returned
// with the longest side on the x-axis; the diameter is preserved exactly.
inline Subequilateralized subequilateralize(const TriangleDomain& t) {
  const double s[3] = {t.side(0), t.side(1), t.side(2)};
  const double longest = std::max({s[0], s[1], s[2]});
  const auto info = aperture_and_class(t);
  if (info.cls == TriangleClass::equilateral) return {t, true};

  // ties pick the side opposite the smallest-index vertex
  int opposite = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(s[i] - longest) <= kIsoscelesTolerance * longest) {
      opposite = i;
      break;
    }
  }
  const Point p = t.vertex((opposite + 1) % 3);
  const Point q = t.vertex((opposite + 2) % 3);
  const Point r = t.vertex(opposite);
  const double d = norm(q - p);
  const Point ex{(q.x - p.x) / d, (q.y - p.y) / d};
  const Point mid = 0.5 * (p + q);
  const double xi = dot(r - mid, ex);
  const double eta = std::fabs(cross(ex, r - mid));

  // the slant with the larger x-offset is the longer one; raising the apex
  // to height sqrt(d^2 - dx^2) makes it match the base length
  const double dx = std::max(std::fabs(xi + 0.5 * d), std::fabs(xi - 0.5 * d));
  const double height = std::sqrt(std::max(d * d - dx * dx, 0.0));
  if (std::fabs(height - eta) <= kIsoscelesTolerance * d)
    return {t, false};  // two longest sides already equal
  return {TriangleDomain({-0.5 * d, 0.0}, {0.5 * d, 0.0}, {xi, height}), false};
}

// Conforming triangulation from uniform 4-way refinement of the domain.
struct Mesh {
  std::vector<Point> nodes;
  std::vector<std::array<int, 3>> elements;
  int level = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int element_count() const { return static_cast<int>(elements.size()); }
};

inline constexpr int kDefaultMaxMeshLevel = 9;

inline Mesh mesh(const TriangleDomain& t, int level,
                 int max_level = kDefaultMaxMeshLevel) {
  if (level < 0) throw std::domain_error("mesh: level must be >= 0");
  if (level > max_level)
    throw ResourceError("mesh: level " + std::to_string(level) +
                        " exceeds the configured maximum " +
                        std::to_string(max_level));
  const int n = 1 << level;
  const double inv = 1.0 / static_cast<double>(n);
  const Point v1 = t.vertex(0), v2 = t.vertex(1), v3 = t.vertex(2);
  const Point e2 = v2 - v1, e3 = v3 - v1;

  Mesh m;
  m.level = level;
  m.nodes.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  std::vector<int> row_start(static_cast<std::size_t>(n + 2), 0);
  for (int r = 0; r <= n; ++r) {
    row_start[static_cast<std::size_t>(r)] = m.node_count();
    for (int c = 0; c <= n - r; ++c)
      m.nodes.push_back(v1 + (c * inv) * e2 + (r * inv) * e3);
  }
  row_start[static_cast<std::size_t>(n + 1)] = m.node_count();

  const bool flip = t.signed_area() < 0.0;
  auto idx = [&](int r, int c) { return row_start[static_cast<std::size_t>(r)] + c; };
  auto emit = [&](int a, int b, int c) {
    if (flip) std::swap(b, c);
    m.elements.push_back({a, b, c});
  };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n - r; ++c) {
      emit(idx(r, c), idx(r, c + 1), idx(r + 1, c));
      if (c + 1 <= n - r - 1)
        emit(idx(r, c + 1), idx(r + 1, c + 1), idx(r + 1, c));
    }
  }
  return m;
}

// Axis-aligned rectangle split along the diagonal of each refinement cell;
// used for the exactly-solvable reference spectra.
inline Mesh rectangle_mesh(double width, double height, int level,
                           int max_level = kDefaultMaxMeshLevel) {
  if (!(width > 0.0) || !(height > 0.0))
    throw std::domain_error("rectangle_mesh: sides must be positive");
  if (level < 0) throw std::domain_error("rectangle_mesh: level must be >= 0");
  if (level > max_level)
    throw ResourceError("rectangle_mesh: level exceeds the configured maximum");
  const int n = 1 << level;
  const double inv = 1.0 / static_cast<double>(n);
  Mesh m;
  m.level = level;
  auto idx = [&](int r, int c) { return r * (n + 1) + c; };
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c)
      m.nodes.push_back({width * (c * inv), height * (r * inv)});
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.elements.push_back({idx(r, c), idx(r, c + 1), idx(r + 1, c + 1)});
      m.elements.push_back({idx(r, c), idx(r + 1, c + 1), idx(r + 1, c)});
    }
  }
  return m;
}

// Same connectivity, mapped nodes; element orientation is restored if the
// map reverses it.
inline Mesh transformed(const Mesh& m, const AffineMap& map) {
  Mesh out;
  out.level = m.level;
  out.nodes.reserve(m.nodes.size());
  for (const Point& p : m.nodes) out.nodes.push_back(map(p));
  out.elements = m.elements;
  if (map.det() < 0.0)
    for (auto& e : out.elements) std::swap(e[1], e[2]);
  return out;
}

// Plain-text OFF-style dump: counts header, node coordinates, index triples.
inline void write_off(std::ostream& out, const Mesh& m) {
  out << "OFF\n" << m.node_count() << " " << m.element_count() << " 0\n";
  out.precision(17);
  for (const Point& p : m.nodes) out << p.x << " " << p.y << " 0\n";
  for (const auto& e : m.elements)
    out << "3 " << e[0] << " " << e[1] << " " << e[2] << "\n";
}

}  // namespace trieig
