#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "unital/gf.hpp"

namespace unital {

/// Point of PG(2,q^2); coordinates normalized so the first nonzero one is 1.
struct ProjPoint2 {
  std::array<Elem, 3> c{};
  friend auto operator<=>(const ProjPoint2&, const ProjPoint2&) = default;
};

/// Line a0*x0 + a1*x1 + a2*x2 = 0, dual coordinates normalized like points.
struct ProjLine2 {
  std::array<Elem, 3> c{};
  friend auto operator<=>(const ProjLine2&, const ProjLine2&) = default;
};

struct ProjPoint3 {
  std::array<Elem, 4> c{};
  friend auto operator<=>(const ProjPoint3&, const ProjPoint3&) = default;
};

ProjPoint2 normalize(const Field& f, std::array<Elem, 3> coords);
ProjPoint3 normalize(const Field& f, std::array<Elem, 4> coords);
ProjLine2 normalize_line(const Field& f, std::array<Elem, 3> coords);

inline ProjPoint2 affine_point(const Field& f, Elem x, Elem y) { return {{f.one(), x, y}}; }
inline ProjPoint2 x_infinity(const Field& f) { return {{f.zero(), f.one(), f.zero()}}; }
inline ProjPoint2 y_infinity(const Field& f) { return {{f.zero(), f.zero(), f.one()}}; }

/// Packed code x0*Q^2 + x1*Q + x2 with Q = q^2. Sorting codes sorts points
/// lexicographically.
std::uint32_t pack(const Field& f, const ProjPoint2& p);
ProjPoint2 unpack(const Field& f, std::uint32_t code);
/// True iff the code is a normalized point of PG(2,q^2).
bool is_point_code(const Field& f, std::uint32_t code);
std::uint32_t code_space(const Field& f);

ProjLine2 line_through(const Field& f, const ProjPoint2& p, const ProjPoint2& r);
bool incident(const Field& f, const ProjLine2& l, const ProjPoint2& p);
/// The q^2+1 points of l in packed-code order.
std::vector<ProjPoint2> points_on(const Field& f, const ProjLine2& l);

struct PlaneEnumeration {
  std::vector<ProjPoint2> points;
  std::vector<ProjLine2> lines;
};

/// All points and lines of PG(2,q^2), each in packed-code order.
PlaneEnumeration enumerate(const Field& f);

/// Duplicate-free, sorted set of packed PG(2,q^2) codes.
class PointSet {
 public:
  PointSet() = default;
  /// Sorts and removes duplicates.
  explicit PointSet(std::vector<std::uint32_t> codes);
  static PointSet from_points(const Field& f, std::span<const ProjPoint2> pts);

  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  bool contains(std::uint32_t code) const;
  bool contains(const Field& f, const ProjPoint2& p) const { return contains(pack(f, p)); }
  const std::vector<std::uint32_t>& codes() const { return codes_; }
  std::vector<ProjPoint2> points(const Field& f) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::uint32_t> codes_;
};

nlohmann::json point_to_json(const ProjPoint2& p);
nlohmann::json point_to_json(const ProjPoint3& p);
ProjPoint2 point_from_json(const Field& f, const nlohmann::json& j);

}  // namespace unital
