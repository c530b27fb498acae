#include "unital/pg.hpp"

#include <algorithm>

namespace unital {

namespace {

template <std::size_t N>
std::array<Elem, N> scale_first_nonzero(const Field& f, std::array<Elem, N> c) {
  for (std::size_t i = 0; i < N; ++i) {
    if (c[i].v == 0) continue;
    const Elem s = f.inv(c[i]);
    for (std::size_t j = i; j < N; ++j) c[j] = f.mul(c[j], s);
    return c;
  }
  throw ParameterError("zero vector has no projective point");
}

}  // namespace

ProjPoint2 normalize(const Field& f, std::array<Elem, 3> coords) {
  return {scale_first_nonzero(f, coords)};
}

ProjPoint3 normalize(const Field& f, std::array<Elem, 4> coords) {
  return {scale_first_nonzero(f, coords)};
}

ProjLine2 normalize_line(const Field& f, std::array<Elem, 3> coords) {
  return {scale_first_nonzero(f, coords)};
}

std::uint32_t pack(const Field& f, const ProjPoint2& p) {
  const std::uint32_t Q = f.order();
  return (p.c[0].v * Q + p.c[1].v) * Q + p.c[2].v;
}

ProjPoint2 unpack(const Field& f, std::uint32_t code) {
  const std::uint32_t Q = f.order();
  return {{Elem{code / Q / Q}, Elem{code / Q % Q}, Elem{code % Q}}};
}

std::uint32_t code_space(const Field& f) {
  const std::uint32_t Q = f.order();
  return 2 * Q * Q;
}

bool is_point_code(const Field& f, std::uint32_t code) {
  if (code >= code_space(f)) return false;
  const ProjPoint2 p = unpack(f, code);
  if (p.c[0] == f.one()) return true;
  if (p.c[0] != f.zero()) return false;
  if (p.c[1] == f.one()) return true;
  return p.c[1] == f.zero() && p.c[2] == f.one();
}

ProjLine2 line_through(const Field& f, const ProjPoint2& p, const ProjPoint2& r) {
  if (p == r) throw ParameterError("line_through: points coincide");
  const auto& a = p.c;
  const auto& b = r.c;
  return normalize_line(f, {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
                            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
                            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))});
}

bool incident(const Field& f, const ProjLine2& l, const ProjPoint2& p) {
  Elem s = f.zero();
  for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(l.c[static_cast<std::size_t>(i)], p.c[static_cast<std::size_t>(i)]));
  return s == f.zero();
}

std::vector<ProjPoint2> points_on(const Field& f, const ProjLine2& l) {
  // two independent solutions of a.x = 0
  const auto& a = l.c;
  std::array<Elem, 3> u{}, w{};
  if (a[0] != f.zero()) {
    // x0 = -(a1 x1 + a2 x2)/a0
    const Elem inv0 = f.inv(a[0]);
    u = {f.neg(f.mul(a[1], inv0)), f.one(), f.zero()};
    w = {f.neg(f.mul(a[2], inv0)), f.zero(), f.one()};
  } else if (a[1] != f.zero()) {
    const Elem inv1 = f.inv(a[1]);
    u = {f.one(), f.zero(), f.zero()};
    w = {f.zero(), f.neg(f.mul(a[2], inv1)), f.one()};
  } else {
    u = {f.one(), f.zero(), f.zero()};
    w = {f.zero(), f.one(), f.zero()};
  }
  std::vector<ProjPoint2> out;
  out.reserve(f.order() + 1);
  out.push_back(normalize(f, w));
  for (std::uint32_t v = 0; v < f.order(); ++v) {
    const Elem lambda{v};
    out.push_back(normalize(f, std::array<Elem, 3>{f.add(u[0], f.mul(lambda, w[0])), f.add(u[1], f.mul(lambda, w[1])),
                                f.add(u[2], f.mul(lambda, w[2]))}));
  }
  std::sort(out.begin(), out.end(), [&](const ProjPoint2& x, const ProjPoint2& y) { return pack(f, x) < pack(f, y); });
  return out;
}

PlaneEnumeration enumerate(const Field& f) {
  const std::uint32_t Q = f.order();
  std::vector<std::array<Elem, 3>> triples;
  triples.reserve(static_cast<std::size_t>(Q) * Q + Q + 1);
  triples.push_back({f.zero(), f.zero(), f.one()});
  for (std::uint32_t z = 0; z < Q; ++z) triples.push_back({f.zero(), f.one(), Elem{z}});
  for (std::uint32_t y = 0; y < Q; ++y)
    for (std::uint32_t z = 0; z < Q; ++z) triples.push_back({f.one(), Elem{y}, Elem{z}});
  PlaneEnumeration out;
  out.points.reserve(triples.size());
  out.lines.reserve(triples.size());
  for (const auto& t : triples) {
    out.points.push_back(ProjPoint2{t});
    out.lines.push_back(ProjLine2{t});
  }
  return out;
}

PointSet::PointSet(std::vector<std::uint32_t> codes) : codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

PointSet PointSet::from_points(const Field& f, std::span<const ProjPoint2> pts) {
  std::vector<std::uint32_t> codes;
  codes.reserve(pts.size());
  for (const auto& p : pts) codes.push_back(pack(f, p));
  return PointSet(std::move(codes));
}

bool PointSet::contains(std::uint32_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::vector<ProjPoint2> PointSet::points(const Field& f) const {
  std::vector<ProjPoint2> out;
  out.reserve(codes_.size());
  for (auto c : codes_) out.push_back(unpack(f, c));
  return out;
}

nlohmann::json point_to_json(const ProjPoint2& p) {
  return nlohmann::json::array({p.c[0].v, p.c[1].v, p.c[2].v});
}

nlohmann::json point_to_json(const ProjPoint3& p) {
  return nlohmann::json::array({p.c[0].v, p.c[1].v, p.c[2].v, p.c[3].v});
}

ProjPoint2 point_from_json(const Field& f, const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ParameterError("point must be a JSON triple");
  return normalize(f, std::array<Elem, 3>{f.element(j[0].get<std::uint64_t>()), f.element(j[1].get<std::uint64_t>()),
                       f.element(j[2].get<std::uint64_t>())});
}

}  // namespace unital
