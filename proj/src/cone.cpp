#include "unital/cone.hpp"

#include <algorithm>
#include <chrono>

#include "unital/unitals.hpp"

namespace unital {

ProjPoint3 cone_center(const Field& f, Elem a) { return {{f.zero(), f.zero(), f.one(), f.neg(a)}}; }

ProjPoint3 lift(const Field& f, Elem b, const ProjPoint2& p_in) {
  const ProjPoint2 p = normalize(f, p_in.c);
  if (p == y_infinity(f)) return {{f.zero(), f.zero(), f.zero(), f.one()}};
  if (p.c[0] != f.one()) throw ParameterError("lift: point is not on the classical unital");
  const Elem t = p.c[1];
  const Elem r = f.sub(p.c[2], f.mul(b, f.pow(t, f.q() + 1)));
  if (!f.in_subfield(r)) throw ParameterError("lift: point is not on the classical unital");
  return {{f.one(), t, f.mul(t, t), p.c[2]}};
}

ProjPoint2 project(const Field& f, Elem a, const ProjPoint3& x) {
  // X + λQ meets x2 = 0 at λ = -x2
  const auto& c = x.c;
  const std::array<Elem, 3> image{c[0], c[1], f.add(c[3], f.mul(a, c[2]))};
  if (image[0] == f.zero() && image[1] == f.zero() && image[2] == f.zero())
    throw ParameterError("project: point coincides with the center");
  return normalize(f, image);
}

bool collinear(const Field& f, const ProjPoint3& x, const ProjPoint3& y, const ProjPoint3& z) {
  // rank < 3 iff every 3x3 minor of the 3x4 matrix vanishes
  const std::array<std::array<Elem, 4>, 3> m{x.c, y.c, z.c};
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<std::size_t, 3> cols{};
    for (std::size_t c = 0, k = 0; c < 4; ++c)
      if (c != skip) cols[k++] = c;
    auto at = [&](std::size_t r, std::size_t k) { return f(m[r][cols[k]]); };
    const auto det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                     at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                     at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    if (!det.is_zero()) return false;
  }
  return true;
}

VerificationReport cone_pipeline(const Field& f, Elem a, Elem b, const ConeOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (f.in_subfield(b)) throw ParameterError("cone pipeline requires b outside GF(q)");
  VerificationReport rep;
  rep.subject = "cone";
  rep.metadata = {{"a", a.v}, {"b", b.v}};

  const PointSet classical = construct_hermitian(f, b);
  const ProjPoint3 center = cone_center(f, a);
  std::vector<ProjPoint3> lifted;
  lifted.reserve(classical.size());
  bool on_cone = true;
  for (const auto& p : classical.points(f)) {
    const ProjPoint3 x = lift(f, b, p);
    on_cone = on_cone && f.mul(x.c[0], x.c[2]) == f.mul(x.c[1], x.c[1]);
    lifted.push_back(x);
  }
  std::vector<ProjPoint3> sorted = lifted;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  rep.add_check("lift_on_cone", on_cone);
  rep.add_check("lift_injective", injective, {{"points", lifted.size()}});
  rep.add_check("center_off_lift", !std::binary_search(sorted.begin(), sorted.end(), center));

  // every pair (i, j), i < j; outer loop split across workers
  std::vector<std::int64_t> first_bad(lifted.size(), -1);
  parallel_for(lifted.size(), opt.jobs, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < lifted.size(); ++j) {
      if (collinear(f, lifted[i], lifted[j], center)) {
        first_bad[i] = static_cast<std::int64_t>(j);
        return;
      }
    }
  });
  bool no_secant = true;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    if (first_bad[i] < 0) continue;
    no_secant = false;
    rep.add_witness({{"problem", "2-secant through center"},
                     {"points", {point_to_json(lifted[i]), point_to_json(lifted[static_cast<std::size_t>(first_bad[i])])}}});
  }
  const std::uint64_t pairs = lifted.size() * (lifted.size() - 1) / 2;
  rep.add_check("no_2_secant_through_center", no_secant, {{"pairs_checked", pairs}});

  std::vector<ProjPoint2> image;
  image.reserve(lifted.size());
  for (const auto& x : lifted) image.push_back(project(f, a, x));
  const PointSet image_set = PointSet::from_points(f, image);
  const std::uint64_t q = f.q();
  rep.add_check("image_size_q^3+1", image_set.size() == q * q * q + 1, {{"size", image_set.size()}});
  rep.add_check("image_equals_bm", image_set == construct_bm(f, a, b));
  if (opt.include_image) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : image_set.points(f)) pts.push_back(point_to_json(p));
    rep.metadata["image"] = std::move(pts);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace unital
