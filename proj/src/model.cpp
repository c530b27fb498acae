#include "unital/model.hpp"

#include <algorithm>
#include <chrono>

#include "unital/unitals.hpp"

namespace unital {

ProjPoint2 to_ambient(const Field& f, const ModelPoint& p) {
  switch (p.kind) {
    case ModelPoint::Kind::affine:
      return affine_point(f, p.xi, p.eta);
    case ModelPoint::Kind::direction:
      return {{f.zero(), f.one(), p.m}};
    case ModelPoint::Kind::vertical:
      return y_infinity(f);
  }
  throw ParameterError("bad model point");
}

ModelPoint from_ambient(const Field& f, const ProjPoint2& p) {
  const ProjPoint2 n = normalize(f, p.c);
  if (n.c[0] == f.one()) return ModelPoint::affine(n.c[1], n.c[2]);
  if (n.c[1] == f.one()) return ModelPoint::direction(n.c[2]);
  return ModelPoint::vertical();
}

AffinePoint phi_map(const Field& f, Elem a, AffinePoint p) {
  return {p.x, f.sub(p.y, f.mul(a, f.mul(p.x, p.x)))};
}

AffinePoint phi_inv(const Field& f, Elem a, AffinePoint p) {
  return {p.x, f.add(p.y, f.mul(a, f.mul(p.x, p.x)))};
}

AffinePoint gamma_map(const Field& f, Elem epsilon, Elem b, AffinePoint p) {
  const Elem shift = f.add(bt_graph(f, epsilon, p.x), f.mul(b, f.pow(p.x, f.q() + 1)));
  return {p.x, f.add(p.y, shift)};
}

PlaneModel PlaneModel::a_model(const Field& f, Elem a) {
  PlaneModel m(f, Kind::a_model);
  m.a_ = a;
  m.graph_.resize(f.order());
  for (Elem x : f.elements()) m.graph_[x.v] = f.mul(a, f.mul(x, x));
  return m;
}

PlaneModel PlaneModel::eps_model(const Field& f, Elem epsilon, Elem b) {
  if (f.in_subfield(b)) throw ParameterError("A'_eps requires b outside GF(q)");
  PlaneModel m(f, Kind::eps_model);
  m.epsilon_ = epsilon;
  m.b_ = b;
  m.graph_.resize(f.order());
  for (Elem x : f.elements()) m.graph_[x.v] = f.add(bt_graph(f, epsilon, x), f.mul(b, f.pow(x, f.q() + 1)));
  return m;
}

std::vector<ModelPoint> PlaneModel::line_points(const ModelLine& l) const {
  const Field& f = field_;
  std::vector<ModelPoint> out;
  out.reserve(f.order() + 1);
  switch (l.kind) {
    case ModelLine::Kind::vertical:
      for (Elem eta : f.elements()) out.push_back(ModelPoint::affine(l.k, eta));
      out.push_back(ModelPoint::vertical());
      break;
    case ModelLine::Kind::curve:
      for (Elem xi : f.elements())
        out.push_back(ModelPoint::affine(xi, f.add(graph(xi), f.add(f.mul(l.m, xi), l.d))));
      out.push_back(ModelPoint::direction(l.m));
      break;
    case ModelLine::Kind::infinity:
      for (Elem m : f.elements()) out.push_back(ModelPoint::direction(m));
      out.push_back(ModelPoint::vertical());
      break;
  }
  return out;
}

bool PlaneModel::contains(const ModelLine& l, const ModelPoint& p) const {
  const Field& f = field_;
  switch (l.kind) {
    case ModelLine::Kind::vertical:
      return p.kind == ModelPoint::Kind::vertical || (p.kind == ModelPoint::Kind::affine && p.xi == l.k);
    case ModelLine::Kind::curve:
      if (p.kind == ModelPoint::Kind::direction) return p.m == l.m;
      return p.kind == ModelPoint::Kind::affine && p.eta == f.add(graph(p.xi), f.add(f.mul(l.m, p.xi), l.d));
    case ModelLine::Kind::infinity:
      return p.kind != ModelPoint::Kind::affine;
  }
  return false;
}

ModelLine PlaneModel::line_through(const ModelPoint& p, const ModelPoint& r) const {
  if (p == r) throw ParameterError("line_through: points coincide");
  const Field& f = field_;
  const bool pa = p.kind == ModelPoint::Kind::affine;
  const bool ra = r.kind == ModelPoint::Kind::affine;
  if (!pa && !ra) return ModelLine::infinity();
  if (!pa || !ra) {
    const ModelPoint& fin = pa ? p : r;
    const ModelPoint& inf = pa ? r : p;
    if (inf.kind == ModelPoint::Kind::vertical) return ModelLine::vertical(fin.xi);
    const Elem d = f.sub(f.sub(fin.eta, graph(fin.xi)), f.mul(inf.m, fin.xi));
    return ModelLine::curve(inf.m, d);
  }
  if (p.xi == r.xi) return ModelLine::vertical(p.xi);
  // η_i - F(ξ_i) = m ξ_i + d
  const Elem lp = f.sub(p.eta, graph(p.xi));
  const Elem lr = f.sub(r.eta, graph(r.xi));
  const Elem m = f.div(f.sub(lp, lr), f.sub(p.xi, r.xi));
  const Elem d = f.sub(lp, f.mul(m, p.xi));
  return ModelLine::curve(m, d);
}

std::vector<ModelLine> PlaneModel::lines() const {
  const Field& f = field_;
  std::vector<ModelLine> out;
  out.reserve(static_cast<std::size_t>(f.order()) * f.order() + f.order() + 1);
  for (Elem k : f.elements()) out.push_back(ModelLine::vertical(k));
  for (Elem m : f.elements())
    for (Elem d : f.elements()) out.push_back(ModelLine::curve(m, d));
  out.push_back(ModelLine::infinity());
  return out;
}

std::vector<ModelPoint> PlaneModel::points() const {
  const Field& f = field_;
  std::vector<ModelPoint> out;
  for (Elem xi : f.elements())
    for (Elem eta : f.elements()) out.push_back(ModelPoint::affine(xi, eta));
  for (Elem m : f.elements()) out.push_back(ModelPoint::direction(m));
  out.push_back(ModelPoint::vertical());
  return out;
}

LineSystem PlaneModel::line_system() const {
  const Field& f = field_;
  const auto all = lines();
  LineSystem ls;
  ls.points_per_line = f.order() + 1;
  ls.codes.reserve(all.size() * ls.points_per_line);
  for (const auto& l : all) {
    for (const auto& p : line_points(l)) ls.codes.push_back(pack(f, to_ambient(f, p)));
    switch (l.kind) {
      case ModelLine::Kind::vertical:
        ls.kinds.push_back(LineKind::vertical);
        break;
      case ModelLine::Kind::curve:
        ls.kinds.push_back(LineKind::curve);
        break;
      case ModelLine::Kind::infinity:
        ls.kinds.push_back(LineKind::infinity);
        break;
    }
  }
  ls.describe = [self = *this, all](std::size_t i) { return self.line_to_json(all[i]); };
  return ls;
}

nlohmann::json PlaneModel::line_to_json(const ModelLine& l) const {
  nlohmann::json line;
  switch (l.kind) {
    case ModelLine::Kind::vertical:
      line = {{"kind", "vertical"}, {"k", l.k.v}};
      break;
    case ModelLine::Kind::curve:
      line = {{"kind", "curve"}, {"m", l.m.v}, {"d", l.d.v}};
      break;
    case ModelLine::Kind::infinity:
      line = {{"kind", "infinity"}};
      break;
  }
  nlohmann::json j = to_json();
  j["line"] = line;
  return j;
}

nlohmann::json PlaneModel::to_json() const {
  if (kind_ == Kind::a_model) return {{"model", "A_a"}, {"a", a_.v}};
  return {{"model", "A_eps"}, {"epsilon", epsilon_.v}, {"b", b_.v}};
}

VerificationReport plane_axiom_check(const PlaneModel& model) {
  const auto start = std::chrono::steady_clock::now();
  const Field& f = model.field();
  VerificationReport rep;
  rep.subject = "plane_axioms";
  rep.metadata = model.to_json();

  const std::uint64_t Q = f.order();
  const std::uint64_t expected = Q * Q + Q + 1;
  const auto lines = model.lines();
  const auto points = model.points();
  rep.add_check("line_count", lines.size() == expected, {{"lines", lines.size()}, {"expected", expected}});
  rep.add_check("point_count", points.size() == expected, {{"points", points.size()}, {"expected", expected}});

  std::vector<std::int32_t> index(code_space(f), -1);
  for (std::size_t i = 0; i < points.size(); ++i) index[pack(f, to_ambient(f, points[i]))] = static_cast<std::int32_t>(i);

  const std::size_t n = points.size();
  std::vector<std::uint8_t> cover(n * n, 0);
  bool sizes_ok = true;
  bool unique_ok = true;
  std::vector<std::int32_t> ids;
  for (const auto& l : lines) {
    ids.clear();
    for (const auto& p : model.line_points(l)) ids.push_back(index[pack(f, to_ambient(f, p))]);
    std::sort(ids.begin(), ids.end());
    const bool distinct = std::adjacent_find(ids.begin(), ids.end()) == ids.end() && ids.front() >= 0;
    if (!distinct || ids.size() != Q + 1) {
      if (sizes_ok) rep.add_witness({{"line", model.line_to_json(l)}, {"problem", "wrong point count"}});
      sizes_ok = false;
      continue;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        auto& c = cover[static_cast<std::size_t>(ids[i]) * n + static_cast<std::size_t>(ids[j])];
        if (++c > 1 && unique_ok) {
          unique_ok = false;
          rep.add_witness({{"points", {point_to_json(to_ambient(f, points[static_cast<std::size_t>(ids[i])])),
                                       point_to_json(to_ambient(f, points[static_cast<std::size_t>(ids[j])]))}},
                           {"problem", "pair on two lines"}});
        }
      }
    }
  }
  rep.add_check("line_size", sizes_ok);

  bool covered = true;
  bool join_ok = true;
  for (std::size_t i = 0; i < n && (covered || join_ok); ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered && cover[i * n + j] == 0) {
        covered = false;
        rep.add_witness({{"points", {point_to_json(to_ambient(f, points[i])), point_to_json(to_ambient(f, points[j]))}},
                         {"problem", "pair on no line"}});
      }
      const ModelLine l = model.line_through(points[i], points[j]);
      if (join_ok && !(model.contains(l, points[i]) && model.contains(l, points[j]))) {
        join_ok = false;
        rep.add_witness({{"line", model.line_to_json(l)}, {"problem", "line_through misses a point"}});
      }
    }
  }
  rep.add_check("pairs_on_at_most_one_line", unique_ok);
  rep.add_check("pairs_on_some_line", covered);
  rep.add_check("line_through_contains_both", join_ok);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace unital
