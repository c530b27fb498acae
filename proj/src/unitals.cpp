#include "unital/unitals.hpp"

#include "unital/incidence.hpp"

namespace unital {

const char* to_string(UnitalKind k) {
  switch (k) {
    case UnitalKind::hermitian:
      return "hermitian";
    case UnitalKind::bm:
      return "bm";
    case UnitalKind::bt:
      return "bt";
  }
  return "?";
}

UnitalKind unital_kind_from_string(const std::string& s) {
  if (s == "hermitian") return UnitalKind::hermitian;
  if (s == "bm") return UnitalKind::bm;
  if (s == "bt") return UnitalKind::bt;
  throw ParameterError("unknown unital kind '" + s + "'");
}

const char* to_string(UnitalClass c) {
  switch (c) {
    case UnitalClass::invalid:
      return "invalid";
    case UnitalClass::classical:
      return "classical";
    case UnitalClass::hsz:
      return "hsz";
    case UnitalClass::bm_general:
      return "bm_general";
  }
  return "?";
}

bool ebert_check(const Field& f, Elem a, Elem b) {
  const auto A = f(a);
  const auto B = f(b);
  if (f.p() != 2) {
    const auto value = f(f.from_int(4)) * A.pow(f.q() + 1) + (B.conj() - B).sq();
    if (!f.in_subfield(value)) throw VerificationError("Ebert discriminant left GF(q)");
    return !f.is_square(value, SquareDomain::subfield);
  }
  if (f.in_subfield(b)) return false;
  const auto arg = A.pow(f.q() + 1) / (B.conj() + B).sq();
  if (!f.in_subfield(arg)) throw VerificationError("Ebert trace argument left GF(q)");
  return f.abs_trace(arg) == f.zero();
}

namespace {

PointSet graph_unital(const Field& f, const std::function<Elem(Elem)>& graph) {
  const auto sub = f.subfield_elements();
  std::vector<std::uint32_t> codes;
  codes.reserve(static_cast<std::size_t>(f.order()) * f.q() + 1);
  for (Elem x : f.elements()) {
    const Elem y0 = graph(x);
    for (Elem r : sub) codes.push_back(pack(f, affine_point(f, x, f.add(y0, r))));
  }
  codes.push_back(pack(f, y_infinity(f)));
  PointSet out(std::move(codes));
  const std::size_t expected = static_cast<std::size_t>(f.q()) * f.q() * f.q() + 1;
  if (out.size() != expected) throw VerificationError("graph unital has " + std::to_string(out.size()) + " points");
  return out;
}

void require_bt_field(const Field& f) {
  if (f.p() != 2 || f.e() < 2 || f.e() % 2 == 0)
    throw ParameterError("Buekenhout-Tits construction requires q = 2^e with e > 1 odd");
}

}  // namespace

PointSet construct_hermitian(const Field& f, Elem b) {
  if (f.in_subfield(b)) throw ParameterError("hermitian unital requires b outside GF(q)");
  return construct_bm(f, f.zero(), b);
}

PointSet construct_bm(const Field& f, Elem a, Elem b) {
  const std::uint64_t q1 = f.q() + 1;
  return graph_unital(f, [&](Elem x) { return f.add(f.mul(a, f.mul(x, x)), f.mul(b, f.pow(x, q1))); });
}

Elem bt_graph(const Field& f, Elem epsilon, Elem x) {
  require_bt_field(f);
  const auto X = f(x);
  const auto E = f(epsilon);
  const auto t = X.conj() + X;
  const auto s = t * E + X;
  if (!f.in_subfield(s) || !f.in_subfield(t)) throw VerificationError("sigma argument outside GF(q)");
  const auto s_sigma = f(f.sigma(s));
  const auto t_sigma = f(f.sigma(t));
  return (s_sigma * s.sq() + t_sigma + s * t) * E;
}

PointSet construct_bt_from_trace_coords(const Field& f, Elem epsilon) {
  require_bt_field(f);
  const auto sub = f.subfield_elements();
  const auto E = f(epsilon);
  std::vector<std::uint32_t> codes;
  for (Elem s : sub) {
    for (Elem t : sub) {
      const auto S = f(s);
      const auto T = f(t);
      const auto x = S + T * E;
      const auto y0 = (f(f.sigma(s)) * S.sq() + f(f.sigma(t)) + S * T) * E;
      for (Elem r : sub) codes.push_back(pack(f, affine_point(f, x, (y0 + f(r)).elem())));
    }
  }
  codes.push_back(pack(f, y_infinity(f)));
  return PointSet(std::move(codes));
}

PointSet construct_bt(const Field& f, Elem epsilon) {
  require_bt_field(f);
  if (f.in_subfield(epsilon) || f.add(f.frobenius(epsilon), epsilon) != f.one())
    throw ParameterError("epsilon must satisfy epsilon^q + epsilon = 1");
  PointSet primary = graph_unital(f, [&](Elem x) { return bt_graph(f, epsilon, x); });
  if (primary != construct_bt_from_trace_coords(f, epsilon))
    throw VerificationError("Buekenhout-Tits parameterizations disagree");
  return primary;
}

PointSet realize(const Field& f, const UnitalParams& params) {
  switch (params.kind) {
    case UnitalKind::hermitian:
      return construct_hermitian(f, params.b);
    case UnitalKind::bm:
      return construct_bm(f, params.a, params.b);
    case UnitalKind::bt:
      return construct_bt(f, params.epsilon.value_or(f.find_epsilon(Parity::even).epsilon));
  }
  throw ParameterError("unknown unital kind");
}

UnitalClass classify(const Field& f, Elem a, Elem b) {
  if (!ebert_check(f, a, b)) return UnitalClass::invalid;
  if (a == f.zero()) return UnitalClass::classical;
  if (f.p() != 2 && !f.in_subfield(f.pow(a, (f.q() + 1) / 2)) && f.in_subfield(b)) return UnitalClass::hsz;
  return UnitalClass::bm_general;
}

std::vector<PairRecord> enumerate_pairs(const Field& f, const EnumerateOptions& opt) {
  if (f.q() > opt.max_q)
    throw ParameterError("enumerate_pairs: q = " + std::to_string(f.q()) + " exceeds bound " + std::to_string(opt.max_q));
  const std::uint32_t Q = f.order();
  std::vector<PairRecord> out(static_cast<std::size_t>(Q) * Q);
  const bool cross = f.q() <= opt.cross_validate_max_q;
  LineSystem lines;
  if (cross) lines = standard_lines(f);
  parallel_for(out.size(), opt.jobs, [&](std::size_t i) {
    PairRecord rec;
    rec.a = Elem{static_cast<std::uint32_t>(i / Q)};
    rec.b = Elem{static_cast<std::uint32_t>(i % Q)};
    rec.ebert = ebert_check(f, rec.a, rec.b);
    rec.cls = classify(f, rec.a, rec.b);
    if (cross) rec.two_character = is_two_character(lines, PointMask(f, construct_bm(f, rec.a, rec.b)), f.q());
    out[i] = rec;
  });
  return out;
}

nlohmann::json unital_to_json(const Field& f, const UnitalParams& params, const PointSet& points) {
  nlohmann::json j;
  j["kind"] = to_string(params.kind);
  if (params.kind == UnitalKind::bm) j["a"] = params.a.v;
  if (params.kind != UnitalKind::bt || params.b.v != 0) j["b"] = params.b.v;
  if (params.epsilon) j["epsilon"] = params.epsilon->v;
  if (params.delta) j["delta"] = params.delta->v;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points.points(f)) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  return j;
}

}  // namespace unital
