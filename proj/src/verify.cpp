#include "unital/verify.hpp"

#include <chrono>
#include <random>

#include "unital/unitals.hpp"

namespace unital {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerificationReport intersection_profile(const Field& f, const PointSet& s, const LineSystem& lines) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.subject = "intersection_profile";
  const PointMask mask(f, s);
  const auto sizes = intersection_sizes(lines, mask);
  const std::uint32_t q = f.q();
  bool two_char = true;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ++rep.profile[sizes[i]];
    ++rep.profile_by_kind[lines.kinds[i]][sizes[i]];
    if (sizes[i] != 1 && sizes[i] != q + 1) {
      two_char = false;
      if (rep.witnesses.size() < VerificationReport::kMaxWitnesses) {
        nlohmann::json w = lines.describe ? lines.describe(i) : nlohmann::json{{"line_index", i}};
        w["intersection"] = sizes[i];
        rep.add_witness(std::move(w));
      }
    }
  }
  rep.add_check("two_character_1_q+1", two_char);
  rep.metadata["points"] = s.size();
  rep.metadata["lines"] = lines.size();
  rep.seconds = since(t0);
  return rep;
}

VerificationReport assert_unital(const Field& f, const PointSet& s, const LineSystem& lines) {
  const std::uint64_t q = f.q();
  if (s.size() != q * q * q + 1)
    throw ParameterError("assert_unital: set has " + std::to_string(s.size()) + " points, expected q^3+1 = " +
                         std::to_string(q * q * q + 1));
  VerificationReport rep = intersection_profile(f, s, lines);
  rep.subject = "unital";
  if (rep.pass()) {
    const auto tangents = rep.profile.count(1) ? rep.profile.at(1) : 0;
    const auto secants = rep.profile.count(static_cast<std::uint32_t>(q + 1)) ? rep.profile.at(static_cast<std::uint32_t>(q + 1)) : 0;
    rep.add_check("tangent_count", tangents == q * q * q + 1, {{"tangents", tangents}});
    rep.add_check("secant_count", secants == q * q * q * q - q * q * q + q * q, {{"secants", secants}});
  }
  return rep;
}

bool on_hermitian(const Field& f, Elem b, AffinePoint p) {
  const auto x = f(p.x);
  const auto y = f(p.y);
  const auto B = f(b);
  return (y.conj() - y + (B - B.conj()) * x.pow(f.q() + 1)).is_zero();
}

std::vector<AffinePoint> hermitian_affine_points(const Field& f, Elem b) {
  std::vector<AffinePoint> out;
  for (Elem x : f.elements())
    for (Elem y : f.elements())
      if (on_hermitian(f, b, {x, y})) out.push_back({x, y});
  return out;
}

namespace {

// a^q x^{2q} + (b-b^q) x^{q+1} - a x^2, the part of the count equation
// that does not depend on (m, d)
std::vector<Elem> fixed_part(const Field& f, Elem a, Elem b) {
  const auto A = f(a);
  const auto c = f(b) - f(b).conj();
  std::vector<Elem> out(f.order());
  for (Elem xe : f.elements()) {
    const auto x = f(xe);
    out[xe.v] = A.conj() * x.pow(2ull * f.q()) + c * x.pow(f.q() + 1) - A * x.sq();
  }
  return out;
}

}  // namespace

std::uint32_t parabola_hermitian_count(const Field& f, Elem a, Elem b, Elem m, Elem d) {
  if (f.in_subfield(b)) throw ParameterError("Hermitian curve requires b outside GF(q)");
  const auto A = f(a);
  const auto B = f(b);
  const auto M = f(m);
  const auto D = f(d);
  std::uint32_t count = 0;
  for (Elem xe : f.elements()) {
    const auto x = f(xe);
    const auto value = A.conj() * x.pow(2ull * f.q()) + (B - B.conj()) * x.pow(f.q() + 1) + M.conj() * x.conj() -
                       A * x.sq() - M * x + D.conj() - D;
    if (value.is_zero()) ++count;
  }
  return count;
}

std::vector<std::uint32_t> parabola_count_table(const Field& f, Elem a, Elem b) {
  if (f.in_subfield(b)) throw ParameterError("Hermitian curve requires b outside GF(q)");
  const std::uint32_t Q = f.order();
  const auto fixed = fixed_part(f, a, b);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(Q) * Q, 0);
  std::vector<std::uint32_t> hist(Q);
  for (Elem m : f.elements()) {
    std::fill(hist.begin(), hist.end(), 0);
    const Elem mq = f.frobenius(m);
    for (Elem x : f.elements()) {
      const Elem v = f.sub(f.add(fixed[x.v], f.mul(mq, f.frobenius(x))), f.mul(m, x));
      ++hist[v.v];
    }
    // roots of v(x) + d^q - d = 0, i.e. v(x) = d - d^q
    for (Elem d : f.elements()) out[static_cast<std::size_t>(m.v) * Q + d.v] = hist[f.sub(d, f.frobenius(d)).v];
  }
  return out;
}

Parabola tangent_parabola(const Field& f, Elem a, Elem b, AffinePoint p) {
  if (!on_hermitian(f, b, p)) throw ParameterError("tangent_parabola: point is not on the Hermitian curve");
  const auto A = f(a);
  const auto B = f(b);
  const auto w = f(p.x);
  const auto z = f(p.y);
  const auto two = f(f.from_int(2));
  const auto m = -(two * A * w) + (B - B.conj()) * w.conj();
  const auto d = z.conj() + A * w.sq();
  return {m, d};
}

VerificationReport parabola_count_check(const Field& f, Elem a, Elem b) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.subject = "parabola_counts";
  rep.metadata = {{"a", a.v}, {"b", b.v}};
  const std::uint32_t Q = f.order();
  const std::uint64_t q = f.q();
  const auto table = parabola_count_table(f, a, b);
  bool counts_ok = true;
  bool sums_ok = true;
  for (std::uint32_t m = 0; m < Q; ++m) {
    std::uint64_t sum = 0;
    for (std::uint32_t d = 0; d < Q; ++d) {
      const auto c = table[static_cast<std::size_t>(m) * Q + d];
      ++rep.profile[c];
      sum += c;
      if (c != 1 && c != q + 1) {
        counts_ok = false;
        rep.add_witness({{"m", m}, {"d", d}, {"count", c}});
      }
    }
    if (sum != q * q * q) {
      sums_ok = false;
      rep.add_witness({{"m", m}, {"sum", sum}});
    }
  }
  rep.add_check("counts_in_1_q+1", counts_ok);
  rep.add_check("per_m_sum_q^3", sums_ok);
  rep.seconds = since(t0);
  return rep;
}

VerificationReport tangent_check(const Field& f, Elem a, Elem b) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.subject = "tangent_parabolas";
  rep.metadata = {{"a", a.v}, {"b", b.v}};
  const auto pts = hermitian_affine_points(f, b);
  bool through = true;
  bool unique = true;
  for (const auto& p : pts) {
    const auto [m, d] = tangent_parabola(f, a, b, p);
    const Elem y = f.add(f.add(f.mul(a, f.mul(p.x, p.x)), f.mul(m, p.x)), d);
    const bool passes = y == p.y;
    const auto count = parabola_hermitian_count(f, a, b, m, d);
    if (!passes) through = false;
    if (count != 1) unique = false;
    if (!passes || count != 1)
      rep.add_witness({{"point", {p.x.v, p.y.v}}, {"m", m.v}, {"d", d.v}, {"count", count}, {"through_point", passes}});
  }
  rep.metadata["points"] = pts.size();
  rep.add_check("passes_through_point", through);
  rep.add_check("meets_curve_once", unique);
  rep.seconds = since(t0);
  return rep;
}

}  // namespace unital

namespace unital {

VerificationReport model_unital_check(const PlaneModel& model, Elem b) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field& f = model.field();
  const PointSet classical = construct_hermitian(f, b);
  VerificationReport rep = assert_unital(f, classical, model.line_system());
  rep.subject = "model_unital";
  rep.metadata["model"] = model.to_json();
  rep.metadata["b"] = b.v;
  rep.add_check("contains_y_infinity", classical.contains(f, y_infinity(f)));

  std::vector<ProjPoint2> image;
  image.reserve(classical.size());
  for (const auto& p : classical.points(f)) {
    if (p.c[0] != f.one()) {
      image.push_back(p);
      continue;
    }
    const AffinePoint ap{p.c[1], p.c[2]};
    const AffinePoint mp = model.kind() == PlaneModel::Kind::a_model ? phi_map(f, model.a(), ap)
                                                                     : gamma_map(f, model.epsilon(), model.b(), ap);
    image.push_back(affine_point(f, mp.x, mp.y));
  }
  const PointSet image_set = PointSet::from_points(f, image);
  if (model.kind() == PlaneModel::Kind::a_model) {
    rep.add_check("phi_image_equals_bm_minus_a", image_set == construct_bm(f, f.neg(model.a()), b));
  } else {
    rep.add_check("gamma_image_equals_bt", image_set == construct_bt(f, model.epsilon()));
  }
  rep.seconds = since(t0);
  return rep;
}

VerificationReport field_check(const Field& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.subject = "field";
  rep.metadata = f.to_json();
  const auto els = f.elements();
  const std::uint64_t q = f.q();

  bool units = true;
  for (Elem x : els) {
    units = units && f.add(x, f.zero()) == x && f.mul(x, f.one()) == x && f.add(x, f.neg(x)) == f.zero();
    if (x != f.zero()) units = units && f.mul(x, f.inv(x)) == f.one();
  }
  rep.add_check("identities_and_inverses", units);

  bool commutative = true;
  bool frob_auto = true;
  for (Elem x : els)
    for (Elem y : els) {
      commutative = commutative && f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
      frob_auto = frob_auto && f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y)) &&
                  f.frobenius(f.mul(x, y)) == f.mul(f.frobenius(x), f.frobenius(y));
    }
  rep.add_check("commutative", commutative);
  rep.add_check("frobenius_automorphism", frob_auto);

  bool assoc = true;
  auto triple = [&](Elem x, Elem y, Elem z) {
    assoc = assoc && f.add(f.add(x, y), z) == f.add(x, f.add(y, z)) && f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) &&
            f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
  };
  if (f.order() <= 128) {
    for (Elem x : els)
      for (Elem y : els)
        for (Elem z : els) triple(x, y, z);
    rep.metadata["triples"] = "exhaustive";
  } else {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int i = 0; i < 1000000; ++i) triple(Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)});
    rep.metadata["triples"] = "sampled";
  }
  rep.add_check("associative_distributive", assoc);

  if (f.order() <= 4096) {
    const ArithmeticMode other = f.uses_tables() ? ArithmeticMode::polynomial : ArithmeticMode::tables;
    const Field g = Field::build(f.p(), f.e(), f.modulus(), f.order(), other);
    bool agree = true;
    for (Elem x : els)
      for (Elem y : els) agree = agree && f.mul(x, y) == g.mul(x, y) && f.add(x, y) == g.add(x, y);
    rep.add_check("table_and_polynomial_agree", agree);
  }

  bool involution = true;
  for (Elem x : els) involution = involution && f.frobenius(f.frobenius(x)) == x;
  rep.add_check("frobenius_involution", involution);

  const auto sub = f.subfield_elements();
  rep.add_check("subfield_size_q", sub.size() == q, {{"size", sub.size()}});
  std::vector<bool> trace_hit(f.order(), false), norm_hit(f.order(), false);
  bool into_sub = true;
  for (Elem x : els) {
    const Elem t = f.rel_trace(x), n = f.rel_norm(x);
    into_sub = into_sub && f.in_subfield(t) && f.in_subfield(n);
    trace_hit[t.v] = true;
    norm_hit[n.v] = true;
  }
  bool onto = into_sub;
  for (Elem c : sub) onto = onto && trace_hit[c.v] && norm_hit[c.v];
  rep.add_check("trace_norm_onto_subfield", onto);

  if (f.p() != 2) {
    std::uint64_t squares = 0;
    for (Elem x : sub)
      if (x != f.zero() && f.is_square(x, SquareDomain::subfield)) ++squares;
    rep.add_check("square_classes", squares == (q - 1) / 2, {{"nonzero_squares", squares}});
    const auto [eps, delta] = f.find_epsilon(Parity::odd);
    const Elem e2 = f.mul(eps, eps);
    std::uint64_t order = 1;
    for (Elem x = e2; x != f.one() && order < q; x = f.mul(x, e2)) ++order;
    rep.add_check("epsilon_conjugate_is_negative", f.frobenius(eps) == f.neg(eps));
    rep.add_check("epsilon_square_primitive_in_subfield", f.in_subfield(e2) && order == q - 1);
    rep.metadata["epsilon"] = eps.v;
  } else if (f.e() > 1 && f.e() % 2 == 1) {
    const auto [eps, delta] = f.find_epsilon(Parity::even);
    rep.add_check("delta_not_one_trace_one", *delta != f.one() && f.abs_trace(*delta) == f.one());
    rep.add_check("epsilon_root", f.add(f.add(f.mul(eps, eps), eps), *delta) == f.zero());
    rep.add_check("epsilon_conjugate_sum_one", f.add(f.frobenius(eps), eps) == f.one());
    bool sigma_ok = true;
    for (Elem x : sub) {
      sigma_ok = sigma_ok && f.sigma(f.sigma(x)) == f.mul(x, x);
      for (Elem y : sub)
        sigma_ok = sigma_ok && f.sigma(f.mul(x, y)) == f.mul(f.sigma(x), f.sigma(y)) &&
                   f.sigma(f.add(x, y)) == f.add(f.sigma(x), f.sigma(y));
    }
    rep.add_check("sigma_automorphism_squaring_twice", sigma_ok);
    rep.metadata["epsilon"] = eps.v;
    rep.metadata["delta"] = delta->v;
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace unital
