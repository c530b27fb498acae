#include "doctest.h"
#include "oracle.hpp"
#include "unital/curves.hpp"
#include "unital/unitals.hpp"
#include "unital/verify.hpp"

using namespace unital;

namespace {

// y^q - y - a^q x^{2q} + a x^2 + (b - b^q) x^{q+1} with schoolbook arithmetic.
std::uint32_t gamma_oracle(const Field& f, Elem a, Elem b, std::uint32_t x, std::uint32_t y) {
  const auto r = oracle::naive(f);
  const std::uint32_t q = f.q();
  std::uint32_t v = r.add(r.pow(y, q), r.neg(y));
  v = r.add(v, r.neg(r.mul(r.pow(a.v, q), r.pow(x, 2 * q))));
  v = r.add(v, r.mul(a.v, r.mul(x, x)));
  v = r.add(v, r.mul(r.add(b.v, r.neg(r.pow(b.v, q))), r.pow(x, q + 1)));
  return v;
}

}  // namespace

TEST_CASE("curve evaluation agrees with the reference") {
  const Field f = Field::build_q(3);
  for (Elem a : {Elem{0}, Elem{4}, Elem{7}})
    for (Elem b : {Elem{1}, Elem{3}})
      for (Elem x : f.elements())
        for (Elem y : f.elements()) REQUIRE(gamma_eval(f, a, b, x, y).v == gamma_oracle(f, a, b, x.v, y.v));
}

TEST_CASE("the curve contains the Buekenhout-Metz set") {
  for (unsigned q : {3u, 4u, 5u}) {
    const Field f = Field::build_q(q);
    for (Elem a : f.elements())
      for (Elem b : f.elements()) {
        const auto c = gamma_contains(f, a, b, construct_bm(f, a, b));
        REQUIRE(c.affine_points == q * q * q);
        REQUIRE(c.on_curve == c.affine_points);
        CHECK(c.fraction() == 1.0);
      }
  }
}

TEST_CASE("a = 0 gives the Hermitian curve") {
  const Field f = Field::build_q(4);
  for (Elem b : f.elements()) {
    if (f.in_subfield(b)) continue;
    for (Elem x : f.elements())
      for (Elem y : f.elements()) CHECK((gamma_eval(f, f.zero(), b, x, y) == f.zero()) == on_hermitian(f, b, {x, y}));
  }
  CHECK(gamma_degree(f, f.zero()) == 5);
  CHECK(gamma_degree(f, f.one()) == 8);
}

TEST_CASE("even q: the sign of a does not matter") {
  const Field f = Field::build_q(4);
  for (Elem a : f.elements())
    for (Elem b : f.elements())
      CHECK(gamma_contains(f, a, b, construct_bm(f, a, b)).on_curve ==
            gamma_contains(f, a, b, construct_bm(f, f.neg(a), b)).on_curve);
}

TEST_CASE("odd q: the curve does not contain the set for -a") {
  const Field f = Field::build_q(3);
  const Elem a{4};
  const auto c = gamma_contains(f, a, f.one(), construct_bm(f, f.neg(a), f.one()));
  CHECK(c.on_curve < c.affine_points);
}

TEST_CASE("birational transfer") {
  for (unsigned q : {3u, 4u, 5u}) {
    const Field f = Field::build_q(q);
    for (Elem a : {f.zero(), f.one(), Elem{q + 2}})
      for (Elem b : f.elements()) {
        if (f.in_subfield(b)) continue;
        const auto rep = birational_check(f, a, b);
        REQUIRE(rep.pass());
        // reading it backwards: φ^{-1} carries the Hermitian curve onto the curve
        auto back = hermitian_affine_points(f, b);
        for (auto& p : back) p = phi_inv(f, a, p);
        std::sort(back.begin(), back.end());
        CHECK(back == gamma_affine_zeros(f, a, b));
        break;
      }
  }
  const Field f = Field::build_q(3);
  const auto zeros = gamma_affine_zeros(f, f.zero(), Elem{3});
  CHECK(birational_transfer(f, f.zero(), zeros) == zeros);
  const auto rep = curve_check(f, Elem{4}, Elem{3});
  CHECK(rep.pass());
}

TEST_CASE("monomial order") {
  const auto m = monomials(2);
  const std::vector<std::array<unsigned, 3>> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(m == expected);
  CHECK(monomials(6).size() == 28);
}

TEST_CASE("interpolation nullity") {
  const Field f = Field::build_q(3);
  const auto line = PointSet::from_points(f, points_on(f, ProjLine2{{Elem{1}, Elem{2}, Elem{5}}}));
  const auto ns = interpolation_nullspace(f, line, 1);
  REQUIRE(ns.basis.size() == 1);
  CHECK(proportional(f, ns.basis[0], {Elem{1}, Elem{2}, Elem{5}}));

  const Elem a{4};
  const Elem b{1};
  REQUIRE(ebert_check(f, a, b));
  const auto u = construct_bm(f, a, b);
  for (unsigned d = 1; d <= 5; ++d) CHECK(interpolation_nullity(f, u, d) == 0);
  // 28 points against deg^2 = 36: Bezout does not force uniqueness at q=3
  const auto top = interpolation_nullspace(f, u, 6);
  CHECK(top.basis.size() == 2);
  CHECK(in_span(f, top.basis, homogenized_gamma(f, a, b)));
  // the curve equation vanishes on every point of the set
  const auto g = homogenized_gamma(f, a, b);
  const auto mons = monomials(6);
  for (const auto& p : u.points(f)) {
    Elem s = f.zero();
    for (std::size_t i = 0; i < mons.size(); ++i) {
      Elem term = g[i];
      for (std::size_t k = 0; k < 3; ++k) term = f.mul(term, f.pow(p.c[k], mons[i][k]));
      s = f.add(s, term);
    }
    CHECK(s == f.zero());
  }
  InterpolationOptions tight;
  tight.max_columns = 10;
  CHECK_THROWS_AS(interpolation_nullity(f, u, 6, tight), ParameterError);
  CHECK_THROWS_AS(interpolation_nullity(f, u, 0), ParameterError);
}

TEST_CASE("interpolation nullity against naive elimination") {
  const Field f = Field::build_q(3);
  const auto nf = oracle::naive(f);
  for (auto [a, b] : {std::pair{Elem{4}, Elem{1}}, std::pair{Elem{1}, Elem{3}}, std::pair{Elem{0}, Elem{3}}}) {
    const auto u = construct_bm(f, a, b);
    for (unsigned d = 1; d <= 7; ++d) CHECK(interpolation_nullity(f, u, d) == oracle::brute_nullity(nf, u.points(f), d));
  }
  CHECK(oracle::brute_nullity(nf, construct_bm(f, Elem{4}, Elem{1}).points(f), 6) == 2);
}

TEST_CASE("minimum degree report") {
  const Field f3 = Field::build_q(3);
  const auto small = min_degree_check(f3, Elem{4}, Elem{1});
  CHECK(small.metadata["nullity"]["5"] == 0);
  CHECK(small.metadata["nullity"]["6"] == 2);
  CHECK(small.metadata["curve_degree"] == 6);
  CHECK(small.find("curve_equation_in_nullspace")->pass);
  CHECK_FALSE(small.find("unique_form_at_curve_degree")->pass);

  for (unsigned q : {4u, 5u}) {
    const Field f = Field::build_q(q);
    std::size_t checked = 0;
    for (Elem a : f.elements())
      for (Elem b : f.elements()) {
        if (a == f.zero() || !ebert_check(f, a, b) || checked == 3) continue;
        const auto rep = min_degree_check(f, a, b);
        CHECK(rep.pass());
        CHECK(rep.metadata["nullity"][std::to_string(2 * q)] == 1);
        ++checked;
      }
    CHECK(checked == 3);
  }
}

TEST_CASE("linear algebra") {
  const Field f = Field::build_q(3);
  Matrix m(2, 3);
  m.at(0, 0) = Elem{1};
  m.at(0, 1) = Elem{2};
  m.at(1, 0) = Elem{2};
  m.at(1, 1) = Elem{1};  // second row = 2 * first row over GF(3)
  const auto ns = nullspace(f, m);
  CHECK(ns.rank == 1);
  CHECK(ns.basis.size() == 2);
  for (const auto& v : ns.basis) {
    Elem s = f.zero();
    for (std::size_t c = 0; c < 3; ++c) s = f.add(s, f.mul(m.at(0, c), v[c]));
    CHECK(s == f.zero());
  }
  CHECK_FALSE(proportional(f, {Elem{0}, Elem{0}}, {Elem{0}, Elem{0}}));
  CHECK(proportional(f, {Elem{2}, Elem{1}}, {Elem{1}, Elem{2}}));  // 2 * 2 = 1 in GF(3)
  CHECK(in_span(f, ns.basis, {Elem{1}, Elem{1}, Elem{0}}));
  CHECK_FALSE(in_span(f, ns.basis, {Elem{1}, Elem{0}, Elem{0}}));
}
