#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "unital/unitals.hpp"
#include "unital/verify.hpp"

using namespace unital;

namespace {

// Points (x, a x^2 + m x + d) on y^q - y + (b - b^q) x^{q+1} = 0, counted with
// the schoolbook arithmetic.
std::uint32_t count_oracle(const Field& f, Elem a, Elem b, Elem m, Elem d) {
  const auto ref = oracle::naive(f);
  const std::uint32_t q = f.q();
  const std::uint32_t c = ref.add(b.v, ref.neg(ref.pow(b.v, q)));
  std::uint32_t n = 0;
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const std::uint32_t y = ref.add(ref.add(ref.mul(a.v, ref.mul(x, x)), ref.mul(m.v, x)), d.v);
    const std::uint32_t v = ref.add(ref.add(ref.pow(y, q), ref.neg(y)), ref.mul(c, ref.pow(x, q + 1)));
    n += v == 0 ? 1 : 0;
  }
  return n;
}

Elem first_outside_subfield(const Field& f) {
  for (Elem x : f.elements())
    if (!f.in_subfield(x)) return x;
  return {};
}

}  // namespace

TEST_CASE("intersection profile of the classical unital") {
  for (unsigned q : {3u, 4u, 5u}) {
    const Field f = Field::build_q(q);
    const Elem b = first_outside_subfield(f);
    const auto rep = assert_unital(f, construct_hermitian(f, b), standard_lines(f));
    CHECK(rep.pass());
    const std::uint64_t q3 = q * q * q;
    CHECK(rep.profile == std::map<std::uint32_t, std::uint64_t>{{1, q3 + 1}, {q + 1, q3 * q - q3 + q * q}});
    CHECK(rep.witnesses.empty());
  }
}

TEST_CASE("intersection profile of a line") {
  const Field f = Field::build_q(3);
  const auto l = points_on(f, ProjLine2{{f.zero(), f.one(), Elem{2}}});
  const auto s = PointSet::from_points(f, l);
  const auto rep = intersection_profile(f, s, standard_lines(f));
  CHECK(rep.profile == std::map<std::uint32_t, std::uint64_t>{{10, 1}, {1, 90}});
  CHECK_FALSE(rep.pass());
  CHECK(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0]["intersection"] == 10);
  CHECK_THROWS_AS(assert_unital(f, s, standard_lines(f)), ParameterError);
  std::uint64_t total = 0;
  for (auto [k, n] : rep.profile) total += n;
  CHECK(total == 91);
}

TEST_CASE("invalid Buekenhout-Metz pairs fail with a witness line") {
  const Field f = Field::build_q(3);
  const auto lines = standard_lines(f);
  int failures = 0;
  for (Elem a : f.elements())
    for (Elem b : f.elements()) {
      const auto rep = assert_unital(f, construct_bm(f, a, b), lines);
      REQUIRE(rep.pass() == ebert_check(f, a, b));
      if (!rep.pass()) {
        ++failures;
        REQUIRE_FALSE(rep.witnesses.empty());
        const auto& w = rep.witnesses[0];
        CHECK(w["intersection"] != 1);
        CHECK(w["intersection"] != 4);
        CHECK(w["model"] == "standard");
      }
    }
  CHECK(failures > 0);
}

TEST_CASE("seeded random 28-set is not a unital") {
  const Field f = Field::build_q(3);
  const auto plane = enumerate(f);
  std::vector<std::uint32_t> codes;
  for (const auto& p : plane.points) codes.push_back(pack(f, p));
  std::mt19937_64 rng(7);
  std::shuffle(codes.begin(), codes.end(), rng);
  codes.resize(28);
  const PointSet s(codes);
  const auto rep = assert_unital(f, s, standard_lines(f));
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.witnesses.empty());
  CHECK(rep.witnesses.size() <= VerificationReport::kMaxWitnesses);
}

TEST_CASE("report serialization") {
  const Field f = Field::build_q(3);
  const auto rep = assert_unital(f, construct_hermitian(f, Elem{3}), standard_lines(f));
  const auto j = rep.to_json();
  CHECK(j["profile"] == nlohmann::json::parse(R"({"1":28,"4":63})"));
  CHECK(j["verdict"] == "pass");
  CHECK(j["witnesses"].empty());
  CHECK_FALSE(j.contains("seconds"));
  CHECK(rep.to_json(true).contains("seconds"));
  const auto csv = rep.to_csv();
  CHECK(csv.rfind("line_kind,intersection_size,count\n", 0) == 0);
  CHECK(csv.find("infinity,1,1\n") != std::string::npos);
}

TEST_CASE("parabola counts against the reference") {
  for (unsigned q : {3u, 4u}) {
    const Field f = Field::build_q(q);
    for (Elem b : f.elements()) {
      if (f.in_subfield(b)) continue;
      for (Elem a : {f.zero(), f.one(), Elem{q + 1}}) {
        const auto table = parabola_count_table(f, a, b);
        for (Elem m : f.elements())
          for (Elem d : f.elements()) {
            const auto direct = parabola_hermitian_count(f, a, b, m, d);
            REQUIRE(direct == table[m.v * f.order() + d.v]);
            if (m.v % 3 == 0) REQUIRE(direct == count_oracle(f, a, b, m, d));
          }
      }
      break;
    }
  }
  CHECK_THROWS_AS(parabola_hermitian_count(Field::build_q(3), Elem{0}, Elem{1}, Elem{0}, Elem{0}), ParameterError);
}

TEST_CASE("parabola counts are 1 or q+1 for valid pairs") {
  for (unsigned q : {3u, 4u, 5u}) {
    const Field f = Field::build_q(q);
    int checked = 0;
    for (Elem a : f.elements())
      for (Elem b : f.elements()) {
        if (f.in_subfield(b) || !ebert_check(f, a, b)) continue;
        if (++checked > 6) break;
        const auto rep = parabola_count_check(f, a, b);
        CHECK(rep.pass());
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("tangent parabolas") {
  for (unsigned q : {3u, 4u, 5u}) {
    const Field f = Field::build_q(q);
    int checked = 0;
    for (Elem a : f.elements())
      for (Elem b : f.elements()) {
        if (f.in_subfield(b) || !ebert_check(f, a, b)) continue;
        if (++checked > 4) break;
        const auto rep = tangent_check(f, a, b);
        CHECK(rep.pass());
        CHECK(rep.metadata["points"] == q * q * q);
        for (const auto& p : hermitian_affine_points(f, b)) {
          const auto [m, d] = tangent_parabola(f, a, b, p);
          const Elem y = f.add(f.add(f.mul(a, f.mul(p.x, p.x)), f.mul(m, p.x)), d);
          REQUIRE(y == p.y);
          if (q % 2 == 0) REQUIRE(m == f.mul(f.add(b, f.frobenius(b)), f.frobenius(p.x)));
        }
      }
  }
  // a = 0, P = (0, 0): the tangent is y = 0, which meets the curve only at the origin
  const Field f = Field::build_q(3);
  const auto [m, d] = tangent_parabola(f, f.zero(), Elem{3}, {f.zero(), f.zero()});
  CHECK(m == f.zero());
  CHECK(d == f.zero());
  CHECK(parabola_hermitian_count(f, f.zero(), Elem{3}, m, d) == 1);
  CHECK_THROWS_AS(tangent_parabola(f, f.zero(), Elem{3}, {f.zero(), Elem{3}}), ParameterError);
}
