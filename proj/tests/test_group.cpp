#include <set>

#include "doctest.h"
#include "unital/group.hpp"
#include "unital/unitals.hpp"

using namespace unital;

namespace {

bool check_named(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("affinity identities") {
  const Field f = Field::build(5, 1, std::vector<unsigned>{3, 0, 1});
  const GroupContext g{f, f.one(), Elem{5}};
  const auto id = identity_perm(625);
  CHECK(to_perm(g, ModelAffinity::beta(f.one())) == id);
  CHECK(to_perm(g, ModelAffinity::alpha(f.zero(), f.zero())) == id);
  const auto curve = hermitian_model_points(g);
  REQUIRE(curve.size() == 125);
  for (const auto& [u, v] : curve)
    for (Elem v2 : f.subfield_elements()) {
      // (0, v2) lies on the curve exactly when v2 ∈ GF(q)
      const auto lhs = compose(to_perm(g, ModelAffinity::alpha(u, v)), to_perm(g, ModelAffinity::alpha(f.zero(), v2)));
      REQUIRE(lhs == to_perm(g, ModelAffinity::alpha(u, f.add(v, v2))));
    }
  const auto p = to_perm(g, ModelAffinity::alpha(curve[7].x, curve[7].y));
  CHECK(compose(p, inverse(p)) == id);
  CHECK(to_perm(g, ModelAffinity::composite(p)) == p);
}

TEST_CASE("generators preserve the curve") {
  for (unsigned q : {3u, 4u, 5u}) {
    const Field f = Field::build_q(q);
    for (Elem a : {f.zero(), f.one(), Elem{q + 1}})
      for (Elem b : f.elements()) {
        if (f.in_subfield(b)) continue;
        const GroupContext g{f, a, b};
        const auto curve = hermitian_model_points(g);
        REQUIRE(curve.size() == q * q * q);
        for (const auto& [u, v] : curve) REQUIRE(preserves(g, ModelAffinity::alpha(u, v), curve));
        for (Elem l : f.subfield_elements())
          if (l != f.zero()) REQUIRE(preserves(g, ModelAffinity::beta(l), curve));
        break;
      }
  }
}

TEST_CASE("translation without the cross term does not preserve the curve") {
  const Field f = Field::build_q(3);
  const Elem a = f.one();
  const Elem b{3};
  const GroupContext g{f, a, b};
  const auto curve = hermitian_model_points(g);
  Perm naive(f.order() * f.order());
  for (Elem x : f.elements())
    for (Elem y : f.elements()) naive[x.v * f.order() + y.v] = static_cast<std::uint16_t>(f.add(x, f.one()).v * f.order() + y.v);
  CHECK_FALSE(preserves(g, ModelAffinity::composite(naive), curve));
}

TEST_CASE("group structure at q=4") {
  const Field f = Field::build_q(4);
  Elem a{}, b{};
  bool found = false;
  for (Elem x : f.elements()) {
    for (Elem y : f.elements())
      if (x != f.zero() && !f.in_subfield(y) && ebert_check(f, x, y)) {
        a = x;
        b = y;
        found = true;
        break;
      }
    if (found) break;
  }
  REQUIRE(found);
  const auto rep = verify_group_structure(f, a, b);
  CHECK(rep.pass());
  CHECK(rep.metadata["orders"] == nlohmann::json::parse(R"({"S":64,"R":3,"G":192})"));
}

TEST_CASE("group structure at q=5 with a commutator witness") {
  const Field f = Field::build(5, 1, std::vector<unsigned>{3, 0, 1});
  const auto rep = verify_group_structure(f, f.one(), Elem{5});
  CHECK(rep.pass());
  CHECK(check_named(rep, "S_non_abelian"));
  const auto w = rep.metadata["commutator_witness"];
  REQUIRE(w.is_object());
  // (b - b^q)(u^q u' - u'^q u) != 0 for the reported u, u'
  const Elem u = f.element(w["alpha"][0].get<std::uint32_t>());
  const Elem u2 = f.element(w["alpha_prime"][0].get<std::uint32_t>());
  const Elem c = f.sub(Elem{5}, f.frobenius(Elem{5}));
  CHECK(f.mul(c, f.sub(f.mul(f.frobenius(u), u2), f.mul(f.frobenius(u2), u))) != f.zero());
}

TEST_CASE("classical case at q=3") {
  const Field f = Field::build_q(3);
  const auto rep = verify_group_structure(f, f.zero(), Elem{3});
  CHECK(rep.pass());
  CHECK(check_named(rep, "S_non_abelian"));
  CHECK(rep.metadata["orders"]["G"] == 54);
}

TEST_CASE("b in GF(q) makes S abelian") {
  const Field f = Field::build_q(3);
  const auto rep = verify_group_structure(f, Elem{4}, f.one());
  CHECK(rep.pass());
  CHECK(check_named(rep, "S_abelian_for_b_in_GFq"));
  CHECK(rep.metadata["S_abelian"] == true);
}

TEST_CASE("group preconditions") {
  CHECK_THROWS_AS(verify_group_structure(Field::build_q(7), Elem{0}, Elem{7}), ParameterError);
  const Field f = Field::build_q(3);
  CHECK_THROWS_AS(verify_group_structure(f, Elem{1}, Elem{1}), ParameterError);
}

TEST_CASE("permutation realization is faithful") {
  for (unsigned q : {3u, 4u}) {
    const Field f = Field::build_q(q);
    const Elem b = q == 3 ? Elem{3} : Elem{2};
    REQUIRE_FALSE(f.in_subfield(b));
    const GroupContext g{f, f.one(), b};
    std::set<Perm> seen;
    const auto curve = hermitian_model_points(g);
    for (const auto& [u, v] : curve) seen.insert(to_perm(g, ModelAffinity::alpha(u, v)));
    CHECK(seen.size() == curve.size());
  }
}
