#include "unital/group.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_set>

#include "unital/unitals.hpp"
#include "unital/verify.hpp"

namespace unital {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // a prefix of the images pins down an affinity; equality settles the rest
    std::size_t h = 1469598103934665603ull;
    const std::size_t n = std::min<std::size_t>(p.size(), 64);
    for (std::size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ull;
    return h;
  }
};

using PermSet = std::unordered_set<Perm, PermHash>;

std::size_t index_of(const Field& f, AffinePoint p) { return static_cast<std::size_t>(p.x.v) * f.order() + p.y.v; }

AffinePoint point_at(const Field& f, std::size_t i) {
  return {Elem{static_cast<std::uint32_t>(i / f.order())}, Elem{static_cast<std::uint32_t>(i % f.order())}};
}

std::vector<std::uint8_t> affine_mask(const Field& f, const std::vector<AffinePoint>& s) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(f.order()) * f.order(), 0);
  for (const auto& p : s) m[index_of(f, p)] = 1;
  return m;
}

bool perm_preserves(const Perm& p, const std::vector<std::uint8_t>& mask) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (mask[i] && !mask[p[i]]) return false;
  return true;
}

}  // namespace

AffinePoint apply(const GroupContext& g, const ModelAffinity& aff, AffinePoint p) {
  const Field& f = g.field;
  switch (aff.kind) {
    case ModelAffinity::Kind::alpha: {
      const auto xi = f(p.x);
      const auto u = f(aff.u);
      const auto c = f(g.b) - f(g.b).conj();
      const auto two_a = f(f.from_int(2)) * f(g.a);
      const auto eta = f(p.y) - two_a * u * xi + u.conj() * c * xi + f(aff.v);
      return {(xi + u).elem(), eta.elem()};
    }
    case ModelAffinity::Kind::beta:
      return {f.mul(aff.lambda, p.x), f.mul(f.mul(aff.lambda, aff.lambda), p.y)};
    case ModelAffinity::Kind::composite:
      return point_at(f, aff.perm.at(index_of(f, p)));
  }
  throw ParameterError("bad affinity");
}

Perm to_perm(const GroupContext& g, const ModelAffinity& aff) {
  if (aff.kind == ModelAffinity::Kind::composite) return aff.perm;
  const Field& f = g.field;
  const std::size_t n = static_cast<std::size_t>(f.order()) * f.order();
  if (n > 65536) throw ParameterError("permutation realization requires q^4 <= 65536");
  Perm out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint16_t>(index_of(f, apply(g, aff, point_at(f, i))));
  return out;
}

Perm compose(const Perm& outer, const Perm& inner) {
  Perm out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint16_t>(i);
  return out;
}

Perm identity_perm(std::size_t n) {
  Perm out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint16_t>(i);
  return out;
}

std::vector<AffinePoint> hermitian_model_points(const GroupContext& g) {
  const Field& f = g.field;
  const auto A = f(g.a);
  const auto c = f(g.b) - f(g.b).conj();
  std::vector<AffinePoint> out;
  for (Elem xe : f.elements()) {
    const auto xi = f(xe);
    const auto rest = A.conj() * xi.pow(2ull * f.q()) - A * xi.sq() + c * xi.pow(f.q() + 1);
    for (Elem ye : f.elements()) {
      const auto eta = f(ye);
      if ((eta.conj() - eta + rest).is_zero()) out.push_back({xe, ye});
    }
  }
  return out;
}

bool preserves(const GroupContext& g, const ModelAffinity& aff, const std::vector<AffinePoint>& s) {
  const auto mask = affine_mask(g.field, s);
  for (const auto& p : s)
    if (!mask[index_of(g.field, apply(g, aff, p))]) return false;
  return true;
}

VerificationReport verify_group_structure(const Field& f, Elem a, Elem b, const GroupOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (f.q() > opt.max_q)
    throw ParameterError("group check: q = " + std::to_string(f.q()) + " exceeds bound " + std::to_string(opt.max_q));
  const bool b_outside = !f.in_subfield(b);
  if (!b_outside && !ebert_check(f, a, b))
    throw ParameterError("group check requires b outside GF(q) or an Ebert-valid pair");

  const GroupContext g{f, a, b};
  const std::uint64_t q = f.q();
  const std::size_t n = static_cast<std::size_t>(f.order()) * f.order();
  VerificationReport rep;
  rep.subject = "group";
  rep.metadata = {{"a", a.v}, {"b", b.v}};

  const auto curve = hermitian_model_points(g);
  const auto mask = affine_mask(f, curve);
  rep.add_check("curve_points_q^3", curve.size() == q * q * q, {{"points", curve.size()}});
  if (b_outside) {
    // same set as φ applied to the ambient Hermitian curve
    std::vector<AffinePoint> mapped;
    for (const auto& p : hermitian_affine_points(f, b)) mapped.push_back(phi_map(f, a, p));
    std::sort(mapped.begin(), mapped.end());
    rep.add_check("curve_is_phi_image", mapped == curve);
  }

  const Perm id = identity_perm(n);

  // S
  std::vector<Perm> s_elems;
  std::vector<AffinePoint> s_params;
  for (const auto& p : curve) {
    s_elems.push_back(to_perm(g, ModelAffinity::alpha(p.x, p.y)));
    s_params.push_back(p);
  }
  PermSet s_set(s_elems.begin(), s_elems.end());
  rep.add_check("S_faithful", s_set.size() == s_elems.size());
  rep.add_check("S_order_q^3", s_set.size() == q * q * q, {{"order", s_set.size()}});
  rep.add_check("S_contains_identity", s_set.count(id) == 1);
  bool s_preserves = true;
  for (const auto& s : s_elems) s_preserves = s_preserves && perm_preserves(s, mask);
  rep.add_check("S_preserves_curve", s_preserves);

  bool s_closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting;
  for (std::size_t i = 0; i < s_elems.size() && s_closed; ++i) {
    for (std::size_t j = 0; j < s_elems.size(); ++j) {
      const Perm ij = compose(s_elems[i], s_elems[j]);
      if (!s_set.count(ij)) {
        s_closed = false;
        rep.add_witness({{"problem", "S not closed"}, {"alpha", {s_params[i].x.v, s_params[i].y.v}},
                         {"alpha_prime", {s_params[j].x.v, s_params[j].y.v}}});
        break;
      }
      if (!noncommuting && j > i && ij != compose(s_elems[j], s_elems[i])) noncommuting = std::make_pair(i, j);
    }
  }
  rep.add_check("S_closed", s_closed);
  nlohmann::json commutator = nullptr;
  if (noncommuting) {
    const auto& [i, j] = *noncommuting;
    commutator = {{"alpha", {s_params[i].x.v, s_params[i].y.v}}, {"alpha_prime", {s_params[j].x.v, s_params[j].y.v}}};
  }
  rep.metadata["S_abelian"] = !noncommuting.has_value();
  rep.metadata["commutator_witness"] = commutator;
  // the commutator of α_{u,v}, α_{u',v'} is governed by (b - b^q)(u^q u' - u'^q u)
  if (b_outside)
    rep.add_check("S_non_abelian", noncommuting.has_value(), commutator);
  else
    rep.add_check("S_abelian_for_b_in_GFq", !noncommuting.has_value());

  // R
  std::vector<Perm> r_elems;
  for (Elem lambda : f.subfield_elements())
    if (lambda != f.zero()) r_elems.push_back(to_perm(g, ModelAffinity::beta(lambda)));
  PermSet r_set(r_elems.begin(), r_elems.end());
  rep.add_check("R_order_q-1", r_set.size() == q - 1, {{"order", r_set.size()}});
  bool r_closed = true;
  for (const auto& x : r_elems)
    for (const auto& y : r_elems) r_closed = r_closed && r_set.count(compose(x, y)) == 1;
  rep.add_check("R_closed", r_closed);
  std::size_t max_order = 0;
  for (const auto& r : r_elems) {
    std::size_t k = 1;
    Perm cur = r;
    while (cur != id && k <= r_elems.size()) {
      cur = compose(r, cur);
      ++k;
    }
    max_order = std::max(max_order, k);
  }
  rep.add_check("R_cyclic", max_order == q - 1, {{"max_element_order", max_order}});
  bool r_preserves = true;
  for (const auto& r : r_elems) r_preserves = r_preserves && perm_preserves(r, mask);
  rep.add_check("R_preserves_curve", r_preserves);

  std::size_t common = 0;
  for (const auto& r : r_elems) common += s_set.count(r);
  rep.add_check("S_cap_R_trivial", common == 1, {{"common", common}});

  bool normal = true;
  for (const auto& r : r_elems) {
    const Perm r_inv = inverse(r);
    for (const auto& s : s_elems) {
      if (!s_set.count(compose(r, compose(s, r_inv)))) {
        normal = false;
        break;
      }
    }
    if (!normal) break;
  }
  rep.add_check("S_normal", normal);

  // <S, R> by breadth-first closure over the generators
  std::vector<const Perm*> gens;
  for (const auto& s : s_elems) gens.push_back(&s);
  for (const auto& r : r_elems) gens.push_back(&r);
  const std::uint64_t target = q * q * q * (q - 1);
  const std::uint64_t cap = 2 * target;
  PermSet group{id};
  std::deque<Perm> queue{id};
  bool all_preserve = true;
  while (!queue.empty()) {
    const Perm cur = std::move(queue.front());
    queue.pop_front();
    all_preserve = all_preserve && perm_preserves(cur, mask);
    for (const Perm* gen : gens) {
      Perm next = compose(*gen, cur);
      if (group.insert(next).second) {
        if (group.size() > cap)
          throw VerificationError("group closure exceeded " + std::to_string(cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }
  rep.add_check("G_order_q^3(q-1)", group.size() == target, {{"order", group.size()}});
  rep.add_check("G_preserves_curve", all_preserve);
  rep.metadata["orders"] = {{"S", s_set.size()}, {"R", r_set.size()}, {"G", group.size()}};
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace unital
