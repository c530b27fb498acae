#pragma once

#include <cstdint>
#include <vector>

#include "unital/model.hpp"
#include "unital/report.hpp"

namespace unital {

/// Permutation of the q^4 affine points, point (ξ, η) at index ξ*q^2 + η.
using Perm = std::vector<std::uint16_t>;

/// Affinity of A_a: α_{u,v}(ξ,η) = (ξ+u, η - 2auξ + u^q(b-b^q)ξ + v),
/// β_λ(ξ,η) = (λξ, λ^2 η), or an explicit permutation.
struct ModelAffinity {
  enum class Kind { alpha, beta, composite };
  Kind kind = Kind::alpha;
  Elem u{};
  Elem v{};
  Elem lambda{};
  Perm perm;

  static ModelAffinity alpha(Elem u, Elem v) { return {Kind::alpha, u, v, {}, {}}; }
  static ModelAffinity beta(Elem lambda) { return {Kind::beta, {}, {}, lambda, {}}; }
  static ModelAffinity composite(Perm p) { return {Kind::composite, {}, {}, {}, std::move(p)}; }
};

/// The affinity group lives on A_a with the Hermitian parameter b.
struct GroupContext {
  Field field;
  Elem a;
  Elem b;
};

AffinePoint apply(const GroupContext& g, const ModelAffinity& f, AffinePoint p);
Perm to_perm(const GroupContext& g, const ModelAffinity& f);
Perm compose(const Perm& outer, const Perm& inner);
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t n);

/// Points of the Hermitian curve in A_a coordinates, i.e. the affine
/// zeros of η^q - η + a^q ξ^{2q} - a ξ^2 + (b-b^q) ξ^{q+1}.
std::vector<AffinePoint> hermitian_model_points(const GroupContext& g);

/// f(S) = S.
bool preserves(const GroupContext& g, const ModelAffinity& f, const std::vector<AffinePoint>& s);

struct GroupOptions {
  std::uint32_t max_q = 5;
};

/// Realizes every α_{u,v} ((u,v) on the curve) and β_λ (λ ∈ GF(q)*) as a
/// permutation and checks: S closed of order q^3 and faithful, S
/// non-Abelian when b ∉ GF(q), R cyclic of order q-1, S ∩ R trivial, S
/// normalized by R, |<S,R>| = q^3(q-1) and every element of <S,R>
/// preserving the curve. Throws VerificationError when the closure
/// outgrows 2 q^3 (q-1).
VerificationReport verify_group_structure(const Field& f, Elem a, Elem b, const GroupOptions& opt = {});

}  // namespace unital
