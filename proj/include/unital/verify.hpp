#pragma once

#include <vector>

#include "unital/model.hpp"
#include "unital/report.hpp"

namespace unital {

/// Histogram of |line ∩ S| over all lines of a plane model. Passes iff
/// every line meets S in 1 or q+1 points; offending lines become witnesses.
VerificationReport intersection_profile(const Field& f, const PointSet& s, const LineSystem& lines);

/// Unital test for a (q^3+1)-set: two-character with parameters 1 and q+1,
/// q^3+1 tangents and q^4-q^3+q^2 secants. Throws ParameterError on any
/// other cardinality.
VerificationReport assert_unital(const Field& f, const PointSet& s, const LineSystem& lines);

/// Affine Hermitian curve y^q - y + (b - b^q) x^{q+1} = 0.
bool on_hermitian(const Field& f, Elem b, AffinePoint p);
std::vector<AffinePoint> hermitian_affine_points(const Field& f, Elem b);

/// Number of common affine points of y = a x^2 + m x + d and the Hermitian
/// curve: roots x of a^q x^{2q} + (b-b^q) x^{q+1} + m^q x^q - a x^2 - m x + d^q - d.
std::uint32_t parabola_hermitian_count(const Field& f, Elem a, Elem b, Elem m, Elem d);

/// The same counts for every (m, d), indexed m * q^2 + d.
std::vector<std::uint32_t> parabola_count_table(const Field& f, Elem a, Elem b);

struct Parabola {
  Elem m;
  Elem d;
};

/// Parabola y = a x^2 + m x + d touching the Hermitian curve only at P:
/// m = -2aw + (b - b^q) w^q, d = z^q + a w^2.
Parabola tangent_parabola(const Field& f, Elem a, Elem b, AffinePoint p);

/// Every parabola meets the Hermitian curve in 1 or q+1 affine points and,
/// for each m, the counts over d sum to q^3.
VerificationReport parabola_count_check(const Field& f, Elem a, Elem b);

/// For each point of the Hermitian curve, its tangent parabola passes
/// through it and meets the curve nowhere else.
VerificationReport tangent_check(const Field& f, Elem a, Elem b);

/// The classical unital of parameter b inside the closure of a model plane:
/// unital test against the model's lines, then its image in the standard
/// plane (φ for A_a, γ for A'_eps) compared with U_{-a,b} or U_eps.
VerificationReport model_unital_check(const PlaneModel& model, Elem b);

/// Field axioms (exhaustive on triples up to order 128, a fixed sample of a
/// million triples beyond), Frobenius, subfield and square-class counts,
/// agreement of table and polynomial arithmetic, and the postconditions of
/// ε, δ and σ where they exist.
VerificationReport field_check(const Field& f);

}  // namespace unital
