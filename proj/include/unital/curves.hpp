#pragma once

#include <array>
#include <vector>

#include "unital/linalg.hpp"
#include "unital/model.hpp"
#include "unital/report.hpp"

namespace unital {

/// y^q - y - a^q x^{2q} + a x^2 + (b - b^q) x^{q+1}. Vanishes on the affine
/// points of the Buekenhout-Metz set for (a, b); a = 0 gives the Hermitian
/// curve.
Elem gamma_eval(const Field& f, Elem a, Elem b, Elem x, Elem y);

/// Degree of the curve: 2q when a != 0, else q+1.
unsigned gamma_degree(const Field& f, Elem a);

struct Containment {
  std::size_t on_curve = 0;
  std::size_t affine_points = 0;
  double fraction() const { return affine_points ? static_cast<double>(on_curve) / affine_points : 1.0; }
};

/// How many affine points (1, x, y) of s lie on the curve.
Containment gamma_contains(const Field& f, Elem a, Elem b, const PointSet& s);

std::vector<AffinePoint> gamma_affine_zeros(const Field& f, Elem a, Elem b);

/// (x, y) -> (x, y - a x^2) applied pointwise; result sorted.
std::vector<AffinePoint> birational_transfer(const Field& f, Elem a, const std::vector<AffinePoint>& s);

/// The transfer maps the affine zeros of the curve bijectively onto the
/// affine zeros of y^q - y + (b - b^q) x^{q+1}.
VerificationReport birational_check(const Field& f, Elem a, Elem b);

/// Exponents (e0, e1, e2) of degree-d monomials in x0, x1, x2, graded
/// lexicographic: e0 descending, then e1 descending.
std::vector<std::array<unsigned, 3>> monomials(unsigned degree);

/// Coefficients of the homogenized curve equation over monomials(degree).
std::vector<Elem> homogenized_gamma(const Field& f, Elem a, Elem b);

struct InterpolationOptions {
  std::size_t max_columns = 4096;
};

/// Forms of degree d vanishing on every point of s.
Nullspace interpolation_nullspace(const Field& f, const PointSet& s, unsigned degree,
                                  const InterpolationOptions& opt = {});
std::size_t interpolation_nullity(const Field& f, const PointSet& s, unsigned degree,
                                  const InterpolationOptions& opt = {});

/// For the Buekenhout-Metz set of (a, b): no form of degree below the curve
/// degree vanishes on it, and at that degree the vanishing forms are the
/// multiples of the curve equation.
VerificationReport min_degree_check(const Field& f, Elem a, Elem b);

/// Containment of the Buekenhout-Metz set plus the birational transfer.
VerificationReport curve_check(const Field& f, Elem a, Elem b);

nlohmann::json form_to_json(const std::vector<Elem>& coeffs, unsigned degree);

}  // namespace unital
