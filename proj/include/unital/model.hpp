#pragma once

#include <vector>

#include "unital/incidence.hpp"
#include "unital/report.hpp"

namespace unital {

struct AffinePoint {
  Elem x;
  Elem y;
  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

/// Point of the projective closure of a model plane. Infinite points are
/// shared with the ambient plane: direction m is (0,1,m), the vertical
/// direction is Y∞.
struct ModelPoint {
  enum class Kind { affine, direction, vertical };
  Kind kind = Kind::affine;
  Elem xi{};
  Elem eta{};
  Elem m{};

  static ModelPoint affine(Elem xi, Elem eta) { return {Kind::affine, xi, eta, {}}; }
  static ModelPoint direction(Elem m) { return {Kind::direction, {}, {}, m}; }
  static ModelPoint vertical() { return {Kind::vertical, {}, {}, {}}; }
  friend auto operator<=>(const ModelPoint&, const ModelPoint&) = default;
};

struct ModelLine {
  enum class Kind { vertical, curve, infinity };
  Kind kind = Kind::curve;
  Elem k{};
  Elem m{};
  Elem d{};

  static ModelLine vertical(Elem k) { return {Kind::vertical, k, {}, {}}; }
  static ModelLine curve(Elem m, Elem d) { return {Kind::curve, {}, m, d}; }
  static ModelLine infinity() { return {Kind::infinity, {}, {}, {}}; }
  friend auto operator<=>(const ModelLine&, const ModelLine&) = default;
};

ProjPoint2 to_ambient(const Field& f, const ModelPoint& p);
ModelPoint from_ambient(const Field& f, const ProjPoint2& p);

/// (x, y) -> (x, y - a x^2). Sends the lines of A_a to standard lines.
AffinePoint phi_map(const Field& f, Elem a, AffinePoint p);
/// (x, y) -> (x, y + a x^2). Sends standard lines to the lines of A_a.
AffinePoint phi_inv(const Field& f, Elem a, AffinePoint p);
/// (x, y) -> (x, y + bt_graph(x) + b x^{q+1}); an involution in
/// characteristic 2.
AffinePoint gamma_map(const Field& f, Elem epsilon, Elem b, AffinePoint p);

/// An affine plane on the points of AG(2,q^2) whose lines are the verticals
/// x = k and the graphs y = F(x) + m x + d, completed projectively.
/// F(x) = a x^2 for A_a and bt_graph(x) + b x^{q+1} for A'_eps.
class PlaneModel {
 public:
  enum class Kind { a_model, eps_model };

  /// A_a; a = 0 reproduces the standard plane.
  static PlaneModel a_model(const Field& f, Elem a);
  static PlaneModel eps_model(const Field& f, Elem epsilon, Elem b);

  Kind kind() const { return kind_; }
  const Field& field() const { return field_; }
  Elem a() const { return a_; }
  Elem epsilon() const { return epsilon_; }
  Elem b() const { return b_; }

  /// F(ξ).
  Elem graph(Elem xi) const { return graph_[xi.v]; }

  std::vector<ModelPoint> line_points(const ModelLine& l) const;
  bool contains(const ModelLine& l, const ModelPoint& p) const;
  ModelLine line_through(const ModelPoint& p, const ModelPoint& r) const;

  /// q^2 verticals, then the q^4 curves ordered by (m, d), then ℓ∞.
  std::vector<ModelLine> lines() const;
  std::vector<ModelPoint> points() const;
  LineSystem line_system() const;

  nlohmann::json line_to_json(const ModelLine& l) const;
  nlohmann::json to_json() const;

 private:
  PlaneModel(Field f, Kind kind) : field_(std::move(f)), kind_(kind) {}

  Field field_;
  Kind kind_;
  Elem a_{};
  Elem epsilon_{};
  Elem b_{};
  std::vector<Elem> graph_;
};

/// Checks the projective-plane axioms on the closure: every line has q^2+1
/// distinct points, there are q^4+q^2+1 points and lines, each pair of
/// distinct points lies on exactly one line, and line_through returns a
/// line containing both points.
VerificationReport plane_axiom_check(const PlaneModel& model);

}  // namespace unital
