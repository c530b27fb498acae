#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace unital {

/// Bad user-supplied parameters (non-prime p, reducible modulus, field too
/// large, element out of range, wrong characteristic for an operation).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (a construction or verification
/// assertion did not hold).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field element in canonical encoding: sum of c_i * p^i over the
/// polynomial-basis coefficients c_i.
struct Elem {
  std::uint32_t v = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

enum class SquareDomain { full_field, subfield };
enum class Parity { odd, even };

enum class ArithmeticMode { automatic, tables, polynomial };

struct EpsilonPair {
  Elem epsilon;
  std::optional<Elem> delta;
};

class FieldValue;

/// GF(q^2) with q = p^e, the only field materialized. GF(q) and GF(p) are
/// the fixed sets of x -> x^q and x -> x^p inside it.
///
/// Immutable after construction; copies share the lookup tables.
class Field {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 1u << 20;

  /// Size bound from the UNITAL_MAX_FIELD environment variable, else
  /// kDefaultMaxOrder.
  static std::uint64_t configured_max_order();

  /// Builds GF(p^{2e}). Without an override the modulus is the smallest
  /// monic irreducible polynomial of degree 2e in constant-term-first
  /// lexicographic order.
  static Field build(unsigned p, unsigned e,
                     std::optional<std::vector<unsigned>> modulus_override = std::nullopt,
                     std::uint64_t max_order = configured_max_order(),
                     ArithmeticMode mode = ArithmeticMode::automatic);

  /// Field with q = p^e given q itself.
  static Field build_q(std::uint64_t q,
                       std::optional<std::vector<unsigned>> modulus_override = std::nullopt,
                       std::uint64_t max_order = configured_max_order());

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned degree() const { return 2 * e_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool uses_tables() const { return tables_ != nullptr; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Validated conversion from an encoding.
  Elem element(std::uint64_t value) const;
  /// Element of the prime field, reduced mod p.
  Elem from_int(long long n) const;
  bool valid(Elem x) const { return x.v < order_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t k) const;

  Elem frobenius(Elem x) const;
  bool in_subfield(Elem x) const { return frobenius(x) == x; }
  bool in_prime_field(Elem x) const { return x.v < p_; }
  Elem rel_trace(Elem x) const { return add(x, frobenius(x)); }
  Elem rel_norm(Elem x) const { return mul(x, frobenius(x)); }
  Elem abs_trace(Elem x) const;
  bool is_square(Elem x, SquareDomain which) const;
  Elem sigma(Elem x) const;
  EpsilonPair find_epsilon(Parity parity) const;

  /// Smallest-encoding generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

  std::vector<Elem> elements() const;
  std::vector<Elem> subfield_elements() const;

  /// Polynomial in t, e.g. "2t+1".
  std::string pretty(Elem x) const;
  nlohmann::json to_json() const;

  FieldValue operator()(Elem x) const;

 private:
  struct Tables;
  Field() = default;

  Elem poly_mul(Elem x, Elem y) const;
  Elem digit_add(Elem x, Elem y) const;
  Elem digit_neg(Elem x) const;
  Elem pow_raw(Elem x, std::uint64_t k) const;

  unsigned p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> powers_of_p_;
  Elem primitive_{};
  std::shared_ptr<const Tables> tables_;
};

/// Element bound to its field, for writing formulas with operators.
class FieldValue {
 public:
  FieldValue(const Field& f, Elem x) : f_(&f), x_(x) {}
  Elem elem() const { return x_; }
  operator Elem() const { return x_; }

  FieldValue operator+(const FieldValue& o) const { return {*f_, f_->add(x_, o.x_)}; }
  FieldValue operator-(const FieldValue& o) const { return {*f_, f_->sub(x_, o.x_)}; }
  FieldValue operator*(const FieldValue& o) const { return {*f_, f_->mul(x_, o.x_)}; }
  FieldValue operator/(const FieldValue& o) const { return {*f_, f_->div(x_, o.x_)}; }
  FieldValue operator-() const { return {*f_, f_->neg(x_)}; }
  FieldValue pow(std::uint64_t k) const { return {*f_, f_->pow(x_, k)}; }
  FieldValue conj() const { return {*f_, f_->frobenius(x_)}; }
  FieldValue sq() const { return {*f_, f_->mul(x_, x_)}; }
  bool is_zero() const { return x_.v == 0; }
  friend bool operator==(const FieldValue& l, const FieldValue& r) { return l.x_ == r.x_; }

 private:
  const Field* f_;
  Elem x_;
};

inline FieldValue Field::operator()(Elem x) const { return FieldValue(*this, x); }

bool is_prime(std::uint64_t n);

namespace poly {

/// Polynomials over GF(p), coefficient lists with the constant term first.
using Coeffs = std::vector<unsigned>;

void trim(Coeffs& f);
Coeffs mod(Coeffs f, const Coeffs& g, unsigned p);
bool is_irreducible(const Coeffs& f, unsigned p);
/// Smallest monic irreducible of the given degree, constant-term-first
/// lexicographic order.
Coeffs smallest_irreducible(unsigned p, unsigned degree);

}  // namespace poly

}  // namespace unital
