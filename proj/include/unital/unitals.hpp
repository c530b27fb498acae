#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unital/pg.hpp"

namespace unital {

enum class UnitalKind { hermitian, bm, bt };

const char* to_string(UnitalKind k);
UnitalKind unital_kind_from_string(const std::string& s);

/// A named construction. `a` is used by bm, `b` by hermitian and bm (and
/// echoed for bt), `epsilon` by bt.
struct UnitalParams {
  UnitalKind kind = UnitalKind::bm;
  Elem a{};
  Elem b{};
  std::optional<Elem> epsilon;
  std::optional<Elem> delta;
};

/// Ebert's discriminant condition: for odd q, 4a^{q+1} + (b^q - b)^2 is a
/// non-square in GF(q); for even q, b is outside GF(q) and the absolute
/// trace of a^{q+1}/(b^q + b)^2 vanishes.
bool ebert_check(const Field& f, Elem a, Elem b);

/// {(1, x, b x^{q+1} + r)} ∪ {Y∞}; requires b outside GF(q).
PointSet construct_hermitian(const Field& f, Elem b);

/// {(1, x, a x^2 + b x^{q+1} + r)} ∪ {Y∞}. Never rejects (a, b): whether the
/// result is a unital is for the verifier to decide.
PointSet construct_bm(const Field& f, Elem a, Elem b);

/// [((x^q+x)ε + x)^{σ+2} + (x^q+x)^σ + ((x^q+x)ε + x)(x^q+x)] ε, the
/// nonlinear part of the Buekenhout-Tits unital. q = 2^e, e > 1 odd.
Elem bt_graph(const Field& f, Elem epsilon, Elem x);

/// Buekenhout-Tits unital from the x-parameterization; rebuilt from the
/// (r, s, t) ∈ GF(q)^3 parameterization and checked equal before returning.
PointSet construct_bt(const Field& f, Elem epsilon);

/// {(1, s + tε, (s^{σ+2} + t^σ + st)ε + r) : r, s, t ∈ GF(q)} ∪ {Y∞}.
PointSet construct_bt_from_trace_coords(const Field& f, Elem epsilon);

PointSet realize(const Field& f, const UnitalParams& params);

enum class UnitalClass { invalid, classical, hsz, bm_general };

const char* to_string(UnitalClass c);

UnitalClass classify(const Field& f, Elem a, Elem b);

struct PairRecord {
  Elem a;
  Elem b;
  bool ebert = false;
  UnitalClass cls = UnitalClass::invalid;
  /// Set when the pair was cross-validated against the two-character test.
  std::optional<bool> two_character;
};

struct EnumerateOptions {
  std::uint32_t max_q = 5;
  std::uint32_t cross_validate_max_q = 4;
  unsigned jobs = 1;
};

/// Classification of all q^4 pairs (a, b), ordered by (a, b).
std::vector<PairRecord> enumerate_pairs(const Field& f, const EnumerateOptions& opt = {});

nlohmann::json unital_to_json(const Field& f, const UnitalParams& params, const PointSet& points);

}  // namespace unital
