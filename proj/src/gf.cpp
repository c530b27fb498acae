#include "unital/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace unital {

namespace {

unsigned mulmod(unsigned a, unsigned b, unsigned p) {
  return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % p);
}

unsigned powmod(unsigned a, std::uint64_t k, unsigned p) {
  unsigned r = 1 % p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly {

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Coeffs mod(Coeffs f, const Coeffs& g, unsigned p) {
  Coeffs div = g;
  trim(div);
  if (div.empty()) throw ParameterError("polynomial division by zero");
  trim(f);
  const std::size_t dg = div.size() - 1;
  const unsigned lead_inv = powmod(div.back(), p - 2, p);
  while (f.size() > dg) {
    const unsigned factor = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(factor, div[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const Coeffs& f_in, unsigned p) {
  Coeffs f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    // every monic g of degree d
    Coeffs g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (mod(f, g, p).empty()) return false;
      unsigned i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

Coeffs smallest_irreducible(unsigned p, unsigned degree) {
  Coeffs low(degree, 0);
  while (true) {
    Coeffs f = low;
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    // c0 is the most significant position; advance from the top coefficient
    int i = static_cast<int>(degree) - 1;
    while (i >= 0 && ++low[static_cast<std::size_t>(i)] == p) low[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) throw VerificationError("no irreducible polynomial found");
  }
}

}  // namespace poly

struct Field::Tables {
  std::vector<std::uint32_t> exp;  // 2*(order-1) entries
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> frob;
  std::vector<std::uint32_t> add;  // order*order, only for small orders
  std::vector<std::uint32_t> neg;
};

std::uint64_t Field::configured_max_order() {
  if (const char* env = std::getenv("UNITAL_MAX_FIELD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxOrder;
}

Field Field::build_q(std::uint64_t q, std::optional<std::vector<unsigned>> modulus_override,
                     std::uint64_t max_order) {
  if (q < 2) throw ParameterError("q must be a prime power >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  return build(static_cast<unsigned>(p), e, std::move(modulus_override), max_order);
}

Field Field::build(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus_override,
                   std::uint64_t max_order, ArithmeticMode mode) {
  if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw ParameterError("exponent e must be positive");
  const unsigned n = 2 * e;
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= p;
    if (order > max_order || order > (1ull << 31))
      throw ParameterError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                           " exceeds the size bound " + std::to_string(max_order));
  }

  Field f;
  f.p_ = p;
  f.e_ = e;
  f.order_ = static_cast<std::uint32_t>(order);
  f.q_ = 1;
  for (unsigned i = 0; i < e; ++i) f.q_ *= p;
  f.powers_of_p_.resize(n);
  for (unsigned i = 0, pw = 1; i < n; ++i, pw *= p) f.powers_of_p_[i] = pw;

  if (modulus_override) {
    const auto& m = *modulus_override;
    if (m.size() != n + 1 || m.back() != 1)
      throw ParameterError("modulus override must be monic of degree " + std::to_string(n));
    for (unsigned c : m)
      if (c >= p) throw ParameterError("modulus coefficient out of range for GF(p)");
    if (!poly::is_irreducible(m, p)) throw ParameterError("modulus override is reducible");
    f.modulus_ = m;
  } else {
    f.modulus_ = poly::smallest_irreducible(p, n);
  }

  // primitive element via polynomial arithmetic
  const std::uint64_t group = order - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t v = 1; v < order; ++v) {
    const Elem x{v};
    bool generator = true;
    for (auto r : factors) {
      if (f.pow_raw(x, group / r) == f.one()) {
        generator = false;
        break;
      }
    }
    if (generator) {
      f.primitive_ = x;
      break;
    }
  }
  if (f.primitive_.v == 0 && order > 2) throw VerificationError("no primitive element found");
  if (order == 2) f.primitive_ = f.one();

  const bool want_tables =
      mode == ArithmeticMode::tables || (mode == ArithmeticMode::automatic && order <= (1u << 16));
  if (want_tables) {
    auto t = std::make_shared<Tables>();
    t->exp.resize(2 * group);
    t->log.assign(order, 0);
    Elem cur = f.one();
    for (std::uint64_t i = 0; i < group; ++i) {
      t->exp[i] = t->exp[i + group] = cur.v;
      t->log[cur.v] = static_cast<std::uint32_t>(i);
      cur = f.poly_mul(cur, f.primitive_);
    }
    t->neg.resize(order);
    for (std::uint32_t v = 0; v < order; ++v) t->neg[v] = f.digit_neg(Elem{v}).v;
    if (order <= 1024) {
      t->add.resize(static_cast<std::size_t>(order) * order);
      for (std::uint32_t x = 0; x < order; ++x)
        for (std::uint32_t y = 0; y < order; ++y)
          t->add[static_cast<std::size_t>(x) * order + y] = f.digit_add(Elem{x}, Elem{y}).v;
    }
    f.tables_ = t;
    t->frob.resize(order);
    for (std::uint32_t v = 0; v < order; ++v) t->frob[v] = f.pow_raw(Elem{v}, f.q_).v;
  }
  return f;
}

Elem Field::element(std::uint64_t value) const {
  if (value >= order_)
    throw ParameterError("element " + std::to_string(value) + " out of range for field of order " +
                         std::to_string(order_));
  return Elem{static_cast<std::uint32_t>(value)};
}

Elem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::digit_add(Elem x, Elem y) const {
  if (p_ == 2) return Elem{x.v ^ y.v};
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < powers_of_p_.size(); ++i) {
    const std::uint32_t dx = x.v / powers_of_p_[i] % p_;
    const std::uint32_t dy = y.v / powers_of_p_[i] % p_;
    out += ((dx + dy) % p_) * powers_of_p_[i];
  }
  return Elem{out};
}

Elem Field::digit_neg(Elem x) const {
  if (p_ == 2) return x;
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < powers_of_p_.size(); ++i) {
    const std::uint32_t d = x.v / powers_of_p_[i] % p_;
    out += ((p_ - d) % p_) * powers_of_p_[i];
  }
  return Elem{out};
}

Elem Field::poly_mul(Elem x, Elem y) const {
  const std::size_t n = powers_of_p_.size();
  std::vector<unsigned> a(n), b(n), prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = x.v / powers_of_p_[i] % p_;
    b[i] = y.v / powers_of_p_[i] % p_;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p_)) % p_;
  }
  // modulus is monic: t^n = -(c_0 + ... + c_{n-1} t^{n-1})
  for (std::size_t k = prod.size(); k-- > n;) {
    const unsigned c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < n; ++i)
      prod[k - n + i] = (prod[k - n + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < n; ++i) out += prod[i] * powers_of_p_[i];
  return Elem{out};
}

Elem Field::add(Elem x, Elem y) const {
  if (p_ == 2) return Elem{x.v ^ y.v};
  if (tables_ && !tables_->add.empty())
    return Elem{tables_->add[static_cast<std::size_t>(x.v) * order_ + y.v]};
  return digit_add(x, y);
}

Elem Field::neg(Elem x) const {
  if (tables_) return Elem{tables_->neg[x.v]};
  return digit_neg(x);
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::mul(Elem x, Elem y) const {
  if (x.v == 0 || y.v == 0) return zero();
  if (tables_) return Elem{tables_->exp[tables_->log[x.v] + tables_->log[y.v]]};
  return poly_mul(x, y);
}

Elem Field::inv(Elem x) const {
  if (x.v == 0) throw ParameterError("inverse of zero");
  if (tables_) {
    const std::uint32_t l = tables_->log[x.v];
    return Elem{tables_->exp[l == 0 ? 0 : (order_ - 1) - l]};
  }
  return pow_raw(x, order_ - 2);
}

Elem Field::pow_raw(Elem x, std::uint64_t k) const {
  Elem r = one();
  while (k) {
    if (k & 1) r = tables_ ? mul(r, x) : poly_mul(r, x);
    x = tables_ ? mul(x, x) : poly_mul(x, x);
    k >>= 1;
  }
  return r;
}

Elem Field::pow(Elem x, std::uint64_t k) const {
  if (k == 0) return one();
  if (x.v == 0) return zero();
  if (tables_) {
    const std::uint64_t l = (static_cast<std::uint64_t>(tables_->log[x.v]) * (k % (order_ - 1))) % (order_ - 1);
    return Elem{tables_->exp[l]};
  }
  return pow_raw(x, k);
}

Elem Field::frobenius(Elem x) const {
  if (tables_ && !tables_->frob.empty()) return Elem{tables_->frob[x.v]};
  return pow_raw(x, q_);
}

Elem Field::abs_trace(Elem x) const {
  if (!in_subfield(x)) throw ParameterError("abs_trace: argument is not in GF(q)");
  Elem acc = zero();
  Elem term = x;
  for (unsigned i = 0; i < e_; ++i) {
    acc = add(acc, term);
    term = pow(term, p_);
  }
  if (!in_prime_field(acc)) throw VerificationError("abs_trace left GF(p)");
  return acc;
}

bool Field::is_square(Elem x, SquareDomain which) const {
  if (which == SquareDomain::subfield) {
    if (p_ == 2) throw ParameterError("is_square over GF(q) requires odd q");
    if (!in_subfield(x)) throw ParameterError("is_square: argument is not in GF(q)");
    if (x.v == 0) return true;
    return pow(x, (q_ - 1) / 2) == one();
  }
  if (x.v == 0 || p_ == 2) return true;
  return pow(x, (order_ - 1) / 2) == one();
}

Elem Field::sigma(Elem x) const {
  if (p_ != 2 || e_ % 2 == 0) throw ParameterError("sigma requires q = 2^e with e odd");
  if (!in_subfield(x)) throw ParameterError("sigma: argument is not in GF(q)");
  return pow(x, 1ull << ((e_ + 1) / 2));
}

EpsilonPair Field::find_epsilon(Parity parity) const {
  if (parity == Parity::odd) {
    if (p_ == 2) throw ParameterError("odd epsilon requested in characteristic 2");
    const Elem eps = pow(primitive_, (q_ + 1) / 2);
    if (frobenius(eps) != neg(eps)) throw VerificationError("epsilon^q != -epsilon");
    const Elem eps2 = mul(eps, eps);
    if (!in_subfield(eps2)) throw VerificationError("epsilon^2 not in GF(q)");
    for (auto r : prime_factors(q_ - 1)) {
      if (pow(eps2, (q_ - 1) / r) == one()) throw VerificationError("epsilon^2 not primitive in GF(q)");
    }
    return {eps, std::nullopt};
  }
  if (p_ != 2) throw ParameterError("even epsilon requested in odd characteristic");
  if (e_ < 2 || e_ % 2 == 0) throw ParameterError("even epsilon requires q = 2^e with e > 1 odd");
  std::optional<Elem> delta;
  for (Elem d : subfield_elements()) {
    if (d == one()) continue;
    if (abs_trace(d) == one()) {
      delta = d;
      break;
    }
  }
  if (!delta) throw VerificationError("no delta with trace 1");
  for (std::uint32_t v = 0; v < order_; ++v) {
    const Elem z{v};
    if (add(add(mul(z, z), z), *delta) == zero()) {
      if (add(frobenius(z), z) != one()) throw VerificationError("epsilon^q + epsilon != 1");
      return {z, delta};
    }
  }
  throw VerificationError("z^2+z+delta has no root in GF(q^2)");
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(order_);
  for (std::uint32_t v = 0; v < order_; ++v) out[v] = Elem{v};
  return out;
}

std::vector<Elem> Field::subfield_elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint32_t v = 0; v < order_; ++v)
    if (in_subfield(Elem{v})) out.push_back(Elem{v});
  return out;
}

std::string Field::pretty(Elem x) const {
  if (x.v == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = powers_of_p_.size(); i-- > 0;) {
    const unsigned c = x.v / powers_of_p_[i] % p_;
    if (!c) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

nlohmann::json Field::to_json() const {
  return {{"p", p_}, {"e", e_}, {"modulus", modulus_}};
}

}  // namespace unital
