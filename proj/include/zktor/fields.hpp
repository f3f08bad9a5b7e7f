#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace zktor {

/// Runtime description of a coefficient field: the rationals, or GF(p) for a
/// prime p < 2^31.  Parsed from the command-line syntax "rational" / "gf:p".
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;  // modulus, meaningful only when kind == Prime

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

  static FieldSpec prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
      throw std::invalid_argument("prime modulus must satisfy 2 <= p < 2^31");
    if (!is_prime(p))
      throw std::invalid_argument(std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Prime, p};
  }

  static FieldSpec parse(const std::string& text) {
    if (text == "rational") return rationals();
    if (text.rfind("gf:", 0) == 0) {
      std::size_t used = 0;
      long long p = 0;
      try {
        p = std::stoll(text.substr(3), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse field \"" + text + "\"");
      }
      if (used != text.size() - 3)
        throw std::invalid_argument("cannot parse field \"" + text + "\"");
      return prime(p);
    }
    throw std::invalid_argument("unknown field \"" + text +
                                "\" (expected \"rational\" or \"gf:p\")");
  }

  std::string name() const {
    return kind == Kind::Rationals ? "rational" : "gf:" + std::to_string(p);
  }

  bool operator==(const FieldSpec&) const = default;

private:
  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

/// The rationals with arbitrary-precision arithmetic.  Field objects carry
/// the operations; elements are plain values, so matrices and chain complexes
/// can be templated on the field without virtual dispatch.
class Rationals {
public:
  using Elem = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long n) const { return Elem(n); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }

  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const { return a.get_str(); }
};

/// GF(p), p prime, p < 2^31.  Elements are int64 canonical representatives in
/// [0,p); products of two representatives fit in int64 without overflow.
class PrimeField {
public:
  using Elem = std::int64_t;

  explicit PrimeField(std::int64_t p) : p_(FieldSpec::prime(p).p) {}
  explicit PrimeField(const FieldSpec& s) : PrimeField(s.p) {
    if (s.kind != FieldSpec::Kind::Prime)
      throw std::invalid_argument("FieldSpec is not a prime field");
  }

  std::int64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::Prime, p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long n) const {
    Elem r = static_cast<Elem>(n) % p_;
    return r < 0 ? r + p_ : r;
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p_; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }

  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return pow(a, p_ - 2);  // Fermat
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const { return std::to_string(a); }

private:
  std::int64_t p_;

  Elem pow(Elem base, std::int64_t e) const {
    Elem acc = one();
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
};

/// Dispatch a callable over the runtime field choice.  The callable must be
/// generic in the field type (both branches must yield the same result type).
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::Rationals)
    return std::forward<Fn>(fn)(Rationals{});
  return std::forward<Fn>(fn)(PrimeField{spec.p});
}

}  // namespace zktor
