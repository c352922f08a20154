#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "pathhom/errors.hpp"

namespace pathhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All coefficient arithmetic is exact. A single scalar type serves every
// ring: over the rationals values are arbitrary, over the integers the
// denominator is 1, over Z/p values are integers in [0, p). Every
// algorithm routes scalar arithmetic through a Ring so the mod-p reduction
// cannot be forgotten.
using Scalar = Rat;

enum class RingKind { Rationals, Integers, ModP };

struct Ring {
  RingKind kind = RingKind::Rationals;
  int64_t p = 0;  // modulus, only for ModP (prime)

  static Ring rationals() { return {RingKind::Rationals, 0}; }
  static Ring integers() { return {RingKind::Integers, 0}; }
  static Ring mod(int64_t p);  // validates primality

  // "q", "z" or "zp:<prime>"
  static Ring parse(const std::string& spec);
  std::string name() const;

  bool is_field() const { return kind != RingKind::Integers; }
  bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }

  // Canonical representative of a raw value in this ring.
  Scalar norm(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return norm(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return norm(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return norm(a * b); }
  Scalar neg(const Scalar& a) const { return norm(-a); }
  Scalar inv(const Scalar& a) const;                    // fields only
  Scalar div(const Scalar& a, const Scalar& b) const;   // fields only
  bool is_zero(const Scalar& a) const { return norm(a) == 0; }

  // Integer representative of a scalar with smallest absolute value:
  // identity on Z, symmetric lift to (-p/2, p/2] on Z/p, denominator
  // check on Q. Used where coefficients become multiplicities.
  Int smallest_lift(const Scalar& a) const;
};

bool is_prime(int64_t n);

}  // namespace pathhom
