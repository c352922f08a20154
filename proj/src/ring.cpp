#include "pathhom/ring.hpp"

namespace pathhom {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::mod(int64_t p) {
  if (!is_prime(p)) throw validation_error("modulus " + std::to_string(p) + " is not prime");
  return {RingKind::ModP, p};
}

Ring Ring::parse(const std::string& spec) {
  if (spec == "q") return rationals();
  if (spec == "z") return integers();
  if (spec.rfind("zp:", 0) == 0) {
    const std::string num = spec.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad ring spec '" + spec + "'");
    long long p = 0;
    try {
      p = std::stoll(num);
    } catch (const std::exception&) {
      throw parse_error("bad ring spec '" + spec + "'");
    }
    return mod(p);
  }
  throw parse_error("bad ring spec '" + spec + "' (expected q, z or zp:<prime>)");
}

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Rationals: return "q";
    case RingKind::Integers: return "z";
    case RingKind::ModP: return "zp:" + std::to_string(p);
  }
  return "?";
}

Scalar Ring::norm(const Scalar& a) const {
  if (kind != RingKind::ModP) return a;
  Int num = boost::multiprecision::numerator(a);
  const Int den = boost::multiprecision::denominator(a);
  if (den != 1) throw contract_error("non-integer scalar in Z/p arithmetic");
  num %= p;
  if (num < 0) num += p;
  return Scalar(num);
}

Scalar Ring::inv(const Scalar& a) const {
  switch (kind) {
    case RingKind::Rationals: {
      if (a == 0) throw contract_error("inverse of zero");
      return 1 / a;
    }
    case RingKind::Integers:
      throw contract_error("inverse over the integers");
    case RingKind::ModP: {
      Int v = boost::multiprecision::numerator(norm(a));
      if (v == 0) throw contract_error("inverse of zero");
      // extended Euclid on (v, p)
      Int r0 = v, r1 = p, s0 = 1, s1 = 0;
      while (r1 != 0) {
        const Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
      }
      return norm(Scalar(s0));
    }
  }
  throw contract_error("bad ring");
}

Scalar Ring::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Int Ring::smallest_lift(const Scalar& a) const {
  const Scalar v = norm(a);
  Int num = boost::multiprecision::numerator(v);
  if (boost::multiprecision::denominator(v) != 1)
    throw contract_error("scalar " + v.str() + " has no integer lift");
  if (kind == RingKind::ModP && 2 * num > p) num -= p;
  return num;
}

}  // namespace pathhom
