#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uxc/errors.hpp"

namespace uxc {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Deterministic-from-seed prime p = 1 (mod order) with the requested bit size.
// Supported range: 31 <= bits <= 62 (products must fit an unsigned 128-bit).
std::uint64_t sample_prime(std::uint64_t order, unsigned bits, std::uint64_t seed);

unsigned default_prime_bits();  // UXC_PRIME_BITS env var, else 62

// Residue in F_p. A modulus of 0 marks a small signed integer constant that has
// not met a field yet (templates write S(0), S(1)); binary operations promote
// constants into the other operand's field. Two different nonzero moduli in one
// operation raise BackendMismatchError.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(int v) : v_(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))), p_(0) {}
  Fp(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r);
  }
  static Fp from_residue(std::uint64_t r, std::uint64_t p) {
    Fp x;
    x.v_ = r % p;
    x.p_ = p;
    return x;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_constant() const { return p_ == 0; }
  std::int64_t constant_value() const { return static_cast<std::int64_t>(v_); }

  bool is_zero_value() const { return p_ == 0 ? constant_value() == 0 : v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  Fp operator-() const;
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(const Fp& a, const Fp& b);  // ordering for containers

  Fp inverse() const;

 private:
  static void promote(Fp& a, Fp& b);
  std::uint64_t v_;
  std::uint64_t p_;
};

inline bool is_zero(const Fp& x) { return x.is_zero_value(); }
inline Fp zero_like(const Fp& x) {
  return x.is_constant() ? Fp(0) : Fp(0, x.modulus());
}
inline Fp one_like(const Fp& x) {
  return x.is_constant() ? Fp(1) : Fp(1, x.modulus());
}

// Exact surrogate for the coordinate field of a regular N-gon: a prime field
// containing a primitive root of unity of order lcm(2N, 4), so that both the
// cosine/sine pairs c_m = cos(m*pi/N), s_m = sin(m*pi/N) and i = root^(order/4)
// exist. By construction c_m^2 + s_m^2 = 1 exactly.
class CyclotomicEmbedding {
 public:
  // Fresh embedding at a deterministically sampled prime.
  static CyclotomicEmbedding for_ngon(unsigned ngon, unsigned bits, std::uint64_t seed);
  // Embedding at a given prime (p = 1 mod order required); root is canonical,
  // i.e. derived from the smallest generator h with h^((p-1)/order) of exact order.
  static CyclotomicEmbedding at_prime(unsigned order, std::uint64_t p);

  unsigned ngon() const { return ngon_; }
  unsigned order() const { return order_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t root() const { return root_; }

  Fp root_pow(long k) const;
  Fp imaginary_unit() const { return i_; }
  // cos(m*pi/ngon) and sin(m*pi/ngon), any integer m.
  Fp cos_units(long m) const;
  Fp sin_units(long m) const;

 private:
  static CyclotomicEmbedding at_prime_impl(unsigned order, std::uint64_t p, unsigned ngon);
  unsigned ngon_ = 0;
  unsigned order_ = 0;
  std::uint64_t p_ = 0;
  std::uint64_t root_ = 0;
  Fp i_;
};

// Canonical primitive root of the given order mod p (smallest-generator rule);
// used when parsing standalone {"cyc","pow","mod"} scalars.
std::uint64_t canonical_root_of_unity(unsigned order, std::uint64_t p);

}  // namespace uxc
