#include "uxc/prime_field.hpp"

#include <cstdlib>
#include <numeric>

#include "uxc/rng.hpp"

namespace uxc {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set proven sufficient for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t sample_prime(std::uint64_t order, unsigned bits, std::uint64_t seed) {
  if (order == 0) throw InvalidInputError("sample_prime: order must be >= 1");
  if (bits < 31 || bits > 62) throw InvalidInputError("sample_prime: bits must be in [31, 62]");
  const std::uint64_t lo = 1ull << (bits - 1);
  const std::uint64_t hi = (1ull << bits) - 1;
  Rng rng(seed ^ (order * 0x9e3779b97f4a7c15ull) ^ bits);
  const std::uint64_t span = hi / order - lo / order;
  std::uint64_t k = lo / order + (span ? rng.below(span) : 0);
  for (;;) {
    std::uint64_t candidate = k * order + 1;
    if (candidate > hi) k = lo / order;  // wrap inside the requested window
    else {
      if (candidate >= lo && is_prime_u64(candidate)) return candidate;
      ++k;
    }
  }
}

unsigned default_prime_bits() {
  if (const char* env = std::getenv("UXC_PRIME_BITS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 31 && v <= 62) return static_cast<unsigned>(v);
  }
  return 62;
}

void Fp::promote(Fp& a, Fp& b) {
  if (a.p_ == b.p_) return;
  if (a.p_ == 0) {
    a = Fp(a.constant_value(), b.p_);
    return;
  }
  if (b.p_ == 0) {
    b = Fp(b.constant_value(), a.p_);
    return;
  }
  throw BackendMismatchError("prime-field elements with different moduli");
}

Fp operator+(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::promote(x, y);
  if (x.p_ == 0) return Fp(static_cast<int>(x.constant_value() + y.constant_value()));
  std::uint64_t s = x.v_ + y.v_;
  if (s >= x.p_) s -= x.p_;
  return Fp::from_residue(s, x.p_);
}

Fp operator-(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::promote(x, y);
  if (x.p_ == 0) return Fp(static_cast<int>(x.constant_value() - y.constant_value()));
  std::uint64_t s = x.v_ + (x.p_ - y.v_);
  if (s >= x.p_) s -= x.p_;
  return Fp::from_residue(s, x.p_);
}

Fp operator*(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::promote(x, y);
  if (x.p_ == 0) return Fp(static_cast<int>(x.constant_value() * y.constant_value()));
  return Fp::from_residue(mulmod(x.v_, y.v_, x.p_), x.p_);
}

Fp Fp::operator-() const {
  if (p_ == 0) return Fp(static_cast<int>(-constant_value()));
  return Fp::from_residue(v_ == 0 ? 0 : p_ - v_, p_);
}

Fp Fp::inverse() const {
  if (p_ == 0) {
    if (constant_value() == 1) return Fp(1);
    if (constant_value() == -1) return Fp(-1);
    throw InvalidInputError("cannot invert a field-less constant");
  }
  if (v_ == 0) throw InvalidInputError("division by zero in F_p");
  return Fp::from_residue(powmod(v_, p_ - 2, p_), p_);
}

Fp operator/(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::promote(x, y);
  if (x.p_ == 0) {
    // constants only divide by +-1
    return x * y.inverse();
  }
  return x * y.inverse();
}

bool operator==(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::promote(x, y);
  if (x.p_ == 0) return x.constant_value() == y.constant_value();
  return x.v_ == y.v_;
}

bool operator<(const Fp& a, const Fp& b) {
  Fp x = a, y = b;
  Fp::promote(x, y);
  if (x.p_ == 0) return x.constant_value() < y.constant_value();
  return x.v_ < y.v_;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t canonical_root_of_unity(unsigned order, std::uint64_t p) {
  if (order == 0 || (p - 1) % order != 0)
    throw FieldError("prime does not admit roots of unity of the requested order");
  const auto factors = prime_factors(order);
  for (std::uint64_t h = 2; h < p; ++h) {
    std::uint64_t g = powmod(h, (p - 1) / order, p);
    if (g == 1) continue;
    bool exact = true;
    for (std::uint64_t q : factors) {
      if (powmod(g, order / q, p) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return g;
  }
  throw FieldError("no primitive root of unity found");  // unreachable for prime p
}

CyclotomicEmbedding CyclotomicEmbedding::for_ngon(unsigned ngon, unsigned bits, std::uint64_t seed) {
  if (ngon < 3) throw InvalidInputError("cyclotomic embedding: ngon must be >= 3");
  unsigned order = std::lcm(2u * ngon, 4u);
  std::uint64_t p = sample_prime(order, bits, seed);
  return at_prime_impl(order, p, ngon);
}

CyclotomicEmbedding CyclotomicEmbedding::at_prime(unsigned order, std::uint64_t p) {
  if (order % 4 != 0) throw FieldError("cyclotomic embedding order must be divisible by 4");
  return at_prime_impl(order, p, order / 2);
}

CyclotomicEmbedding CyclotomicEmbedding::at_prime_impl(unsigned order, std::uint64_t p, unsigned ngon) {
  if (!is_prime_u64(p)) throw FieldError("cyclotomic embedding: modulus is not prime");
  CyclotomicEmbedding e;
  e.ngon_ = ngon;
  e.order_ = order;
  e.p_ = p;
  e.root_ = canonical_root_of_unity(order, p);
  e.i_ = Fp::from_residue(powmod(e.root_, order / 4, p), p);
  return e;
}

Fp CyclotomicEmbedding::root_pow(long k) const {
  long m = k % static_cast<long>(order_);
  if (m < 0) m += order_;
  return Fp::from_residue(powmod(root_, static_cast<std::uint64_t>(m), p_), p_);
}

Fp CyclotomicEmbedding::cos_units(long m) const {
  const long step = static_cast<long>(order_ / (2 * ngon_));  // root^step has angle pi/ngon
  Fp z = root_pow(m * step), zi = root_pow(-m * step);
  return (z + zi) / Fp(2, p_);
}

Fp CyclotomicEmbedding::sin_units(long m) const {
  const long step = static_cast<long>(order_ / (2 * ngon_));
  Fp z = root_pow(m * step), zi = root_pow(-m * step);
  return (z - zi) / (Fp(2, p_) * i_);
}

}  // namespace uxc
