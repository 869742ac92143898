#include "birkhoff/fp.hpp"

namespace birkhoff {

thread_local std::uint64_t Fp::mod_ = kDefaultPrime;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic witness set for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
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

void Fp::set_modulus(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw std::invalid_argument("prime-field modulus must be an odd prime >= 3, got " + std::to_string(p));
  mod_ = p;
}

Fp Fp::from_string(std::string_view s) {
  if (s.empty()) throw ParseError("empty prime-field literal", 0);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw ParseError("invalid prime-field literal", i);
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    acc = (mulmod(acc, 10, mod_) + digit) % mod_;
  }
  return from_uint(acc);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp r;
  r = Fp::from_uint(powmod(v_, e, mod_));
  return r;
}

}  // namespace birkhoff
