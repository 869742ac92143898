#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "birkhoff/errors.hpp"

namespace birkhoff {

/// Default sampling prime, 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Scalar of a prime field of odd characteristic.  The modulus is ambient
/// per-thread state (set once at startup or via FpModulusGuard in tests), so
/// values stay one machine word and matrices of them are default-constructible.
class Fp {
 public:
  Fp() : v_(0) {}

  /// Installs the active modulus; rejects anything that is not an odd prime.
  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus() { return mod_; }

  static Fp zero() { return Fp(); }
  static Fp one() { return from_uint(1); }
  static Fp from_int(long n) {
    if (n >= 0) return from_uint(static_cast<std::uint64_t>(n));
    Fp r = from_uint(static_cast<std::uint64_t>(-(n + 1)) + 1);
    return -r;
  }
  static Fp from_uint(std::uint64_t v) {
    Fp r;
    r.v_ = v % mod_;
    return r;
  }
  static Fp from_string(std::string_view s);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    a.v_ += b.v_;
    if (a.v_ >= mod_ || a.v_ < b.v_) a.v_ -= mod_;
    return a;
  }
  friend Fp operator-(Fp a, Fp b) {
    a.v_ = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (mod_ - b.v_);
    return a;
  }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 w = static_cast<unsigned __int128>(a.v_) * b.v_;
    a.v_ = static_cast<std::uint64_t>(w % mod_);
    return a;
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp operator-() const {
    Fp r;
    r.v_ = v_ == 0 ? 0 : mod_ - v_;
    return r;
  }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp pow(std::uint64_t e) const;
  Fp inv() const {
    if (v_ == 0) throw SingularMatrixError("inverse of zero");
    return pow(mod_ - 2);
  }

  std::string str() const { return std::to_string(v_); }

 private:
  std::uint64_t v_;
  static thread_local std::uint64_t mod_;
};

/// RAII switch of the active prime-field modulus.
struct FpModulusGuard {
  explicit FpModulusGuard(std::uint64_t p) : prev_(Fp::modulus()) { Fp::set_modulus(p); }
  ~FpModulusGuard() { Fp::set_modulus(prev_); }
  FpModulusGuard(const FpModulusGuard&) = delete;
  FpModulusGuard& operator=(const FpModulusGuard&) = delete;

 private:
  std::uint64_t prev_;
};

}  // namespace birkhoff
