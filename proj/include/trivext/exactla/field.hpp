#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trivext {

using Elem = std::uint32_t;

/// Prime field F_p with p < 2^31. Elements are residues in [0, p).
class Field {
public:
  static constexpr std::uint32_t default_prime = 32003;

  Field() : Field(default_prime) {}

  explicit Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) {
      throw std::invalid_argument("field modulus " + std::to_string(p) +
                                  " is not a prime below 2^31");
    }
    barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
  }

  std::uint32_t prime() const { return p_; }
  bool characteristic_two() const { return p_ == 2; }

  Elem reduce(std::uint64_t x) const {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<Elem>(r);
  }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return reduce(static_cast<std::uint64_t>(a) * b); }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return from_int(t);
  }

  /// Signed representative in (-p/2, p/2], for printing.
  std::int64_t centered(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::uint32_t p_;
  std::uint64_t barrett_ = 0;
};

}  // namespace trivext
