#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symlab {

/// Exact dyadic rational mant * 2^exp, kept normalized (mant odd or zero).
/// Addition, negation, halving and comparison are exact; a result whose
/// normalized mantissa does not fit in 64 bits throws std::overflow_error.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t integer) : mant_(integer) { normalize(); }

  static Dyadic from_parts(std::int64_t mant, std::int32_t exp);
  static Dyadic from_double(double x);  // exact: every finite double is dyadic
  static Dyadic pow2(std::int32_t exp) { return from_parts(1, exp); }

  std::int64_t mantissa() const { return mant_; }
  std::int32_t exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0; }
  int sign() const { return mant_ < 0 ? -1 : (mant_ > 0 ? 1 : 0); }
  bool is_integer() const { return exp_ >= 0; }
  /// True iff the value is 2^k for some k.
  bool is_pow2() const { return mant_ == 1; }

  double to_double() const { return std::ldexp(static_cast<double>(mant_), exp_); }

  Dyadic operator-() const;
  Dyadic halved() const;   // exact: decrements the exponent
  Dyadic doubled() const;
  Dyadic abs() const { return mant_ < 0 ? -*this : *this; }

  Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
  Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.mant_ == b.mant_ && (a.mant_ == 0 || a.exp_ == b.exp_);
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  std::string str() const;

 private:
  void normalize();

  std::int64_t mant_ = 0;
  std::int32_t exp_ = 0;
};

inline Dyadic min(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace symlab
