#include "symlab/core/dyadic.hpp"

#include <bit>
#include <limits>

namespace symlab {

namespace {

using i128 = __int128;

std::int64_t narrow_checked(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("dyadic mantissa exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// Strips factors of two from a nonzero 128-bit mantissa.
void normalize128(i128& m, std::int32_t& e) {
  while ((m & 1) == 0) {
    m >>= 1;
    ++e;
  }
}

int bit_length(std::int64_t m) {
  auto u = static_cast<std::uint64_t>(m < 0 ? -m : m);
  return 64 - std::countl_zero(u);
}

}  // namespace

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  while ((mant_ & 1) == 0) {
    mant_ >>= 1;
    ++exp_;
  }
}

Dyadic Dyadic::from_parts(std::int64_t mant, std::int32_t exp) {
  Dyadic d;
  d.mant_ = mant;
  d.exp_ = exp;
  d.normalize();
  return d;
}

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value is not dyadic");
  if (x == 0.0) return Dyadic();
  int k = 0;
  double f = std::frexp(x, &k);                      // x = f * 2^k, |f| in [1/2, 1)
  auto m = static_cast<std::int64_t>(std::ldexp(f, 53));  // exact, |m| < 2^53
  return from_parts(m, k - 53);
}

Dyadic Dyadic::operator-() const {
  Dyadic d;
  d.mant_ = -mant_;
  d.exp_ = exp_;
  return d;
}

Dyadic Dyadic::halved() const {
  if (mant_ == 0) return *this;
  Dyadic d;
  d.mant_ = mant_;
  d.exp_ = exp_ - 1;
  return d;
}

Dyadic Dyadic::doubled() const {
  if (mant_ == 0) return *this;
  Dyadic d;
  d.mant_ = mant_;
  d.exp_ = exp_ + 1;
  return d;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.mant_ == 0) return b;
  if (b.mant_ == 0) return a;
  std::int32_t e = std::min(a.exp_, b.exp_);
  std::int64_t sa = a.exp_ - e;
  std::int64_t sb = b.exp_ - e;
  if (sa > 100 || sb > 100) throw std::overflow_error("dyadic exponent spread too large");
  i128 m = (static_cast<i128>(a.mant_) << sa) + (static_cast<i128>(b.mant_) << sb);
  if (m == 0) return Dyadic();
  normalize128(m, e);
  return Dyadic::from_parts(narrow_checked(m), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.mant_ == 0 || b.mant_ == 0) return Dyadic();
  i128 m = static_cast<i128>(a.mant_) * static_cast<i128>(b.mant_);
  std::int32_t e = a.exp_ + b.exp_;
  return Dyadic::from_parts(narrow_checked(m), e);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: |v| lies in [2^(exp+len-1), 2^(exp+len)).
  std::int64_t la = a.exp_ + bit_length(a.mant_);
  std::int64_t lb = b.exp_ + bit_length(b.mant_);
  if (la != lb) return sa > 0 ? la <=> lb : lb <=> la;
  // Equal magnitude windows: aligned shift is at most ~63 bits.
  std::int32_t e = std::min(a.exp_, b.exp_);
  i128 ma = static_cast<i128>(a.mant_) << (a.exp_ - e);
  i128 mb = static_cast<i128>(b.mant_) << (b.exp_ - e);
  if (ma == mb) return std::strong_ordering::equal;
  return ma < mb ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Dyadic::str() const {
  if (exp_ >= 0) {
    if (exp_ <= 10) return std::to_string(to_double());
    return std::to_string(mant_) + "*2^" + std::to_string(exp_);
  }
  if (exp_ >= -40) return std::to_string(mant_) + "/2^" + std::to_string(-exp_);
  return std::to_string(mant_) + "*2^" + std::to_string(exp_);
}

}  // namespace symlab
