#include <doctest.h>

#include "symlab/core/scalar.hpp"

using namespace symlab;

TEST_CASE("dyadic normalization keeps the mantissa odd") {
  Dyadic d = Dyadic::from_parts(12, 0);  // 12 = 3 * 2^2
  CHECK(d.mantissa() == 3);
  CHECK(d.exponent() == 2);
  CHECK(Dyadic(0).mantissa() == 0);
  CHECK(Dyadic(0).exponent() == 0);
}

TEST_CASE("halving is exact and decrements the exponent") {
  Dyadic one(1);
  Dyadic h = one.halved();
  CHECK(h.mantissa() == 1);
  CHECK(h.exponent() == -1);
  CHECK(h.doubled() == one);
  CHECK(h + h == one);
}

TEST_CASE("dyadic arithmetic is exact") {
  Dyadic a = Dyadic::from_double(0.75);
  Dyadic b = Dyadic::from_double(0.25);
  CHECK(a + b == Dyadic(1));
  CHECK(a - b == Dyadic::from_double(0.5));
  CHECK(a * b == Dyadic::from_parts(3, -4));
  CHECK((-a) + a == Dyadic(0));
}

TEST_CASE("from_double is exact for every finite double") {
  for (double x : {0.1, -3.7, 1e-12, 123456.789, std::ldexp(1.0, -40)}) {
    CHECK(Dyadic::from_double(x).to_double() == x);
  }
  CHECK_THROWS_AS(Dyadic::from_double(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("comparisons agree with real order across exponent ranges") {
  CHECK(Dyadic::from_parts(1, -30) < Dyadic::from_parts(1, 4));
  CHECK(Dyadic::from_parts(-1, 10) < Dyadic::from_parts(1, -50));
  CHECK(Dyadic::from_parts(5, -3) < Dyadic::from_parts(11, -4));  // 0.625 < 0.6875
  CHECK(Dyadic::from_parts(3, -1) == Dyadic::from_double(1.5));
}

TEST_CASE("mantissa overflow is reported, not silently rounded") {
  Dyadic big = Dyadic::from_parts((std::int64_t{1} << 62) + 1, 0);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("scalar keeps the dyadic lane exact and degrades to binary64") {
  Scalar a(Dyadic::from_double(0.5));
  Scalar b(Dyadic::from_double(0.25));
  CHECK((a + b).is_dyadic());
  CHECK(approx_equal(a + b, Scalar(Dyadic::from_double(0.75)), 0.0));
  Scalar c = Scalar::real(0.3);
  CHECK(!(a + c).is_dyadic());
  CHECK(approx_equal(a + c, Scalar::real(0.8), 1e-15));
  CHECK(a.halved().is_dyadic());
  CHECK(a.halved().value() == 0.25);
}
