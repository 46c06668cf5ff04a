#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace bispec;
using test_support::rat;

TEST_CASE("arithmetic reduces to lowest terms") {
  CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
  CHECK(rat(1, 2) + rat(1, 2) == rat(1));
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat(3, 7) * rat(7, 3) == rat(1));
  CHECK(rat(1, 3) - rat(1, 3) == rat(0));
  CHECK((rat(5, 6) / rat(5, 3)) == rat(1, 2));
}

TEST_CASE("denominator stays positive after every operation") {
  Rational r = rat(1, 3);
  r -= rat(2, 3);
  CHECK(r.denominator() == 3);
  CHECK(r.numerator() == -1);
  CHECK(r.sign() == -1);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(rat(1) / rat(0), Error);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), FormatError);
}

TEST_CASE("string round trip") {
  CHECK(rat(-1, 2).to_string() == "-1/2");
  CHECK(rat(7).to_string() == "7");
  CHECK(rat(0).to_string() == "0");
  CHECK(Rational::from_string("-3/6") == rat(-1, 2));
  CHECK(Rational::from_string("42") == rat(42));
  CHECK(Rational::from_string("+5/10") == rat(1, 2));
  CHECK_THROWS_AS(Rational::from_string("1/0"), FormatError);
  CHECK_THROWS_AS(Rational::from_string("a/2"), FormatError);
  CHECK_THROWS_AS(Rational::from_string(""), FormatError);
  CHECK_THROWS_AS(Rational::from_string("1 / 2"), FormatError);

  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational r = test_support::random_rational(rng);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(12, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(30, 15) == mpz_class("155117520"));
  CHECK(factorial(30) == mpz_class("265252859812191058636308480000000"));
}

// alternating-sum identity: sum_{i=k}^{r+1} (-1)^(i-k) C(i,k) C(r+1,i) = 0
TEST_CASE("alternating binomial sum vanishes for all r <= 30") {
  for (unsigned long r = 0; r <= 30; ++r) {
    for (unsigned long k = 0; k <= r; ++k) {
      mpz_class sum = 0;
      for (unsigned long i = k; i <= r + 1; ++i) {
        mpz_class term = binomial(i, k) * binomial(r + 1, i);
        if ((i - k) % 2 == 1) term = -term;
        sum += term;
      }
      CHECK(sum == 0);
    }
  }
}
