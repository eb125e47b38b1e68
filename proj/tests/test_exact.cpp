#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "u1kepler/exact.hpp"

using namespace u1kepler;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(41, 11) == Int("3159461968"));
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  for (long long n = 0; n <= 24; ++n)
    for (long long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
  // Pascal recurrence over a window
  for (long long n = 1; n <= 40; ++n)
    for (long long k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("half integers") {
  const HalfInt two(2);
  const HalfInt half = HalfInt::from_twice(1);
  CHECK(two.twice() == 4);
  CHECK(two.is_integer());
  CHECK(!half.is_integer());
  CHECK((two + half).twice() == 5);
  CHECK((two - half).str() == "3/2");
  CHECK((-half).str() == "-1/2");
  CHECK(half.to_rat() == Rat(1, 2));
  CHECK(two.str() == "2");
  CHECK(abs(HalfInt::from_twice(-7)).twice() == 7);
  CHECK(half < two);
  CHECK((3 * half).twice() == 3);
}

TEST_CASE("rational rendering") {
  CHECK(to_string(Rat(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(6, 3)) == "2");
  CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("correctly rounded rational to double") {
  CHECK(to_double(Rat(-1, 2)) == -0.5);
  CHECK(to_double(Rat(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(Rat(-2, 49)) == -2.0 / 49.0);
  CHECK(to_double(Rat(0)) == 0.0);
  CHECK(to_double(Int("3159461968")) == 3159461968.0);

  // Randomized cross-check against a 50-digit binary-float evaluation.
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> word;
  for (int trial = 0; trial < 200; ++trial) {
    Int num = Int(word(rng)) * word(rng) + word(rng);  // ~128 bits
    Int den = Int(word(rng)) * word(rng) + word(rng) + 1;
    if (trial % 2) num = -num;
    const Rat value(num, den);
    const double mine = to_double(value);
    const double reference =
        (BigFloat(num.str()) / BigFloat(den.str())).convert_to<double>();
    CHECK(mine == reference);
  }
}
