#include "u1kepler/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace u1kepler {

Int binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n-k+i, i) is an integer at every step
  }
  return result;
}

Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

namespace {

// Round-to-nearest-even quotient of two positive big integers.
double positive_ratio(Int num, Int den) {
  using boost::multiprecision::msb;
  const long kMantissa = 53;
  // Scale so the integer quotient carries at least kMantissa + 1 bits.
  long shift = (kMantissa + 1) - (long(msb(num)) - long(msb(den)));
  long exponent = -shift;
  if (shift > 0)
    num <<= shift;
  else if (shift < 0)
    den <<= -shift;
  Int q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  long excess = long(msb(q)) + 1 - kMantissa;
  if (excess > 0) {
    const Int low = q & ((Int(1) << excess) - 1);
    const Int half = Int(1) << (excess - 1);
    q >>= excess;
    exponent += excess;
    bool round_up;
    if (low > half)
      round_up = true;
    else if (low < half)
      round_up = false;
    else
      round_up = (rem != 0) ? true : ((q & 1) != 0);
    if (round_up) ++q;
  }
  return std::ldexp(q.convert_to<double>(), static_cast<int>(exponent));
}

}  // namespace

double to_double(const Int& v) {
  static const Int kExact = Int(1) << 53;
  if (v == 0) return 0.0;
  Int a = v < 0 ? Int(-v) : v;
  if (a <= kExact) {
    double d = a.convert_to<double>();
    return v < 0 ? -d : d;
  }
  double d = positive_ratio(a, 1);
  return v < 0 ? -d : d;
}

double to_double(const Rat& r) {
  static const Int kExact = Int(1) << 53;
  Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const bool neg = num < 0;
  if (neg) num = -num;
  double d;
  if (num <= kExact && den <= kExact) {
    // Both operands exact in double; IEEE division rounds correctly.
    d = num.convert_to<double>() / den.convert_to<double>();
  } else {
    d = positive_ratio(num, den);
  }
  return neg ? -d : d;
}

std::string to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace u1kepler
