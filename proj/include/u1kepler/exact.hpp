// Exact arithmetic substrate shared by all modules: arbitrary-precision
// integers/rationals, half-integers, and correctly rounded float rendering.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace u1kepler {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "1.0.0";

// Exact binomial coefficient; 0 for k < 0 or k > n.
Int binomial(long long n, long long k);

Int factorial(long long n);

// Correctly rounded (nearest-even) double value of an exact rational.
double to_double(const Rat& r);
double to_double(const Int& v);

// "p/q" for non-integers, plain integer string otherwise.
std::string to_string(const Rat& r);

// Half-integer stored by twice its value, so all arithmetic stays exact.
// Weight entries, MICZ charges, and kappa bookkeeping live on this type.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long long n) : twice_(2 * n) {}

  static constexpr HalfInt from_twice(long long twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  Rat to_rat() const { return Rat(twice_, 2); }

  // "2", "-1/2", "7/2"
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr HalfInt operator*(long long c, HalfInt a) {
    return from_twice(c * a.twice_);
  }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

 private:
  long long twice_ = 0;
};

inline HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

}  // namespace u1kepler
