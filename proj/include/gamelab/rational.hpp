#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gamelab {

// Minimal exact fraction over 64-bit integers, reduced after every operation.
// Used where formula tests should not carry a float tolerance.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational x, Rational y) {
    const long long g = std::gcd(x.den, y.den);
    return Rational(x.num * (y.den / g) + y.num * (x.den / g),
                    x.den / g * y.den);
  }
  friend Rational operator-(Rational x, Rational y) {
    return x + Rational(-y.num, y.den);
  }
  friend Rational operator*(Rational x, Rational y) {
    const long long g1 = std::gcd(x.num < 0 ? -x.num : x.num, y.den);
    const long long g2 = std::gcd(y.num < 0 ? -y.num : y.num, x.den);
    return Rational((x.num / g1) * (y.num / g2), (x.den / g2) * (y.den / g1));
  }
  friend Rational operator/(Rational x, Rational y) {
    if (y.num == 0) throw std::invalid_argument("division by zero");
    return x * Rational(y.den, y.num);
  }
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }

  double value() const { return static_cast<double>(num) / den; }
};

}  // namespace gamelab
