#ifndef COXCOUNT_RATIONAL_HPP
#define COXCOUNT_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "coxcount/intmath.hpp"

namespace coxcount {

// Exact rational on 128-bit integers, always stored reduced with a positive
// denominator. Wide enough for everything exact in this project (densities,
// cone constants, volume pieces).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT implicit by design
  Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(add_checked(mul_checked(num_, o.den_), mul_checked(o.num_, den_)),
                    mul_checked(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(sub_checked(mul_checked(num_, o.den_), mul_checked(o.num_, den_)),
                    mul_checked(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(mul_checked(num_, o.num_), mul_checked(den_, o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(mul_checked(num_, o.den_), mul_checked(den_, o.num_));
  }
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return mul_checked(num_, o.den_) < mul_checked(o.num_, den_);
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return to_string_int128(num_);
    return to_string_int128(num_) + "/" + to_string_int128(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int128 num_;
  int128 den_;
};

}  // namespace coxcount

#endif
