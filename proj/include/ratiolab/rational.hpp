#pragma once

#include <string>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"

namespace ratiolab {

// Exact nonnegative rational, kept in lowest terms with denominator >= 1.
// Serialized everywhere as "num/den"; never converted to floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::BadParameters, "rational with zero denominator");
    reduce();
  }
  Rational(std::uint64_t num, std::uint64_t den = 1) : Rational(BigUint(num), BigUint(den)) {}

  const BigUint& num() const { return num_; }
  const BigUint& den() const { return den_; }
  bool is_integer() const { return den_ == BigUint(1); }

  static int compare(const Rational& a, const Rational& b) {
    return BigUint::compare(a.num_ * b.den_, b.num_ * a.den_);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigUint g = BigUint::gcd(num_, den_);
    if (g != BigUint(1)) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }

  BigUint num_, den_;
};

}  // namespace ratiolab
