#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <type_traits>
#include <utility>

#include "hwface/errors.hpp"

namespace hwface {

using Int = boost::multiprecision::cpp_int;

// Exact rational over cpp_int, always normalized with a positive denominator.
// Hand-rolled: boost::rational's heterogeneous comparison operators recurse
// into themselves when IntType is a multiprecision number.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  Rat(T v) : num_(v), den_(1) {}
  Rat(Int v) : num_(std::move(v)), den_(1) {}
  Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  Rat& operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += -o; }
  Rat& operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    check(o.num_ != 0, "rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

 private:
  Int num_, den_;

  void normalize() {
    check(den_ != 0, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
};

inline bool isInteger(const Rat& r) { return r.denominator() == 1; }

inline bool isNonNegativeInteger(const Rat& r) {
  return isInteger(r) && r.numerator() >= 0;
}

// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rat parseRat(const std::string& s) {
  auto bad = [&] { throw InputError("not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rat();  // unreachable
}

inline std::string toString(const Rat& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

}  // namespace hwface
