#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <string>

namespace ncqh {

/// Exact rational scalar. Thin value wrapper around
/// boost::multiprecision::cpp_rational so that Eigen's scalar traits can be
/// specialized without tripping over boost's template constructors.
class Rat {
 public:
  using impl_type = boost::multiprecision::cpp_rational;

  Rat() : v_(0) {}
  Rat(long long n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(int n) : v_(n) {}
  Rat(long long n, long long d) : v_(n, d) {}
  explicit Rat(impl_type v) : v_(std::move(v)) {}

  const impl_type& impl() const { return v_; }

  bool isZero() const { return v_.is_zero(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.v_ / b.v_); }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return a.v_ < 0 ? Rat(-a.v_) : a; }

  Rat inverse() const { return Rat(impl_type(denominator(v_), numerator(v_))); }

  std::string str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  /// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
  static Rat parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  impl_type v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace ncqh
