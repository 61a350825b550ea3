#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fob {

// Exact rational on int64. Phases and boundary positions only ever need small
// numerators, so overflow is checked rather than avoided.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  static Rational parse(const std::string& s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(checked_add(checked_mul(num_, o.den_), -checked_mul(o.num_, den_)),
                    checked_mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Midpoint, used for canonical fresh positions.
  static Rational mid(const Rational& a, const Rational& b) {
    return (a + b) / Rational(2);
  }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse rational '" + s + "'");
  }
}

}  // namespace fob
