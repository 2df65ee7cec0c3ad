#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace luka {

/// Exact rational number. Always in lowest terms with positive denominator;
/// all comparisons are exact. Text form is "num/den", or just "num" when the
/// denominator is 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<long>(n)) {}
  Rat(long num, long den);

  /// Parses "3/5", "-3/5", "7", "-7". Throws std::invalid_argument otherwise.
  static Rat parse(const std::string& text);

  std::string str() const;

  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

 private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace luka
