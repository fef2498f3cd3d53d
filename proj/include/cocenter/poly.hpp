#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cocenter {

// Integer polynomial in q, dense, no trailing zero coefficients. Arithmetic is overflow-checked.
class Poly {
 public:
  Poly() = default;
  Poly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  static Poly q(int power = 1);
  static Poly from_coefficients(std::vector<std::int64_t> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t at(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  std::int64_t eval(std::int64_t x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;
  bool operator<(const Poly& o) const { return c_ < o.c_; }

  std::string str() const;  // "q^2-1", "0", "-q+3"
  static Poly parse(const std::string& text);  // throws ParseError("poly")

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace cocenter
