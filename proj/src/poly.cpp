#include "cocenter/poly.hpp"

#include <cctype>

#include "cocenter/errors.hpp"

namespace cocenter {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("polynomial coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("polynomial coefficient overflow");
  return r;
}

}  // namespace

Poly::Poly(std::int64_t c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::q(int power) {
  Poly p;
  p.c_.assign(power + 1, 0);
  p.c_[power] = 1;
  return p;
}

Poly Poly::from_coefficients(std::vector<std::int64_t> c) {
  Poly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t Poly::eval(std::int64_t x) const {
  std::int64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = add_checked(mul_checked(r, x), *it);
  return r;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = mul_checked(x, -1);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = add_checked(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = add_checked(r[i + j], mul_checked(a.c_[i], b.c_[j]));
  return Poly::from_coefficients(std::move(r));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    std::int64_t m = c < 0 ? -c : c;
    if (c < 0) s += "-";
    else if (!s.empty()) s += "+";
    if (i == 0 || m != 1) s += std::to_string(m);
    if (i >= 1) s += "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly Poly::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("poly", "empty polynomial");
  Poly out;
  std::size_t i = 0;
  while (i < t.size()) {
    int sgn = 1;
    if (t[i] == '+' || t[i] == '-') {
      sgn = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("poly", "expected '+' or '-' at offset " + std::to_string(i) + " in '" + text + "'");
    }
    std::int64_t coef = 1;
    bool have_digits = false;
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > start) {
      if (i - start > 17) throw ParseError("poly", "coefficient too large in '" + text + "'");
      coef = std::stoll(t.substr(start, i - start));
      have_digits = true;
    }
    int power = 0;
    if (i < t.size() && t[i] == '*' && have_digits && i + 1 < t.size() && t[i + 1] == 'q') ++i;
    if (i < t.size() && t[i] == 'q') {
      ++i;
      power = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == ps || i - ps > 4) throw ParseError("poly", "bad exponent in '" + text + "'");
        power = std::stoi(t.substr(ps, i - ps));
      }
    } else if (!have_digits) {
      throw ParseError("poly", "expected a coefficient or q at offset " + std::to_string(i) + " in '" + text + "'");
    }
    Poly term = Poly::q(power) * Poly(sgn * coef);
    out += term;
  }
  return out;
}

}  // namespace cocenter
