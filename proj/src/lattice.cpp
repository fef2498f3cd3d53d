#include "cocenter/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cocenter/errors.hpp"

namespace cocenter {

std::int64_t denominator_lcm(const RatVec& v, int dim) {
  std::int64_t l = 1;
  for (int i = 0; i < dim; ++i) l = std::lcm(l, v[i].denominator());
  return l;
}

bool is_integral(const RatVec& v, int dim) {
  for (int i = 0; i < dim; ++i)
    if (v[i].denominator() != 1) return false;
  return true;
}

IntVec to_integral(const RatVec& v, int dim) {
  IntVec out{};
  for (int i = 0; i < dim; ++i) out[i] = v[i].numerator();
  return out;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_rational_pq(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_integer(const std::string& text, const char* production) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError(production, "empty integer");
  std::size_t pos = 0;
  if (t[0] == '+' || t[0] == '-') pos = 1;
  if (pos == t.size()) throw ParseError(production, "sign without digits in '" + text + "'");
  for (std::size_t i = pos; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') throw ParseError(production, "unexpected character in '" + text + "'");
  if (t.size() - pos > 17) throw ParseError(production, "integer too large: '" + text + "'");
  return std::stoll(t);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, "rational"));
  std::int64_t p = parse_integer(t.substr(0, slash), "rational");
  std::int64_t q = parse_integer(t.substr(slash + 1), "rational");
  if (q == 0) throw ParseError("rational", "zero denominator in '" + text + "'");
  return Rational(p, q);
}

SmithForm smith_normal_form(IntMatrix a) {
  SmithForm f;
  f.rows = static_cast<int>(a.size());
  f.cols = f.rows == 0 ? 0 : static_cast<int>(a[0].size());
  const int m = f.rows;
  const int n = f.cols;
  f.left.assign(m, std::vector<std::int64_t>(m, 0));
  f.left_inverse.assign(m, std::vector<std::int64_t>(m, 0));
  for (int i = 0; i < m; ++i) f.left[i][i] = f.left_inverse[i][i] = 1;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(f.left[i], f.left[j]);
    for (int r = 0; r < m; ++r) std::swap(f.left_inverse[r][i], f.left_inverse[r][j]);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
  };
  // row_i -= q * row_t
  auto row_sub = [&](int i, int t, std::int64_t q) {
    for (int c = 0; c < n; ++c) a[i][c] -= q * a[t][c];
    for (int c = 0; c < m; ++c) f.left[i][c] -= q * f.left[t][c];
    for (int r = 0; r < m; ++r) f.left_inverse[r][t] += q * f.left_inverse[r][i];
  };

  const int k = std::min(m, n);
  f.diagonal.assign(k, 0);
  for (int t = 0; t < k; ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi < 0 || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return f;  // remaining block is zero
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        row_sub(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        std::int64_t q = a[t][j] / a[t][t];
        for (int r = 0; r < m; ++r) a[r][j] -= q * a[r][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[t][t] < 0) {
      for (int c = 0; c < n; ++c) a[t][c] = -a[t][c];
      for (int c = 0; c < m; ++c) f.left[t][c] = -f.left[t][c];
      for (int r = 0; r < m; ++r) f.left_inverse[r][t] = -f.left_inverse[r][t];
    }
    f.diagonal[t] = a[t][t];
  }
  return f;
}

LatticeQuotient::LatticeQuotient(int dim, const std::vector<IntVec>& generators) : dim_(dim) {
  IntMatrix a(dim, std::vector<std::int64_t>(generators.size(), 0));
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (int i = 0; i < dim; ++i) a[i][j] = generators[j][i];
  if (generators.empty()) {
    snf_.rows = dim;
    snf_.left.assign(dim, std::vector<std::int64_t>(dim, 0));
    snf_.left_inverse = snf_.left;
    for (int i = 0; i < dim; ++i) snf_.left[i][i] = snf_.left_inverse[i][i] = 1;
  } else {
    snf_ = smith_normal_form(std::move(a));
  }
  for (int c = 0; c < dim; ++c) {
    std::int64_t d = c < static_cast<int>(snf_.diagonal.size()) ? snf_.diagonal[c] : 0;
    if (d == 1) continue;
    coords_.push_back(c);
    orders_.push_back(d);
  }
}

LatticeQuotient::Label LatticeQuotient::label(const IntVec& x) const {
  Label out;
  out.reserve(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    std::int64_t y = 0;
    for (int j = 0; j < dim_; ++j) y += snf_.left[coords_[k]][j] * x[j];
    std::int64_t d = orders_[k];
    if (d > 0) y = ((y % d) + d) % d;
    out.push_back(y);
  }
  return out;
}

IntVec LatticeQuotient::representative(const Label& label) const {
  IntVec x{};
  for (std::size_t k = 0; k < coords_.size() && k < label.size(); ++k)
    for (int i = 0; i < dim_; ++i) x[i] += snf_.left_inverse[i][coords_[k]] * label[k];
  return x;
}

bool LatticeQuotient::contains(const IntVec& x) const {
  for (auto v : label(x))
    if (v != 0) return false;
  return true;
}

LatticeQuotient::Label LatticeQuotient::normalize(const Label& label) const {
  if (orders_.empty()) {
    for (auto v : label)
      if (v != 0) throw InputError("nonzero label " + format_label(label) + " for trivial quotient");
    return {};
  }
  if (label.size() != orders_.size())
    throw InputError("label " + format_label(label) + " has " + std::to_string(label.size()) +
                     " entries, expected " + std::to_string(orders_.size()));
  Label out = label;
  for (std::size_t k = 0; k < out.size(); ++k)
    if (orders_[k] > 0) out[k] = ((out[k] % orders_[k]) + orders_[k]) % orders_[k];
  return out;
}

bool LatticeQuotient::finite() const {
  for (auto d : orders_)
    if (d == 0) return false;
  return true;
}

std::vector<LatticeQuotient::Label> LatticeQuotient::all_labels() const {
  if (!finite()) return {};
  std::vector<Label> out{Label{}};
  for (auto d : orders_) {
    std::vector<Label> next;
    for (const auto& l : out)
      for (std::int64_t v = 0; v < d; ++v) {
        auto e = l;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::string LatticeQuotient::describe() const {
  if (orders_.empty()) return "trivial";
  std::string s;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    if (k) s += " x ";
    s += orders_[k] == 0 ? "Z" : "Z/" + std::to_string(orders_[k]);
  }
  return s;
}

std::string format_label(const LatticeQuotient::Label& label) {
  if (label.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(label[i]);
  }
  return s;
}

LatticeQuotient::Label parse_label(const std::string& text) {
  LatticeQuotient::Label out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, "omega_label"));
  if (out.empty()) throw ParseError("omega_label", "empty label");
  return out;
}

}  // namespace cocenter
