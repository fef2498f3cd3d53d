#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace cocenter {

// Largest rank of X_* we support (GL5).
inline constexpr int kMaxDim = 5;

using Rational = boost::rational<std::int64_t>;

// Integer vector in X_* (or X^*) coordinates; entries past the group's dimension stay zero.
using IntVec = std::array<std::int64_t, kMaxDim>;
// Rational vector in V = X_* (x) Q, same coordinates as IntVec.
using RatVec = std::array<Rational, kMaxDim>;

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Comparing boost::rational against a plain integer with == recurses under C++20 rewritten
// comparisons, so sign tests go through the numerator.
inline int sign(const Rational& r) { return r.numerator() > 0 ? 1 : (r.numerator() < 0 ? -1 : 0); }

inline std::int64_t dot(const IntVec& a, const IntVec& b, int dim) {
  std::int64_t s = 0;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVec& a, const RatVec& b, int dim) {
  Rational s = 0;
  for (int i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r{};
  for (int i = 0; i < kMaxDim; ++i) r[i] = v[i];
  return r;
}

// Least positive integer n with n*v integral.
std::int64_t denominator_lcm(const RatVec& v, int dim);

bool is_integral(const RatVec& v, int dim);
IntVec to_integral(const RatVec& v, int dim);  // requires is_integral

std::string format_rational(const Rational& r);        // "2/3", "-1", "0"
std::string format_rational_pq(const Rational& r);     // always "p/q"
Rational parse_rational(const std::string& text);      // throws ParseError("rational")

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

// Smith normal form U*A*V = D of an integer matrix, keeping U and U^{-1}.
struct SmithForm {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> diagonal;  // length min(rows, cols)
  IntMatrix left;                      // U
  IntMatrix left_inverse;              // U^{-1}
};

SmithForm smith_normal_form(IntMatrix a);

// The quotient X / L of a lattice X = Z^dim by the sublattice L spanned by `generators`.
// Labels are canonical: torsion coordinates are reduced into [0, d).
class LatticeQuotient {
 public:
  using Label = std::vector<std::int64_t>;

  LatticeQuotient() = default;
  LatticeQuotient(int dim, const std::vector<IntVec>& generators);

  Label label(const IntVec& x) const;
  IntVec representative(const Label& label) const;
  // True iff x lies in L.
  bool contains(const IntVec& x) const;
  // Reduces a user-supplied label to canonical form; throws InputError on a size mismatch.
  Label normalize(const Label& label) const;

  // Cyclic orders of the factors: 0 for a free factor.
  const std::vector<std::int64_t>& orders() const { return orders_; }
  bool finite() const;
  // Every label when finite; empty otherwise.
  std::vector<Label> all_labels() const;
  std::string describe() const;  // e.g. "Z/3", "Z", "trivial", "Z/2 x Z/2"

 private:
  int dim_ = 0;
  SmithForm snf_;
  std::vector<int> coords_;            // indices of nontrivial factors in U-coordinates
  std::vector<std::int64_t> orders_;   // one per coords_ entry
};

std::string format_label(const LatticeQuotient::Label& label);
LatticeQuotient::Label parse_label(const std::string& text);

}  // namespace cocenter
