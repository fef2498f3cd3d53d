#include "cocenter/newton.hpp"

namespace cocenter {

RatVec newton_point(const IwahoriWeyl& g, const Element& w) {
  const auto& weyl = g.datum().weyl();
  const int n = weyl.order(w.finite);
  IntVec sum{};
  IntVec cur = w.translation;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < kMaxDim; ++k) sum[k] += cur[k];
    cur = weyl.act(w.finite, cur);
  }
  RatVec out{};
  for (int k = 0; k < g.dim(); ++k) out[k] = Rational(sum[k], n);
  return out;
}

std::pair<RatVec, int> dominant_in(const IwahoriWeyl& g, const RatVec& v) {
  const auto& d = g.datum();
  RatVec cur = v;
  int u = 0;
  for (;;) {
    int hit = -1;
    for (int r : g.simple_system())
      if (sign(d.pair(r, cur)) < 0) {
        hit = r;
        break;
      }
    if (hit < 0) return {cur, u};
    int s = d.root(hit).reflection;
    cur = d.weyl().act(s, cur);
    u = d.weyl().multiply(s, u);
  }
}

bool is_dominant_in(const IwahoriWeyl& g, const RatVec& v) {
  for (int r : g.simple_system())
    if (sign(g.datum().pair(r, v)) < 0) return false;
  return true;
}

NewtonIndex newton_index(const IwahoriWeyl& g, const Element& w) {
  return NewtonIndex{g.kappa(w), dominant_in(g, newton_point(g, w)).first};
}

Rational pair_two_rho(const IwahoriWeyl& g, const RatVec& v) {
  Rational s = 0;
  for (int r : g.positive_system()) s += g.datum().pair(r, v);
  return s;
}

bool is_straight(const IwahoriWeyl& g, const Element& w) {
  return pair_two_rho(g, newton_index(g, w).nu_bar) == Rational(g.length(w));
}

bool is_straight_by_powers(const IwahoriWeyl& g, const Element& w) {
  const std::int64_t bound = g.datum().weyl().order(w.finite) * denominator_lcm(newton_point(g, w), g.dim());
  const std::int64_t l = g.length(w);
  Element p = w;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (g.length(p) != n * l) return false;
    p = g.multiply(p, w);
  }
  return true;
}

Strata strata(const IwahoriWeyl& g, int max_length, const std::vector<LatticeQuotient::Label>& labels) {
  Strata out;
  for (const auto& w : g.ball(max_length, labels)) out[newton_index(g, w)].push_back(w);
  return out;
}

std::string format_coweight(const RatVec& v, int dim) {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

std::string format_index(const NewtonIndex& idx, int dim) {
  return "kappa=" + format_label(idx.omega) + " nu=" + format_coweight(idx.nu_bar, dim);
}

}  // namespace cocenter
