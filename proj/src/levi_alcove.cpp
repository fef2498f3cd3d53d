#include "cocenter/levi_alcove.hpp"

#include <algorithm>

#include "cocenter/errors.hpp"

namespace cocenter {

LeviWeylGroup::LeviWeylGroup(std::shared_ptr<const RootDatum> datum, const RatVec& v)
    : datum_(std::move(datum)), levi_(datum_->levi_datum(v)) {
  group_ = std::make_shared<IwahoriWeyl>(datum_, levi_.zero_roots);
}

std::string LeviWeylGroup::label() const {
  if (levi_.zero_roots.size() == datum_->roots().size()) return "G";
  if (levi_.zero_roots.empty()) return "T";
  const auto& gs = datum_->simple_roots();
  std::vector<int> idx;
  bool standard = true;
  for (int r : group_->simple_system()) {
    auto it = std::find(gs.begin(), gs.end(), r);
    if (it == gs.end()) standard = false;
    else idx.push_back(static_cast<int>(it - gs.begin()) + 1);
  }
  std::string s;
  if (standard) {
    std::sort(idx.begin(), idx.end());
    s = "L{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "}";
  }
  s = "L<";
  bool first = true;
  for (int r : group_->simple_system()) {
    if (!first) s += ";";
    first = false;
    s += "(";
    for (int k = 0; k < datum_->dim(); ++k) s += (k ? "," : "") + std::to_string(datum_->root(r).character[k]);
    s += ")";
  }
  return s + ">";
}

std::size_t LeviWeylGroup::max_finite_parabolic() const {
  const int n = group_->num_simple();
  std::size_t best = 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) k.push_back(i);
    if (group_->parabolic_is_finite(k)) best = std::max(best, group_->parabolic_size(k));
  }
  return best;
}

NewtonIndex newton_index_map(const IwahoriWeyl& g, const LeviWeylGroup& m, const NewtonIndex& idx) {
  const auto& q = m.group().omega_group();
  IntVec rep = q.representative(q.normalize(idx.omega));
  return NewtonIndex{g.kappa(g.translation(rep)), dominant_in(g, idx.nu_bar).first};
}

bool m_in_g_stratum_check(const IwahoriWeyl& g, const LeviWeylGroup& m, const Element& w) {
  return newton_index(g, w) == newton_index_map(g, m, m.pi(w));
}

NewtonIndex ConjugateLevi::map(const LeviWeylGroup& from, const NewtonIndex& idx) const {
  const auto& d = from.group().datum();
  const auto& q = from.group().omega_group();
  IntVec rep = d.weyl().act(u0, q.representative(q.normalize(idx.omega)));
  RatVec nu = d.weyl().act(u0, idx.nu_bar);
  const auto& target = levi->group();
  return NewtonIndex{target.kappa(target.translation(rep)), dominant_in(target, nu).first};
}

ConjugateLevi conjugate_levi(std::shared_ptr<const RootDatum> datum, int u0, const LeviWeylGroup& m) {
  RatVec v = datum->weyl().act(u0, m.v());
  return ConjugateLevi{std::make_shared<LeviWeylGroup>(datum, v), u0};
}

bool is_v_alcove(const IwahoriWeyl& g, const Element& w, const RatVec& v, int window_factor) {
  const auto& d = g.datum();
  if (d.weyl().act(w.finite, v) != v) return false;
  const Element inv = g.inverse(w);
  std::int64_t win = 0;
  for (const auto& r : d.roots()) win = std::max<std::int64_t>(win, std::llabs(dot(r.character, w.translation, d.dim())));
  win = (win + 1) * window_factor;
  for (int b = 0; b < static_cast<int>(d.roots().size()); ++b) {
    if (sign(d.pair(b, v)) <= 0) continue;
    for (std::int64_t k = -win; k <= win; ++k) {
      AffineRoot a{b, k};
      if (g.positive(g.act(inv, a)) && !g.positive(a)) return false;
    }
  }
  return true;
}

namespace {
int k0(const Root& r) { return r.positive ? 1 : 0; }
}  // namespace

bool strictly_positive(const IwahoriWeyl& g, const LeviDatum& levi, const Element& w, int* witness,
                       std::int64_t* shift) {
  const auto& d = g.datum();
  const auto& weyl = d.weyl();
  const int uinv = weyl.inverse(w.finite);
  for (int b : levi.plus_roots) {
    int ub = weyl.act_root(w.finite, b);
    std::int64_t s = d.pair(ub, w.translation);
    if (s < 1 + k0(d.root(ub)) - k0(d.root(b))) {
      if (witness) *witness = b;
      if (shift) *shift = s;
      return false;
    }
  }
  for (int p : levi.plus_roots) {
    int b = d.root(p).negation;
    int ub = weyl.act_root(uinv, b);
    std::int64_t s = -d.pair(b, w.translation);
    if (s < 1 + k0(d.root(ub)) - k0(d.root(b))) {
      if (witness) *witness = b;
      if (shift) *shift = -s;
      return false;
    }
  }
  return true;
}

PositivityCertificate positivity_exponent(const IwahoriWeyl& g, const LeviWeylGroup& m, const Element& w) {
  const auto& d = g.datum();
  if (!m.is_member(w)) throw InputError("element is not in the Levi Iwahori-Weyl group of v");
  RatVec nu = newton_point(g, w);
  for (int b : m.levi().plus_roots)
    if (sign(d.pair(b, nu)) <= 0)
      throw InputError("Newton point of the element is not strictly positive on Phi_{v,+}");

  PositivityCertificate c;
  c.i_frak = denominator_lcm(m.v(), d.dim());
  c.n0 = m.group().wa_ball_count(m.length(w));
  c.n1 = m.max_finite_parabolic();
  c.exponent_bound = (2 * static_cast<std::int64_t>(c.n0) + static_cast<std::int64_t>(c.n1) + 1) * c.i_frak;
  c.first_power_positive = strictly_positive(g, m.levi(), w, &c.witness_root, &c.witness_shift);

  Element p = w;
  const std::int64_t limit = std::max<std::int64_t>(c.exponent_bound, 1) * 4 + 64;
  for (std::int64_t i = 1; i <= limit; ++i) {
    if (strictly_positive(g, m.levi(), p)) {
      c.exponent = i;
      break;
    }
    p = g.multiply(p, w);
  }
  if (c.exponent == 0) throw InvariantViolation("no strictly positive power found");
  if (c.exponent > c.exponent_bound)
    throw InvariantViolation("positivity exponent " + std::to_string(c.exponent) + " exceeds the bound " +
                             std::to_string(c.exponent_bound));
  return c;
}

}  // namespace cocenter
