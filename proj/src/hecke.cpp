#include "cocenter/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "cocenter/errors.hpp"
#include "cocenter/reduction.hpp"

namespace cocenter {

void hecke_accumulate(HeckeElement& f, const Element& w, const Poly& c) {
  if (c.is_zero()) return;
  auto it = f.find(w);
  if (it == f.end()) {
    f.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) f.erase(it);
}

HeckeElement hecke_basis(const Element& w, const Poly& c) {
  HeckeElement f;
  hecke_accumulate(f, w, c);
  return f;
}

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [w, c] : b) hecke_accumulate(r, w, c);
  return r;
}

HeckeElement hecke_sub(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [w, c] : b) hecke_accumulate(r, w, -c);
  return r;
}

HeckeElement hecke_scale(const HeckeElement& a, const Poly& c) {
  HeckeElement r;
  for (const auto& [w, x] : a) hecke_accumulate(r, w, x * c);
  return r;
}

HeckeElement hecke_mul_simple(const IwahoriWeyl& g, const HeckeElement& f, int s) {
  static const Poly q = Poly::q(1);
  static const Poly qm1 = Poly::q(1) - Poly(1);
  HeckeElement r;
  for (const auto& [z, c] : f) {
    Element zs = g.multiply(z, g.simple(s));
    if (g.length(zs) > g.length(z)) {
      hecke_accumulate(r, zs, c);
    } else {
      hecke_accumulate(r, zs, q * c);
      hecke_accumulate(r, z, qm1 * c);
    }
  }
  return r;
}

HeckeElement hecke_mul(const IwahoriWeyl& g, const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r;
  for (const auto& [y, cy] : b) {
    auto split = g.wa_omega_split(y);
    HeckeElement cur = a;
    for (int s : split.word) cur = hecke_mul_simple(g, cur, s);
    for (const auto& [z, c] : cur) hecke_accumulate(r, g.multiply(z, split.omega_element), c * cy);
  }
  return r;
}

HeckeElement hecke_commutator(const IwahoriWeyl& g, const HeckeElement& a, const HeckeElement& b) {
  return hecke_sub(hecke_mul(g, a, b), hecke_mul(g, b, a));
}

std::map<Element, std::int64_t> specialize(const HeckeElement& f, std::int64_t value) {
  std::map<Element, std::int64_t> r;
  for (const auto& [w, c] : f) {
    std::int64_t v = c.eval(value);
    if (v != 0) r[w] = v;
  }
  return r;
}

Components component_split(const IwahoriWeyl& g, const HeckeElement& f) {
  Components out;
  for (const auto& [w, c] : f) hecke_accumulate(out[newton_index(g, w)], w, c);
  return out;
}

HeckeElement newton_component(const CocenterNormalForm& nf, const NewtonIndex& idx) {
  auto it = nf.components.find(idx);
  return it == nf.components.end() ? HeckeElement{} : it->second;
}

Element Cocenter::canonical(const Element& w_min) const {
  {
    std::shared_lock lock(mutex_);
    auto it = canonical_memo_.find(w_min);
    if (it != canonical_memo_.end()) return it->second;
  }
  auto all = minimal_conjugates(g_, w_min);
  if (all.empty()) throw InvariantViolation("minimal element missing from its own class");
  Element best = *std::min_element(all.begin(), all.end(),
                                   [&](const Element& a, const Element& b) { return word_less(g_, a, b); });
  std::unique_lock lock(mutex_);
  for (const auto& x : all) canonical_memo_.emplace(x, best);
  return best;
}

HeckeElement Cocenter::reduce_basis(const Element& w) const {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  HeckeElement out;
  auto dm = first_down_move(g_, w);
  if (!dm) {
    out = hecke_basis(canonical(w));
  } else {
    // T_x = T_s T_{sx} is congruent to T_{sx} T_s = q T_{sxs} + (q-1) T_{sx}
    Element sx = g_.multiply(g_.simple(dm->s), dm->at);
    Element sxs = g_.multiply(sx, g_.simple(dm->s));
    out = hecke_add(hecke_scale(reduce_basis(sx), Poly::q(1) - Poly(1)), hecke_scale(reduce_basis(sxs), Poly::q(1)));
  }
  std::unique_lock lock(mutex_);
  memo_.emplace(w, out);
  return out;
}

HeckeElement Cocenter::reduce(const HeckeElement& f) const {
  HeckeElement r;
  for (const auto& [w, c] : f)
    for (const auto& [k, x] : reduce_basis(w)) hecke_accumulate(r, k, x * c);
  return r;
}

CocenterNormalForm Cocenter::normal_form(const HeckeElement& f) const {
  CocenterNormalForm nf;
  nf.terms = reduce(f);
  nf.components = component_split(g_, nf.terms);
  return nf;
}

namespace {

HeckeElement reduce_random_basis(const Cocenter& cc, const Element& w, std::mt19937_64& rng) {
  const IwahoriWeyl& g = cc.group();
  std::vector<std::pair<Element, int>> moves;
  for (const auto& x : equal_class(g, w))
    for (int s = 0; s < g.num_simple(); ++s)
      if (conj_step(g, x, s).first == ConjMove::Down) moves.emplace_back(x, s);
  if (moves.empty()) return hecke_basis(cc.canonical(w));
  const auto& [x, s] = moves[rng() % moves.size()];
  Element sx = g.multiply(g.simple(s), x);
  Element sxs = g.multiply(sx, g.simple(s));
  HeckeElement a = reduce_random_basis(cc, sx, rng);
  HeckeElement b = reduce_random_basis(cc, sxs, rng);
  return hecke_add(hecke_scale(a, Poly::q(1) - Poly(1)), hecke_scale(b, Poly::q(1)));
}

}  // namespace

HeckeElement Cocenter::reduce_random(const HeckeElement& f, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  HeckeElement r;
  for (const auto& [w, c] : f)
    for (const auto& [k, x] : reduce_random_basis(*this, w, rng)) hecke_accumulate(r, k, x * c);
  return r;
}

std::vector<std::pair<Element, HeckeElement>> Cocenter::snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<Element, HeckeElement>> out(memo_.begin(), memo_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void Cocenter::preload(const std::vector<std::pair<Element, HeckeElement>>& entries) const {
  std::unique_lock lock(mutex_);
  for (const auto& [w, f] : entries) memo_.emplace(w, f);
}

std::size_t Cocenter::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

CocenterNormalForm induce(const Cocenter& g, const LeviWeylGroup& m, const HeckeElement& f, const NewtonIndex& nu_m) {
  HeckeElement acc;
  for (const auto& [w, c] : f) {
    if (!m.is_member(w)) throw InputError("induce: support element is not in the Levi subgroup");
    if (!is_min_in_class(m.group(), w)) throw InputError("induce: support element is not of minimal length in M");
    if (!(m.pi(w) == nu_m)) throw InputError("induce: support element lies outside the requested Newton index of M");
    acc = hecke_add(acc, hecke_scale(g.reduce_basis(w), c));
  }
  CocenterNormalForm nf;
  nf.terms = std::move(acc);
  nf.components = component_split(g.group(), nf.terms);
  return nf;
}

std::vector<RigidRow> rigid_decomposition(const Cocenter& cc, int max_length) {
  const IwahoriWeyl& g = cc.group();
  auto datum = g.datum_ptr();
  auto ball = g.ball(max_length, g.default_labels());
  std::map<NewtonIndex, std::set<Element>> classes;
  for (const auto& w : ball)
    if (is_min_in_class(g, w)) {
      Element key = cc.canonical(w);
      classes[newton_index(g, key)].insert(key);
    }

  std::map<RatVec, std::shared_ptr<LeviWeylGroup>> levis;
  auto levi_of = [&](const RatVec& v) {
    auto& slot = levis[v];
    if (!slot) slot = std::make_shared<LeviWeylGroup>(datum, v);
    return slot;
  };

  std::vector<RigidRow> rows;
  for (const auto& [idx, keys] : classes) {
    RigidRow row;
    row.index = idx;
    row.count = keys.size();
    auto m = levi_of(idx.nu_bar);
    row.levi = m->label();
    row.central = true;
    for (int r : m->group().system_roots())
      if (sign(datum->pair(r, idx.nu_bar)) != 0) row.central = false;

    std::vector<Element> uncovered;
    for (const auto& key : keys) {
      bool ok = false;
      for (const auto& y : minimal_conjugates(g, key)) {
        RatVec nu = newton_point(g, y);
        if (!is_v_alcove(g, y, nu)) continue;
        auto mp = levi_of(nu);
        if (!mp->is_member(y) || !is_min_in_class(mp->group(), y)) continue;
        auto nf = induce(cc, *mp, hecke_basis(y), mp->pi(y));
        if (newton_component(nf, idx) == hecke_basis(key)) {
          ok = true;
          break;
        }
      }
      if (!ok) uncovered.push_back(key);
    }
    row.method = "alcove";
    if (!uncovered.empty()) {
      row.method = "span";
      std::vector<HeckeElement> images;
      for (const auto& x : ball)
        if (m->is_member(x) && is_min_in_class(m->group(), x) && newton_index_map(g, *m, m->pi(x)) == idx) {
          auto comp = newton_component(cc.normal_form(hecke_basis(x)), idx);
          if (!comp.empty()) images.push_back(std::move(comp));
        }
      std::erase_if(uncovered, [&](const Element& key) { return in_span(images, hecke_basis(key)); });
    }
    row.covered = uncovered.empty();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

using Big = boost::multiprecision::cpp_int;

// Dense polynomial with big integer coefficients, used only by the elimination.
struct BigPoly {
  std::vector<Big> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
};

BigPoly to_big(const Poly& p) {
  BigPoly r;
  for (auto x : p.coefficients()) r.c.emplace_back(x);
  return r;
}

BigPoly mul(const BigPoly& a, const BigPoly& b) {
  BigPoly r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

BigPoly sub(const BigPoly& a, const BigPoly& b) {
  BigPoly r = a;
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), 0);
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

BigPoly exact_div(BigPoly a, const BigPoly& b) {
  if (b.zero()) throw InvariantViolation("elimination: division by zero pivot");
  if (a.zero()) return a;
  if (a.c.size() < b.c.size()) throw InvariantViolation("elimination: inexact division");
  BigPoly q;
  q.c.assign(a.c.size() - b.c.size() + 1, 0);
  const Big& lead = b.c.back();
  for (std::size_t k = q.c.size(); k-- > 0;) {
    const Big& top = a.c[k + b.c.size() - 1];
    if (top % lead != 0) throw InvariantViolation("elimination: inexact division");
    Big t = top / lead;
    q.c[k] = t;
    for (std::size_t j = 0; j < b.c.size(); ++j) a.c[k + j] -= t * b.c[j];
  }
  a.trim();
  if (!a.zero()) throw InvariantViolation("elimination: inexact division");
  q.trim();
  return q;
}

}  // namespace

std::size_t hecke_rank(const std::vector<HeckeElement>& rows) {
  std::map<Element, std::size_t> column;
  for (const auto& r : rows)
    for (const auto& [w, c] : r) column.emplace(w, 0);
  std::size_t ncols = 0;
  for (auto& [w, j] : column) j = ncols++;
  std::vector<std::vector<BigPoly>> a(rows.size(), std::vector<BigPoly>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [w, c] : rows[i]) a[i][column[w]] = to_big(c);

  // Bareiss: after each pivot, entries below are minors, so the division by the previous pivot is exact.
  BigPoly prev;
  prev.c = {1};
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && a[p][col].zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        a[i][j] = exact_div(sub(mul(a[rank][col], a[i][j]), mul(a[i][col], a[rank][j])), prev);
      a[i][col] = BigPoly{};
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<HeckeElement>& rows, const HeckeElement& v) {
  if (v.empty()) return true;
  auto extended = rows;
  extended.push_back(v);
  return hecke_rank(extended) == hecke_rank(rows);
}

std::size_t truncated_commutator_defect(const Cocenter& cc, int max_length) {
  const IwahoriWeyl& g = cc.group();
  auto ball = g.ball(max_length, g.default_labels());
  std::set<Element> inside(ball.begin(), ball.end());
  std::vector<HeckeElement> gens;
  for (int s = 0; s < g.num_simple(); ++s) gens.push_back(hecke_basis(g.simple(s)));
  for (const auto& w : ball)
    if (g.length(w) == 0 && !(w == g.identity())) gens.push_back(hecke_basis(w));

  std::vector<HeckeElement> comms;
  for (const auto& x : ball)
    for (const auto& t : gens) {
      auto c = hecke_commutator(g, hecke_basis(x), t);
      if (c.empty()) continue;
      bool fits = std::all_of(c.begin(), c.end(), [&](const auto& kv) { return inside.count(kv.first) > 0; });
      if (fits) comms.push_back(std::move(c));
    }
  std::set<Element> keys;
  for (const auto& w : ball)
    if (is_min_in_class(g, w)) keys.insert(cc.canonical(w));
  auto with_keys = comms;
  for (const auto& k : keys) with_keys.push_back(hecke_basis(k));
  std::size_t gained = hecke_rank(with_keys) - hecke_rank(comms);
  return keys.size() - gained;
}

}  // namespace cocenter
