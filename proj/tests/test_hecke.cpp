#include "doctest.h"

#include <random>
#include <set>

#include "cocenter/errors.hpp"
#include "cocenter/hecke.hpp"
#include "cocenter/reduction.hpp"

using namespace cocenter;

namespace {

std::shared_ptr<const RootDatum> datum(const std::string& g, const std::string& lattice = "sc") {
  return RootDatum::build(GroupDescriptor::parse(g, lattice));
}

const Poly q = Poly::q(1);
const Poly qm1 = Poly::q(1) - Poly(1);

RatVec rv(std::initializer_list<Rational> xs) {
  RatVec v{};
  std::size_t i = 0;
  for (auto x : xs) v[i++] = x;
  return v;
}

// Group algebra product, the q = 1 oracle.
std::map<Element, std::int64_t> group_mul(const IwahoriWeyl& g, const std::map<Element, std::int64_t>& a,
                                          const std::map<Element, std::int64_t>& b) {
  std::map<Element, std::int64_t> r;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) r[g.multiply(x, y)] += cx * cy;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

}  // namespace

TEST_CASE("polynomials") {
  CHECK((q * q - Poly(1)).str() == "q^2-1");
  CHECK(Poly::parse("q^2-1") == q * q - Poly(1));
  CHECK(Poly::parse("-3q+2") == Poly(2) - q * Poly(3));
  CHECK(Poly::parse("2*q") == q * Poly(2));
  CHECK(Poly::parse("0").is_zero());
  CHECK(Poly().str() == "0");
  CHECK((qm1 * qm1).eval(1) == 0);
  CHECK_THROWS_AS(Poly::parse("q^"), ParseError);
  CHECK_THROWS_AS(Poly::parse("x"), ParseError);
  CHECK_THROWS_AS(Poly(INT64_MAX) * Poly(2), ResourceError);
}

TEST_CASE("Iwahori-Matsumoto relations") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  for (int s = 0; s < 2; ++s) {
    auto ts = hecke_basis(g.simple(s));
    HeckeElement want = hecke_add(hecke_basis(g.identity(), q), hecke_basis(g.simple(s), qm1));
    CHECK(hecke_mul(g, ts, ts) == want);
  }
  Element s010 = g.from_word({0, 1, 0}, {});
  auto prod = hecke_mul(g, hecke_mul(g, hecke_basis(g.simple(0)), hecke_basis(g.simple(1))), hecke_basis(g.simple(0)));
  CHECK(prod == hecke_basis(s010));
  CHECK(specialize(prod, 1) == std::map<Element, std::int64_t>{{s010, 1}});

  auto a2 = datum("A2", "adjoint");
  IwahoriWeyl h(a2);
  auto ball = h.ball(3, h.default_labels());
  for (const auto& x : ball)
    for (const auto& y : ball)
      if (h.length(h.multiply(x, y)) == h.length(x) + h.length(y))
        CHECK(hecke_mul(h, hecke_basis(x), hecke_basis(y)) == hecke_basis(h.multiply(x, y)));
}

TEST_CASE("associativity, unit and specialization") {
  auto d = datum("C2");
  IwahoriWeyl g(d);
  auto ball = g.ball(3, g.default_labels());
  std::mt19937_64 rng(7);
  auto pick = [&] {
    HeckeElement f;
    for (int k = 0; k < 2; ++k) hecke_accumulate(f, ball[rng() % ball.size()], Poly::from_coefficients({1, static_cast<std::int64_t>(rng() % 3)}));
    return f;
  };
  for (int trial = 0; trial < 40; ++trial) {
    auto a = pick(), b = pick(), c = pick();
    CHECK(hecke_mul(g, hecke_mul(g, a, b), c) == hecke_mul(g, a, hecke_mul(g, b, c)));
    CHECK(hecke_mul(g, a, hecke_basis(g.identity())) == a);
    CHECK(hecke_mul(g, hecke_basis(g.identity()), a) == a);
    CHECK(specialize(hecke_mul(g, a, b), 1) == group_mul(g, specialize(a, 1), specialize(b, 1)));
  }
}

TEST_CASE("SL2 normal form of s1 s0 s1") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  Cocenter cc(g);
  Element w = g.from_word({1, 0, 1}, {});
  Element s0s1 = g.from_word({0, 1}, {});
  auto nf = cc.normal_form(hecke_basis(w));
  HeckeElement want = hecke_add(hecke_basis(cc.canonical(s0s1), qm1), hecke_basis(cc.canonical(g.simple(0)), q));
  CHECK(nf.terms == want);
  CHECK(nf.components.size() == 2);
  NewtonIndex zero{{}, RatVec{}};
  NewtonIndex alpha{{}, rv({Rational(1)})};
  CHECK(newton_component(nf, zero) == hecke_basis(cc.canonical(g.simple(0)), q));
  CHECK(newton_component(nf, alpha) == hecke_basis(cc.canonical(g.translation(IntVec{1})), qm1));
  // s0 s1 is a translation by a coroot up to sign
  CHECK(g.are_conjugate(s0s1, g.translation(IntVec{1})));
  // already reduced input is left alone
  CHECK(cc.reduce(want) == want);
  CHECK(cc.normal_form({}).components.empty());
}

TEST_CASE("commutators vanish in the cocenter") {
  for (auto [name, budget] : {std::pair<const char*, int>{"A1", 6}, {"A2", 4}, {"C2", 4}}) {
    auto d = datum(name);
    IwahoriWeyl g(d);
    Cocenter cc(g);
    auto ball = g.ball(budget, g.default_labels());
    int failures = 0;
    for (const auto& x : ball)
      for (const auto& y : ball)
        if (g.length(x) + g.length(y) <= budget && x < y)
          if (!cc.reduce(hecke_commutator(g, hecke_basis(x), hecke_basis(y))).empty()) ++failures;
    CHECK_MESSAGE(failures == 0, name);
  }
}

TEST_CASE("random rewrite orders agree") {
  auto d = datum("A2");
  IwahoriWeyl g(d);
  Cocenter cc(g);
  auto ball = g.ball(5, g.default_labels());
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    for (const auto& w : ball) CHECK(cc.reduce_random(hecke_basis(w), seed) == cc.reduce_basis(w));
}

TEST_CASE("specialization and component discipline") {
  for (const char* name : {"A1", "A2", "G2"}) {
    auto d = datum(name, "adjoint");
    IwahoriWeyl g(d);
    Cocenter cc(g);
    for (const auto& w : g.ball(5, g.default_labels())) {
      auto nf = cc.normal_form(hecke_basis(w));
      auto at1 = specialize(nf.terms, 1);
      REQUIRE(at1.size() == 1);
      CHECK(at1.begin()->second == 1);
      CHECK(g.are_conjugate(w, at1.begin()->first));
      for (const auto& [k, c] : nf.terms) {
        CHECK(is_min_in_class(g, k));
        CHECK(cc.canonical(k) == k);
        CHECK(g.kappa(k) == g.kappa(w));
      }
      if (is_min_in_class(g, w)) {
        CHECK(nf.components.size() == 1);
        CHECK(nf.components.begin()->first == newton_index(g, w));
      }
    }
  }
}

TEST_CASE("induce from the torus of SL2") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  Cocenter cc(g);
  LeviWeylGroup torus(d, rv({Rational(1)}));
  LeviWeylGroup whole(d, RatVec{});
  Element tp = g.translation(IntVec{1}), tm = g.translation(IntVec{-1});
  NewtonIndex alpha{{}, rv({Rational(1)})};
  auto a = induce(cc, torus, hecke_basis(tp), torus.pi(tp));
  auto b = induce(cc, torus, hecke_basis(tm), torus.pi(tm));
  CHECK(a.terms == hecke_basis(cc.canonical(tp)));
  CHECK(b.terms == a.terms);
  CHECK(a.components.begin()->first == alpha);
  CHECK(g.length(tp) == 2);
  CHECK_THROWS_AS(induce(cc, torus, hecke_basis(tp), torus.pi(tm)), InputError);
  CHECK_THROWS_AS(induce(cc, torus, hecke_basis(g.simple(1)), torus.pi(tp)), InputError);
  CHECK_THROWS_AS(induce(cc, whole, hecke_basis(g.from_word({1, 0, 1}, {})), whole.pi(g.simple(0))), InputError);
  Element s0 = g.simple(0);
  CHECK(induce(cc, whole, hecke_basis(s0, q), whole.pi(s0)).terms == cc.reduce(hecke_basis(s0, q)));
}

TEST_CASE("rigid decomposition of SL2") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  Cocenter cc(g);
  auto rows = rigid_decomposition(cc, 4);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].index.nu_bar == RatVec{});
  CHECK(rows[0].levi == "G");
  CHECK(rows[0].count == 3);
  CHECK(rows[1].index.nu_bar == rv({Rational(1)}));
  CHECK(rows[1].levi == "T");
  CHECK(rows[1].count == 1);
  CHECK(rows[2].index.nu_bar == rv({Rational(2)}));
  CHECK(rows[2].levi == "T");
  CHECK(rows[2].count == 1);
  for (const auto& r : rows) {
    CHECK(r.covered);
    CHECK(r.central);
  }
  auto zero = rigid_decomposition(cc, 0);
  CHECK(zero.size() == 1);

  auto ad = datum("A2", "adjoint");
  IwahoriWeyl h(ad);
  Cocenter hc(h);
  auto rows0 = rigid_decomposition(hc, 0);
  CHECK(rows0.size() == 3);  // one row per element of Omega
  for (const auto& r : rows0) CHECK(r.count == 1);
}

TEST_CASE("fraction-free rank") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  Element a = g.identity(), b = g.simple(0), c = g.simple(1);
  HeckeElement r1 = hecke_add(hecke_basis(a, q), hecke_basis(b, Poly(1)));
  HeckeElement r2 = hecke_add(hecke_basis(a, q * q), hecke_basis(b, q));
  HeckeElement r3 = hecke_add(hecke_basis(b, qm1), hecke_basis(c, Poly(1)));
  CHECK(hecke_rank({r1, r2}) == 1);
  CHECK(hecke_rank({r1, r3}) == 2);
  CHECK(hecke_rank({r1, r2, r3, hecke_add(r1, r3)}) == 2);
  CHECK(in_span({r1, r3}, hecke_add(hecke_scale(r1, qm1), r3)));
  CHECK(!in_span({r1}, hecke_basis(c)));
  CHECK(hecke_rank({}) == 0);
}

TEST_CASE("truncated commutators do not refute the normal form") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  Cocenter cc(g);
  CHECK(truncated_commutator_defect(cc, 4) == 0);
  auto ad = datum("A1", "adjoint");
  IwahoriWeyl h(ad);
  Cocenter hc(h);
  CHECK(truncated_commutator_defect(hc, 3) == 0);
}

TEST_CASE("induce on nu-alcove elements stays in one stratum") {
  for (const char* name : {"A2", "C2", "G2"}) {
    auto d = datum(name);
    IwahoriWeyl g(d);
    Cocenter cc(g);
    auto ball = g.ball(6, g.default_labels());
    int tested = 0;
    for (const auto& w : ball) {
      RatVec nu = newton_point(g, w);
      if (!is_v_alcove(g, w, nu)) continue;
      LeviWeylGroup m(d, nu);
      REQUIRE(m.is_member(w));
      if (!is_min_in_class(m.group(), w)) continue;
      ++tested;
      auto nf = induce(cc, m, hecke_basis(w), m.pi(w));
      REQUIRE(nf.components.size() == 1);
      CHECK(nf.components.begin()->first == newton_index_map(g, m, m.pi(w)));
      for (const auto& x : equal_class(m.group(), w)) CHECK(cc.reduce_basis(x) == nf.terms);
    }
    CHECK(tested > 20);
  }
}

TEST_CASE("conjugate translations are identified by truncated commutators") {
  auto d = datum("A1");
  IwahoriWeyl g(d);
  auto ball = g.ball(4, g.default_labels());
  std::set<Element> inside(ball.begin(), ball.end());
  std::vector<HeckeElement> comms;
  for (const auto& x : ball)
    for (int s = 0; s < 2; ++s) {
      auto c = hecke_commutator(g, hecke_basis(x), hecke_basis(g.simple(s)));
      bool fits = true;
      for (const auto& [k, p] : c) fits = fits && inside.count(k);
      if (!c.empty() && fits) comms.push_back(c);
    }
  Element tp = g.translation(IntVec{1}), tm = g.translation(IntVec{-1});
  CHECK(in_span(comms, hecke_sub(hecke_basis(tp), hecke_basis(tm))));
  CHECK(!in_span(comms, hecke_basis(tp)));
}
