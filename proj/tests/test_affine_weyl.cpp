#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "cocenter/affine_weyl.hpp"
#include "cocenter/errors.hpp"

using namespace cocenter;

namespace {

IwahoriWeyl make(const std::string& g, const std::string& lattice = "sc") {
  return IwahoriWeyl(RootDatum::build(GroupDescriptor::parse(g, lattice)));
}

// Word lengths by breadth-first search in the Cayley graph of W_a * omega, using only multiplication.
std::map<Element, int> word_lengths(const IwahoriWeyl& g, const Element& omega, int radius) {
  std::map<Element, int> dist{{omega, 0}};
  std::vector<Element> frontier{omega};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Element> next;
    for (const auto& w : frontier)
      for (int i = 0; i < g.num_simple(); ++i) {
        Element x = g.multiply(g.simple(i), w);
        if (dist.emplace(x, r).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("group law") {
  auto g = make("C2");
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    Element w{IntVec{static_cast<std::int64_t>(rng() % 9) - 4, static_cast<std::int64_t>(rng() % 9) - 4},
              static_cast<int>(rng() % 8)};
    CHECK(g.multiply(w, g.inverse(w)) == g.identity());
    CHECK(g.length(w) == g.length(g.inverse(w)));
  }
  auto a1 = make("A1");
  CHECK(a1.multiply(a1.simple(0), a1.simple(0)) == a1.identity());
  auto gl2 = make("GL2");
  Element w{IntVec{1, 0}, gl2.datum().weyl().simple(1)};
  CHECK(gl2.multiply(w, w) == Element{IntVec{1, 1}, 0});
  CHECK(gl2.length(w) == 0);
  CHECK(gl2.inversions(w).empty());
}

TEST_CASE("GL5 anchor") {
  CHECK_NOTHROW(check_affine_anchor());
}

TEST_CASE("SL2 simple reflections and lengths") {
  auto g = make("A1");
  REQUIRE(g.num_simple() == 2);
  const int s1 = g.datum().weyl().simple(1);
  CHECK(g.simple(0) == Element{IntVec{1}, s1});
  CHECK(g.simple(1) == Element{IntVec{}, s1});
  CHECK(g.length(g.translation(IntVec{1})) == 2);
  CHECK(g.length(g.simple(0)) == 1);
  CHECK(g.length(g.simple(1)) == 1);
  CHECK(g.kappa(g.translation(IntVec{1})).empty());
  CHECK(g.ball(4, {{}}).size() == 9);
  CHECK(g.ball(0, {{}}).size() == 1);
}

TEST_CASE("GL2 Omega") {
  auto g = make("GL2");
  Element w{IntVec{1, 0}, g.datum().weyl().simple(1)};
  CHECK(g.omega_group().describe() == "Z");
  CHECK(g.kappa(w) != g.kappa(g.identity()));
  auto rep = g.omega_rep(g.kappa(w));
  CHECK(g.length(rep) == 0);
  CHECK(g.kappa(rep) == g.kappa(w));
}

TEST_CASE("length equals word length and inversion count") {
  struct Case {
    const char* group;
    const char* lattice;
    int radius;
  };
  for (auto c : {Case{"A1", "sc", 8}, Case{"A2", "sc", 6}, Case{"C2", "sc", 6}, Case{"G2", "sc", 6},
                 Case{"A2", "adjoint", 5}, Case{"GL3", "", 4}, Case{"B3", "sc", 3}}) {
    CAPTURE(c.group);
    auto g = make(c.group, c.lattice);
    for (const auto& label : g.default_labels()) {
      Element omega = g.omega_rep(label);
      CHECK(g.length(omega) == 0);
      auto dist = word_lengths(g, omega, c.radius);
      auto ball = g.ball(c.radius, {label});
      CHECK(ball.size() == dist.size());
      for (const auto& [w, l] : dist) {
        CHECK(g.length(w) == l);
        CHECK(static_cast<int>(g.inversions(w).size()) == l);
        CHECK(g.kappa(w) == label);
      }
    }
  }
}

TEST_CASE("length properties") {
  auto g = make("A2", "adjoint");
  auto ball = g.ball(4, g.default_labels());
  std::vector<Element> omegas;
  for (const auto& l : g.default_labels()) omegas.push_back(g.omega_rep(l));
  for (const auto& w : ball) {
    for (const auto& om : omegas) CHECK(g.length(g.conjugate(om, w)) == g.length(w));
    for (int i = 0; i < g.num_simple(); ++i) CHECK(std::abs(g.length(g.multiply(g.simple(i), w)) - g.length(w)) == 1);
    auto split = g.wa_omega_split(w);
    CHECK(static_cast<int>(split.word.size()) == g.length(w));
    CHECK(g.from_word(split.word, split.omega) == w);
  }
  // an Omega element permutes the simple reflections
  for (const auto& om : omegas) {
    std::set<int> image;
    for (int i = 0; i < g.num_simple(); ++i) image.insert(g.simple_index(g.conjugate(om, g.simple(i))));
    CHECK(image.size() == 3);
    CHECK(!image.count(-1));
  }
}

TEST_CASE("affine root action is a group action") {
  auto g = make("C2");
  auto ball = g.ball(3, {{}});
  for (const auto& x : ball)
    for (const auto& y : ball) {
      AffineRoot a{2, -1};
      CHECK(g.act(g.multiply(x, y), a) == g.act(x, g.act(y, a)));
    }
  for (int r = 0; r < static_cast<int>(g.datum().roots().size()); ++r) {
    AffineRoot a{r, 0}, b{g.datum().root(r).negation, 0};
    CHECK(g.positive(a) != g.positive(b));
  }
}

TEST_CASE("A2 small ball matches the search oracle") {
  auto g = make("A2");
  auto dist = word_lengths(g, g.identity(), 2);
  CHECK(g.ball(2, {{}}).size() == dist.size());
  CHECK(dist.size() == 1 + 3 + 6);
}

TEST_CASE("ball cap") {
  auto g = make("A2");
  CHECK_THROWS_AS(g.ball(13, {{}}), ResourceError);
  auto b3 = make("B3");
  CHECK(b3.ball_cap() == 8);
  CHECK_THROWS_AS(b3.ball(9, {{}}), ResourceError);
}

TEST_CASE("conjugacy test against explicit conjugation") {
  auto g = make("A2");
  auto ball = g.ball(3, {{}});
  auto conj = g.ball(4, {{}});
  for (std::size_t i = 0; i < ball.size(); i += 3)
    for (std::size_t j = 0; j < ball.size(); j += 2) {
      bool brute = false;
      for (const auto& x : conj) brute = brute || g.conjugate(x, ball[i]) == ball[j];
      if (brute) CHECK(g.are_conjugate(ball[i], ball[j]));
    }
  const auto& s = g.simple(1);
  CHECK(g.are_conjugate(s, g.simple(0)));
  CHECK(!g.are_conjugate(s, g.identity()));
  CHECK(g.are_conjugate(g.translation(IntVec{1, 0}), g.translation(IntVec{-1, -1})));
  CHECK(!g.are_conjugate(g.translation(IntVec{1, 0}), g.translation(IntVec{2, 0})));
}

TEST_CASE("Levi subgroup of GL5") {
  auto d = RootDatum::build(GroupDescriptor::parse("GL5"));
  RatVec v{Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(1, 2), Rational(1, 2)};
  auto l = d->levi_datum(v);
  IwahoriWeyl m(d, l.zero_roots);
  CHECK(m.components().size() == 2);
  CHECK(m.num_simple() == 5);
  CHECK(m.finite_elements().size() == 12);
  CHECK(m.omega_group().describe() == "Z x Z");
  Element w{IntVec{1, 1, 0, 1, 0}, d->weyl().from_word({2, 1, 4})};
  CHECK(m.is_member(w));
  IwahoriWeyl g(d);
  CHECK(m.length(w) <= g.length(w));
  CHECK(m.length(w) < g.length(w));
  CHECK(m.parabolic_is_finite({0, 2}));
  CHECK(!m.parabolic_is_finite({0, 2, 3}));
}
