#include "doctest.h"

#include <set>

#include "cocenter/errors.hpp"
#include "cocenter/root_datum.hpp"

using namespace cocenter;

namespace {

std::shared_ptr<const RootDatum> make(const std::string& s, const std::string& lattice = "sc") {
  return RootDatum::build(GroupDescriptor::parse(s, lattice));
}

// Brute-force closure of the simple reflections as matrices, independent of the tabulated group.
std::size_t closure_size(const RootDatum& d) {
  using M = std::vector<std::int64_t>;
  const int n = d.dim();
  auto refl = [&](int r) {
    M m(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i * n + j] = (i == j) - d.root(r).coroot[i] * d.root(r).character[j];
    return m;
  };
  std::vector<M> gens;
  for (int s : d.simple_roots()) gens.push_back(refl(s));
  M id(n * n);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::set<M> seen{id};
  std::vector<M> todo{id};
  while (!todo.empty()) {
    M cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      M p(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) p[i * n + j] += g[i * n + k] * cur[k * n + j];
      if (seen.insert(p).second) todo.push_back(p);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("root and Weyl group counts") {
  struct Case {
    const char* group;
    const char* lattice;
    std::size_t positive;
    int order;
  };
  for (auto c : {Case{"A1", "sc", 1, 2}, Case{"A2", "sc", 3, 6}, Case{"A2", "adjoint", 3, 6}, Case{"B2", "sc", 4, 8},
                 Case{"C2", "sc", 4, 8}, Case{"G2", "sc", 6, 12}, Case{"A3", "sc", 6, 24}, Case{"B3", "adjoint", 9, 48},
                 Case{"C3", "sc", 9, 48}, Case{"D4", "sc", 12, 192}, Case{"F4", "sc", 24, 1152},
                 Case{"GL1", "", 0, 1}, Case{"GL3", "", 3, 6}, Case{"GL5", "", 10, 120}}) {
    CAPTURE(c.group);
    auto d = make(c.group, c.lattice);
    CHECK(d->positive_roots().size() == c.positive);
    CHECK(d->roots().size() == 2 * c.positive);
    CHECK(d->weyl().size() == c.order);
    if (c.order <= 192) CHECK(closure_size(*d) == static_cast<std::size_t>(c.order));
  }
}

TEST_CASE("root datum invariants") {
  for (auto g : {"A1", "A2", "C2", "G2", "B3", "GL4"}) {
    CAPTURE(g);
    auto d = make(g);
    const auto& w = d->weyl();
    for (const auto& r : d->roots()) {
      CHECK(dot(r.character, r.coroot, d->dim()) == 2);
      bool nonneg = true, nonpos = true;
      for (int i = 0; i < d->semisimple_rank(); ++i) {
        nonneg = nonneg && r.coefficients[i] >= 0;
        nonpos = nonpos && r.coefficients[i] <= 0;
      }
      CHECK((nonneg != nonpos));
    }
    // W0 permutes roots and preserves the pairing
    IntVec y{3, -1, 2, 0, 1};
    for (int i = d->dim(); i < kMaxDim; ++i) y[i] = 0;
    for (int u = 0; u < w.size(); ++u) {
      std::set<int> image;
      for (int r = 0; r < static_cast<int>(d->roots().size()); ++r) {
        int ur = w.act_root(u, r);
        image.insert(ur);
        CHECK(d->pair(ur, w.act(u, y)) == d->pair(r, y));
      }
      CHECK(image.size() == d->roots().size());
      CHECK(static_cast<int>(w.word(u).size()) == w.length(u));
      CHECK(w.from_word(w.word(u)) == u);
      CHECK(w.multiply(u, w.inverse(u)) == 0);
    }
  }
}

TEST_CASE("GL5 dominance and Levi of the example coweight") {
  auto d = make("GL5");
  RatVec v{Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(1, 2), Rational(1, 2)};
  auto [vbar, u] = d->dominant_rep(v);
  CHECK(vbar == v);
  CHECK(u == 0);
  auto l = d->levi_datum(v);
  CHECK(l.weyl_elements.size() == 12);
  CHECK(l.zero_roots.size() == 8);
  CHECK(l.plus_roots.size() == 6);
  for (int x : l.weyl_elements) CHECK(d->weyl().act(x, v) == v);
}

TEST_CASE("dominant_rep in SL2 and invariance") {
  auto d = make("A1");
  RatVec v{};
  v[0] = -1;
  auto [vbar, u] = d->dominant_rep(v);
  CHECK(vbar[0] == Rational(1));
  CHECK(u == d->weyl().simple(1));
  auto z = d->dominant_rep(RatVec{});
  CHECK(z.second == 0);

  auto c2 = make("C2");
  RatVec x{Rational(-1, 2), Rational(3)};
  auto ref = c2->dominant_rep(x).first;
  CHECK(c2->is_dominant(ref));
  for (int u2 = 0; u2 < c2->weyl().size(); ++u2) CHECK(c2->dominant_rep(c2->weyl().act(u2, x)).first == ref);
}

TEST_CASE("levi datum extremes and conjugation") {
  auto d = make("A2");
  auto g = d->levi_datum(RatVec{});
  CHECK(g.zero_roots.size() == 6);
  CHECK(g.weyl_elements.size() == 6);
  RatVec reg{Rational(1), Rational(-3)};
  auto t = d->levi_datum(reg);
  CHECK(t.zero_roots.empty());
  CHECK(t.weyl_elements.size() == 1);
  auto [vbar, u] = d->dominant_rep(reg);
  auto tb = d->levi_datum(vbar);
  std::set<int> conj, direct(tb.plus_roots.begin(), tb.plus_roots.end());
  for (int r : t.plus_roots) conj.insert(d->weyl().act_root(u, r));
  CHECK(conj == direct);
}

TEST_CASE("descriptor parsing") {
  CHECK(GroupDescriptor::parse("gl5").label() == "GL5");
  CHECK(GroupDescriptor::parse("A2", "adjoint").label() == "A2-adjoint");
  auto d = GroupDescriptor::from_config_text("# group\ntype = C\nrank = 2\nlattice = adjoint\n");
  CHECK(d.label() == "C2-adjoint");
  CHECK_THROWS_AS(make("E8"), ConfigError);
  CHECK_THROWS_AS(make("A9"), ConfigError);
  CHECK_THROWS_AS(GroupDescriptor::parse("A2", "weird"), ConfigError);
  CHECK_THROWS_AS(GroupDescriptor::from_config_text("rank = 2"), ConfigError);
}

TEST_CASE("highest root and two rho") {
  auto g2 = make("G2");
  CHECK(g2->root(g2->highest_root()).height == 5);
  auto a2 = make("A2");
  CHECK(a2->two_rho() == IntVec{2, 2, 0, 0, 0});
}
