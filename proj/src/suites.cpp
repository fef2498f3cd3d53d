#include "cocenter/suites.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cocenter/errors.hpp"
#include "cocenter/hecke.hpp"
#include "cocenter/levi_alcove.hpp"
#include "cocenter/newton.hpp"
#include "cocenter/parallel.hpp"
#include "cocenter/persist.hpp"
#include "cocenter/reduction.hpp"
#include "cocenter/syntax.hpp"

namespace cocenter {

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.observation && c.failures != 0) return false;
  return true;
}

namespace {

using Outcome = std::optional<std::string>;

struct Context {
  std::shared_ptr<const RootDatum> datum;
  std::unique_ptr<IwahoriWeyl> g;
  int length = 0;
  const SuiteOptions* opt = nullptr;
  SuiteReport* report = nullptr;

  std::string str(const Element& w) const { return format_element(*g, w); }

  // Runs f(i) for i < n; the first failure in index order becomes the counterexample.
  template <class F>
  void check(const std::string& property, std::size_t n, F&& f, bool observation = false) {
    auto res = parallel_map(n, opt->jobs, [&](std::size_t i) -> Outcome {
      try {
        return f(i);
      } catch (const InvariantViolation& e) {
        return std::string("invariant violation: ") + e.what();
      }
    });
    CheckResult c{property, n, 0, "", observation};
    for (auto& r : res)
      if (r) {
        if (c.failures == 0) c.counterexample = *r;
        ++c.failures;
      }
    report->checks.push_back(std::move(c));
  }
};

// All Omega labels when Omega is finite; otherwise those of 0 and +-e1.
std::vector<LatticeQuotient::Label> suite_labels(const IwahoriWeyl& g) {
  if (g.omega_group().finite()) return g.default_labels();
  std::set<LatticeQuotient::Label> out{g.kappa(g.identity())};
  for (int s : {1, -1}) {
    IntVec e{};
    e[0] = s;
    out.insert(g.kappa(g.translation(e)));
  }
  return {out.begin(), out.end()};
}

std::vector<Element> length_zero(const IwahoriWeyl& g) {
  std::vector<Element> out;
  for (const auto& l : suite_labels(g)) out.push_back(g.omega_rep(l));
  return out;
}

// Labels of Omega_M met by translations in the box [-r, r]^dim.
std::vector<LatticeQuotient::Label> box_labels(const IwahoriWeyl& m, int r) {
  std::set<LatticeQuotient::Label> out;
  const int dim = m.dim();
  IntVec x{};
  for (int k = 0; k < dim; ++k) x[k] = -r;
  for (;;) {
    out.insert(m.kappa(m.translation(x)));
    int k = 0;
    while (k < dim && x[k] == r) x[k++] = -r;
    if (k == dim) break;
    ++x[k];
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------------------------

void suite_anchor(Context& c) {
  const auto& g = *c.g;
  const auto& d = *c.datum;
  if (d.descriptor().type != "GL" || d.descriptor().rank != 5) {
    c.report->params.emplace_back("note", "anchor needs GL5");
    c.check("gl5-anchor-applicable", 1, [&](std::size_t) -> Outcome { return "group is not GL5"; });
    return;
  }
  Element w = parse_element(g, "t[1,1,0,1,0]*s2*s1*s4");
  c.check("gl5-newton-point", 1, [&](std::size_t) -> Outcome {
    auto nu = format_coweight(newton_point(g, w), 5);
    if (nu != "(2/3,2/3,2/3,1/2,1/2)") return c.str(w) + " nu=" + nu;
    return std::nullopt;
  });
  c.check("gl5-affine-root-image", 1, [&](std::size_t) -> Outcome {
    check_affine_anchor();
    int a = d.find_root(IntVec{0, 0, -1, 1, 0});
    AffineRoot img = g.act(w, AffineRoot{a, 0});
    if (d.root(img.root).character != IntVec{0, -1, 0, 0, 1} || img.level != -1 || g.positive(img))
      return c.str(w) + " maps e4-e3 elsewhere";
    return std::nullopt;
  });
}

void suite_length(Context& c) {
  const auto& g = *c.g;
  const int L = c.length;
  auto labels = suite_labels(g);
  auto ball = g.ball(L, labels);

  // word length by breadth-first search over right multiplication by simple reflections
  std::map<Element, int> dist;
  std::vector<Element> frontier;
  for (const auto& l : labels) {
    Element r = g.omega_rep(l);
    dist[r] = 0;
    frontier.push_back(r);
  }
  for (int l = 1; l <= L; ++l) {
    std::vector<Element> next;
    for (const auto& w : frontier)
      for (int s = 0; s < g.num_simple(); ++s) {
        Element x = g.multiply(w, g.simple(s));
        if (dist.emplace(x, l).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<Element, int>> bfs(dist.begin(), dist.end());
  std::set<Element> in_ball(ball.begin(), ball.end());
  c.check("length-equals-word-length", bfs.size(), [&](std::size_t i) -> Outcome {
    const auto& [w, k] = bfs[i];
    if (g.length(w) != k) return c.str(w) + " length=" + std::to_string(g.length(w)) + " word=" + std::to_string(k);
    if (!in_ball.count(w)) return c.str(w) + " missing from the ball";
    return std::nullopt;
  });
  c.check("ball-has-no-extra-elements", ball.size(), [&](std::size_t i) -> Outcome {
    if (!dist.count(ball[i])) return c.str(ball[i]) + " not reached by words";
    return std::nullopt;
  });
  c.check("inversions-count-length", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    if (g.inversions(w).size() != static_cast<std::size_t>(g.length(w))) return c.str(w);
    return std::nullopt;
  });
  auto omegas = length_zero(g);
  c.check("length-symmetries", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    const int l = g.length(w);
    if (g.length(g.inverse(w)) != l) return c.str(w) + " inverse";
    for (const auto& o : omegas)
      if (g.length(g.conjugate(o, w)) != l) return c.str(w) + " omega-conjugate";
    for (int s = 0; s < g.num_simple(); ++s)
      if (std::abs(g.length(g.multiply(g.simple(s), w)) - l) != 1) return c.str(w) + " S" + std::to_string(s);
    return std::nullopt;
  });
  c.check("action-is-compatible", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    const auto& roots = g.datum().roots();
    for (int s = 0; s < g.num_simple(); ++s) {
      Element ws = g.multiply(w, g.simple(s));
      for (int b = 0; b < static_cast<int>(roots.size()); ++b)
        for (std::int64_t k = -1; k <= 1; ++k) {
          AffineRoot a{b, k};
          if (!(g.act(ws, a) == g.act(w, g.act(g.simple(s), a)))) return c.str(w) + " S" + std::to_string(s);
        }
    }
    return std::nullopt;
  });
}

void suite_newton(Context& c) {
  const auto& g = *c.g;
  auto labels = suite_labels(g);
  auto ball = g.ball(c.length, labels);
  auto omegas = length_zero(g);
  c.check("pi-invariant-under-simple-conjugation", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    auto p = newton_index(g, w);
    for (int s = 0; s < g.num_simple(); ++s)
      if (!(newton_index(g, g.conjugate(g.simple(s), w)) == p)) return c.str(w) + " S" + std::to_string(s);
    return std::nullopt;
  });
  c.check("pi-invariant-under-omega-conjugation", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    auto p = newton_index(g, w);
    for (const auto& o : omegas)
      if (!(newton_index(g, g.conjugate(o, w)) == p)) return c.str(w) + " by " + c.str(o);
    return std::nullopt;
  });
  c.check("straight-iff-power-condition", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    if (is_straight(g, w) != is_straight_by_powers(g, w)) return c.str(w);
    return std::nullopt;
  });
  Table t{"strata", {"kappa", "nu", "count"}, {}};
  std::string sizes;
  for (const auto& [idx, elems] : strata(g, c.length, labels)) {
    t.rows.push_back({format_label(idx.omega), format_coweight(idx.nu_bar, g.dim()), std::to_string(elems.size())});
    sizes += (sizes.empty() ? "" : "/") + std::to_string(elems.size());
  }
  c.report->params.emplace_back("strata_sizes", sizes);
  c.report->tables.push_back(std::move(t));
}

void suite_reduction(Context& c) {
  const auto& g = *c.g;
  auto ball = g.ball(c.length, suite_labels(g));
  std::vector<Element> ends(ball.size());
  c.check("reduces-to-minimal-with-standard-triple", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    auto path = reduce_to_min(g, w);
    ends[i] = path.end;
    if (!replay(g, path)) return c.str(w) + " path does not replay";
    if (path.steps.size() > path_bound(g, w)) return c.str(w) + " path longer than the bound";
    auto p = newton_index(g, w);
    for (const auto& st : path.steps)
      if (!(newton_index(g, st.result) == p)) return c.str(w) + " pi changes at " + c.str(st.result);
    if (!is_min_in_class(g, path.end)) return c.str(w) + " ends at non-minimal " + c.str(path.end);
    auto err = check_triple(g, standard_triple(g, path.end));
    if (!err.empty()) return c.str(w) + " triple: " + err;
    return std::nullopt;
  });
  c.check("end-has-least-length-among-conjugates-in-ball", ball.size(), [&](std::size_t i) -> Outcome {
    const int l = g.length(ends[i]);
    for (const auto& x : ball) {
      if (g.length(x) >= l) break;
      if (g.are_conjugate(ball[i], x)) return c.str(ball[i]) + " has shorter conjugate " + c.str(x);
    }
    return std::nullopt;
  });
}

void suite_alcove(Context& c) {
  const auto& g = *c.g;
  auto ball = g.ball(c.length, suite_labels(g));
  std::vector<Element> minimal;
  for (const auto& w : ball)
    if (is_min_in_class(g, w)) minimal.push_back(w);
  c.check("minimal-is-nu-alcove", minimal.size(), [&](std::size_t i) -> Outcome {
    const auto& w = minimal[i];
    if (!is_v_alcove(g, w, newton_point(g, w))) return c.str(w);
    return std::nullopt;
  });
  c.check("flip-window-suffices", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    RatVec nu = newton_point(g, w);
    if (is_v_alcove(g, w, nu, 1) != is_v_alcove(g, w, nu, 2)) return c.str(w);
    return std::nullopt;
  });
}

// Distinct Levis M_v for v with denominators up to 6 and entries in [-1, 1].
std::vector<std::shared_ptr<LeviWeylGroup>> small_levis(const std::shared_ptr<const RootDatum>& d) {
  std::map<std::vector<int>, std::shared_ptr<LeviWeylGroup>> out;
  const int dim = d->dim();
  for (int den = 1; den <= 6; ++den) {
    std::vector<int> a(dim, -den);
    for (;;) {
      RatVec v{};
      for (int k = 0; k < dim; ++k) v[k] = Rational(a[k], den);
      auto levi = d->levi_datum(v);
      if (!out.count(levi.zero_roots)) out.emplace(levi.zero_roots, std::make_shared<LeviWeylGroup>(d, v));
      int k = 0;
      while (k < dim && a[k] == den) a[k++] = -den;
      if (k == dim) break;
      ++a[k];
    }
  }
  std::vector<std::shared_ptr<LeviWeylGroup>> v;
  for (auto& [k, m] : out) v.push_back(m);
  return v;
}

void suite_levi(Context& c) {
  const auto& g = *c.g;
  auto levis = small_levis(c.datum);
  std::vector<std::pair<std::size_t, Element>> items;
  for (std::size_t j = 0; j < levis.size(); ++j)
    for (const auto& w : levis[j]->group().ball(c.length, box_labels(levis[j]->group(), 2))) items.emplace_back(j, w);
  c.report->params.emplace_back("levis", std::to_string(levis.size()));
  c.check("m-stratum-inside-g-stratum", items.size(), [&](std::size_t i) -> Outcome {
    const auto& [j, w] = items[i];
    if (!m_in_g_stratum_check(g, *levis[j], w)) return c.str(w) + " in " + levis[j]->label();
    return std::nullopt;
  });
  c.check("levi-length-at-most-length", items.size(), [&](std::size_t i) -> Outcome {
    const auto& [j, w] = items[i];
    if (levis[j]->length(w) > g.length(w)) return c.str(w) + " in " + levis[j]->label();
    return std::nullopt;
  });
  c.check("levi-length-strictly-smaller", items.size(), [&](std::size_t i) -> Outcome {
    const auto& [j, w] = items[i];
    if (levis[j]->length(w) < g.length(w)) return c.str(w) + " in " + levis[j]->label();
    return std::nullopt;
  }, true);
  const auto& weyl = c.datum->weyl();
  std::vector<std::vector<ConjugateLevi>> conj(levis.size());
  for (std::size_t j = 0; j < levis.size(); ++j)
    for (int u = 0; u < weyl.size(); ++u) conj[j].push_back(conjugate_levi(c.datum, u, *levis[j]));
  c.check("conjugate-levi-respects-strata", items.size(), [&](std::size_t i) -> Outcome {
    const auto& [j, w] = items[i];
    for (int u = 0; u < weyl.size(); ++u) {
      const auto& cl = conj[j][u];
      Element x = g.conjugate(g.finite(u), w);
      if (!cl.levi->is_member(x)) return c.str(w) + " conjugate leaves M'";
      if (!(cl.map(*levis[j], levis[j]->pi(w)) == cl.levi->pi(x))) return c.str(w) + " by u=" + std::to_string(u);
    }
    return std::nullopt;
  });
}

void suite_positivity(Context& c) {
  const auto& g = *c.g;
  auto ball = g.ball(c.length, suite_labels(g));
  std::map<RatVec, std::shared_ptr<LeviWeylGroup>> levis;
  std::vector<RatVec> nus;
  for (const auto& w : ball) {
    nus.push_back(newton_point(g, w));
    auto& slot = levis[nus.back()];
    if (!slot) slot = std::make_shared<LeviWeylGroup>(c.datum, nus.back());
  }
  c.check("exponent-within-bound", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& m = *levis.at(nus[i]);
    auto cert = positivity_exponent(g, m, ball[i]);
    if (cert.exponent < 1 || cert.exponent > cert.exponent_bound)
      return c.str(ball[i]) + " exponent=" + std::to_string(cert.exponent) + " bound=" + std::to_string(cert.exponent_bound);
    return std::nullopt;
  });
  const auto& desc = c.datum->descriptor();
  if (desc.type == "GL" && desc.rank == 5) {
    Element w = parse_element(g, "t[1,1,0,1,0]*s2*s1*s4");
    LeviWeylGroup m(c.datum, newton_point(g, w));
    auto cert = positivity_exponent(g, m, w);
    c.report->params.emplace_back("gl5_exponent", std::to_string(cert.exponent));
    c.report->params.emplace_back("gl5_bound", std::to_string(cert.exponent_bound));
    c.check("gl5-example-not-positive-but-bounded", 1, [&](std::size_t) -> Outcome {
      if (cert.exponent <= 1 || cert.first_power_positive || cert.exponent > cert.exponent_bound)
        return c.str(w) + " exponent=" + std::to_string(cert.exponent);
      return std::nullopt;
    });
  }
}

void suite_cocenter(Context& c) {
  const auto& g = *c.g;
  const int L = c.length;
  Cocenter cc(g);
  if (!c.opt->cache_dir.empty()) load_cache(cc, c.opt->cache_dir);
  auto ball = g.ball(L, suite_labels(g));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < ball.size(); ++a)
    for (std::size_t b = a + 1; b < ball.size(); ++b)
      if (g.length(ball[a]) + g.length(ball[b]) <= L) pairs.emplace_back(a, b);
  c.check("commutators-reduce-to-zero", pairs.size(), [&](std::size_t i) -> Outcome {
    const auto& x = ball[pairs[i].first];
    const auto& y = ball[pairs[i].second];
    if (!cc.reduce(hecke_commutator(g, hecke_basis(x), hecke_basis(y))).empty()) return "[" + c.str(x) + ", " + c.str(y) + "]";
    return std::nullopt;
  });

  const std::size_t strategies = static_cast<std::size_t>(c.opt->random_strategies);
  c.report->params.emplace_back("random_strategies", std::to_string(strategies));
  c.check("random-rewrite-orders-agree", strategies, [&](std::size_t k) -> Outcome {
    const std::uint64_t seed = c.opt->seed * 1000003u + k;
    for (const auto& w : ball)
      if (cc.reduce_random(hecke_basis(w), seed) != cc.reduce_basis(w)) return "seed " + std::to_string(seed) + " at " + c.str(w);
    return std::nullopt;
  });

  c.check("specialization-at-q-equal-1", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    auto at1 = specialize(cc.reduce_basis(w), 1);
    if (at1.size() != 1 || at1.begin()->second != 1 || !g.are_conjugate(w, at1.begin()->first)) return c.str(w);
    return std::nullopt;
  });

  c.check("component-discipline", ball.size(), [&](std::size_t i) -> Outcome {
    const auto& w = ball[i];
    auto nf = cc.normal_form(hecke_basis(w));
    for (const auto& [k, p] : nf.terms)
      if (!(g.kappa(k) == g.kappa(w)) || !is_min_in_class(g, k) || !(cc.canonical(k) == k))
        return c.str(w) + " key " + c.str(k);
    if (is_min_in_class(g, w) && (nf.components.size() != 1 || !(nf.components.begin()->first == newton_index(g, w))))
      return c.str(w) + " minimal but spread over strata";
    return std::nullopt;
  });

  const int oracle_length = std::min(L, g.datum().semisimple_rank() <= 1 ? 4 : 3);
  c.report->params.emplace_back("refutation_length", std::to_string(oracle_length));
  c.check("truncated-commutators-keep-classes-independent", 1, [&](std::size_t) -> Outcome {
    auto defect = truncated_commutator_defect(cc, oracle_length);
    if (defect) return "defect " + std::to_string(defect);
    return std::nullopt;
  });

  // induce: M-minimal elements of the ball for every Levi M_v with v a Newton point of the ball
  std::map<RatVec, std::shared_ptr<LeviWeylGroup>> levis;
  for (const auto& w : ball) {
    RatVec nu = newton_point(g, w);
    if (!levis.count(nu)) levis.emplace(nu, std::make_shared<LeviWeylGroup>(c.datum, nu));
  }
  struct Item {
    std::shared_ptr<LeviWeylGroup> m;
    Element w;
    bool rigid;  // M = M_{nu_w} and w is a nu_w-alcove element
  };
  std::vector<Item> items;
  for (const auto& [v, m] : levis)
    for (const auto& w : ball)
      if (m->is_member(w) && is_min_in_class(m->group(), w)) {
        RatVec nu = newton_point(g, w);
        items.push_back({m, w, nu == v && is_v_alcove(g, w, nu)});
      }
  auto image_ok = [&](const Item& it) {
    auto nf = induce(cc, *it.m, hecke_basis(it.w), it.m->pi(it.w));
    auto target = newton_index_map(g, *it.m, it.m->pi(it.w));
    for (const auto& [idx, f] : nf.components)
      if (!(idx == target)) return false;
    return true;
  };
  c.check("induce-independent-of-m-representative", items.size(), [&](std::size_t i) -> Outcome {
    const auto& it = items[i];
    auto base = cc.reduce_basis(it.w);
    for (const auto& x : equal_class(it.m->group(), it.w))
      if (cc.reduce_basis(x) != base) return c.str(it.w) + " vs " + c.str(x) + " in " + it.m->label();
    return std::nullopt;
  });
  std::vector<std::size_t> rigid_items;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].rigid) rigid_items.push_back(i);
  c.check("induce-image-in-one-stratum-on-alcove-elements", rigid_items.size(), [&](std::size_t i) -> Outcome {
    const auto& it = items[rigid_items[i]];
    if (!image_ok(it)) return c.str(it.w) + " in " + it.m->label();
    return std::nullopt;
  });
  c.check("induce-image-in-one-stratum-any-m-minimal", items.size(), [&](std::size_t i) -> Outcome {
    const auto& it = items[i];
    if (!image_ok(it)) return c.str(it.w) + " in " + it.m->label();
    return std::nullopt;
  }, true);

  c.report->params.emplace_back("memo_entries", std::to_string(cc.memo_size()));
  if (!c.opt->cache_dir.empty()) save_cache(cc, c.opt->cache_dir);
}

void suite_rigid(Context& c) {
  const auto& g = *c.g;
  Cocenter cc(g);
  if (!c.opt->cache_dir.empty()) load_cache(cc, c.opt->cache_dir);
  auto rows = rigid_decomposition(cc, c.length);
  Table t{"rigid", {"kappa", "nu", "levi", "count", "covered", "method"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({format_label(r.index.omega), format_coweight(r.index.nu_bar, g.dim()), r.levi,
                      std::to_string(r.count), r.covered ? "true" : "false", r.method});
  c.check("every-newton-index-covered", rows.size(), [&](std::size_t i) -> Outcome {
    if (!rows[i].covered) return format_index(rows[i].index, g.dim());
    return std::nullopt;
  });
  c.check("nu-central-in-its-levi", rows.size(), [&](std::size_t i) -> Outcome {
    if (!rows[i].central) return format_index(rows[i].index, g.dim());
    return std::nullopt;
  });
  c.check("length-zero-rows-are-omega", 1, [&](std::size_t) -> Outcome {
    auto zero = rigid_decomposition(cc, 0);
    const auto& q = g.omega_group();
    std::size_t expect = q.finite() ? q.all_labels().size() : 1;
    if (zero.size() != expect) return "rows=" + std::to_string(zero.size());
    for (const auto& r : zero)
      if (r.count != 1) return format_index(r.index, g.dim());
    return std::nullopt;
  });
  const auto& desc = c.datum->descriptor();
  if (desc.type == "A" && desc.rank == 1 && desc.lattice == LatticeKind::SimplyConnected && c.length >= 4) {
    c.check("sl2-length-4-rows", 1, [&](std::size_t) -> Outcome {
      auto r4 = rigid_decomposition(cc, 4);
      std::string got;
      for (const auto& r : r4)
        got += "(" + format_rational(r.index.nu_bar[0]) + "," + r.levi + "," + std::to_string(r.count) + "," +
               (r.covered ? "1" : "0") + ")";
      if (got != "(0,G,3,1)(1,T,1,1)(2,T,1,1)") return got;
      return std::nullopt;
    });
  }
  c.report->tables.push_back(std::move(t));
  if (!c.opt->cache_dir.empty()) save_cache(cc, c.opt->cache_dir);
}

using SuiteFn = void (*)(Context&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"anchor", suite_anchor},       {"length", suite_length}, {"newton", suite_newton},
      {"reduction", suite_reduction}, {"alcove", suite_alcove}, {"levi", suite_levi},
      {"positivity", suite_positivity}, {"cocenter", suite_cocenter}, {"rigid", suite_rigid}};
  return r;
}

SuiteReport run_target(const std::string& name, const Target& target, const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  rep.target = target;
  Context c;
  c.datum = RootDatum::build(GroupDescriptor::parse(target.group, target.lattice));
  c.g = std::make_unique<IwahoriWeyl>(c.datum);
  if (opt.cap) c.g->set_ball_cap(*opt.cap);
  c.length = target.length;
  c.opt = &opt;
  c.report = &rep;
  rep.params.emplace_back("length", std::to_string(target.length));
  rep.params.emplace_back("cap", std::to_string(c.g->ball_cap()));
  rep.params.emplace_back("seed", std::to_string(opt.seed));
  registry().at(name)(c);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"anchor", "length",     "newton",   "reduction", "alcove",
                                              "levi",   "positivity", "cocenter", "rigid"};
  return names;
}

std::vector<Target> default_targets(const std::string& suite) {
  if (suite == "anchor") return {{"GL5", "sc", 0}};
  if (suite == "length") return {{"A1", "sc", 8}, {"A2", "sc", 8}, {"C2", "sc", 8}, {"G2", "sc", 8}, {"GL3", "sc", 5}};
  if (suite == "newton")
    return {{"A1", "sc", 6}, {"A2", "sc", 6}, {"C2", "sc", 6}, {"G2", "sc", 6}, {"A2", "adjoint", 6}, {"GL3", "sc", 4}};
  if (suite == "reduction" || suite == "alcove")
    return {{"A1", "sc", 8}, {"A2", "sc", 8}, {"C2", "sc", 8}, {"G2", "sc", 8}, {"A2", "adjoint", 6}};
  if (suite == "levi") return {{"A1", "sc", 6}, {"A2", "sc", 6}, {"C2", "sc", 6}, {"G2", "sc", 6}};
  if (suite == "positivity") return {{"A1", "sc", 6}, {"A2", "sc", 6}, {"C2", "sc", 6}, {"G2", "sc", 6}, {"GL5", "sc", 2}};
  if (suite == "cocenter") return {{"A1", "sc", 8}, {"A2", "sc", 6}, {"C2", "sc", 6}};
  if (suite == "rigid") return {{"A1", "sc", 6}, {"A2", "sc", 6}, {"C2", "sc", 6}};
  throw InputError("unknown suite '" + suite + "'");
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  auto targets = default_targets(name);
  if (opt.group) {
    int length = opt.length.value_or(4);
    if (!opt.length)
      for (const auto& t : targets)
        if (t.group == *opt.group) length = t.length;
    targets = {{*opt.group, opt.lattice, length}};
  } else if (opt.length) {
    for (auto& t : targets) t.length = *opt.length;
  }
  std::vector<SuiteReport> out;
  for (const auto& t : targets) out.push_back(run_target(name, t, opt));
  return out;
}

std::vector<SuiteReport> run_all(const SuiteOptions& opt) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names())
    for (auto& r : run_suite(name, opt)) out.push_back(std::move(r));
  return out;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " group=" << r.target.group << " lattice=" << r.target.lattice;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.observation ? "observe " : (c.failures ? "FAIL    " : "ok      ")) << c.property
       << " instances=" << c.instances << " failures=" << c.failures;
    if (!c.counterexample.empty()) os << " first=" << c.counterexample;
    os << "\n";
  }
  for (const auto& t : r.tables) {
    os << "  table " << t.name << ":";
    for (const auto& h : t.header) os << " " << h;
    os << "\n";
    for (const auto& row : t.rows) {
      os << "   ";
      for (const auto& x : row) os << " " << x;
      os << "\n";
    }
  }
  os << "  result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string report_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["group"] = r.target.group;
  j["lattice"] = r.target.lattice;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["property"] = c.property;
    cj["instances"] = c.instances;
    cj["failures"] = c.failures;
    if (!c.counterexample.empty()) cj["counterexample"] = c.counterexample;
    if (c.observation) cj["observation"] = true;
    j["checks"].push_back(cj);
  }
  for (const auto& t : r.tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json o;
      for (std::size_t k = 0; k < t.header.size(); ++k) o[t.header[k]] = row[k];
      rows.push_back(o);
    }
    j["tables"][t.name] = rows;
  }
  j["passed"] = r.passed();
  return j.dump();
}

std::string report_tsv(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite\tgroup\tlattice\tproperty\tinstances\tfailures\tcounterexample\n";
  for (const auto& c : r.checks)
    os << r.suite << "\t" << r.target.group << "\t" << r.target.lattice << "\t" << c.property
       << (c.observation ? " (observation)" : "") << "\t" << c.instances << "\t" << c.failures << "\t"
       << c.counterexample << "\n";
  for (const auto& t : r.tables) {
    os << "table\t" << t.name;
    for (const auto& h : t.header) os << "\t" << h;
    os << "\n";
    for (const auto& row : t.rows) {
      os << t.name << "\t" << r.target.group;
      for (const auto& x : row) os << "\t" << x;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace cocenter
