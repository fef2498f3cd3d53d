#include "cocenter/reduction.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cocenter/errors.hpp"

namespace cocenter {

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::ConjEqual: return "conj-equal";
    case StepKind::ConjDown: return "conj-down";
    case StepKind::LeftMult: return "left-mult";
  }
  return "?";
}

std::pair<ConjMove, Element> conj_step(const IwahoriWeyl& g, const Element& w, int s) {
  const Element& r = g.simple(s);
  Element x = g.multiply(g.multiply(r, w), r);
  int d = g.length(x) - g.length(w);
  if (d < 0) return {ConjMove::Down, x};
  if (d == 0) return {ConjMove::Equal, x};
  return {ConjMove::Up, x};
}

std::vector<Element> equal_class(const IwahoriWeyl& g, const Element& w, std::size_t cap) {
  std::set<Element> seen{w};
  std::vector<Element> todo{w};
  for (std::size_t h = 0; h < todo.size(); ++h)
    for (int s = 0; s < g.num_simple(); ++s) {
      auto [move, x] = conj_step(g, todo[h], s);
      if (move == ConjMove::Equal && seen.insert(x).second) {
        if (seen.size() > cap) throw ResourceError("equal-length class exceeds " + std::to_string(cap) + " elements");
        todo.push_back(x);
      }
    }
  return {seen.begin(), seen.end()};
}

bool is_min_in_class(const IwahoriWeyl& g, const Element& w) {
  for (const auto& y : equal_class(g, w))
    for (int s = 0; s < g.num_simple(); ++s)
      if (conj_step(g, y, s).first == ConjMove::Down) return false;
  return true;
}

std::optional<DownMove> first_down_move(const IwahoriWeyl& g, const Element& w) {
  // breadth-first over the equal class, looking for the first element with a down move
  struct Node {
    Element e;
    int parent;
    int s;
  };
  std::vector<Node> nodes{{w, -1, -1}};
  std::set<Element> seen{w};
  for (std::size_t h = 0; h < nodes.size(); ++h) {
    for (int s = 0; s < g.num_simple(); ++s)
      if (conj_step(g, nodes[h].e, s).first == ConjMove::Down) {
        DownMove dm;
        dm.at = nodes[h].e;
        dm.s = s;
        std::vector<int> chain;
        for (int k = static_cast<int>(h); k > 0; k = nodes[k].parent) chain.push_back(k);
        std::reverse(chain.begin(), chain.end());
        for (int k : chain) dm.equal_steps.push_back({nodes[k].s, StepKind::ConjEqual, nodes[k].e, g.length(nodes[k].e)});
        return dm;
      }
    for (int s = 0; s < g.num_simple(); ++s) {
      auto [move, x] = conj_step(g, nodes[h].e, s);
      if (move == ConjMove::Equal && seen.insert(x).second) nodes.push_back({x, static_cast<int>(h), s});
    }
  }
  return std::nullopt;
}

ReductionPath reduce_to_min(const IwahoriWeyl& g, const Element& w) {
  ReductionPath path;
  path.start = w;
  const std::size_t bound = path_bound(g, w);
  Element cur = w;
  while (auto dm = first_down_move(g, cur)) {
    path.steps.insert(path.steps.end(), dm->equal_steps.begin(), dm->equal_steps.end());
    auto [move, x] = conj_step(g, dm->at, dm->s);
    path.steps.push_back({dm->s, StepKind::ConjDown, x, g.length(x)});
    cur = x;
    if (path.steps.size() > bound)
      throw InvariantViolation("reduction path exceeds the bound " + std::to_string(bound));
  }
  path.end = cur;
  return path;
}

bool replay(const IwahoriWeyl& g, const ReductionPath& path) {
  Element cur = path.start;
  for (const auto& st : path.steps) {
    if (st.s < 0 || st.s >= g.num_simple()) return false;
    Element next;
    if (st.kind == StepKind::LeftMult) {
      next = g.multiply(g.simple(st.s), cur);
      // harpoon side condition: s w s is not shorter and s w is shorter
      if (g.length(next) >= g.length(cur)) return false;
    } else {
      auto [move, x] = conj_step(g, cur, st.s);
      if ((st.kind == StepKind::ConjEqual) != (move == ConjMove::Equal)) return false;
      if (st.kind == StepKind::ConjDown && move != ConjMove::Down) return false;
      next = x;
    }
    if (next != st.result || g.length(next) != st.length) return false;
    cur = next;
  }
  return cur == path.end;
}

std::size_t path_bound(const IwahoriWeyl& g, const Element& w) { return g.wa_ball_count(g.length(w)); }

namespace {

// The minimal element of W_K * y, by descents inside K.
Element min_in_coset(const IwahoriWeyl& g, const std::vector<int>& K, Element y) {
  for (;;) {
    bool moved = false;
    for (int s : K) {
      Element z = g.multiply(g.simple(s), y);
      if (g.length(z) < g.length(y)) {
        y = z;
        moved = true;
        break;
      }
    }
    if (!moved) return y;
  }
}

std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) k.push_back(i);
    out.push_back(std::move(k));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::string check_triple(const IwahoriWeyl& g, const StandardTriple& t) {
  if (!g.parabolic_is_finite(t.K)) return "W_K is infinite";
  if (!is_straight(g, t.x)) return "x is not straight";
  if (min_in_coset(g, t.K, t.x) != t.x) return "x is not minimal in W_K x";
  std::set<int> k(t.K.begin(), t.K.end()), image;
  for (int s : t.K) image.insert(g.simple_index(g.conjugate(t.x, g.simple(s))));
  if (image != k) return "Ad(x) does not preserve K";
  if (min_in_coset(g, t.K, t.u) != g.identity()) return "u is not in W_K";
  if (g.multiply(t.u, t.x) != t.y) return "u x differs from y";
  if (!(newton_index(g, t.y) == newton_index(g, t.x))) return "pi(u x) differs from pi(x)";
  return {};
}

StandardTriple standard_triple(const IwahoriWeyl& g, const Element& w_min) {
  const auto subsets = subsets_by_size(g.num_simple());
  auto candidates = equal_class(g, w_min);
  std::stable_partition(candidates.begin(), candidates.end(), [&](const Element& e) { return e == w_min; });
  for (const auto& y : candidates) {
    for (const auto& K : subsets) {
      if (!g.parabolic_is_finite(K)) continue;
      Element x = min_in_coset(g, K, y);
      if (!is_straight(g, x)) continue;
      StandardTriple t{x, K, g.multiply(y, g.inverse(x)), y};
      if (check_triple(g, t).empty()) return t;
    }
  }
  throw InvariantViolation("no standard triple in the equal-length class of a minimal element");
}

std::vector<Element> minimal_conjugates(const IwahoriWeyl& g, const Element& w_min) {
  std::vector<Element> out;
  for (const auto& x : g.sphere(g.length(w_min), g.kappa(w_min)))
    if (g.are_conjugate(w_min, x)) out.push_back(x);
  return out;
}

bool word_less(const IwahoriWeyl& g, const Element& a, const Element& b) {
  auto sa = g.wa_omega_split(a);
  auto sb = g.wa_omega_split(b);
  if (sa.word.size() != sb.word.size()) return sa.word.size() < sb.word.size();
  if (sa.word != sb.word) return sa.word < sb.word;
  return sa.omega < sb.omega;
}

Element canonical_key(const IwahoriWeyl& g, const Element& w_min) {
  auto all = minimal_conjugates(g, w_min);
  if (all.empty()) throw InvariantViolation("minimal element missing from its own class");
  Element best = all.front();
  auto best_split = g.wa_omega_split(best);
  for (std::size_t i = 1; i < all.size(); ++i) {
    auto sp = g.wa_omega_split(all[i]);
    if (std::tie(sp.word, sp.omega) < std::tie(best_split.word, best_split.omega)) {
      best = all[i];
      best_split = std::move(sp);
    }
  }
  return best;
}

}  // namespace cocenter
