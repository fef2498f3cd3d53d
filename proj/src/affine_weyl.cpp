#include "cocenter/affine_weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <set>
#include <unordered_set>

#include "cocenter/errors.hpp"

namespace cocenter {

namespace {

int k0(const Root& r) { return r.positive ? 1 : 0; }

}  // namespace

IwahoriWeyl::IwahoriWeyl(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {
  system_.resize(datum_->roots().size());
  std::iota(system_.begin(), system_.end(), 0);
  full_ = true;
  setup();
}

IwahoriWeyl::IwahoriWeyl(std::shared_ptr<const RootDatum> datum, std::vector<int> system)
    : datum_(std::move(datum)), system_(std::move(system)) {
  std::sort(system_.begin(), system_.end());
  system_.erase(std::unique(system_.begin(), system_.end()), system_.end());
  full_ = system_.size() == datum_->roots().size();
  setup();
}

void IwahoriWeyl::setup() {
  const auto& d = *datum_;
  const int n = d.dim();
  in_system_.assign(d.roots().size(), false);
  for (int r : system_) in_system_[r] = true;
  for (int r : system_)
    if (!in_system_[d.root(r).negation]) throw InputError("root subsystem is not symmetric");

  positive_.clear();
  for (int r : system_)
    if (d.root(r).positive) positive_.push_back(r);
  simple_.clear();
  for (int b : positive_) {
    bool decomposable = false;
    for (int x : positive_) {
      if (x == b || decomposable) continue;
      IntVec diff{};
      for (int k = 0; k < n; ++k) diff[k] = d.root(b).character[k] - d.root(x).character[k];
      int r = d.find_root(diff);
      decomposable = r >= 0 && in_system_[r] && d.root(r).positive;
    }
    if (!decomposable) simple_.push_back(b);
  }

  finite_elements_ = d.reflection_subgroup(system_);
  finite_member_.assign(d.weyl().size(), false);
  for (int u : finite_elements_) finite_member_[u] = true;

  // irreducible components of the simple system
  const int m = static_cast<int>(simple_.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (dot(d.root(simple_[i]).character, d.root(simple_[j]).coroot, n) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<int>> groups;
  std::vector<int> group_of(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(i);
  }

  simple_elements_.clear();
  simple_roots_.clear();
  components_.assign(groups.size(), {});
  const int c = static_cast<int>(groups.size());
  for (int g = 0; g < c; ++g) {
    // roots of the component: orbit of its simple roots under its simple reflections
    std::vector<bool> seen(d.roots().size(), false);
    std::vector<int> todo;
    for (int i : groups[g]) {
      seen[simple_[i]] = true;
      todo.push_back(simple_[i]);
    }
    for (std::size_t h = 0; h < todo.size(); ++h)
      for (int i : groups[g]) {
        int img = d.weyl().act_root(d.root(simple_[i]).reflection, todo[h]);
        if (!seen[img]) {
          seen[img] = true;
          todo.push_back(img);
        }
      }
    int theta = -1;
    for (int r : todo)
      if (d.root(r).positive && (theta < 0 || d.root(r).height > d.root(theta).height)) theta = r;
    simple_elements_.push_back(Element{d.root(theta).coroot, d.root(theta).reflection});
    simple_roots_.push_back(AffineRoot{theta, 1});
    components_[g].push_back(g);
    for (int i : groups[g]) components_[g].push_back(c + i);
  }
  for (int i = 0; i < m; ++i) {
    simple_elements_.push_back(Element{IntVec{}, d.root(simple_[i]).reflection});
    simple_roots_.push_back(AffineRoot{d.root(simple_[i]).negation, 0});
  }

  std::vector<IntVec> coroots;
  for (int r : simple_) coroots.push_back(d.root(r).coroot);
  quotient_ = LatticeQuotient(n, coroots);
  cap_ = default_cap(d.semisimple_rank());
}

int IwahoriWeyl::default_cap(int semisimple_rank) {
  if (semisimple_rank <= 2) return 12;
  if (semisimple_rank == 3) return 8;
  return 6;
}

Element IwahoriWeyl::multiply(const Element& a, const Element& b) const {
  const auto& w = datum_->weyl();
  Element out;
  IntVec ub = w.act(a.finite, b.translation);
  for (int i = 0; i < kMaxDim; ++i) out.translation[i] = a.translation[i] + ub[i];
  out.finite = w.multiply(a.finite, b.finite);
  return out;
}

Element IwahoriWeyl::inverse(const Element& x) const {
  const auto& w = datum_->weyl();
  Element out;
  out.finite = w.inverse(x.finite);
  IntVec t = w.act(out.finite, x.translation);
  for (int i = 0; i < kMaxDim; ++i) out.translation[i] = -t[i];
  return out;
}

Element IwahoriWeyl::power(const Element& x, std::int64_t n) const {
  Element base = n < 0 ? inverse(x) : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Element acc = identity();
  while (e) {
    if (e & 1u) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

Element IwahoriWeyl::conjugate(const Element& x, const Element& w) const {
  return multiply(multiply(x, w), inverse(x));
}

bool IwahoriWeyl::is_member(const Element& w) const { return finite_member_[w.finite]; }

AffineRoot IwahoriWeyl::act(const Element& w, const AffineRoot& a) const {
  int ua = datum_->weyl().act_root(w.finite, a.root);
  return AffineRoot{ua, a.level + datum_->pair(ua, w.translation)};
}

bool IwahoriWeyl::positive(const AffineRoot& a) const {
  return a.level > 0 || (a.level == 0 && !datum_->root(a.root).positive);
}

int IwahoriWeyl::length(const Element& w) const {
  const auto& d = *datum_;
  std::int64_t total = 0;
  for (int a : system_) {
    int ua = d.weyl().act_root(w.finite, a);
    std::int64_t c = k0(d.root(ua)) - k0(d.root(a)) - d.pair(ua, w.translation);
    if (c > 0) total += c;
  }
  return static_cast<int>(total);
}

std::int64_t IwahoriWeyl::level_window(const Element& w) const {
  std::int64_t m = 0;
  for (int a : system_) m = std::max<std::int64_t>(m, std::llabs(datum_->pair(a, w.translation)));
  return m + 1;
}

std::vector<AffineRoot> IwahoriWeyl::inversions(const Element& w) const {
  std::vector<AffineRoot> out;
  const std::int64_t win = level_window(w);
  for (int a : system_)
    for (std::int64_t k = -win; k <= win; ++k) {
      AffineRoot b{a, k};
      if (positive(b) && !positive(act(w, b))) out.push_back(b);
    }
  return out;
}

bool IwahoriWeyl::parabolic_is_finite(const std::vector<int>& subset) const {
  for (const auto& comp : components_) {
    bool omitted = false;
    for (int s : comp) omitted = omitted || std::find(subset.begin(), subset.end(), s) == subset.end();
    if (!omitted) return false;
  }
  return true;
}

std::size_t IwahoriWeyl::parabolic_size(const std::vector<int>& subset, std::size_t cap) const {
  std::unordered_set<Element, ElementHash> seen{identity()};
  std::vector<Element> todo{identity()};
  for (std::size_t h = 0; h < todo.size(); ++h)
    for (int s : subset) {
      Element x = multiply(simple(s), todo[h]);
      if (seen.insert(x).second) {
        if (seen.size() > cap) throw ResourceError("parabolic subgroup exceeds " + std::to_string(cap) + " elements");
        todo.push_back(x);
      }
    }
  return seen.size();
}

int IwahoriWeyl::simple_index(const Element& s) const {
  for (int i = 0; i < num_simple(); ++i)
    if (simple_elements_[i] == s) return i;
  return -1;
}

Element IwahoriWeyl::omega_rep(const LatticeQuotient::Label& label) const {
  Element w = translation(quotient_.representative(quotient_.normalize(label)));
  for (;;) {
    int l = length(w);
    if (l == 0) return w;
    bool moved = false;
    for (int i = 0; i < num_simple() && !moved; ++i) {
      Element x = multiply(simple(i), w);
      if (length(x) < l) {
        w = x;
        moved = true;
      }
    }
    if (!moved) throw InvariantViolation("no descent from an element of positive length");
  }
}

OmegaSplit IwahoriWeyl::wa_omega_split(const Element& w) const {
  OmegaSplit out;
  Element cur = w;
  for (;;) {
    int l = length(cur);
    if (l == 0) break;
    int hit = -1;
    for (int i = 0; i < num_simple(); ++i)
      if (length(multiply(simple(i), cur)) < l) {
        hit = i;
        break;
      }
    if (hit < 0) throw InvariantViolation("no descent from an element of positive length");
    out.word.push_back(hit);
    cur = multiply(simple(hit), cur);
  }
  out.omega = kappa(cur);
  out.omega_element = cur;
  return out;
}

Element IwahoriWeyl::from_word(const std::vector<int>& word, const LatticeQuotient::Label& omega) const {
  Element w = identity();
  for (int s : word) {
    if (s < 0 || s >= num_simple())
      throw InputError("simple reflection index " + std::to_string(s) + " out of range 0.." +
                       std::to_string(num_simple() - 1));
    w = multiply(w, simple(s));
  }
  return multiply(w, omega_rep(omega));
}

const std::vector<std::vector<Element>>& IwahoriWeyl::levels(const LatticeQuotient::Label& raw, int max_length) const {
  auto label = quotient_.normalize(raw);
  auto& lv = level_cache_[label];
  if (lv.empty()) lv.push_back({omega_rep(label)});
  std::size_t total = 0;
  for (const auto& x : lv) total += x.size();
  while (static_cast<int>(lv.size()) <= max_length) {
    const int l = static_cast<int>(lv.size());
    std::unordered_set<Element, ElementHash> next;
    for (const auto& w : lv.back())
      for (int i = 0; i < num_simple(); ++i) {
        Element x = multiply(simple(i), w);
        if (length(x) == l) next.insert(x);
      }
    total += next.size();
    if (total > element_limit_)
      throw ResourceError("ball enumeration exceeds " + std::to_string(element_limit_) + " elements");
    std::vector<Element> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end());
    lv.push_back(std::move(sorted));
  }
  return lv;
}

std::vector<Element> IwahoriWeyl::ball(int max_length, const std::vector<LatticeQuotient::Label>& labels) const {
  if (max_length < 0) throw InputError("negative ball radius");
  if (max_length > cap_)
    throw ResourceError("ball radius " + std::to_string(max_length) + " exceeds the configured cap " +
                        std::to_string(cap_));
  std::vector<std::pair<int, Element>> all;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    std::set<LatticeQuotient::Label> done;
    for (const auto& raw : labels) {
      auto label = quotient_.normalize(raw);
      if (!done.insert(label).second) continue;
      const auto& lv = levels(label, max_length);
      for (int l = 0; l <= max_length; ++l)
        for (const auto& w : lv[l]) all.emplace_back(l, w);
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<Element> out;
  out.reserve(all.size());
  for (auto& p : all) out.push_back(p.second);
  return out;
}

std::vector<Element> IwahoriWeyl::sphere(int length, const LatticeQuotient::Label& label) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return levels(label, length)[length];
}

std::size_t IwahoriWeyl::wa_ball_count(int max_length) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  const auto& lv = levels(quotient_.label(IntVec{}), max_length);
  std::size_t n = 0;
  for (int l = 0; l <= max_length; ++l) n += lv[l].size();
  return n;
}

std::vector<LatticeQuotient::Label> IwahoriWeyl::default_labels() const {
  if (quotient_.finite()) return quotient_.all_labels();
  return {quotient_.label(IntVec{})};
}

bool IwahoriWeyl::are_conjugate(const Element& a, const Element& b) const {
  const auto& w = datum_->weyl();
  const int n = dim();
  if (w.order(a.finite) != w.order(b.finite) || kappa(a) != kappa(b)) return false;
  SmithForm snf;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = snf_cache_.find(b.finite);
    if (it == snf_cache_.end()) {
      IntMatrix m(n, std::vector<std::int64_t>(n, 0));
      for (int j = 0; j < n; ++j) {
        IntVec e{};
        e[j] = 1;
        IntVec img = w.act(b.finite, e);
        for (int i = 0; i < n; ++i) m[i][j] = (i == j ? 1 : 0) - img[i];
      }
      it = snf_cache_.emplace(b.finite, smith_normal_form(std::move(m))).first;
    }
    snf = it->second;
  }
  for (int y : finite_elements_) {
    if (w.multiply(w.multiply(y, a.finite), w.inverse(y)) != b.finite) continue;
    IntVec ya = w.act(y, a.translation);
    std::vector<std::int64_t> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = b.translation[i] - ya[i];
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::int64_t c = 0;
      for (int j = 0; j < n; ++j) c += snf.left[i][j] * rhs[j];
      std::int64_t dgl = i < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[i] : 0;
      ok = dgl == 0 ? c == 0 : c % dgl == 0;
    }
    if (ok) return true;
  }
  return false;
}

std::string IwahoriWeyl::describe() const {
  std::ostringstream os;
  os << "roots " << system_.size() << ", |W_0| " << finite_elements_.size() << ", simple reflections "
     << num_simple() << " (" << components_.size() << " affine), Omega " << quotient_.describe();
  return os.str();
}

void check_affine_anchor() {
  auto d = RootDatum::build(GroupDescriptor::parse("GL5"));
  IwahoriWeyl g(d);
  // (132)(45) sends e1 -> e3 -> e2 -> e1 and swaps e4, e5
  int u = d->weyl().from_word({2, 1, 4});
  const int image[5] = {2, 0, 1, 4, 3};
  for (int i = 0; i < 5; ++i) {
    IntVec e{};
    e[i] = 1;
    IntVec f{};
    f[image[i]] = 1;
    if (d->weyl().act(u, e) != f) throw InvariantViolation("GL5 anchor: permutation encoding mismatch");
  }
  Element w{IntVec{1, 1, 0, 1, 0}, u};
  int a = d->find_root(IntVec{0, 0, -1, 1, 0});
  int b = d->find_root(IntVec{0, -1, 0, 0, 1});
  AffineRoot img = g.act(w, AffineRoot{a, 0});
  if (img.root != b || img.level != -1 || g.positive(img))
    throw InvariantViolation("GL5 anchor: w(e4 - e3) is not the negative affine root e5 - e2 - 1");
}

}  // namespace cocenter
