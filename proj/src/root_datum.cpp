#include "cocenter/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "cocenter/config.hpp"
#include "cocenter/errors.hpp"

namespace cocenter {

LatticeKind parse_lattice_kind(const std::string& name) {
  std::string n;
  for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "sc" || n == "simply-connected" || n == "simply_connected") return LatticeKind::SimplyConnected;
  if (n == "adjoint" || n == "ad") return LatticeKind::Adjoint;
  if (n == "gl") return LatticeKind::GL;
  throw ConfigError("unknown lattice variant '" + name + "' (expected sc, adjoint or gl)");
}

std::string lattice_kind_name(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::SimplyConnected: return "sc";
    case LatticeKind::Adjoint: return "adjoint";
    case LatticeKind::GL: return "gl";
  }
  return "?";
}

std::string GroupDescriptor::label() const {
  std::string s = type + std::to_string(rank);
  if (lattice == LatticeKind::Adjoint) s += "-adjoint";
  return s;
}

GroupDescriptor GroupDescriptor::parse(const std::string& shorthand, const std::string& lattice) {
  std::string s;
  for (char c : shorthand)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::size_t p = 0;
  while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p]))) ++p;
  if (p == 0 || p == s.size()) throw ConfigError("group descriptor '" + shorthand + "' is not of the form <type><rank>");
  GroupDescriptor d;
  d.type = s.substr(0, p);
  for (std::size_t i = p; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ConfigError("bad rank in '" + shorthand + "'");
  d.rank = std::stoi(s.substr(p));
  d.lattice = d.type == "GL" ? LatticeKind::GL : parse_lattice_kind(lattice);
  return d;
}

GroupDescriptor GroupDescriptor::from_config_text(const std::string& text) {
  auto kv = parse_config(text);
  auto type = kv.find("type");
  if (type == kv.end()) throw ConfigError("config is missing the 'type' key");
  std::string lattice = kv.count("lattice") ? kv.at("lattice") : "sc";
  std::string shorthand = type->second;
  if (kv.count("rank")) shorthand += kv.at("rank");
  return parse(shorthand, lattice);
}

namespace {

// Kac convention: a[i][j] = <alpha_i^vee, alpha_j>.
IntMatrix cartan_matrix(const std::string& type, int n) {
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  if (type == "A") {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  } else if (type == "B") {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    a[n - 1][n - 2] = -2;
  } else if (type == "C") {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
    a[n - 2][n - 1] = -2;
  } else if (type == "D") {
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
  } else if (type == "G") {
    a[0][1] = -3;
    a[1][0] = -1;
  } else if (type == "F") {
    link(0, 1);
    link(1, 2);
    link(2, 3);
    a[2][1] = -2;
  }
  return a;
}

bool supported(const GroupDescriptor& d) {
  if (d.type == "GL") return d.rank >= 1 && d.rank <= kMaxDim;
  if (d.lattice == LatticeKind::GL) return false;
  if (d.type == "A") return d.rank >= 1 && d.rank <= 4;
  if (d.type == "B" || d.type == "C") return d.rank >= 2 && d.rank <= 4;
  if (d.type == "D") return d.rank == 4;
  if (d.type == "G") return d.rank == 2;
  if (d.type == "F") return d.rank == 4;
  return false;
}

std::size_t expected_positive_roots(const GroupDescriptor& d) {
  const std::size_t n = d.rank;
  if (d.type == "GL") return n * (n - 1) / 2;
  if (d.type == "A") return n * (n + 1) / 2;
  if (d.type == "B" || d.type == "C") return n * n;
  if (d.type == "D") return n * (n - 1);
  if (d.type == "G") return 6;
  return 24;  // F4
}

struct ColumnsHash {
  std::size_t operator()(const std::array<IntVec, kMaxDim>& m) const noexcept {
    std::size_t h = 0;
    IntVecHash vh;
    for (const auto& c : m) h = h * 1000003u ^ vh(c);
    return h;
  }
};

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::build(const GroupDescriptor& descriptor) {
  if (!supported(descriptor))
    throw ConfigError("unsupported group " + descriptor.type + std::to_string(descriptor.rank) + " with lattice " +
                      lattice_kind_name(descriptor.lattice));
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->descriptor_ = descriptor;
  std::vector<IntVec> chars, coroots;
  if (descriptor.type == "GL") {
    d->dim_ = descriptor.rank;
    for (int i = 0; i + 1 < descriptor.rank; ++i) {
      IntVec a{};
      a[i] = 1;
      a[i + 1] = -1;
      chars.push_back(a);
      coroots.push_back(a);
    }
  } else {
    const int n = descriptor.rank;
    d->dim_ = n;
    auto a = cartan_matrix(descriptor.type, n);
    for (int i = 0; i < n; ++i) {
      IntVec c{}, y{};
      for (int j = 0; j < n; ++j) {
        if (descriptor.lattice == LatticeKind::SimplyConnected) {
          c[j] = a[j][i];
          y[j] = i == j ? 1 : 0;
        } else {
          c[j] = i == j ? 1 : 0;
          y[j] = a[i][j];
        }
      }
      chars.push_back(c);
      coroots.push_back(y);
    }
  }
  d->build_roots(chars, coroots);
  if (d->positive_.size() != expected_positive_roots(descriptor))
    throw InvariantViolation("root closure produced " + std::to_string(d->positive_.size()) + " positive roots");
  d->build_weyl();
  return d;
}

void RootDatum::build_roots(const std::vector<IntVec>& simple_chars, const std::vector<IntVec>& simple_coroots) {
  const int r = static_cast<int>(simple_chars.size());
  struct Raw {
    IntVec ch, co, coeff;
  };
  std::vector<Raw> raw;
  std::unordered_map<IntVec, int, IntVecHash> seen;
  std::deque<int> queue;
  for (int i = 0; i < r; ++i) {
    IntVec e{};
    e[i] = 1;
    seen.emplace(simple_chars[i], static_cast<int>(raw.size()));
    queue.push_back(static_cast<int>(raw.size()));
    raw.push_back({simple_chars[i], simple_coroots[i], e});
  }
  while (!queue.empty()) {
    Raw cur = raw[queue.front()];
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      std::int64_t c = dot(cur.ch, simple_coroots[j], dim_);
      std::int64_t y = dot(simple_chars[j], cur.co, dim_);
      Raw next = cur;
      for (int k = 0; k < dim_; ++k) {
        next.ch[k] -= c * simple_chars[j][k];
        next.co[k] -= y * simple_coroots[j][k];
      }
      next.coeff[j] -= c;
      if (seen.count(next.ch)) continue;
      seen.emplace(next.ch, static_cast<int>(raw.size()));
      queue.push_back(static_cast<int>(raw.size()));
      raw.push_back(next);
    }
  }

  std::vector<Raw> pos;
  for (const auto& x : raw) {
    bool nonneg = true, nonpos = true;
    for (int i = 0; i < r; ++i) {
      nonneg = nonneg && x.coeff[i] >= 0;
      nonpos = nonpos && x.coeff[i] <= 0;
    }
    if (!nonneg && !nonpos) throw InvariantViolation("root with mixed-sign simple coefficients");
    if (dot(x.ch, x.co, dim_) != 2) throw InvariantViolation("root with <a, a^vee> != 2");
    if (nonneg) pos.push_back(x);
  }
  auto height = [r](const Raw& x) {
    std::int64_t h = 0;
    for (int i = 0; i < r; ++i) h += x.coeff[i];
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const Raw& a, const Raw& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a.coeff > b.coeff;
  });
  const int np = static_cast<int>(pos.size());
  roots_.clear();
  for (int sign : {1, -1}) {
    for (int i = 0; i < np; ++i) {
      Root root;
      for (int k = 0; k < kMaxDim; ++k) {
        root.character[k] = sign * pos[i].ch[k];
        root.coroot[k] = sign * pos[i].co[k];
        root.coefficients[k] = sign * pos[i].coeff[k];
      }
      root.positive = sign > 0;
      root.height = static_cast<int>(sign * height(pos[i]));
      root.negation = sign > 0 ? i + np : i;
      roots_.push_back(root);
    }
  }
  positive_.clear();
  simple_.clear();
  two_rho_ = IntVec{};
  for (int i = 0; i < np; ++i) {
    positive_.push_back(i);
    if (roots_[i].height == 1) simple_.push_back(i);
    for (int k = 0; k < dim_; ++k) two_rho_[k] += roots_[i].character[k];
  }
  highest_ = np == 0 ? -1 : np - 1;
  for (int i = 0; i < np; ++i)
    if (roots_[i].height > roots_[highest_].height) highest_ = i;
}

int RootDatum::find_root(const IntVec& character) const {
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i)
    if (roots_[i].character == character) return i;
  return -1;
}

void RootDatum::build_weyl() {
  using Cols = std::array<IntVec, kMaxDim>;
  const int r = semisimple_rank();
  const int nroots = static_cast<int>(roots_.size());
  auto reflection_columns = [&](int root) {
    Cols m{};
    for (int j = 0; j < dim_; ++j) {
      IntVec e{};
      e[j] = 1;
      std::int64_t c = roots_[root].character[j];
      for (int k = 0; k < dim_; ++k) e[k] -= c * roots_[root].coroot[k];
      m[j] = e;
    }
    return m;
  };
  auto compose = [&](const Cols& a, const Cols& b) {  // a after b
    Cols m{};
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int i = 0; i < dim_; ++i) m[j][i] += a[k][i] * b[j][k];
    return m;
  };
  std::vector<Cols> gens;
  std::vector<std::vector<int>> gen_perm;
  for (int i = 0; i < r; ++i) {
    gens.push_back(reflection_columns(simple_[i]));
    std::vector<int> perm(nroots);
    const auto& a = roots_[simple_[i]];
    for (int x = 0; x < nroots; ++x) {
      IntVec ch = roots_[x].character;
      std::int64_t c = dot(ch, a.coroot, dim_);
      for (int k = 0; k < dim_; ++k) ch[k] -= c * a.character[k];
      perm[x] = find_root(ch);
    }
    gen_perm.push_back(std::move(perm));
  }

  FiniteWeylGroup& w = weyl_;
  w.dim_ = dim_;
  Cols id{};
  for (int j = 0; j < dim_; ++j) id[j][j] = 1;
  std::unordered_map<Cols, int, ColumnsHash> index;
  std::vector<int> ident_perm(nroots);
  for (int x = 0; x < nroots; ++x) ident_perm[x] = x;
  w.columns_.push_back(id);
  w.root_perm_.push_back(ident_perm);
  w.length_.push_back(0);
  index.emplace(id, 0);
  std::vector<std::vector<int>> left;  // left[i][u] = s_i u
  for (std::size_t head = 0; head < w.columns_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      Cols m = compose(gens[i], w.columns_[head]);
      if (index.count(m)) continue;
      int idx = static_cast<int>(w.columns_.size());
      index.emplace(m, idx);
      w.columns_.push_back(m);
      std::vector<int> perm(nroots);
      for (int x = 0; x < nroots; ++x) perm[x] = gen_perm[i][w.root_perm_[head][x]];
      w.root_perm_.push_back(std::move(perm));
      w.length_.push_back(w.length_[head] + 1);
    }
  }
  const int n = static_cast<int>(w.columns_.size());
  left.assign(r, std::vector<int>(n));
  for (int i = 0; i < r; ++i)
    for (int u = 0; u < n; ++u) left[i][u] = index.at(compose(gens[i], w.columns_[u]));
  w.simple_.resize(r);
  for (int i = 0; i < r; ++i) w.simple_[i] = left[i][0];

  w.word_.assign(n, {});
  for (int u = 1; u < n; ++u) {
    for (int i = 0; i < r; ++i) {
      int v = left[i][u];
      if (w.length_[v] < w.length_[u]) {
        w.word_[u].push_back(i + 1);
        w.word_[u].insert(w.word_[u].end(), w.word_[v].begin(), w.word_[v].end());
        break;
      }
    }
  }
  // Indices were assigned in BFS order, so word_[v] is ready before word_[u] when v is shorter.
  for (int u = 1; u < n; ++u)
    if (static_cast<int>(w.word_[u].size()) != w.length_[u]) {
      // recompute in length order for safety of the BFS assumption
      std::vector<int> order(n);
      for (int k = 0; k < n; ++k) order[k] = k;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w.length_[a] < w.length_[b]; });
      for (int x : order) {
        w.word_[x].clear();
        for (int i = 0; i < r && x != 0; ++i) {
          int v = left[i][x];
          if (w.length_[v] < w.length_[x]) {
            w.word_[x].push_back(i + 1);
            w.word_[x].insert(w.word_[x].end(), w.word_[v].begin(), w.word_[v].end());
            break;
          }
        }
      }
      break;
    }

  w.mult_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = b;
      const auto& word = w.word_[a];
      for (auto it = word.rbegin(); it != word.rend(); ++it) x = left[*it - 1][x];
      w.mult_[a][b] = x;
    }
  w.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (w.mult_[a][b] == 0) w.inv_[a] = b;
  w.order_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = w.mult_[a][x];
      ++k;
    }
    w.order_[a] = k;
  }
  for (int x = 0; x < nroots; ++x) roots_[x].reflection = index.at(reflection_columns(x));
}

int FiniteWeylGroup::from_word(const std::vector<int>& word) const {
  int u = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = mult_[simple(*it)][u];
  return u;
}

IntVec FiniteWeylGroup::act(int u, const IntVec& y) const {
  IntVec out{};
  const auto& cols = columns_[u];
  for (int j = 0; j < dim_; ++j)
    if (y[j] != 0)
      for (int i = 0; i < dim_; ++i) out[i] += cols[j][i] * y[j];
  return out;
}

RatVec FiniteWeylGroup::act(int u, const RatVec& v) const {
  RatVec out{};
  const auto& cols = columns_[u];
  for (int j = 0; j < dim_; ++j)
    if (sign(v[j]) != 0)
      for (int i = 0; i < dim_; ++i)
        if (cols[j][i] != 0) out[i] += cols[j][i] * v[j];
  return out;
}

bool RootDatum::is_dominant(const RatVec& v) const {
  for (int s : simple_)
    if (sign(pair(s, v)) < 0) return false;
  return true;
}

std::pair<RatVec, int> RootDatum::dominant_rep(const RatVec& v) const {
  RatVec cur = v;
  int u = 0;
  for (;;) {
    int hit = -1;
    for (int i = 0; i < semisimple_rank(); ++i)
      if (sign(pair(simple_[i], cur)) < 0) {
        hit = i;
        break;
      }
    if (hit < 0) return {cur, u};
    int s = weyl_.simple(hit + 1);
    cur = weyl_.act(s, cur);
    u = weyl_.multiply(s, u);
  }
}

std::vector<int> RootDatum::reflection_subgroup(const std::vector<int>& roots) const {
  std::vector<int> gens;
  for (int r : roots) gens.push_back(roots_[r].reflection);
  std::vector<char> in(weyl_.size(), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int g : gens) {
      int x = weyl_.multiply(g, out[head]);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

LeviDatum RootDatum::levi_datum(const RatVec& v) const {
  LeviDatum l;
  l.v = v;
  l.in_levi.assign(roots_.size(), false);
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
    Rational p = pair(i, v);
    if (sign(p) == 0) {
      l.zero_roots.push_back(i);
      l.in_levi[i] = true;
    } else if (sign(p) > 0) {
      l.plus_roots.push_back(i);
    }
  }
  l.weyl_elements = reflection_subgroup(l.zero_roots);
  return l;
}

std::string RootDatum::format_coweight(const RatVec& v) const {
  std::string s = "(";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

}  // namespace cocenter
