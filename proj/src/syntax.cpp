#include "cocenter/syntax.hpp"

#include <cctype>

#include "cocenter/errors.hpp"

namespace cocenter {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_index(const std::string& digits, const std::string& production) {
  if (digits.empty() || digits.size() > 3) throw ParseError(production, "bad index '" + digits + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(production, "bad index '" + digits + "'");
  return std::stoi(digits);
}

// "X3*X1*X2" -> {3,1,2}; `empty` is the letter for the empty word.
std::vector<int> parse_word(const std::string& text, char letter, char empty, const std::string& production) {
  if (text.size() == 1 && text[0] == empty) return {};
  std::vector<int> word;
  std::size_t i = 0;
  while (true) {
    if (i >= text.size() || text[i] != letter)
      throw ParseError(production, std::string("expected '") + letter + "' in '" + text + "'");
    std::size_t j = text.find('*', i);
    if (j == std::string::npos) j = text.size();
    word.push_back(parse_index(text.substr(i + 1, j - i - 1), production));
    if (j == text.size()) break;
    i = j + 1;
  }
  return word;
}

}  // namespace

Element parse_element(const IwahoriWeyl& g, const std::string& raw) {
  std::string t = strip(raw);
  if (t.empty()) throw ParseError("elem", "empty element");
  const RootDatum& d = g.datum();
  if (t[0] == 't') {
    if (t.size() < 3 || t[1] != '[') throw ParseError("elem", "expected 't[' in '" + raw + "'");
    auto close = t.find(']');
    if (close == std::string::npos) throw ParseError("elem", "missing ']' in '" + raw + "'");
    std::vector<Rational> coords;
    std::string body = t.substr(2, close - 2);
    std::size_t i = 0;
    while (true) {
      std::size_t j = body.find(',', i);
      if (j == std::string::npos) j = body.size();
      coords.push_back(parse_rational(body.substr(i, j - i)));
      if (j == body.size()) break;
      i = j + 1;
    }
    if (static_cast<int>(coords.size()) != d.dim())
      throw InputError("translation has " + std::to_string(coords.size()) + " coordinates, the lattice has rank " +
                       std::to_string(d.dim()));
    Element w;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k].denominator() != 1) throw InputError("translation part must be integral in '" + raw + "'");
      w.translation[k] = coords[k].numerator();
    }
    std::string rest = t.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != '*') throw ParseError("elem", "expected '*' after ']' in '" + raw + "'");
      auto word = parse_word(rest.substr(1), 's', 'e', "finite_word");
      for (int s : word)
        if (s < 1 || s > d.semisimple_rank())
          throw InputError("finite simple reflection s" + std::to_string(s) + " out of range");
      w.finite = d.weyl().from_word(word);
    }
    if (!g.is_member(w)) throw InputError("element '" + raw + "' is not in this group");
    return w;
  }
  if (t[0] == 'S' || t[0] == 'E') {
    auto hash = t.find('#');
    std::string word_text = t.substr(0, hash);
    LatticeQuotient::Label label = g.kappa(g.identity());
    if (hash != std::string::npos) label = g.omega_group().normalize(parse_label(t.substr(hash + 1)));
    auto word = parse_word(word_text, 'S', 'E', "affine_word");
    for (int s : word)
      if (s < 0 || s >= g.num_simple()) throw InputError("affine simple reflection S" + std::to_string(s) + " out of range");
    return g.from_word(word, label);
  }
  throw ParseError("elem", "expected 't[', 'S' or 'E' at the start of '" + raw + "'");
}

std::string format_element(const IwahoriWeyl& g, const Element& w) {
  std::string s = "t[";
  for (int k = 0; k < g.dim(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.translation[k]);
  }
  s += "]";
  for (int i : g.datum().weyl().word(w.finite)) s += "*s" + std::to_string(i);
  return s;
}

std::string format_affine_word(const IwahoriWeyl& g, const Element& w) {
  auto split = g.wa_omega_split(w);
  std::string s;
  for (std::size_t i = 0; i < split.word.size(); ++i) s += (i ? "*S" : "S") + std::to_string(split.word[i]);
  if (s.empty()) s = "E";
  bool trivial = true;
  for (auto x : split.omega)
    if (x != 0) trivial = false;
  if (!trivial) s += "#" + format_label(split.omega);
  return s;
}

RatVec parse_coweight(int dim, const std::string& raw) {
  std::string t = strip(raw);
  if (t.size() >= 2 && ((t.front() == '(' && t.back() == ')') || (t.front() == '[' && t.back() == ']')))
    t = t.substr(1, t.size() - 2);
  if (t.empty()) throw ParseError("coweight", "empty coweight");
  RatVec v{};
  int n = 0;
  std::size_t i = 0;
  while (true) {
    std::size_t j = t.find(',', i);
    if (j == std::string::npos) j = t.size();
    Rational r;
    try {
      r = parse_rational(t.substr(i, j - i));
    } catch (const ParseError& e) {
      throw ParseError("coweight", e.what());
    }
    if (n >= kMaxDim) throw InputError("coweight has too many entries");
    v[n++] = r;
    if (j == t.size()) break;
    i = j + 1;
  }
  if (n != dim)
    throw InputError("coweight has " + std::to_string(n) + " entries, the lattice has rank " + std::to_string(dim));
  return v;
}

HeckeElement parse_hecke(const IwahoriWeyl& g, const std::string& raw) {
  std::string t = strip(raw);
  if (t.empty()) throw ParseError("expr", "empty expression");
  HeckeElement out;
  std::size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expr", "expected '+' or '-' at offset " + std::to_string(i) + " in '" + raw + "'");
    }
    first = false;
    // the coefficient runs up to the "T[" that opens this term
    std::size_t open = t.find("T[", i);
    if (open == std::string::npos) throw ParseError("term", "expected 'T[' in '" + raw + "'");
    std::string coef = t.substr(i, open - i);
    Poly c(1);
    if (!coef.empty()) {
      if (coef.back() != '*') throw ParseError("term", "expected '*' before 'T[' in '" + raw + "'");
      coef.pop_back();
      if (coef.size() >= 2 && coef.front() == '(' && coef.back() == ')') coef = coef.substr(1, coef.size() - 2);
      c = Poly::parse(coef);
    }
    int depth = 0;
    std::size_t j = open + 1;
    for (; j < t.size(); ++j) {
      if (t[j] == '[') ++depth;
      if (t[j] == ']' && --depth == 0) break;
    }
    if (j == t.size()) throw ParseError("term", "unbalanced brackets in '" + raw + "'");
    Element w = parse_element(g, t.substr(open + 2, j - open - 2));
    hecke_accumulate(out, w, c * Poly(sign));
    i = j + 1;
  }
  return out;
}

std::string format_hecke(const IwahoriWeyl& g, const HeckeElement& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : f) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*T[" + format_element(g, w) + "]";
  }
  return s;
}

}  // namespace cocenter
