#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cocenter/lattice.hpp"

namespace cocenter {

enum class LatticeKind { SimplyConnected, Adjoint, GL };

// Names a split group: a Cartan type with a lattice variant, or GL_n.
struct GroupDescriptor {
  std::string type;  // "A", "B", "C", "D", "F", "G" or "GL"
  int rank = 0;      // semisimple rank; n for GL_n
  LatticeKind lattice = LatticeKind::SimplyConnected;

  std::string label() const;  // "A2", "A2-adjoint", "GL5"

  // Shorthand "A2", "G2", "GL5" plus a lattice name ("sc", "adjoint"; ignored for GL).
  static GroupDescriptor parse(const std::string& shorthand, const std::string& lattice = "sc");
  // Key-value text: `type`, `rank`, `lattice` (one `key = value` per line, '#' comments).
  static GroupDescriptor from_config_text(const std::string& text);

  bool operator==(const GroupDescriptor&) const = default;
};

LatticeKind parse_lattice_kind(const std::string& name);
std::string lattice_kind_name(LatticeKind kind);

struct Root {
  IntVec character;     // <character, y> = dot product with y in X_*
  IntVec coroot;        // in X_*
  IntVec coefficients;  // in the simple roots
  bool positive = false;
  int height = 0;
  int negation = -1;    // index of the opposite root
  int reflection = -1;  // W0 index of the reflection s_root
};

class RootDatum;

// The finite Weyl group, fully tabulated. Element 0 is the identity.
class FiniteWeylGroup {
 public:
  int size() const { return static_cast<int>(mult_.size()); }
  int multiply(int a, int b) const { return mult_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int length(int u) const { return length_[u]; }
  int order(int u) const { return order_[u]; }
  // Lexicographically least reduced word, 1-based simple indices, leftmost letter first.
  const std::vector<int>& word(int u) const { return word_[u]; }
  int simple(int i) const { return simple_[i - 1]; }
  int from_word(const std::vector<int>& word) const;

  IntVec act(int u, const IntVec& y) const;
  RatVec act(int u, const RatVec& v) const;
  int act_root(int u, int root) const { return root_perm_[u][root]; }

 private:
  friend class RootDatum;
  int dim_ = 0;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<int> length_;
  std::vector<int> order_;
  std::vector<std::vector<int>> word_;
  std::vector<int> simple_;
  std::vector<std::array<IntVec, kMaxDim>> columns_;  // images of basis vectors
  std::vector<std::vector<int>> root_perm_;
};

// The roots Phi_{v,0} and Phi_{v,+} attached to a rational coweight v, plus the subgroup W_M.
struct LeviDatum {
  RatVec v{};
  std::vector<int> zero_roots;     // <a, v> = 0
  std::vector<int> plus_roots;     // <a, v> > 0
  std::vector<bool> in_levi;       // mask over all roots, true on zero_roots
  std::vector<int> weyl_elements;  // W_M as sorted W0 indices
};

// A split root datum realized in coordinates of X_*, with exact pairing.
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> build(const GroupDescriptor& descriptor);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  int dim() const { return dim_; }
  int semisimple_rank() const { return static_cast<int>(simple_.size()); }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int i) const { return roots_[i]; }
  const std::vector<int>& positive_roots() const { return positive_; }
  const std::vector<int>& simple_roots() const { return simple_; }
  int highest_root() const { return highest_; }
  const IntVec& two_rho() const { return two_rho_; }
  const FiniteWeylGroup& weyl() const { return weyl_; }

  // Index of the root with this character, or -1.
  int find_root(const IntVec& character) const;
  std::int64_t pair(int root, const IntVec& y) const { return dot(roots_[root].character, y, dim_); }
  Rational pair(int root, const RatVec& v) const { return dot(roots_[root].character, v, dim_); }

  bool is_dominant(const RatVec& v) const;
  // (v_bar, u) with u(v) = v_bar dominant.
  std::pair<RatVec, int> dominant_rep(const RatVec& v) const;
  LeviDatum levi_datum(const RatVec& v) const;

  // Subgroup of W0 generated by the reflections of the given roots; sorted indices.
  std::vector<int> reflection_subgroup(const std::vector<int>& roots) const;

  std::string format_coweight(const RatVec& v) const;  // "(2/3,2/3,1/2)"

 private:
  RootDatum() = default;
  void build_roots(const std::vector<IntVec>& simple_chars, const std::vector<IntVec>& simple_coroots);
  void build_weyl();

  GroupDescriptor descriptor_;
  int dim_ = 0;
  std::vector<Root> roots_;
  std::vector<int> positive_;
  std::vector<int> simple_;
  int highest_ = -1;
  IntVec two_rho_{};
  FiniteWeylGroup weyl_;
};

}  // namespace cocenter
