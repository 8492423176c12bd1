#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "monolift/lifted.hpp"

namespace monolift {

/// Variable y_{block,pos}, both 1-based.
struct VarId {
  int block = 1;
  int pos = 1;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// A conjunction of literals. Positive and negative variable sets are kept
/// sorted and must be disjoint.
class Term {
 public:
  Term() = default;
  Term(std::vector<VarId> pos, std::vector<VarId> neg);

  const std::vector<VarId>& pos() const { return pos_; }
  const std::vector<VarId>& neg() const { return neg_; }
  int size() const { return static_cast<int>(pos_.size() + neg_.size()); }
  /// Number of unnegated literals.
  int monotone_size() const { return static_cast<int>(pos_.size()); }
  bool empty() const { return pos_.empty() && neg_.empty(); }

  /// The empty term is constant 1. Throws OutOfRange for variables outside y.
  bool eval(const LiftedPoint& y) const;

  /// Largest number of positive literals in a single block.
  int max_block_positives() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  std::vector<VarId> pos_;
  std::vector<VarId> neg_;
};

class Dnf {
 public:
  Dnf() = default;
  explicit Dnf(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  int size() const { return static_cast<int>(terms_.size()); }
  void add(Term t) { terms_.push_back(std::move(t)); }

  /// The empty DNF is constant 0.
  bool eval(const LiftedPoint& y) const;

  friend bool operator==(const Dnf&, const Dnf&) = default;

 private:
  std::vector<Term> terms_;
};

bool eval_term(const Term& t, const LiftedPoint& y);
bool eval(const Dnf& f, const LiftedPoint& y);

/// 0 when F(z) = 0, otherwise the smallest monotone size among satisfied terms.
int mwidth(const Dnf& f, const LiftedPoint& z);

/// Drops terms with monotone size above `bound` and terms with more than
/// ceil(ell/2) positive literals in one block (those vanish on the support).
Dnf truncate_monotone(const Dnf& f, int bound, int ell);

/// Keeps exactly the literals on variables (i, j_i); signs are preserved.
Term project_term(const Term& t, const IndexVector& j);

/// Evaluates a projected term at a in {0,1}^n, reading literal (i, j_i) as a_i.
bool eval_projected(const Term& projected, const IndexVector& j, BitVector a);

/// Text form: terms joined by " | ", literals "+i.t" / "-i.t" in variable order,
/// "1" for the empty term and "0" for the empty DNF.
std::string serialize(const Dnf& f);
std::string serialize(const Term& t);
Dnf parse_dnf(std::string_view text);

/// One term per satisfying row. Row r assigns variables[k] the value of bit k of r.
Dnf junta_to_dnf(const std::vector<VarId>& variables, const std::vector<bool>& table);

/// Term/point evaluation on the 64-bit packed form (see LiftedPoint::pack).
struct PackedTerm {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  int monotone_size = 0;
  bool eval(std::uint64_t y) const { return (y & pos) == pos && (y & neg) == 0; }
};

class CompiledDnf {
 public:
  /// Throws OutOfRange if a variable lies outside (n, ell) or n*ell > 64.
  CompiledDnf(const Dnf& f, int n, int ell);

  bool eval(std::uint64_t y) const {
    for (const auto& t : terms_) {
      if (t.eval(y)) return true;
    }
    return false;
  }
  int mwidth(std::uint64_t y) const;
  const std::vector<PackedTerm>& terms() const { return terms_; }

 private:
  std::vector<PackedTerm> terms_;
};

std::uint64_t packed_bit(VarId v, int ell);
PackedTerm pack_term(const Term& t, int n, int ell);

/// Decision tree with 0/1 leaves; size is the number of leaves. Immutable,
/// subtrees are shared.
class DecisionTree {
 public:
  static DecisionTree leaf(bool value);
  /// Rejects `var` if it already occurs in either subtree.
  static DecisionTree node(VarId var, DecisionTree if_zero, DecisionTree if_one);

  bool is_leaf() const;
  bool value() const;
  VarId var() const;
  const DecisionTree& child(bool branch) const;

  int size() const;
  int depth() const;
  bool eval(const LiftedPoint& y) const;
  bool contains_var(VarId v) const;

  /// "(1.2? 0 : 1)": test variable 1.2, left subtree when it is 0.
  std::string to_string() const;
  static DecisionTree parse(std::string_view text);

 private:
  struct Node;
  explicit DecisionTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One term per 1-leaf holding the path literals.
Dnf dt_to_dnf(const DecisionTree& tree);

}  // namespace monolift
