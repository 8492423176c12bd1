#include "monolift/dnf.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "monolift/errors.hpp"

namespace monolift {

namespace {

std::string var_string(VarId v) { return std::to_string(v.block) + "." + std::to_string(v.pos); }

void sort_unique(std::vector<VarId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_var(VarId v) {
  if (v.block < 1 || v.pos < 1 || v.block > kMaxSets || v.pos > kMaxEll) {
    throw Error(ErrorCode::OutOfRange, "variable " + var_string(v) + " has an index out of range");
  }
}

bool read_var(const LiftedPoint& y, VarId v) {
  if (v.block > y.n() || v.pos > y.ell()) {
    throw Error(ErrorCode::OutOfRange, "variable " + var_string(v) + " outside a point with n=" +
                                           std::to_string(y.n()) +
                                           ", ell=" + std::to_string(y.ell()));
  }
  return (y.block(v.block - 1) >> (v.pos - 1)) & 1u;
}

}  // namespace

Term::Term(std::vector<VarId> pos, std::vector<VarId> neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
  for (auto v : pos_) check_var(v);
  for (auto v : neg_) check_var(v);
  sort_unique(pos_);
  sort_unique(neg_);
  std::vector<VarId> both;
  std::set_intersection(pos_.begin(), pos_.end(), neg_.begin(), neg_.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw Error(ErrorCode::ContradictoryTerm,
                "variable " + var_string(both.front()) + " appears with both signs");
  }
}

bool Term::eval(const LiftedPoint& y) const {
  bool value = true;
  // Every literal is range-checked, even after the value is known.
  for (auto v : pos_) value = read_var(y, v) && value;
  for (auto v : neg_) value = !read_var(y, v) && value;
  return value;
}

int Term::max_block_positives() const {
  int best = 0;
  for (std::size_t i = 0; i < pos_.size();) {
    std::size_t k = i;
    while (k < pos_.size() && pos_[k].block == pos_[i].block) ++k;
    best = std::max(best, static_cast<int>(k - i));
    i = k;
  }
  return best;
}

bool Dnf::eval(const LiftedPoint& y) const {
  bool value = false;
  for (const auto& t : terms_) value = t.eval(y) || value;
  return value;
}

bool eval_term(const Term& t, const LiftedPoint& y) { return t.eval(y); }
bool eval(const Dnf& f, const LiftedPoint& y) { return f.eval(y); }

int mwidth(const Dnf& f, const LiftedPoint& z) {
  int best = std::numeric_limits<int>::max();
  for (const auto& t : f.terms()) {
    if (t.eval(z)) best = std::min(best, t.monotone_size());
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

Dnf truncate_monotone(const Dnf& f, int bound, int ell) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "truncation bound must be >= 0");
  const int half_up = (ell + 1) / 2;
  Dnf out;
  for (const auto& t : f.terms()) {
    if (t.monotone_size() <= bound && t.max_block_positives() <= half_up) out.add(t);
  }
  return out;
}

Term project_term(const Term& t, const IndexVector& j) {
  auto keep = [&](VarId v) {
    return v.block <= static_cast<int>(j.size()) && j[static_cast<std::size_t>(v.block - 1)] == v.pos;
  };
  std::vector<VarId> pos;
  std::vector<VarId> neg;
  std::copy_if(t.pos().begin(), t.pos().end(), std::back_inserter(pos), keep);
  std::copy_if(t.neg().begin(), t.neg().end(), std::back_inserter(neg), keep);
  return Term(std::move(pos), std::move(neg));
}

bool eval_projected(const Term& projected, const IndexVector& j, BitVector a) {
  auto value_of = [&](VarId v) {
    if (v.block > static_cast<int>(j.size()) || j[static_cast<std::size_t>(v.block - 1)] != v.pos) {
      throw Error(ErrorCode::PreconditionViolated,
                  "literal " + var_string(v) + " is not of the form (i, j_i)");
    }
    return ((a >> (v.block - 1)) & 1u) != 0;
  };
  bool value = true;
  for (auto v : projected.pos()) value = value_of(v) && value;
  for (auto v : projected.neg()) value = !value_of(v) && value;
  return value;
}

std::string serialize(const Term& t) {
  if (t.empty()) return "1";
  std::vector<std::pair<VarId, char>> lits;
  for (auto v : t.pos()) lits.emplace_back(v, '+');
  for (auto v : t.neg()) lits.emplace_back(v, '-');
  std::sort(lits.begin(), lits.end());
  std::string out;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) out.push_back(' ');
    out.push_back(lits[i].second);
    out += var_string(lits[i].first);
  }
  return out;
}

std::string serialize(const Dnf& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    if (i) out += " | ";
    out += serialize(f.terms()[i]);
  }
  return out;
}

namespace {

class DnfParser {
 public:
  explicit DnfParser(std::string_view text) : text_(text) {}

  Dnf parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end()) fail("trailing input after constant 0");
      return Dnf{};
    }
    Dnf out;
    for (;;) {
      out.add(term());
      skip_ws();
      if (at_end()) break;
      if (peek() != '|') fail("expected '|'");
      ++pos_;
    }
    return out;
  }

 private:
  Term term() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && peek() == '1') {
      ++pos_;
      return Term{};
    }
    std::vector<VarId> pos;
    std::vector<VarId> neg;
    while (true) {
      skip_ws();
      if (at_end() || peek() == '|') break;
      const char sign = peek();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      ++pos_;
      VarId v;
      v.block = number();
      if (at_end() || peek() != '.') fail("expected '.'");
      ++pos_;
      v.pos = number();
      if (v.block < 1 || v.pos < 1) fail("indices are 1-based");
      (sign == '+' ? pos : neg).push_back(v);
    }
    if (pos.empty() && neg.empty()) {
      pos_ = start;
      fail("empty term (write '1' for the constant-1 term)");
    }
    try {
      return Term(std::move(pos), std::move(neg));
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (term at position " +
                                std::to_string(start + 1) + ")");
    }
  }

  int number() {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Dnf parse_dnf(std::string_view text) { return DnfParser(text).parse(); }

Dnf junta_to_dnf(const std::vector<VarId>& variables, const std::vector<bool>& table) {
  const std::size_t m = variables.size();
  if (m > 30 || table.size() != (std::size_t{1} << m)) {
    throw Error(ErrorCode::InvalidArgument, "truth table must have 2^m rows");
  }
  Dnf out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    if (!table[r]) continue;
    std::vector<VarId> pos;
    std::vector<VarId> neg;
    for (std::size_t k = 0; k < m; ++k) ((r >> k) & 1u ? pos : neg).push_back(variables[k]);
    out.add(Term(std::move(pos), std::move(neg)));
  }
  return out;
}

std::uint64_t packed_bit(VarId v, int ell) {
  return std::uint64_t{1} << ((v.block - 1) * ell + (v.pos - 1));
}

PackedTerm pack_term(const Term& t, int n, int ell) {
  if (n * ell > kMaxPackedBits) throw Error(ErrorCode::OutOfRange, "n*ell exceeds 64 bits");
  PackedTerm p;
  auto bit = [&](VarId v) {
    if (v.block > n || v.pos > ell) {
      throw Error(ErrorCode::OutOfRange, "variable " + var_string(v) + " outside n=" +
                                             std::to_string(n) + ", ell=" + std::to_string(ell));
    }
    return packed_bit(v, ell);
  };
  for (auto v : t.pos()) p.pos |= bit(v);
  for (auto v : t.neg()) p.neg |= bit(v);
  p.monotone_size = t.monotone_size();
  return p;
}

CompiledDnf::CompiledDnf(const Dnf& f, int n, int ell) {
  terms_.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms_.push_back(pack_term(t, n, ell));
}

int CompiledDnf::mwidth(std::uint64_t y) const {
  int best = std::numeric_limits<int>::max();
  for (const auto& t : terms_) {
    if (t.monotone_size < best && t.eval(y)) best = t.monotone_size;
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

// ---------------------------------------------------------------------------

struct DecisionTree::Node {
  bool leaf = true;
  bool value = false;
  VarId var{};
  std::vector<DecisionTree> children;  // {if_zero, if_one} for internal nodes
  int leaves = 1;
  int depth = 0;
};

DecisionTree DecisionTree::leaf(bool value) {
  auto n = std::make_shared<Node>();
  n->value = value;
  return DecisionTree(std::move(n));
}

DecisionTree DecisionTree::node(VarId var, DecisionTree if_zero, DecisionTree if_one) {
  check_var(var);
  if (if_zero.contains_var(var) || if_one.contains_var(var)) {
    throw Error(ErrorCode::InvalidArgument,
                "variable " + var_string(var) + " repeated on a root-to-leaf path");
  }
  auto n = std::make_shared<Node>();
  n->leaf = false;
  n->var = var;
  n->leaves = if_zero.size() + if_one.size();
  n->depth = 1 + std::max(if_zero.depth(), if_one.depth());
  n->children.push_back(std::move(if_zero));
  n->children.push_back(std::move(if_one));
  return DecisionTree(std::move(n));
}

bool DecisionTree::is_leaf() const { return node_->leaf; }
bool DecisionTree::value() const { return node_->value; }
VarId DecisionTree::var() const { return node_->var; }

const DecisionTree& DecisionTree::child(bool branch) const {
  if (node_->leaf) throw Error(ErrorCode::InvalidArgument, "leaf has no children");
  return node_->children[branch ? 1 : 0];
}

int DecisionTree::size() const { return node_->leaves; }
int DecisionTree::depth() const { return node_->depth; }

bool DecisionTree::eval(const LiftedPoint& y) const {
  const DecisionTree* t = this;
  while (!t->is_leaf()) t = &t->child(read_var(y, t->var()));
  return t->value();
}

bool DecisionTree::contains_var(VarId v) const {
  if (node_->leaf) return false;
  if (node_->var == v) return true;
  return child(false).contains_var(v) || child(true).contains_var(v);
}

std::string DecisionTree::to_string() const {
  if (is_leaf()) return value() ? "1" : "0";
  return "(" + var_string(var()) + "? " + child(false).to_string() + " : " +
         child(true).to_string() + ")";
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  DecisionTree parse() {
    DecisionTree t = subtree();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  DecisionTree subtree() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return DecisionTree::leaf(c == '1');
    }
    if (c != '(') fail("expected '(' or a leaf");
    ++pos_;
    skip_ws();
    VarId v;
    v.block = number();
    expect('.');
    v.pos = number();
    expect('?');
    DecisionTree zero = subtree();
    expect(':');
    DecisionTree one = subtree();
    expect(')');
    return DecisionTree::node(v, std::move(zero), std::move(one));
  }

  int number() {
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_paths(const DecisionTree& t, std::vector<VarId>& pos, std::vector<VarId>& neg, Dnf& out) {
  if (t.is_leaf()) {
    if (t.value()) out.add(Term(pos, neg));
    return;
  }
  neg.push_back(t.var());
  collect_paths(t.child(false), pos, neg, out);
  neg.pop_back();
  pos.push_back(t.var());
  collect_paths(t.child(true), pos, neg, out);
  pos.pop_back();
}

}  // namespace

DecisionTree DecisionTree::parse(std::string_view text) { return TreeParser(text).parse(); }

Dnf dt_to_dnf(const DecisionTree& tree) {
  Dnf out;
  std::vector<VarId> pos;
  std::vector<VarId> neg;
  collect_paths(tree, pos, neg, out);
  return out;
}

}  // namespace monolift
