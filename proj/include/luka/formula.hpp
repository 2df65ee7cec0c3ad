#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace luka {

/// Immutable formula tree over the five primitive constructors. Derived
/// connectives are expanded by the builders below and never stored. Cheap to
/// copy (shared subtrees); structural equality and ordering.
class Formula {
 public:
  enum class Kind { Bottom, Prop, Not, And, Implies };

  Formula() : Formula(bottom()) {}

  static Formula bottom();
  static Formula prop(const std::string& name);
  static Formula neg(const Formula& f);
  static Formula conj(const Formula& a, const Formula& b);  // strong &
  static Formula implies(const Formula& a, const Formula& b);

  // Sugar, expanded at construction time.
  static Formula top() { return neg(bottom()); }
  static Formula strong_or(const Formula& a, const Formula& b);  // a (+) b
  static Formula weak_and(const Formula& a, const Formula& b);   // a /\ b
  static Formula weak_or(const Formula& a, const Formula& b);    // a \/ b
  static Formula iff(const Formula& a, const Formula& b);        // a <-> b

  Kind kind() const { return node_->kind; }
  const std::string& prop_name() const { return node_->name; }
  Formula sub() const { return Formula(node_->left); }    // Not
  Formula left() const { return Formula(node_->left); }   // And / Implies
  Formula right() const { return Formula(node_->right); }

  std::size_t size() const { return node_->size; }  // node count
  int depth() const { return node_->depth; }         // edge height, leaf = 0
  std::size_t hash() const { return node_->hash; }

  std::set<std::string> variables() const;
  std::vector<Formula> subformulas() const;  // distinct, includes the formula itself

  /// Parenthesized surface text; parse(str()) reproduces the tree exactly.
  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  /// Total order: by size, then by surface text. The fragment enumeration
  /// order and deterministic containers rely on it.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    std::string name;  // Prop only
    NodePtr left;
    NodePtr right;
    std::size_t size = 1;
    int depth = 0;
    std::size_t hash = 0;
  };

  explicit Formula(NodePtr n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, NodePtr l, NodePtr r);

  NodePtr node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Left-associated n-fold strong conjunction of f; power(f, 1) = f.
/// Throws std::invalid_argument for n < 1.
Formula power(const Formula& f, int n);

bool valid_prop_name(const std::string& name);

}  // namespace luka
