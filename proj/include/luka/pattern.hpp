#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "luka/formula.hpp"

namespace luka {

/// Map from metavariable name to formula. Metavariables live in their own
/// namespace, disjoint from proposition names.
using Binding = std::map<std::string, Formula>;

/// Formula shape with metavariable leaves; the schematic letters of the
/// axiom schemes. Built with the same combinators as Formula plus metavar().
class Pattern {
 public:
  enum class Kind { Bottom, Prop, Metavar, Not, And, Implies };

  static Pattern bottom();
  static Pattern prop(const std::string& name);
  static Pattern metavar(const std::string& name);
  static Pattern neg(const Pattern& p);
  static Pattern conj(const Pattern& a, const Pattern& b);
  static Pattern implies(const Pattern& a, const Pattern& b);
  static Pattern strong_or(const Pattern& a, const Pattern& b);
  static Pattern iff(const Pattern& a, const Pattern& b);

  /// Lifts a ground formula into a pattern with no metavariables.
  static Pattern lift(const Formula& f);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Pattern sub() const { return Pattern(node_->left); }
  Pattern left() const { return Pattern(node_->left); }
  Pattern right() const { return Pattern(node_->right); }

  std::set<std::string> metavars() const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    std::string name;
    NodePtr left;
    NodePtr right;
  };
  explicit Pattern(NodePtr n) : node_(std::move(n)) {}
  static Pattern make(Kind k, std::string name, NodePtr l, NodePtr r);
  NodePtr node_;
};

/// Structural match of a ground formula against a pattern. Returns the unique
/// binding b with instantiate(p, b) == f, or nullopt. Note: when two distinct
/// metavariables are bound to equal formulas, distinct bindings can
/// instantiate to the same formula; the one returned maps each metavariable
/// to the subtree it actually faced.
std::optional<Binding> match(const Pattern& p, const Formula& f);

/// Homomorphic replacement of metavariables. Throws std::invalid_argument if
/// the binding misses a metavariable of the pattern.
Formula instantiate(const Pattern& p, const Binding& b);

}  // namespace luka
