#include "luka/formula.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace luka {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool valid_prop_name(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  if (!alpha(name[0])) return false;
  for (char c : name)
    if (!alnum(c)) return false;
  return true;
}

Formula Formula::make(Kind k, std::string name, NodePtr l, NodePtr r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  switch (k) {
    case Kind::Bottom:
      n->hash = mix(1, 0);
      break;
    case Kind::Prop:
      n->hash = mix(2, std::hash<std::string>{}(n->name));
      break;
    case Kind::Not:
      n->size = 1 + n->left->size;
      n->depth = 1 + n->left->depth;
      n->hash = mix(3, n->left->hash);
      break;
    case Kind::And:
    case Kind::Implies:
      n->size = 1 + n->left->size + n->right->size;
      n->depth = 1 + std::max(n->left->depth, n->right->depth);
      n->hash = mix(k == Kind::And ? 4 : 5, mix(n->left->hash, n->right->hash));
      break;
  }
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  static const Formula f = make(Kind::Bottom, "", nullptr, nullptr);
  return f;
}

Formula Formula::prop(const std::string& name) {
  if (!valid_prop_name(name))
    throw std::invalid_argument("invalid proposition name: '" + name + "'");
  return make(Kind::Prop, name, nullptr, nullptr);
}

Formula Formula::neg(const Formula& f) {
  return make(Kind::Not, "", f.node_, nullptr);
}

Formula Formula::conj(const Formula& a, const Formula& b) {
  return make(Kind::And, "", a.node_, b.node_);
}

Formula Formula::implies(const Formula& a, const Formula& b) {
  return make(Kind::Implies, "", a.node_, b.node_);
}

Formula Formula::strong_or(const Formula& a, const Formula& b) {
  return implies(neg(a), b);
}

Formula Formula::weak_and(const Formula& a, const Formula& b) {
  return conj(a, implies(a, b));
}

Formula Formula::weak_or(const Formula& a, const Formula& b) {
  return weak_and(implies(implies(a, b), b), implies(implies(b, a), a));
}

Formula Formula::iff(const Formula& a, const Formula& b) {
  return conj(implies(a, b), implies(b, a));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Prop:
      return a.prop_name() == b.prop_name();
    case Formula::Kind::Not:
      return a.sub() == b.sub();
    case Formula::Kind::And:
    case Formula::Kind::Implies:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  return a.str() < b.str();
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    switch (f.kind()) {
      case Kind::Bottom:
        return;
      case Kind::Prop:
        out.insert(f.prop_name());
        return;
      case Kind::Not:
        walk(f.sub());
        return;
      case Kind::And:
      case Kind::Implies:
        walk(f.left());
        walk(f.right());
        return;
    }
  };
  walk(*this);
  return out;
}

std::vector<Formula> Formula::subformulas() const {
  std::vector<Formula> out;
  std::unordered_set<std::size_t> seen_hash;
  auto seen = [&](const Formula& f) {
    if (seen_hash.count(f.hash())) {
      for (const auto& g : out)
        if (g == f) return true;
    }
    return false;
  };
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (seen(f)) return;
    seen_hash.insert(f.hash());
    out.push_back(f);
    switch (f.kind()) {
      case Kind::Bottom:
      case Kind::Prop:
        return;
      case Kind::Not:
        walk(f.sub());
        return;
      case Kind::And:
      case Kind::Implies:
        walk(f.left());
        walk(f.right());
        return;
    }
  };
  walk(*this);
  return out;
}

namespace {

// Precedence levels for printing: atom 4, ! 3, & 2, -> 1. '&' associates
// left, '->' associates right; a child below the required level gets parens.
void print_rec(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      out += '0';
      return;
    case Formula::Kind::Prop:
      out += f.prop_name();
      return;
    case Formula::Kind::Not:
      out += '!';
      print_rec(f.sub(), 3, out);
      return;
    case Formula::Kind::And: {
      const bool paren = min_prec > 2;
      if (paren) out += '(';
      print_rec(f.left(), 2, out);
      out += " & ";
      print_rec(f.right(), 3, out);
      if (paren) out += ')';
      return;
    }
    case Formula::Kind::Implies: {
      const bool paren = min_prec > 1;
      if (paren) out += '(';
      print_rec(f.left(), 2, out);
      out += " -> ";
      print_rec(f.right(), 1, out);
      if (paren) out += ')';
      return;
    }
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print_rec(*this, 1, out);
  return out;
}

Formula power(const Formula& f, int n) {
  if (n < 1) throw std::invalid_argument("power requires n >= 1");
  Formula acc = f;
  for (int i = 1; i < n; ++i) acc = Formula::conj(acc, f);
  return acc;
}

}  // namespace luka
