#include "luka/pattern.hpp"

#include <functional>
#include <stdexcept>

namespace luka {

Pattern Pattern::make(Kind k, std::string name, NodePtr l, NodePtr r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->left = std::move(l);
  n->right = std::move(r);
  return Pattern(std::move(n));
}

Pattern Pattern::bottom() { return make(Kind::Bottom, "", nullptr, nullptr); }

Pattern Pattern::prop(const std::string& name) {
  if (!valid_prop_name(name))
    throw std::invalid_argument("invalid proposition name: '" + name + "'");
  return make(Kind::Prop, name, nullptr, nullptr);
}

Pattern Pattern::metavar(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty metavariable name");
  return make(Kind::Metavar, name, nullptr, nullptr);
}

Pattern Pattern::neg(const Pattern& p) { return make(Kind::Not, "", p.node_, nullptr); }

Pattern Pattern::conj(const Pattern& a, const Pattern& b) {
  return make(Kind::And, "", a.node_, b.node_);
}

Pattern Pattern::implies(const Pattern& a, const Pattern& b) {
  return make(Kind::Implies, "", a.node_, b.node_);
}

Pattern Pattern::strong_or(const Pattern& a, const Pattern& b) {
  return implies(neg(a), b);
}

Pattern Pattern::iff(const Pattern& a, const Pattern& b) {
  return conj(implies(a, b), implies(b, a));
}

Pattern Pattern::lift(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return bottom();
    case Formula::Kind::Prop:
      return prop(f.prop_name());
    case Formula::Kind::Not:
      return neg(lift(f.sub()));
    case Formula::Kind::And:
      return conj(lift(f.left()), lift(f.right()));
    case Formula::Kind::Implies:
      return implies(lift(f.left()), lift(f.right()));
  }
  throw std::logic_error("unreachable");
}

std::set<std::string> Pattern::metavars() const {
  std::set<std::string> out;
  std::function<void(const Pattern&)> walk = [&](const Pattern& p) {
    switch (p.kind()) {
      case Kind::Bottom:
      case Kind::Prop:
        return;
      case Kind::Metavar:
        out.insert(p.name());
        return;
      case Kind::Not:
        walk(p.sub());
        return;
      case Kind::And:
      case Kind::Implies:
        walk(p.left());
        walk(p.right());
        return;
    }
  };
  walk(*this);
  return out;
}

namespace {

bool match_rec(const Pattern& p, const Formula& f, Binding& b) {
  switch (p.kind()) {
    case Pattern::Kind::Metavar: {
      auto it = b.find(p.name());
      if (it == b.end()) {
        b.emplace(p.name(), f);
        return true;
      }
      return it->second == f;
    }
    case Pattern::Kind::Bottom:
      return f.kind() == Formula::Kind::Bottom;
    case Pattern::Kind::Prop:
      return f.kind() == Formula::Kind::Prop && f.prop_name() == p.name();
    case Pattern::Kind::Not:
      return f.kind() == Formula::Kind::Not && match_rec(p.sub(), f.sub(), b);
    case Pattern::Kind::And:
      return f.kind() == Formula::Kind::And && match_rec(p.left(), f.left(), b) &&
             match_rec(p.right(), f.right(), b);
    case Pattern::Kind::Implies:
      return f.kind() == Formula::Kind::Implies && match_rec(p.left(), f.left(), b) &&
             match_rec(p.right(), f.right(), b);
  }
  return false;
}

}  // namespace

std::optional<Binding> match(const Pattern& p, const Formula& f) {
  Binding b;
  if (match_rec(p, f, b)) return b;
  return std::nullopt;
}

Formula instantiate(const Pattern& p, const Binding& b) {
  switch (p.kind()) {
    case Pattern::Kind::Bottom:
      return Formula::bottom();
    case Pattern::Kind::Prop:
      return Formula::prop(p.name());
    case Pattern::Kind::Metavar: {
      auto it = b.find(p.name());
      if (it == b.end())
        throw std::invalid_argument("missing binding for metavariable '" + p.name() + "'");
      return it->second;
    }
    case Pattern::Kind::Not:
      return Formula::neg(instantiate(p.sub(), b));
    case Pattern::Kind::And:
      return Formula::conj(instantiate(p.left(), b), instantiate(p.right(), b));
    case Pattern::Kind::Implies:
      return Formula::implies(instantiate(p.left(), b), instantiate(p.right(), b));
  }
  throw std::logic_error("unreachable");
}

}  // namespace luka
