#include "luka/linear.hpp"

namespace luka {

Rat LinExpr::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant_ += o.constant_;
  for (const auto& [name, c] : o.coeffs_) {
    auto it = coeffs_.find(name);
    if (it == coeffs_.end()) {
      coeffs_.emplace(name, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  return *this += -o;
}

LinExpr& LinExpr::operator*=(const Rat& k) {
  if (k.is_zero()) {
    coeffs_.clear();
    constant_ = Rat(0);
    return *this;
  }
  constant_ *= k;
  for (auto& [name, c] : coeffs_) c *= k;
  return *this;
}

LinExpr LinExpr::operator-() const {
  LinExpr out(*this);
  out *= Rat(-1);
  return out;
}

Rat LinExpr::value_at(const std::map<std::string, Rat>& point) const {
  Rat out = constant_;
  for (const auto& [name, c] : coeffs_) {
    auto it = point.find(name);
    if (it == point.end()) throw EvalError("point misses variable '" + name + "'");
    out += c * it->second;
  }
  return out;
}

Rat LinExpr::value_at(const Valuation& v) const {
  Rat out = constant_;
  for (const auto& [name, c] : coeffs_) out += c * v.at(name);
  return out;
}

std::string LinExpr::str() const {
  std::string out;
  for (const auto& [name, c] : coeffs_) {
    if (out.empty()) {
      if (c == Rat(1)) {
        out = name;
      } else if (c == Rat(-1)) {
        out = "-" + name;
      } else {
        out = c.str() + name;
      }
      continue;
    }
    if (c.sign() > 0) {
      out += " + " + (c == Rat(1) ? name : c.str() + name);
    } else {
      const Rat a = -c;
      out += " - " + (a == Rat(1) ? name : a.str() + name);
    }
  }
  if (out.empty()) return constant_.str();
  if (constant_.sign() > 0) out += " + " + constant_.str();
  if (constant_.sign() < 0) out += " - " + (-constant_).str();
  return out;
}

bool Constraint::holds_at(const std::map<std::string, Rat>& point) const {
  const Rat v = expr.value_at(point);
  switch (rel) {
    case Rel::Ge:
      return v >= Rat(0);
    case Rel::Gt:
      return v > Rat(0);
    case Rel::Eq:
      return v == Rat(0);
  }
  return false;
}

std::string Constraint::str() const {
  switch (rel) {
    case Rel::Ge:
      return expr.str() + " >= 0";
    case Rel::Gt:
      return expr.str() + " > 0";
    case Rel::Eq:
      return expr.str() + " = 0";
  }
  return "";
}

}  // namespace luka
