#pragma once

#include <map>
#include <string>
#include <vector>

#include "luka/rational.hpp"
#include "luka/valuation.hpp"

namespace luka {

/// Affine expression: constant + sum of coefficient * variable. Zero
/// coefficients are never stored.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(Rat constant) : constant_(std::move(constant)) {}
  static LinExpr var(const std::string& name) {
    LinExpr e;
    e.coeffs_[name] = Rat(1);
    return e;
  }

  const Rat& constant() const { return constant_; }
  const std::map<std::string, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(const std::string& name) const;
  bool is_constant() const { return coeffs_.empty(); }

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rat& k);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rat& k) { return a *= k; }
  LinExpr operator-() const;

  Rat value_at(const std::map<std::string, Rat>& point) const;
  Rat value_at(const Valuation& v) const;

  friend bool operator==(const LinExpr& a, const LinExpr& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }

  /// Canonical text, e.g. "p + 2q - 1"; used for keys and diagnostics.
  std::string str() const;

 private:
  Rat constant_;
  std::map<std::string, Rat> coeffs_;
};

enum class Rel { Ge, Gt, Eq };  // expr >= 0, expr > 0, expr = 0

struct Constraint {
  LinExpr expr;
  Rel rel = Rel::Ge;

  bool holds_at(const std::map<std::string, Rat>& point) const;
  std::string str() const;
};

/// One affine piece of a formula's value function: inside the feasible set of
/// `constraints`, eval(f, .) equals `value`.
struct Region {
  std::vector<Constraint> constraints;
  LinExpr value;
};

}  // namespace luka
