#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "luka/rational.hpp"

namespace luka {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite map from proposition names to values in [0,1]. Bottom is not a key;
/// its value is fixed at 0 by the semantics.
class Valuation {
 public:
  Valuation() = default;

  /// Throws std::invalid_argument if v is outside [0,1] or the name is not a
  /// valid proposition.
  void set(const std::string& name, const Rat& v);

  bool contains(const std::string& name) const { return values_.count(name) != 0; }
  /// Throws EvalError for unbound names.
  const Rat& at(const std::string& name) const;

  const std::map<std::string, Rat>& entries() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }

  /// "p=1/2,q=1"; names in lexicographic order.
  std::string str() const;
  /// Parses the CLI `--val` form. Throws std::invalid_argument on bad input.
  static Valuation parse(const std::string& text);

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.values_ == b.values_;
  }

 private:
  std::map<std::string, Rat> values_;
};

}  // namespace luka
