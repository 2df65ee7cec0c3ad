#include "luka/valuation.hpp"

#include "luka/formula.hpp"

namespace luka {

void Valuation::set(const std::string& name, const Rat& v) {
  if (!valid_prop_name(name))
    throw std::invalid_argument("invalid proposition name: '" + name + "'");
  if (v < Rat(0) || v > Rat(1))
    throw std::invalid_argument("valuation value out of [0,1]: " + name + "=" + v.str());
  values_[name] = v;
}

const Rat& Valuation::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw EvalError("unbound proposition '" + name + "'");
  return it->second;
}

std::string Valuation::str() const {
  std::string out;
  for (const auto& [name, v] : values_) {
    if (!out.empty()) out += ',';
    out += name + "=" + v.str();
  }
  return out;
}

Valuation Valuation::parse(const std::string& text) {
  Valuation out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected name=num/den, got '" + item + "'");
    out.set(item.substr(0, eq), Rat::parse(item.substr(eq + 1)));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace luka
