#include "luka/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace luka {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto digits_ok = [](const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  size_t num_from = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!digits_ok(num, num_from) || !digits_ok(den, 0))
    throw std::invalid_argument("malformed rational literal: " + text);
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + text);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace luka
