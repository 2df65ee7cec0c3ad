#include "luka/piecewise.hpp"

#include <stdexcept>

namespace luka {

namespace {

Rat seg_val(const PLFunc& f, std::size_t seg, const Rat& x) {
  // f.xs[seg] <= x <= f.xs[seg+1]
  if (x == f.xs[seg]) return f.ys[seg];
  if (x == f.xs[seg + 1]) return f.ys[seg + 1];
  const Rat t = (x - f.xs[seg]) / (f.xs[seg + 1] - f.xs[seg]);
  return f.ys[seg] + (f.ys[seg + 1] - f.ys[seg]) * t;
}

class Builder {
 public:
  void push(const Rat& x, const Rat& y) {
    const auto n = f.xs.size();
    if (n > 0 && f.xs.back() == x) return;
    if (n >= 2) {
      // drop the middle of three collinear points; keeps breakpoint lists
      // from growing along long conjunction chains
      const Rat& x1 = f.xs[n - 2];
      const Rat& y1 = f.ys[n - 2];
      const Rat& x2 = f.xs[n - 1];
      const Rat& y2 = f.ys[n - 1];
      if ((y2 - y1) * (x - x2) == (y - y2) * (x2 - x1)) {
        f.xs.pop_back();
        f.ys.pop_back();
      }
    }
    f.xs.push_back(x);
    f.ys.push_back(y);
  }
  PLFunc f;
};

// a and b resampled on the merged breakpoint grid, combined pointwise by an
// affine map, then clamped; clamp-threshold crossings become new breakpoints,
// so the result is again continuous piecewise linear. Linear time.
PLFunc combine_clamped(const PLFunc& a, const PLFunc& b, const Rat& scale_a,
                       const Rat& scale_b, const Rat& shift, const Rat& clamp,
                       bool clamp_below) {
  std::vector<Rat> merged;
  merged.reserve(a.xs.size() + b.xs.size());
  std::size_t i = 0, j = 0;
  while (i < a.xs.size() || j < b.xs.size()) {
    Rat x;
    if (i >= a.xs.size())
      x = b.xs[j];
    else if (j >= b.xs.size())
      x = a.xs[i];
    else
      x = min(a.xs[i], b.xs[j]);
    while (i < a.xs.size() && a.xs[i] == x) ++i;
    while (j < b.xs.size() && b.xs[j] == x) ++j;
    merged.push_back(x);
  }

  std::vector<Rat> raw(merged.size());
  std::size_t sa = 0, sb = 0;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    const Rat& x = merged[k];
    while (sa + 2 < a.xs.size() && a.xs[sa + 1] < x) ++sa;
    while (sb + 2 < b.xs.size() && b.xs[sb + 1] < x) ++sb;
    raw[k] = seg_val(a, sa, x) * scale_a + seg_val(b, sb, x) * scale_b + shift;
  }

  auto clipped = [&](const Rat& r) {
    if (clamp_below) return r < clamp ? clamp : r;
    return r > clamp ? clamp : r;
  };
  auto out_of_range = [&](const Rat& r) {
    return clamp_below ? r < clamp : r > clamp;
  };

  Builder out;
  out.push(merged[0], clipped(raw[0]));
  for (std::size_t k = 1; k < merged.size(); ++k) {
    if (out_of_range(raw[k - 1]) != out_of_range(raw[k]) && raw[k - 1] != raw[k]) {
      const Rat cross =
          merged[k - 1] + (merged[k] - merged[k - 1]) * (clamp - raw[k - 1]) / (raw[k] - raw[k - 1]);
      if (cross > merged[k - 1] && cross < merged[k]) out.push(cross, clamp);
    }
    out.push(merged[k], clipped(raw[k]));
  }
  if (out.f.xs.size() == 1) {  // degenerate guard; [0,1] always has two ends
    out.f.xs.push_back(Rat(1));
    out.f.ys.push_back(out.f.ys[0]);
  }
  return out.f;
}

}  // namespace

Rat PLFunc::at(const Rat& x) const {
  if (x < xs.front() || x > xs.back())
    throw std::invalid_argument("PLFunc evaluated outside [0,1]");
  std::size_t lo = 0, hi = xs.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (xs[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  return seg_val(*this, lo, x);
}

std::pair<Rat, Rat> PLFunc::minimum() const {
  Rat best = ys[0], arg = xs[0];
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (ys[i] < best) {
      best = ys[i];
      arg = xs[i];
    }
  }
  return {best, arg};
}

std::pair<Rat, Rat> PLFunc::maximum() const {
  Rat best = ys[0], arg = xs[0];
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (ys[i] > best) {
      best = ys[i];
      arg = xs[i];
    }
  }
  return {best, arg};
}

PLFunc pl_neg(const PLFunc& a) {
  PLFunc out = a;
  for (auto& y : out.ys) y = Rat(1) - y;
  return out;
}

PLFunc pl_conj(const PLFunc& a, const PLFunc& b) {
  return combine_clamped(a, b, Rat(1), Rat(1), Rat(-1), Rat(0), /*clamp_below=*/true);
}

PLFunc pl_implies(const PLFunc& a, const PLFunc& b) {
  return combine_clamped(a, b, Rat(-1), Rat(1), Rat(1), Rat(1), /*clamp_below=*/false);
}

PLFunc pl_eval(const Formula& f, const std::string& var) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return PLFunc::constant(Rat(0));
    case Formula::Kind::Prop:
      if (f.prop_name() != var)
        throw std::invalid_argument("pl_eval: unexpected variable '" + f.prop_name() + "'");
      return PLFunc::identity();
    case Formula::Kind::Not:
      return pl_neg(pl_eval(f.sub(), var));
    case Formula::Kind::And:
      return pl_conj(pl_eval(f.left(), var), pl_eval(f.right(), var));
    case Formula::Kind::Implies:
      return pl_implies(pl_eval(f.left(), var), pl_eval(f.right(), var));
  }
  throw std::logic_error("unreachable");
}

}  // namespace luka
