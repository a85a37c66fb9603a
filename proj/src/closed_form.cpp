#include "checkers/closed_form.hpp"

#include <cmath>
#include <string>

namespace checkers {

namespace {

// (-1)^k by parity.
constexpr std::int64_t neg_pow(std::int64_t k) noexcept { return (k % 2 == 0) ? 1 : -1; }

void require_ordered(const GameSpec& spec) {
  if (spec.n() < spec.m()) {
    throw InvalidSpec("explicit formulas need n >= m; mirror the game first");
  }
}

void require_d(int d) {
  if (d != 1 && d != -1) throw InvalidSpec("first move direction must be +1 or -1");
}

[[noreturn]] void out_of_part(std::int64_t i, const char* part) {
  throw OutOfRange("step " + std::to_string(i) + " is not in " + part);
}

std::int64_t part_one_end(std::int64_t section) { return section * (section + 3) / 2; }

std::int64_t in_part_two(std::int64_t i, const GameSpec& spec) {
  const PartLengths parts = boundaries(spec);
  if (i <= parts.s1 || i > parts.s1 + parts.s2) out_of_part(i, "part two");
  return i - parts.s1;
}

std::int64_t in_part_three(std::int64_t i, const GameSpec& spec) {
  const PartLengths parts = boundaries(spec);
  if (i <= parts.s1 + parts.s2 || i > spec.optimal_length()) out_of_part(i, "part three");
  return i - parts.s1 - parts.s2;
}

std::int64_t beta_local(std::int64_t r, std::int64_t m) { return (r + m) / (m + 1); }

// floor(m + 3/2 - sqrt(m(m+1) - 2r + 9/4)), i.e. floor((2m+3 - sqrt(D))/2)
// with D = 4m(m+1) - 8r + 9. sqrt(D) <= T exactly when ceil(sqrt(D)) <= T.
std::int64_t gamma_local(std::int64_t r, std::int64_t m) {
  const auto disc = static_cast<std::uint64_t>(4 * m * (m + 1) - 8 * r + 9);
  return (2 * m + 3 - static_cast<std::int64_t>(ceil_sqrt(disc))) / 2;
}

std::int64_t q_local(std::int64_t r, std::int64_t m, std::int64_t g) {
  return r - (g - 1) * (m + 1) + g * (g - 1) / 2;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t v) {
  const std::uint64_t r = isqrt(v);
  return r * r == v ? r : r + 1;
}

PartLengths boundaries(const GameSpec& spec) {
  require_ordered(spec);
  const std::int64_t n = spec.n();
  const std::int64_t m = spec.m();
  return {m * (m + 3) / 2, (n - m) * (m + 1), m * (m + 1) / 2};
}

std::int64_t alpha(std::int64_t i) {
  if (i < 1) out_of_part(i, "part one");
  const std::uint64_t root = isqrt(8 * static_cast<std::uint64_t>(i) + 1);
  return (static_cast<std::int64_t>(root) - 1) / 2;
}

std::int64_t beta(std::int64_t i, const GameSpec& spec) {
  return beta_local(in_part_two(i, spec), spec.m());
}

std::int64_t p_offset(std::int64_t i, const GameSpec& spec) {
  const std::int64_t r = in_part_two(i, spec);
  const std::int64_t m = spec.m();
  return r - (beta_local(r, m) - 1) * (m + 1);
}

std::int64_t gamma(std::int64_t i, const GameSpec& spec) {
  return gamma_local(in_part_three(i, spec), spec.m());
}

std::int64_t q_offset(std::int64_t i, const GameSpec& spec) {
  const std::int64_t r = in_part_three(i, spec);
  const std::int64_t m = spec.m();
  return q_local(r, m, gamma_local(r, m));
}

ClosedForm::ClosedForm(const GameSpec& spec, int d)
    : spec_(spec),
      d_(d),
      mirrored_(spec.n() < spec.m()),
      n_(mirrored_ ? spec.m() : spec.n()),
      m_(mirrored_ ? spec.n() : spec.m()),
      parts_(boundaries(GameSpec(n_, m_))),
      t_end1_(0),
      t_end2_(0) {
  require_d(d);
  t_end1_ = base_t(parts_.s1);
  t_end2_ = parts_.s2 > 0 ? base_t(parts_.s1 + parts_.s2) : t_end1_;
}

// Sum of the first i directions of the game (n_, m_) with first direction
// d_ (negated when mirrored). Part two's slides are always rightward, so
// beta is not scaled by the direction.
std::int64_t ClosedForm::base_t(std::int64_t i) const {
  const std::int64_t d = mirrored_ ? -d_ : d_;
  const std::int64_t n = n_;
  const std::int64_t m = m_;
  if (i <= parts_.s1) {
    const std::int64_t a = alpha(i);
    return d * neg_pow(a) * (2 * i - a * (a + 2));
  }
  if (i <= parts_.s1 + parts_.s2) {
    const std::int64_t r = i - parts_.s1;
    const std::int64_t b = beta_local(r, m);
    const std::int64_t p = r - (b - 1) * (m + 1);
    return t_end1_ + b + d * neg_pow(m + b) * (2 * p - 2 - m * (1 + neg_pow(b)));
  }
  const std::int64_t r = i - parts_.s1 - parts_.s2;
  const std::int64_t g = gamma_local(r, m);
  const std::int64_t q = q_local(r, m, g);
  return t_end2_ + d * (neg_pow(n + g) * (g + 2 * q - m - 2) - m * neg_pow(n));
}

StepLocator ClosedForm::locate(std::int64_t i) const {
  if (i < 1 || i > length()) {
    throw OutOfRange("step " + std::to_string(i) + " outside 1.." + std::to_string(length()));
  }
  StepLocator loc{i, Part::One, 0, 0, t_of(i)};
  const std::int64_t m = m_;
  if (i <= parts_.s1) {
    loc.section = alpha(i);
    loc.offset = i - part_one_end(loc.section - 1);
  } else if (i <= parts_.s1 + parts_.s2) {
    const std::int64_t r = i - parts_.s1;
    loc.part = Part::Two;
    loc.section = beta_local(r, m);
    loc.offset = r - (loc.section - 1) * (m + 1);
  } else {
    const std::int64_t r = i - parts_.s1 - parts_.s2;
    loc.part = Part::Three;
    loc.section = gamma_local(r, m);
    loc.offset = q_local(r, m, loc.section);
  }
  return loc;
}

std::int64_t ClosedForm::t_of(std::int64_t i) const {
  return spec_.n() + 1 - x_of(i);
}

Position ClosedForm::x_of(std::int64_t i) const {
  if (i < 1 || i > length()) {
    throw OutOfRange("step " + std::to_string(i) + " outside 1.." + std::to_string(length()));
  }
  const std::int64_t x = n_ + 1 - base_t(i);
  if (mirrored_) return static_cast<Position>(spec_.board_len() + 1 - x);
  return static_cast<Position>(x);
}

std::int64_t t_of(std::int64_t i, const GameSpec& spec, int d) {
  return ClosedForm(spec, d).t_of(i);
}

Position x_of(std::int64_t i, const GameSpec& spec, int d) {
  return ClosedForm(spec, d).x_of(i);
}

Solution sequence(const GameSpec& spec, int d) {
  const ClosedForm form(spec, d);
  Solution out{spec, d, {}};
  out.steps.resize(static_cast<std::size_t>(form.length()));
  for (std::int64_t i = 1; i <= form.length(); ++i) {
    out.steps[static_cast<std::size_t>(i - 1)] = form.x_of(i);
  }
  return out;
}

}  // namespace checkers
