#pragma once

#include <cstdint>

#include "checkers/board.hpp"

namespace checkers {

// floor(sqrt(v)) and ceil(sqrt(v)), exact for every 64-bit input below 2^63.
std::uint64_t isqrt(std::uint64_t v);
std::uint64_t ceil_sqrt(std::uint64_t v);

// Lengths of the three parts of the explicit move function:
// s1 = m(m+3)/2, s2 = (n-m)(m+1), s3 = m(m+1)/2. Requires n >= m.
struct PartLengths {
  std::int64_t s1;
  std::int64_t s2;
  std::int64_t s3;
};

PartLengths boundaries(const GameSpec& spec);

// Section locators. alpha covers part one, beta/p part two, gamma/q part
// three; every floor of a square root is taken with integer arithmetic.
// Indices are absolute step numbers; out-of-part indices throw OutOfRange.
std::int64_t alpha(std::int64_t i);
std::int64_t beta(std::int64_t i, const GameSpec& spec);
std::int64_t p_offset(std::int64_t i, const GameSpec& spec);
std::int64_t gamma(std::int64_t i, const GameSpec& spec);
std::int64_t q_offset(std::int64_t i, const GameSpec& spec);

enum class Part { One, Two, Three };

struct StepLocator {
  std::int64_t i;
  Part part;
  std::int64_t section;  // alpha, beta or gamma
  std::int64_t offset;   // position of i inside its section, from 1
  std::int64_t t;        // sum of the first i move directions
};

// O(1) random access to step i of the optimal solution whose first move has
// direction d. Immutable after construction. For n < m the answers are those
// of the mirrored game mapped back, and locate() describes the mirrored game.
class ClosedForm {
 public:
  ClosedForm(const GameSpec& spec, int d);

  const GameSpec& spec() const noexcept { return spec_; }
  int d() const noexcept { return d_; }
  std::int64_t length() const noexcept { return spec_.optimal_length(); }

  StepLocator locate(std::int64_t i) const;
  std::int64_t t_of(std::int64_t i) const;
  Position x_of(std::int64_t i) const;

 private:
  std::int64_t base_t(std::int64_t i) const;

  GameSpec spec_;
  int d_;
  bool mirrored_;
  int n_;  // of the game actually evaluated (n_ >= m_)
  int m_;
  PartLengths parts_;
  std::int64_t t_end1_;  // t at step s1
  std::int64_t t_end2_;  // t at step s1 + s2
};

std::int64_t t_of(std::int64_t i, const GameSpec& spec, int d);
Position x_of(std::int64_t i, const GameSpec& spec, int d);

// Whole solution, one O(1) evaluation per step.
Solution sequence(const GameSpec& spec, int d);

}  // namespace checkers
