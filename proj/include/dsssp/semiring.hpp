#ifndef DSSSP_SEMIRING_HPP_
#define DSSSP_SEMIRING_HPP_

#include <algorithm>
#include <concepts>

#include "dsssp/types.hpp"

namespace dsssp {

// (add, add_identity, multiply). add must be associative and commutative.
template <typename S>
concept Semiring = requires(Weight a, Weight b) {
  { S::add(a, b) } -> std::convertible_to<Weight>;
  { S::multiply(a, b) } -> std::convertible_to<Weight>;
  { S::add_identity } -> std::convertible_to<Weight>;
};

// Shortest-path semiring; the additive identity is +inf.
struct MinPlus {
  static constexpr Weight add_identity = kInfinity;
  static constexpr Weight add(Weight a, Weight b) { return std::min(a, b); }
  static constexpr Weight multiply(Weight a, Weight b) { return a + b; }
};

struct PlusTimes {
  static constexpr Weight add_identity = 0.0;
  static constexpr Weight add(Weight a, Weight b) { return a + b; }
  static constexpr Weight multiply(Weight a, Weight b) { return a * b; }
};

// Booleans encoded as 0.0 / 1.0.
struct OrAnd {
  static constexpr Weight add_identity = 0.0;
  static constexpr Weight add(Weight a, Weight b) {
    return (a != 0.0 || b != 0.0) ? 1.0 : 0.0;
  }
  static constexpr Weight multiply(Weight a, Weight b) {
    return (a != 0.0 && b != 0.0) ? 1.0 : 0.0;
  }
};

static_assert(Semiring<MinPlus>);
static_assert(Semiring<PlusTimes>);
static_assert(Semiring<OrAnd>);

}  // namespace dsssp

#endif  // DSSSP_SEMIRING_HPP_
