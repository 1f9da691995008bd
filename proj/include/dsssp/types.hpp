#ifndef DSSSP_TYPES_HPP_
#define DSSSP_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dsssp {

// Vertex ids are dense and 0-based.
using Index = std::uint32_t;
using Weight = double;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();

// Operand shapes disagree (vector lengths, matrix order).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A zero, negative or non-finite edge weight was supplied.
class InvalidWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dsssp

#endif  // DSSSP_TYPES_HPP_
