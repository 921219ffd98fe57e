#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fillorder {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0xffffffffu;

// ceil(log2(n)), never below 1 so that sketch counts stay positive on tiny inputs.
inline std::uint32_t ceil_log2(std::uint64_t n) {
  std::uint32_t r = 0;
  while (r < 64 && (std::uint64_t{1} << r) < n) ++r;
  return r == 0 ? 1 : r;
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EstimatorDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fillorder
