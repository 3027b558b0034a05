#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace xconv {

/// Outcome of an exact search: optimum size, a witness (indices into the
/// caller's ground set, ascending), and the number of search nodes visited.
struct SolveResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;
  std::uint64_t explored = 0;
};

}  // namespace xconv
