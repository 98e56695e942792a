#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace muw {

struct search_stats {
  std::uint64_t subset_states = 0;  // distinct subsets stored
  std::uint64_t peak_frontier = 0;  // largest BFS layer
  std::uint64_t depth_reached = 0;  // deepest completed BFS layer
  double elapsed_ms = 0.0;
};

/// A search or enumeration ran past its budget. Carries whatever was
/// measured up to that point; no answer is implied.
class resource_limit_error : public std::runtime_error {
public:
  resource_limit_error(const std::string& what, search_stats partial = {})
      : std::runtime_error(what), stats_(partial) {}

  const search_stats& stats() const noexcept { return stats_; }

private:
  search_stats stats_;
};

} // namespace muw
