#pragma once

#include <cstddef>
#include <vector>

namespace bispec {

/// Enumerates every composition (ordered tuple of positive parts) of `total`
/// whose parts are all <= max_part, invoking fn(parts) for each one.
///
/// total == 0 yields the single empty composition.  Order is depth-first with
/// parts tried in increasing size, which is deterministic.
template <typename Fn>
void for_each_composition(std::size_t total, std::size_t max_part, Fn&& fn) {
  std::vector<std::size_t> parts;
  auto descend = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      fn(const_cast<const std::vector<std::size_t>&>(parts));
      return;
    }
    const std::size_t limit = remaining < max_part ? remaining : max_part;
    for (std::size_t part = 1; part <= limit; ++part) {
      parts.push_back(part);
      self(self, remaining - part);
      parts.pop_back();
    }
  };
  descend(descend, total);
}

/// Number of compositions of `total` with parts <= max_part.
std::size_t count_compositions(std::size_t total, std::size_t max_part);

}  // namespace bispec
