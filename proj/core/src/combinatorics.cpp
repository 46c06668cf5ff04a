#include "bispec/combinatorics.hpp"

namespace bispec {

std::size_t count_compositions(std::size_t total, std::size_t max_part) {
  // c[t] = number of compositions of t with parts <= max_part
  std::vector<std::size_t> c(total + 1, 0);
  c[0] = 1;
  for (std::size_t t = 1; t <= total; ++t) {
    for (std::size_t part = 1; part <= max_part && part <= t; ++part) {
      c[t] += c[t - part];
    }
  }
  return c[total];
}

}  // namespace bispec
