#include "popstack/order.hpp"

#include <stdexcept>

namespace popstack {

bool zero_order_leq(const BinaryWord& u, const BinaryWord& v) {
  const auto uz = u.zero_positions();
  const auto vz = v.zero_positions();
  if (vz.size() < uz.size()) {
    throw std::invalid_argument("zero order needs v to have at least as many "
                                "zeros as u (" + u.to_string() + " vs " +
                                v.to_string() + ")");
  }
  for (std::size_t i = 0; i < uz.size(); ++i) {
    if (uz[i] > vz[i]) return false;
  }
  return true;
}

}  // namespace popstack
