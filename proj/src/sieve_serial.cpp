#include "trident/sieve.hpp"

namespace trident {

std::vector<SieveRecord> sieve_grid_serial(const SieveConfig& cfg) {
  std::vector<SieveRecord> out;
  for (const auto& [u, v] : enumerate_cells(cfg)) out.push_back(sieve_cell(u, v, cfg));
  return out;
}

}  // namespace trident
