#ifndef HRD_CENSUS_HPP
#define HRD_CENSUS_HPP

#include "hrd/permutation.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hrd {

/// Thrown when a request exceeds an exhaustive-search cap.
class CapExceeded : public std::out_of_range {
public:
  explicit CapExceeded(const std::string &what) : std::out_of_range(what) {}
};

inline constexpr int kCensusCap = 10;
inline constexpr int kCensusOverrideCap = 11;

/// Simple Baxter permutations of one length, i.e. the irreducible
/// skeletons of that size.
struct CensusEntry {
  int length = 0;
  std::uint64_t count = 0;
  std::vector<Permutation> permutations; ///< lexicographic; empty unless requested
};

/// Exhaustive filter of S_l. Lengths above kCensusCap need `override_cap`
/// and are still limited to kCensusOverrideCap. Results are cached per
/// process.
CensusEntry census_simple_baxter(int length, bool with_list = false,
                                 bool override_cap = false);

/// s_l, the count alone. Lengths below 2 give 0: singletons never act as
/// skeletons.
std::uint64_t skeleton_count(int length, bool override_cap = false);

} // namespace hrd

#endif
