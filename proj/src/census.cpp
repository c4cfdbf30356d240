#include "hrd/census.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>

namespace hrd {

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<Permutation>> cache;

std::vector<Permutation> scan(int length) {
  std::vector<Permutation> found;
  std::vector<int> values(length);
  std::iota(values.begin(), values.end(), 1);
  do {
    Permutation p(values);
    // is_simple is cheap and rejects most candidates first
    if (is_simple(p) && is_baxter(p))
      found.push_back(std::move(p));
  } while (std::next_permutation(values.begin(), values.end()));
  return found;
}

} // namespace

CensusEntry census_simple_baxter(int length, bool with_list, bool override_cap) {
  if (length < 2)
    throw std::invalid_argument("census length must be at least 2");
  const int cap = override_cap ? kCensusOverrideCap : kCensusCap;
  if (length > cap)
    throw CapExceeded("census length " + std::to_string(length) +
                      " exceeds the cap of " + std::to_string(cap) +
                      (override_cap ? "" : " (an override allows 11)"));

  std::lock_guard lock(cache_mutex);
  auto it = cache.find(length);
  if (it == cache.end()) {
    if (length > kCensusCap)
      std::cerr << "warning: census of length " << length
                << " scans " << length << "! permutations; expect minutes\n";
    it = cache.emplace(length, scan(length)).first;
  }
  CensusEntry entry{length, it->second.size(), {}};
  if (with_list)
    entry.permutations = it->second;
  return entry;
}

std::uint64_t skeleton_count(int length, bool override_cap) {
  if (length < 2)
    return 0;
  return census_simple_baxter(length, false, override_cap).count;
}

} // namespace hrd
