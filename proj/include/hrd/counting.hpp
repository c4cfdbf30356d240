#ifndef HRD_COUNTING_HPP
#define HRD_COUNTING_HPP

#include "hrd/census.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <filesystem>
#include <optional>
#include <vector>

namespace hrd {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Counts of skewed generating trees of order k, indexed by leaf count.
 *
 * All vectors are indexed 1..n_max; slot 0 is zero. `a` and `b` count
 * trees whose root is 12 and 21; `composition_sums[l][m]` is the sum of
 * t_{i_1} * ... * t_{i_l} over compositions of m into l positive parts,
 * kept for l = 2..k.
 */
struct CountTable {
  int k = 2;
  std::vector<BigInt> t, a, b;
  std::vector<std::vector<BigInt>> composition_sums;

  int n_max() const { return static_cast<int>(t.size()) - 1; }
};

/// Order-5 count by the four- and five-fold nested loops of the printed
/// dynamic program. O(n^6).
BigInt count_hrd_literal(int n);

/// t_1..t_n of the order-k recurrence with composition sums enumerated
/// directly. Meant for moderate n.
std::vector<BigInt> count_hrd_sequence(int k, int n);
BigInt count_hrd(int k, int n);

/// Same values in O(k n^2): C_l = C_{l-1} * t, extended as t fills in.
/// Asserts a_m = b_m while building.
CountTable count_hrd_fast(int k, int n_max);

inline constexpr int kOracleCap = 9;

/// |{p in S_n : is_hrd(p, k)}| by exhaustive scan.
BigInt oracle_count(int k, int n, bool override_cap = false);

/// I_{k,1..n_max}.
std::vector<BigInt> sequence(int k, int n_max);

/// Checks a table against the recurrence: recomputes b_m from t_m, a_m
/// and the skeleton terms and requires b_m = a_m, and a_m to match its
/// own recurrence.
bool consistent(const CountTable &table);

// Persistent tables, one versioned text file per k, lines "m t_m a_m".

struct MemoOptions {
  std::filesystem::path directory;
  bool enabled = true;
};

/// $HRD_MEMO_DIR, else $XDG_CACHE_HOME/hrd, else $HOME/.cache/hrd.
std::filesystem::path default_memo_directory();
std::filesystem::path memo_path(const std::filesystem::path &dir, int k);

void save_table(const CountTable &table, const std::filesystem::path &file);
/// nullopt when the file is missing, malformed, of another version or k,
/// or fails `consistent`.
std::optional<CountTable> load_table(const std::filesystem::path &file, int k);

/// Loads a stored table covering n_max, or computes (and stores) one.
/// Loaded tables carry t, a and b but no composition sums.
CountTable memoized_table(int k, int n_max, const MemoOptions &options);

} // namespace hrd

#endif
