#ifndef HRD_LOWERBOUND_HPP
#define HRD_LOWERBOUND_HPP

#include "hrd/counting.hpp"
#include "hrd/floorplan.hpp"
#include "hrd/permutation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hrd {

/// Places where a new maximum can go without leaving HRD_k. Positions
/// are insertion indices: 0 is before the first entry, n after the last.
enum class Site { BeforeFirst, AfterLast, BeforeMax, AfterMax };

int site_position(const Permutation &p, Site site);

/// The distinct positions among the four sites, ascending. Three or four
/// for n >= 2; a singleton has only {0, 1}.
std::vector<int> safe_sites(const Permutation &p);

/// Exactly three distinct sites for n >= 2: "after last" is dropped when
/// all four differ.
std::vector<int> canonical_sites(const Permutation &p);

/// Inserts n+1 at `position`, which must be a safe site.
Permutation insert_max(const Permutation &p, int position);

struct InsertionTrace {
  Permutation seed;
  std::vector<int> choices; ///< insertion position per inserted maximum
  Permutation current;
};

struct FamilyReport {
  Permutation seed;
  int k = 0;
  int n = 0;
  std::uint64_t traces = 0;
  std::uint64_t distinct = 0;
  BigInt expected; ///< 3^(n-k)
  bool all_baxter = true;
  bool all_hrd_k = true;
  bool none_hrd_below = true; ///< no member is HRD_(k-1)
  std::vector<InsertionTrace> samples; ///< first traces in choice order
};

/// Grows `seed` (simple Baxter of length k) to length n along every
/// choice vector of canonical sites, or of all safe sites when
/// `all_sites` is set, and checks every result.
FamilyReport insertion_family(int k, int n, const Permutation &seed,
                              bool all_sites = false,
                              std::size_t sample_limit = 3);

/// "seed=<perm> k=<k> n=<n> family=<count> expected=<3^{n-k}>
/// all_baxter=<bool> all_hrd_k=<bool> none_hrd_k-1=<bool>"
std::string format_report(const FamilyReport &report);

/**
 * Two-room refinement around one T-junction.
 *
 * The vertical segment at canonical x = `column` that covers rows
 * [from, to] is cut between rows `row` and `row + 1`. Its lower part moves
 * half a unit sideways (`shift` = +1 right, -1 left) and a new horizontal
 * wall joins the far sides of the two rooms flanking the cut. Both rooms
 * split, so the floorplan gains two rooms. Returns nullopt when the
 * segment or cut does not exist or the result is not a mosaic floorplan.
 */
std::optional<MosaicFloorplan> cut_and_shift(const MosaicFloorplan &f,
                                             const Segment &segment, int row,
                                             int shift);

struct GrowResult {
  MosaicFloorplan floorplan;
  bool used_fallback = false;
  std::string move; ///< which refinement produced the result
};

/// An irreducible floorplan with two more rooms. Tries the cut on the
/// leftmost vertical segment touching the bounding box first, then every
/// cut_and_shift refinement of every segment, then two rooms inserted at
/// corners (the inverse of two corner deletions). The result is verified
/// with is_ihrd before it is returned.
GrowResult grow_ihrd_traced(const MosaicFloorplan &f);
MosaicFloorplan grow_ihrd(const MosaicFloorplan &f);

} // namespace hrd

#endif
