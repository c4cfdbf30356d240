#ifndef HRD_FLOORPLAN_HPP
#define HRD_FLOORPLAN_HPP

#include "hrd/permutation.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hrd {

/// Axis-aligned room in grid units. Origin top-left, y grows downward.
struct Room {
  int id;
  int x1, y1, x2, y2;

  friend bool operator==(const Room &, const Room &) = default;
};

/**
 * A tiling of [0,width] x [0,height] by rooms, every interior junction a T.
 *
 * The type is a plain value; `validate` decides whether it is actually a
 * mosaic floorplan. Operations that need a valid floorplan throw
 * InvalidFloorplan otherwise. Room ids are arbitrary; everything with
 * semantic meaning is expressed through deletion-order labels.
 */
struct MosaicFloorplan {
  int width = 1;
  int height = 1;
  std::vector<Room> rooms;

  int size() const { return static_cast<int>(rooms.size()); }
  friend bool operator==(const MosaicFloorplan &,
                         const MosaicFloorplan &) = default;
};

enum class Corner { TopLeft, BottomLeft, TopRight, BottomRight };

struct ValidationIssue {
  int room = -1;  ///< index into rooms, -1 when not room-specific
  int other = -1; ///< second room involved, if any
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  explicit operator bool() const { return ok(); }
  std::string describe() const;
};

class InvalidFloorplan : public std::invalid_argument {
public:
  explicit InvalidFloorplan(const std::string &what)
      : std::invalid_argument(what) {}
};

ValidationReport validate(const MosaicFloorplan &f);
void require_valid(const MosaicFloorplan &f);

/// Replaces coordinates by the ranks of the distinct wall positions.
MosaicFloorplan canonicalize(const MosaicFloorplan &f);

/// Mirror images and the quarter turns used for symmetry checks.
MosaicFloorplan flip_horizontal(const MosaicFloorplan &f);
MosaicFloorplan flip_vertical(const MosaicFloorplan &f);
MosaicFloorplan transpose(const MosaicFloorplan &f);
MosaicFloorplan rotate_half_turn(const MosaicFloorplan &f);

/// Removes the room sitting in corner `c` by sliding one of its inner
/// edges to the bounding rectangle. For the top-left room: when the
/// junction at its bottom-right corner is '-|' the bottom edge moves up,
/// when it is '_|_' the right edge moves left. Other corners mirror this.
MosaicFloorplan delete_corner(const MosaicFloorplan &f, Corner c);

/// Room ids in the order repeated deletions at `c` remove them.
std::vector<int> deletion_order(const MosaicFloorplan &f, Corner c);

/// Room id -> label in top-left deletion order (1..n).
std::map<int, int> top_left_labels(const MosaicFloorplan &f);

/// Copy with each room id replaced by its top-left deletion label.
MosaicFloorplan relabel_by_deletion_order(const MosaicFloorplan &f);

/// Top-left deletion labels read in bottom-left deletion order (the
/// Abe-label). Always a Baxter permutation.
Permutation fp2bp(const MosaicFloorplan &f);

/// A floorplan whose Abe-label is p, built by inserting rooms at the
/// bottom-left corner in reverse reading order. Room ids are the
/// top-left deletion labels.
MosaicFloorplan bp2fp(const Permutation &p);

enum class Side { Top, Left, Right, Bottom };

struct Segment {
  bool horizontal;
  int coordinate; ///< y for horizontal segments, x for vertical ones
  int from, to;

  friend auto operator<=>(const Segment &, const Segment &) = default;
};

struct SegRoomRelation {
  int segment; ///< index into SegRoomRelations::segments
  int room;    ///< top-left deletion label
  Side side;   ///< the segment supports the room from this side

  friend auto operator<=>(const SegRoomRelation &,
                          const SegRoomRelation &) = default;
};

struct SegRoomRelations {
  std::vector<Segment> segments; ///< maximal segments on the canonical grid
  std::vector<SegRoomRelation> relations;
};

SegRoomRelations seg_room_relations(const MosaicFloorplan &f);

/// Same seg-room structure up to relabeling; decided by comparing Abe-labels.
bool equivalent(const MosaicFloorplan &a, const MosaicFloorplan &b);

/// Every set of rooms whose union is a rectangle, as sorted top-left
/// deletion labels. Sets are listed in lexicographic order.
std::vector<std::vector<int>> enveloping_rectangles(const MosaicFloorplan &f);

/// Replaces room `host` of `parent` by a scaled copy of `child` for each
/// entry of `children`. Inner walls land on fresh grid lines, so no '+'
/// junction can appear. The result is canonical, ids renumbered 1..n in
/// deletion order.
MosaicFloorplan embed(const MosaicFloorplan &parent,
                      const std::map<int, MosaicFloorplan> &children);

// Text formats.

/// "W H n" followed by n lines "id x1 y1 x2 y2"; blank lines and "#"
/// comments are skipped. Rejects invalid floorplans with a line-precise
/// diagnostic.
MosaicFloorplan parse_floorplan(std::string_view text);
std::string format_floorplan(const MosaicFloorplan &f);
/// Box drawing on the canonical grid with ids at room centres.
std::string render_ascii(const MosaicFloorplan &f);

} // namespace hrd

#endif
