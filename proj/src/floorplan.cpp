#include "hrd/floorplan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace hrd {

std::string ValidationReport::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i)
      os << "; ";
    os << issues[i].message;
  }
  return os.str();
}

ValidationReport validate(const MosaicFloorplan &f) {
  ValidationReport report;
  auto issue = [&](int room, int other, std::string msg) {
    report.issues.push_back({room, other, std::move(msg)});
  };

  if (f.width <= 0 || f.height <= 0)
    issue(-1, -1, "bounding rectangle must have positive width and height");
  if (f.rooms.empty())
    issue(-1, -1, "floorplan has no rooms");
  if (!report.ok())
    return report;

  const int n = f.size();
  std::set<int> ids;
  long long area = 0;
  bool geometry_ok = true;
  for (int i = 0; i < n; ++i) {
    const Room &r = f.rooms[i];
    if (!ids.insert(r.id).second)
      issue(i, -1, "duplicate room id " + std::to_string(r.id));
    if (r.x1 >= r.x2 || r.y1 >= r.y2) {
      issue(i, -1, "room " + std::to_string(r.id) + " is degenerate");
      geometry_ok = false;
      continue;
    }
    if (r.x1 < 0 || r.y1 < 0 || r.x2 > f.width || r.y2 > f.height) {
      issue(i, -1,
            "room " + std::to_string(r.id) + " leaves the bounding rectangle");
      geometry_ok = false;
    }
    area += static_cast<long long>(r.x2 - r.x1) * (r.y2 - r.y1);
  }
  if (!geometry_ok)
    return report;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Room &a = f.rooms[i];
      const Room &b = f.rooms[j];
      if (a.x1 < b.x2 && b.x1 < a.x2 && a.y1 < b.y2 && b.y1 < a.y2)
        issue(j, i,
              "rooms " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                  " overlap");
    }
  if (!report.ok())
    return report;
  if (area != static_cast<long long>(f.width) * f.height) {
    issue(-1, -1, "rooms do not cover the bounding rectangle");
    return report;
  }

  std::map<std::pair<int, int>, std::vector<int>> corners;
  for (int i = 0; i < n; ++i) {
    const Room &r = f.rooms[i];
    for (auto pt : {std::pair{r.x1, r.y1}, std::pair{r.x2, r.y1},
                    std::pair{r.x1, r.y2}, std::pair{r.x2, r.y2}})
      corners[pt].push_back(i);
  }
  for (const auto &[pt, owners] : corners) {
    const bool interior =
        pt.first > 0 && pt.first < f.width && pt.second > 0 && pt.second < f.height;
    if (interior && owners.size() == 4)
      issue(owners.back(), owners.front(),
            "four rooms meet at (" + std::to_string(pt.first) + "," +
                std::to_string(pt.second) + "), a '+' junction");
  }
  return report;
}

void require_valid(const MosaicFloorplan &f) {
  auto report = validate(f);
  if (!report.ok())
    throw InvalidFloorplan("invalid mosaic floorplan: " + report.describe());
}

MosaicFloorplan canonicalize(const MosaicFloorplan &f) {
  std::vector<int> xs{0, f.width};
  std::vector<int> ys{0, f.height};
  for (const Room &r : f.rooms) {
    xs.insert(xs.end(), {r.x1, r.x2});
    ys.insert(ys.end(), {r.y1, r.y2});
  }
  auto uniq = [](std::vector<int> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(xs);
  uniq(ys);
  auto rank = [](const std::vector<int> &v, int c) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
  };
  MosaicFloorplan out;
  out.width = rank(xs, f.width);
  out.height = rank(ys, f.height);
  for (const Room &r : f.rooms)
    out.rooms.push_back({r.id, rank(xs, r.x1), rank(ys, r.y1), rank(xs, r.x2),
                         rank(ys, r.y2)});
  return out;
}

MosaicFloorplan flip_horizontal(const MosaicFloorplan &f) {
  MosaicFloorplan out = f;
  for (Room &r : out.rooms)
    r = {r.id, f.width - r.x2, r.y1, f.width - r.x1, r.y2};
  return out;
}

MosaicFloorplan flip_vertical(const MosaicFloorplan &f) {
  MosaicFloorplan out = f;
  for (Room &r : out.rooms)
    r = {r.id, r.x1, f.height - r.y2, r.x2, f.height - r.y1};
  return out;
}

MosaicFloorplan transpose(const MosaicFloorplan &f) {
  MosaicFloorplan out{f.height, f.width, {}};
  for (const Room &r : f.rooms)
    out.rooms.push_back({r.id, r.y1, r.x1, r.y2, r.x2});
  return out;
}

MosaicFloorplan rotate_half_turn(const MosaicFloorplan &f) {
  return flip_vertical(flip_horizontal(f));
}

namespace {

// Maps corner `c` to the top-left corner. Each map is an involution.
MosaicFloorplan to_top_left_frame(const MosaicFloorplan &f, Corner c) {
  switch (c) {
  case Corner::TopLeft:
    return f;
  case Corner::TopRight:
    return flip_horizontal(f);
  case Corner::BottomLeft:
    return flip_vertical(f);
  case Corner::BottomRight:
    return rotate_half_turn(f);
  }
  return f;
}

// Deletes the top-left room in place and returns its id.
int delete_top_left(MosaicFloorplan &f) {
  auto it = std::find_if(f.rooms.begin(), f.rooms.end(),
                         [](const Room &r) { return r.x1 == 0 && r.y1 == 0; });
  if (it == f.rooms.end())
    throw std::logic_error("no room at the top-left corner");
  const Room b = *it;
  if (b.x2 == f.width && b.y2 == f.height)
    throw std::invalid_argument("cannot delete the only room of a floorplan");

  bool slide_bottom;
  if (b.y2 == f.height)
    slide_bottom = false;
  else if (b.x2 == f.width)
    slide_bottom = true;
  else {
    // '-|': the wall through the corner is vertical, a room on the right
    // spans across it. '_|_': a room below spans across it.
    slide_bottom = std::any_of(f.rooms.begin(), f.rooms.end(), [&](const Room &r) {
      return r.x1 == b.x2 && r.y1 < b.y2 && b.y2 < r.y2;
    });
    const bool horizontal_through =
        std::any_of(f.rooms.begin(), f.rooms.end(), [&](const Room &r) {
          return r.y1 == b.y2 && r.x1 < b.x2 && b.x2 < r.x2;
        });
    if (slide_bottom == horizontal_through)
      throw std::logic_error("corner junction is not a T");
  }

  f.rooms.erase(it);
  for (Room &r : f.rooms) {
    if (slide_bottom && r.y1 == b.y2 && r.x2 <= b.x2)
      r.y1 = 0;
    else if (!slide_bottom && r.x1 == b.x2 && r.y2 <= b.y2)
      r.x1 = 0;
  }
  return b.id;
}

} // namespace

MosaicFloorplan delete_corner(const MosaicFloorplan &f, Corner c) {
  require_valid(f);
  if (f.size() < 2)
    throw std::invalid_argument("cannot delete the only room of a floorplan");
  MosaicFloorplan work = to_top_left_frame(f, c);
  delete_top_left(work);
  return to_top_left_frame(work, c);
}

std::vector<int> deletion_order(const MosaicFloorplan &f, Corner c) {
  require_valid(f);
  MosaicFloorplan work = to_top_left_frame(f, c);
  std::vector<int> order;
  order.reserve(f.rooms.size());
  while (work.size() > 1)
    order.push_back(delete_top_left(work));
  order.push_back(work.rooms.front().id);
  return order;
}

std::map<int, int> top_left_labels(const MosaicFloorplan &f) {
  std::map<int, int> labels;
  int next = 1;
  for (int id : deletion_order(f, Corner::TopLeft))
    labels[id] = next++;
  return labels;
}

MosaicFloorplan relabel_by_deletion_order(const MosaicFloorplan &f) {
  auto labels = top_left_labels(f);
  MosaicFloorplan out = f;
  for (Room &r : out.rooms)
    r.id = labels.at(r.id);
  std::sort(out.rooms.begin(), out.rooms.end(),
            [](const Room &a, const Room &b) { return a.id < b.id; });
  return out;
}

Permutation fp2bp(const MosaicFloorplan &f) {
  auto labels = top_left_labels(f);
  std::vector<int> values;
  values.reserve(labels.size());
  for (int id : deletion_order(f, Corner::BottomLeft))
    values.push_back(labels.at(id));
  return Permutation(std::move(values));
}

namespace {

// All ways to add a room `id` at the bottom-left corner, i.e. the inverses
// of a bottom-left deletion.
std::vector<MosaicFloorplan> bottom_left_insertions(const MosaicFloorplan &f,
                                                    int id) {
  std::vector<MosaicFloorplan> out;

  // Along the left side: the new room sits left of the lowest j rooms.
  std::vector<Room> left;
  for (const Room &r : f.rooms)
    if (r.x1 == 0)
      left.push_back(r);
  std::sort(left.begin(), left.end(),
            [](const Room &a, const Room &b) { return a.y2 > b.y2; });
  for (const Room &top_of_cut : left) {
    const int cut = top_of_cut.y1;
    MosaicFloorplan g{f.width + 1, f.height, {}};
    for (Room r : f.rooms) {
      r.x1 += 1;
      r.x2 += 1;
      if (r.x1 == 1 && r.y2 <= cut)
        r.x1 = 0;
      g.rooms.push_back(r);
    }
    g.rooms.push_back({id, 0, cut, 1, f.height});
    out.push_back(std::move(g));
  }

  // Along the bottom: the new room sits below the leftmost j rooms.
  std::vector<Room> bottom;
  for (const Room &r : f.rooms)
    if (r.y2 == f.height)
      bottom.push_back(r);
  std::sort(bottom.begin(), bottom.end(),
            [](const Room &a, const Room &b) { return a.x1 < b.x1; });
  for (const Room &end_of_cut : bottom) {
    const int cut = end_of_cut.x2;
    MosaicFloorplan g{f.width, f.height + 1, {}};
    for (Room r : f.rooms) {
      if (r.y2 == f.height && r.x1 >= cut)
        r.y2 += 1;
      g.rooms.push_back(r);
    }
    g.rooms.push_back({id, 0, f.height, cut, f.height + 1});
    out.push_back(std::move(g));
  }
  return out;
}

} // namespace

MosaicFloorplan bp2fp(const Permutation &p) {
  if (!is_baxter(p))
    throw std::invalid_argument("bp2fp: " + to_string(p) +
                                " is not a Baxter permutation");
  const int n = p.size();
  // Room ids are the permutation values; reading order is position order.
  MosaicFloorplan f{1, 1, {{p[n], 0, 0, 1, 1}}};
  for (int i = n - 1; i >= 1; --i) {
    const Permutation target = standardize(p.values().subspan(i - 1));
    bool placed = false;
    for (auto &candidate : bottom_left_insertions(f, p[i])) {
      if (fp2bp(candidate) == target) {
        f = std::move(candidate);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::logic_error("bp2fp: no bottom-left insertion realizes " +
                             to_string(target));
  }
  f = canonicalize(f);
  std::sort(f.rooms.begin(), f.rooms.end(),
            [](const Room &a, const Room &b) { return a.id < b.id; });
  return f;
}

SegRoomRelations seg_room_relations(const MosaicFloorplan &f) {
  require_valid(f);
  const MosaicFloorplan g = canonicalize(relabel_by_deletion_order(f));

  // Edges grouped by line, then merged into maximal segments. Two distinct
  // collinear segments never touch in a mosaic floorplan.
  std::map<std::pair<bool, int>, std::vector<std::pair<int, int>>> edges;
  for (const Room &r : g.rooms) {
    edges[{true, r.y1}].push_back({r.x1, r.x2});
    edges[{true, r.y2}].push_back({r.x1, r.x2});
    edges[{false, r.x1}].push_back({r.y1, r.y2});
    edges[{false, r.x2}].push_back({r.y1, r.y2});
  }
  SegRoomRelations out;
  for (auto &[line, spans] : edges) {
    std::sort(spans.begin(), spans.end());
    int from = spans.front().first;
    int to = spans.front().second;
    for (const auto &[a, b] : spans) {
      if (a > to) {
        out.segments.push_back({line.first, line.second, from, to});
        from = a;
      }
      to = std::max(to, b);
    }
    out.segments.push_back({line.first, line.second, from, to});
  }
  std::sort(out.segments.begin(), out.segments.end());

  auto find_segment = [&](bool horizontal, int coordinate, int a, int b) {
    for (std::size_t s = 0; s < out.segments.size(); ++s) {
      const Segment &seg = out.segments[s];
      if (seg.horizontal == horizontal && seg.coordinate == coordinate &&
          seg.from <= a && b <= seg.to)
        return static_cast<int>(s);
    }
    throw std::logic_error("room edge not covered by a segment");
  };
  for (const Room &r : g.rooms) {
    out.relations.push_back({find_segment(true, r.y1, r.x1, r.x2), r.id, Side::Top});
    out.relations.push_back({find_segment(false, r.x1, r.y1, r.y2), r.id, Side::Left});
    out.relations.push_back({find_segment(false, r.x2, r.y1, r.y2), r.id, Side::Right});
    out.relations.push_back({find_segment(true, r.y2, r.x1, r.x2), r.id, Side::Bottom});
  }
  std::sort(out.relations.begin(), out.relations.end());
  return out;
}

bool equivalent(const MosaicFloorplan &a, const MosaicFloorplan &b) {
  return a.size() == b.size() && fp2bp(a) == fp2bp(b);
}

std::vector<std::vector<int>> enveloping_rectangles(const MosaicFloorplan &f) {
  require_valid(f);
  const MosaicFloorplan g = canonicalize(relabel_by_deletion_order(f));
  std::vector<std::vector<int>> out;
  for (int xa = 0; xa < g.width; ++xa)
    for (int xb = xa + 1; xb <= g.width; ++xb)
      for (int ya = 0; ya < g.height; ++ya)
        for (int yb = ya + 1; yb <= g.height; ++yb) {
          std::vector<int> inside;
          bool clean = true;
          for (const Room &r : g.rooms) {
            const bool contained =
                xa <= r.x1 && r.x2 <= xb && ya <= r.y1 && r.y2 <= yb;
            const bool disjoint =
                r.x2 <= xa || xb <= r.x1 || r.y2 <= ya || yb <= r.y1;
            if (contained)
              inside.push_back(r.id);
            else if (!disjoint) {
              clean = false;
              break;
            }
          }
          if (clean && !inside.empty()) {
            std::sort(inside.begin(), inside.end());
            out.push_back(std::move(inside));
          }
        }
  std::sort(out.begin(), out.end());
  return out;
}

MosaicFloorplan embed(const MosaicFloorplan &parent,
                      const std::map<int, MosaicFloorplan> &children) {
  require_valid(parent);
  const MosaicFloorplan host = canonicalize(parent);

  std::map<int, MosaicFloorplan> inner;
  for (const auto &[id, child] : children) {
    if (std::none_of(host.rooms.begin(), host.rooms.end(),
                     [id = id](const Room &r) { return r.id == id; }))
      throw std::invalid_argument("embed: parent has no room " +
                                  std::to_string(id));
    require_valid(child);
    inner[id] = canonicalize(child);
  }

  // Parent lines are scaled by `scale`; every inner line gets a private
  // offset in [1, scale - 1], so inner walls never meet outer ones.
  int interior_x = 0;
  int interior_y = 0;
  for (const auto &[id, child] : inner) {
    interior_x += child.width - 1;
    interior_y += child.height - 1;
  }
  const int sx = interior_x + 2;
  const int sy = interior_y + 2;

  MosaicFloorplan out{host.width * sx, host.height * sy, {}};
  int offset_x = 0;
  int offset_y = 0;
  int next_id = 1;
  for (const Room &r : host.rooms) {
    auto it = inner.find(r.id);
    if (it == inner.end()) {
      out.rooms.push_back({next_id++, r.x1 * sx, r.y1 * sy, r.x2 * sx, r.y2 * sy});
      continue;
    }
    const MosaicFloorplan &child = it->second;
    auto map_x = [&](int u) {
      if (u == 0)
        return r.x1 * sx;
      if (u == child.width)
        return r.x2 * sx;
      return r.x1 * sx + offset_x + u;
    };
    auto map_y = [&](int v) {
      if (v == 0)
        return r.y1 * sy;
      if (v == child.height)
        return r.y2 * sy;
      return r.y1 * sy + offset_y + v;
    };
    for (const Room &c : child.rooms)
      out.rooms.push_back(
          {next_id++, map_x(c.x1), map_y(c.y1), map_x(c.x2), map_y(c.y2)});
    offset_x += child.width - 1;
    offset_y += child.height - 1;
  }
  require_valid(out);
  return relabel_by_deletion_order(canonicalize(out));
}

} // namespace hrd
