#include "hrd/lowerbound.hpp"

#include "hrd/gentree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hrd {

int site_position(const Permutation &p, Site site) {
  const int max_at = p.position_of(p.size());
  switch (site) {
  case Site::BeforeFirst:
    return 0;
  case Site::AfterLast:
    return p.size();
  case Site::BeforeMax:
    return max_at - 1;
  case Site::AfterMax:
    return max_at;
  }
  return 0;
}

std::vector<int> safe_sites(const Permutation &p) {
  std::vector<int> sites;
  for (Site s : {Site::BeforeFirst, Site::BeforeMax, Site::AfterMax, Site::AfterLast})
    sites.push_back(site_position(p, s));
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  // At most one of the two coincidences (maximum first, maximum last)
  // can happen once n >= 2.
  if (p.size() >= 2 && sites.size() < 3)
    throw std::logic_error("fewer than three safe sites in " + to_string(p));
  return sites;
}

std::vector<int> canonical_sites(const Permutation &p) {
  std::vector<int> sites = safe_sites(p);
  if (sites.size() == 4)
    sites.pop_back(); // after last
  return sites;
}

Permutation insert_max(const Permutation &p, int position) {
  const auto sites = safe_sites(p);
  if (std::find(sites.begin(), sites.end(), position) == sites.end())
    throw std::invalid_argument("position " + std::to_string(position) +
                                " is not a safe site of " + to_string(p));
  std::vector<int> values(p.values().begin(), p.values().end());
  values.insert(values.begin() + position, p.size() + 1);
  return Permutation(std::move(values));
}

FamilyReport insertion_family(int k, int n, const Permutation &seed,
                              bool all_sites, std::size_t sample_limit) {
  require_order(k);
  if (seed.size() != k || !is_ihrd(seed))
    throw std::invalid_argument("seed " + to_string(seed) +
                                " is not a simple Baxter permutation of length " +
                                std::to_string(k));
  if (n < k)
    throw std::invalid_argument("target length below seed length");

  FamilyReport report{seed, k, n, 0, 0, 0, true, true, true, {}};
  report.expected = boost::multiprecision::pow(BigInt(3), n - k);
  std::set<Permutation> seen;

  std::vector<int> choices;
  auto walk = [&](auto &&self, const Permutation &current) -> void {
    if (current.size() == n) {
      ++report.traces;
      if (!seen.insert(current).second)
        return;
      report.all_baxter = report.all_baxter && is_baxter(current);
      report.all_hrd_k = report.all_hrd_k && is_hrd(current, k);
      if (k > 2)
        report.none_hrd_below = report.none_hrd_below && !is_hrd(current, k - 1);
      if (report.samples.size() < sample_limit)
        report.samples.push_back({seed, choices, current});
      return;
    }
    for (int site : all_sites ? safe_sites(current) : canonical_sites(current)) {
      choices.push_back(site);
      self(self, insert_max(current, site));
      choices.pop_back();
    }
  };
  walk(walk, seed);
  report.distinct = seen.size();
  return report;
}

std::string format_report(const FamilyReport &r) {
  std::ostringstream os;
  os << std::boolalpha << "seed=" << to_compact_string(r.seed) << " k=" << r.k
     << " n=" << r.n << " family=" << r.distinct << " expected=" << r.expected
     << " all_baxter=" << r.all_baxter << " all_hrd_k=" << r.all_hrd_k
     << " none_hrd_k-1=" << r.none_hrd_below;
  return os.str();
}

std::optional<MosaicFloorplan> cut_and_shift(const MosaicFloorplan &f,
                                             const Segment &segment, int row,
                                             int shift) {
  if (segment.horizontal || (shift != 1 && shift != -1) || row < segment.from ||
      row >= segment.to)
    return std::nullopt;
  // Scale by 4: the cut sits at 4*row + 2, the moved wall at 4*x +- 1,
  // both on lines no existing wall uses.
  MosaicFloorplan g = canonicalize(f);
  for (Room &r : g.rooms)
    r = {r.id, 4 * r.x1, 4 * r.y1, 4 * r.x2, 4 * r.y2};
  g.width *= 4;
  g.height *= 4;
  const int x = 4 * segment.coordinate;
  const int cut = 4 * row + 2;
  const int bottom = 4 * segment.to;
  const int moved = x + shift;

  auto flank = [&](bool left) {
    return std::find_if(g.rooms.begin(), g.rooms.end(), [&](const Room &r) {
      return (left ? r.x2 : r.x1) == x && r.y1 < cut && cut < r.y2;
    });
  };
  auto left = flank(true);
  auto right = flank(false);
  if (left == g.rooms.end() || right == g.rooms.end())
    return std::nullopt;
  const Room l = *left;
  const Room r = *right;

  MosaicFloorplan out{g.width, g.height, {}};
  int next_id = 1;
  for (Room q : g.rooms) {
    if (q == l) {
      out.rooms.push_back({next_id++, l.x1, l.y1, x, cut});
      out.rooms.push_back({next_id++, l.x1, cut, moved, l.y2});
      continue;
    }
    if (q == r) {
      out.rooms.push_back({next_id++, x, r.y1, r.x2, cut});
      out.rooms.push_back({next_id++, moved, cut, r.x2, r.y2});
      continue;
    }
    if (q.x2 == x && q.y1 >= cut && q.y2 <= bottom)
      q.x2 = moved;
    else if (q.x1 == x && q.y1 >= cut && q.y2 <= bottom)
      q.x1 = moved;
    q.id = next_id++;
    out.rooms.push_back(q);
  }
  if (!validate(out).ok())
    return std::nullopt;
  return relabel_by_deletion_order(canonicalize(out));
}

namespace {

struct Candidate {
  bool transposed;
  Segment segment;
  int row;
  int shift;
};

std::string describe(const Candidate &c) {
  std::ostringstream os;
  os << (c.transposed ? "horizontal" : "vertical") << " segment at "
     << c.segment.coordinate << " [" << c.segment.from << "," << c.segment.to
     << "], cut after row " << c.row << ", shift " << (c.shift > 0 ? "+" : "-");
  return os.str();
}

std::optional<MosaicFloorplan> apply(const MosaicFloorplan &f, const Candidate &c) {
  if (!c.transposed)
    return cut_and_shift(f, c.segment, c.row, c.shift);
  auto out = cut_and_shift(transpose(f), c.segment, c.row, c.shift);
  if (!out)
    return std::nullopt;
  return relabel_by_deletion_order(transpose(*out));
}

std::vector<Segment> interior_vertical_segments(const MosaicFloorplan &f) {
  const MosaicFloorplan g = canonicalize(f);
  std::vector<Segment> out;
  for (const Segment &s : seg_room_relations(g).segments)
    if (!s.horizontal && s.coordinate > 0 && s.coordinate < g.width)
      out.push_back(s);
  return out;
}

// One more room at a corner, in label terms: a new first or last entry,
// or a new minimum or maximum value anywhere.
std::vector<Permutation> corner_extensions(const Permutation &p) {
  const int n = p.size();
  const std::vector<int> v(p.values().begin(), p.values().end());
  std::vector<Permutation> out;
  for (int value = 1; value <= n + 1; ++value) {
    std::vector<int> w;
    for (int x : v)
      w.push_back(x >= value ? x + 1 : x);
    std::vector<int> front = w;
    front.insert(front.begin(), value);
    out.emplace_back(std::move(front));
    w.push_back(value);
    out.emplace_back(std::move(w));
  }
  for (int pos = 0; pos <= n; ++pos) {
    std::vector<int> low;
    for (int x : v)
      low.push_back(x + 1);
    low.insert(low.begin() + pos, 1);
    out.emplace_back(std::move(low));
    std::vector<int> high = v;
    high.insert(high.begin() + pos, n + 1);
    out.emplace_back(std::move(high));
  }
  return out;
}

} // namespace

GrowResult grow_ihrd_traced(const MosaicFloorplan &f) {
  require_valid(f);
  const MosaicFloorplan g = relabel_by_deletion_order(canonicalize(f));
  const Permutation label = fp2bp(g);
  if (!is_ihrd(label) || label.size() < 7)
    throw std::invalid_argument("grow_ihrd needs an irreducible floorplan with "
                                "at least 7 rooms; Abe-label is " +
                                to_string(label));

  auto verified = [&](const std::optional<MosaicFloorplan> &out) {
    return out && out->size() == g.size() + 2 && is_ihrd(fp2bp(*out));
  };

  // Leftmost vertical segment with an end on the bounding box, cut in the
  // middle.
  std::vector<Segment> vertical = interior_vertical_segments(g);
  for (const Segment &s : vertical) {
    if (s.from != 0 && s.to != g.height)
      continue;
    Candidate c{false, s, (s.from + s.to - 1) / 2, +1};
    if (auto out = apply(g, c); verified(out))
      return {*out, false, describe(c)};
    break;
  }

  std::vector<Candidate> all;
  for (bool transposed : {false, true}) {
    const auto segments =
        transposed ? interior_vertical_segments(transpose(g)) : vertical;
    for (const Segment &s : segments)
      for (int row = s.from; row < s.to; ++row)
        for (int shift : {+1, -1})
          all.push_back({transposed, s, row, shift});
  }
  for (const Candidate &c : all)
    if (auto out = apply(g, c); verified(out))
      return {*out, true, describe(c)};

  // Last resort: two rooms added at corners, so that deleting them again
  // gives back f.
  for (const Permutation &once : corner_extensions(label))
    for (const Permutation &twice : corner_extensions(once))
      if (is_ihrd(twice))
        return {bp2fp(twice), true,
                "corner insertions " + to_compact_string(once) + " -> " +
                    to_compact_string(twice)};
  throw std::runtime_error("no two-room refinement of the floorplan is "
                           "irreducible");
}

MosaicFloorplan grow_ihrd(const MosaicFloorplan &f) {
  return grow_ihrd_traced(f).floorplan;
}

} // namespace hrd
