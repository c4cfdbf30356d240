#include "hrd/floorplan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hrd {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (std::any_of(line.begin(), line.end(),
                    [](char c) { return !std::isspace(static_cast<unsigned char>(c)); }))
      lines.push_back({number, line});
    start = end + 1;
  }
  return lines;
}

std::vector<int> integers(const Line &line, std::size_t expected) {
  std::vector<int> out;
  std::size_t i = 0;
  const auto &t = line.text;
  while (i < t.size()) {
    if (std::isspace(static_cast<unsigned char>(t[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && !std::isspace(static_cast<unsigned char>(t[j])))
      ++j;
    const int column = static_cast<int>(i) + 1;
    if (out.size() == expected)
      throw ParseError(line.number, column,
                       "expected " + std::to_string(expected) + " integers");
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data() + i, t.data() + j, v);
    if (ec != std::errc() || ptr != t.data() + j)
      throw ParseError(line.number, column, "expected an integer");
    out.push_back(v);
    i = j;
  }
  if (out.size() != expected)
    throw ParseError(line.number, static_cast<int>(t.size()) + 1,
                     "expected " + std::to_string(expected) + " integers");
  return out;
}

} // namespace

MosaicFloorplan parse_floorplan(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty())
    throw ParseError(1, 1, "empty floorplan");
  const auto header = integers(lines[0], 3);
  const int n = header[2];
  if (n < 1)
    throw ParseError(lines[0].number, 1, "room count must be positive");
  if (static_cast<int>(lines.size()) - 1 != n) {
    const int at = static_cast<int>(lines.size()) > n + 1
                       ? lines[n + 1].number
                       : lines.back().number + 1;
    throw ParseError(at, 1,
                     "header announces " + std::to_string(n) + " rooms, found " +
                         std::to_string(lines.size() - 1));
  }

  MosaicFloorplan f{header[0], header[1], {}};
  for (int i = 1; i <= n; ++i) {
    auto v = integers(lines[i], 5);
    f.rooms.push_back({v[0], v[1], v[2], v[3], v[4]});
  }
  auto report = validate(f);
  if (!report.ok()) {
    const auto &first = report.issues.front();
    const int at = first.room >= 0 ? lines[first.room + 1].number : lines[0].number;
    throw ParseError(at, 1, first.message);
  }
  return f;
}

std::string format_floorplan(const MosaicFloorplan &f) {
  std::ostringstream os;
  os << f.width << ' ' << f.height << ' ' << f.size() << '\n';
  for (const Room &r : f.rooms)
    os << r.id << ' ' << r.x1 << ' ' << r.y1 << ' ' << r.x2 << ' ' << r.y2 << '\n';
  return os.str();
}

std::string render_ascii(const MosaicFloorplan &f) {
  require_valid(f);
  const MosaicFloorplan g = canonicalize(f);
  std::size_t digits = 1;
  for (const Room &r : g.rooms)
    digits = std::max(digits, std::to_string(r.id).size());
  const int cw = std::max(4, static_cast<int>(digits) + 2);
  const int rh = 2;
  const int cols = g.width * cw + 1;
  const int rows = g.height * rh + 1;
  std::vector<std::string> canvas(rows, std::string(cols, ' '));

  for (const Room &r : g.rooms) {
    const int left = r.x1 * cw, right = r.x2 * cw;
    const int top = r.y1 * rh, bottom = r.y2 * rh;
    for (int c = left; c <= right; ++c)
      for (int row : {top, bottom})
        if (canvas[row][c] == ' ')
          canvas[row][c] = '-';
    for (int row = top; row <= bottom; ++row)
      for (int c : {left, right})
        if (canvas[row][c] == ' ' || canvas[row][c] == '-')
          canvas[row][c] = '|';
  }
  for (const Room &r : g.rooms)
    for (int row : {r.y1 * rh, r.y2 * rh})
      for (int c : {r.x1 * cw, r.x2 * cw})
        canvas[row][c] = '+';
  for (const Room &r : g.rooms) {
    const std::string label = std::to_string(r.id);
    const int row = (r.y1 + r.y2) * rh / 2;
    const int col = (r.x1 + r.x2) * cw / 2 - static_cast<int>(label.size()) / 2;
    canvas[row].replace(col, label.size(), label);
  }
  std::string out;
  for (const auto &line : canvas)
    out += line + '\n';
  return out;
}

} // namespace hrd
