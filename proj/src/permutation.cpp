#include "hrd/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hrd {

ParseError::ParseError(int line, int column, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("permutation must have at least one element");
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end())
    throw std::invalid_argument("value not in permutation");
  return static_cast<int>(it - values_.begin()) + 1;
}

std::string to_string(const Permutation &p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1)
      out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_compact_string(const Permutation &p) {
  if (p.size() > 9)
    return to_string(p);
  std::string out;
  for (int v : p.values())
    out += static_cast<char>('0' + v);
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << to_string(p);
}

Permutation parse_permutation(std::string_view text, int line) {
  struct Token {
    std::string_view text;
    int column;
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    tokens.push_back({text.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  if (tokens.empty())
    throw ParseError(line, 1, "empty permutation");

  for (const auto &tok : tokens)
    for (std::size_t c = 0; c < tok.text.size(); ++c)
      if (!std::isdigit(static_cast<unsigned char>(tok.text[c])))
        throw ParseError(line, tok.column + static_cast<int>(c),
                         "expected a positive integer");

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].text.size() > 1) {
    const auto &tok = tokens[0];
    if (tok.text.size() > 9)
      throw ParseError(line, tok.column,
                       "compact digit form is limited to n <= 9");
    for (char c : tok.text)
      values.push_back(c - '0');
  } else {
    for (const auto &tok : tokens) {
      int v = 0;
      auto [ptr, ec] =
          std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
      if (ec != std::errc())
        throw ParseError(line, tok.column, "integer out of range");
      values.push_back(v);
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument &e) {
    throw ParseError(line, tokens[0].column,
                     std::string("not a permutation: ") + e.what());
  }
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    ranks[order[r]] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

bool contains_pattern(const Permutation &text, const Permutation &pattern) {
  if (pattern.size() > text.size())
    throw std::invalid_argument("pattern longer than text");
  const int n = text.size();
  const int k = pattern.size();
  std::vector<int> chosen; // text positions matched so far
  chosen.reserve(k);

  // Extending a partial match only needs the new element to order-match
  // every earlier one.
  auto fits = [&](int pos) {
    const int h = static_cast<int>(chosen.size()) + 1;
    for (int l = 1; l < h; ++l) {
      bool text_greater = text[pos] > text[chosen[l - 1]];
      bool pattern_greater = pattern[h] > pattern[l];
      if (text_greater != pattern_greater)
        return false;
    }
    return true;
  };

  auto search = [&](auto &&self, int from) -> bool {
    const int h = static_cast<int>(chosen.size());
    if (h == k)
      return true;
    for (int pos = from; pos <= n - (k - h) + 1; ++pos) {
      if (!fits(pos))
        continue;
      chosen.push_back(pos);
      if (self(self, pos + 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 1);
}

bool is_baxter(const Permutation &p) {
  const int n = p.size();
  std::vector<int> pos(n + 1);
  for (int i = 1; i <= n; ++i)
    pos[p[i]] = i;

  for (int v = 1; v < n; ++v) {
    const int a = pos[v];
    const int b = pos[v + 1];
    if (a < b) {
      // v ... big ... small ... v+1
      bool seen_big = false;
      for (int j = a + 1; j < b; ++j) {
        if (p[j] > v + 1)
          seen_big = true;
        else if (p[j] < v && seen_big)
          return false;
      }
    } else {
      // v+1 ... small ... big ... v
      bool seen_small = false;
      for (int j = b + 1; j < a; ++j) {
        if (p[j] < v)
          seen_small = true;
        else if (p[j] > v + 1 && seen_small)
          return false;
      }
    }
  }
  return true;
}

std::vector<Block> blocks(const Permutation &p) {
  const int n = p.size();
  std::vector<Block> out;
  for (int s = 1; s <= n; ++s) {
    int lo = p[s];
    int hi = p[s];
    for (int e = s; e <= n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      if (hi - lo == e - s)
        out.push_back({s, e});
    }
  }
  return out;
}

bool is_simple(const Permutation &p) {
  const int n = p.size();
  for (int s = 1; s <= n; ++s) {
    int lo = p[s];
    int hi = p[s];
    for (int e = s + 1; e <= n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      if (hi - lo == e - s && !(s == 1 && e == n))
        return false;
    }
  }
  return true;
}

Permutation one_point_delete(const Permutation &p, int position) {
  if (p.size() < 2)
    throw std::invalid_argument("cannot delete from a singleton permutation");
  if (position < 1 || position > p.size())
    throw std::invalid_argument("deletion index out of range");
  std::vector<int> rest;
  rest.reserve(p.size() - 1);
  const int removed = p[position];
  for (int i = 1; i <= p.size(); ++i)
    if (i != position)
      rest.push_back(p[i] > removed ? p[i] - 1 : p[i]);
  return Permutation(std::move(rest));
}

Permutation inflate(const Permutation &skeleton,
                    std::span<const Permutation> children) {
  const int m = skeleton.size();
  if (static_cast<int>(children.size()) != m)
    throw std::invalid_argument("inflate: " + std::to_string(children.size()) +
                                " children for a skeleton of length " +
                                std::to_string(m));
  // offset[v]: total length of the children sitting at skeleton values < v
  std::vector<int> length_at_value(m + 1, 0);
  for (int i = 1; i <= m; ++i)
    length_at_value[skeleton[i]] = children[i - 1].size();
  std::vector<int> offset(m + 2, 0);
  for (int v = 1; v <= m; ++v)
    offset[v + 1] = offset[v] + length_at_value[v];

  std::vector<int> out;
  out.reserve(offset[m + 1]);
  for (int i = 1; i <= m; ++i)
    for (int v : children[i - 1].values())
      out.push_back(offset[skeleton[i]] + v);
  return Permutation(std::move(out));
}

namespace {

// Shortest prefix of p whose values are {1..i} (sum split) or {n-i+1..n}
// (skew split); 0 when there is none.
int shortest_split(const Permutation &p, bool skew) {
  const int n = p.size();
  int lo = n + 1;
  int hi = 0;
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, p[i]);
    hi = std::max(hi, p[i]);
    if (!skew && lo == 1 && hi == i)
      return i;
    if (skew && hi == n && lo == n - i + 1)
      return i;
  }
  return 0;
}

Permutation segment(const Permutation &p, int start, int end) {
  return standardize(p.values().subspan(start - 1, end - start + 1));
}

} // namespace

Decomposition decompose(const Permutation &p) {
  const int n = p.size();
  if (n < 2)
    throw std::invalid_argument("cannot decompose a singleton permutation");

  for (bool skew : {false, true}) {
    if (int cut = shortest_split(p, skew)) {
      return {skew ? Permutation{2, 1} : Permutation{1, 2},
              {segment(p, 1, cut), segment(p, cut + 1, n)}};
    }
  }

  // Neither sum- nor skew-decomposable: the maximal proper blocks are
  // disjoint and their pattern is simple.
  std::vector<Block> parts;
  for (int s = 1; s <= n;) {
    int best = s;
    int lo = p[s];
    int hi = p[s];
    for (int e = s + 1; e <= n; ++e) {
      lo = std::min(lo, p[e]);
      hi = std::max(hi, p[e]);
      if (hi - lo == e - s && !(s == 1 && e == n))
        best = e;
    }
    parts.push_back({s, best});
    s = best + 1;
  }
  std::vector<int> representatives;
  std::vector<Permutation> children;
  for (const Block &b : parts) {
    representatives.push_back(p[b.start]);
    children.push_back(segment(p, b.start, b.end));
  }
  return {standardize(representatives), std::move(children)};
}

Symmetries symmetries(const Permutation &p) {
  const int n = p.size();
  std::vector<int> rev(p.values().rbegin(), p.values().rend());
  std::vector<int> comp(n);
  std::vector<int> inv(n);
  for (int i = 1; i <= n; ++i) {
    comp[i - 1] = n + 1 - p[i];
    inv[p[i] - 1] = i;
  }
  return {Permutation(std::move(rev)), Permutation(std::move(comp)),
          Permutation(std::move(inv))};
}

} // namespace hrd
