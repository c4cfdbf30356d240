#include "hrd/gentree.hpp"

#include "hrd/census.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

namespace hrd {

GenTree GenTree::node(Permutation label, std::vector<GenTree> children) {
  GenTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

int GenTree::leaf_count() const {
  if (is_leaf())
    return 1;
  int total = 0;
  for (const auto &c : children)
    total += c.leaf_count();
  return total;
}

void require_order(int k) {
  if (k < 2)
    throw std::invalid_argument("order k must be at least 2, got " +
                                std::to_string(k));
}

namespace {

bool violates_skew(const GenTree &t) {
  if (t.label.size() != 2)
    return false;
  const GenTree &first = t.children.front();
  return !first.is_leaf() && first.label == t.label;
}

} // namespace

void check_tree(const GenTree &t, std::optional<int> k) {
  if (t.is_leaf()) {
    if (t.label.size() != 1)
      throw std::invalid_argument("leaf must carry label 1");
    return;
  }
  const Permutation &label = t.label;
  const std::string name = to_compact_string(label);
  if (label.size() < 2)
    throw std::invalid_argument("node label " + name + " is a singleton");
  if (static_cast<int>(t.children.size()) != label.size())
    throw std::invalid_argument("node " + name + " has " +
                                std::to_string(t.children.size()) +
                                " children, expected " +
                                std::to_string(label.size()));
  if (k && label.size() > *k)
    throw std::invalid_argument("node label " + name + " longer than k = " +
                                std::to_string(*k));
  if (!is_simple(label) || !is_baxter(label))
    throw std::invalid_argument("node label " + name + " is not simple Baxter");
  if (violates_skew(t))
    throw std::invalid_argument("skew rule: first child of " + name +
                                " is labelled " + name);
  for (const auto &c : t.children)
    check_tree(c, k);
}

namespace {

Permutation evaluate(const GenTree &t) {
  if (t.is_leaf())
    return Permutation{1};
  std::vector<Permutation> parts;
  parts.reserve(t.children.size());
  for (const auto &c : t.children)
    parts.push_back(evaluate(c));
  return inflate(t.label, parts);
}

std::optional<GenTree> build(const Permutation &p, int k) {
  if (p.size() == 1)
    return GenTree::leaf();
  Decomposition d = decompose(p);
  if (d.skeleton.size() > k)
    return std::nullopt;
  std::vector<GenTree> children;
  children.reserve(d.children.size());
  for (const auto &c : d.children) {
    auto sub = build(c, k);
    if (!sub)
      return std::nullopt;
    children.push_back(std::move(*sub));
  }
  return GenTree::node(std::move(d.skeleton), std::move(children));
}

int max_skeleton(const Permutation &p) {
  if (p.size() == 1)
    return 1;
  const Decomposition d = decompose(p);
  int best = d.skeleton.size();
  for (const auto &c : d.children)
    best = std::max(best, max_skeleton(c));
  return best;
}

} // namespace

Permutation perm_of_tree(const GenTree &t) {
  check_tree(t);
  return evaluate(t);
}

std::optional<GenTree> tree_of_perm(const Permutation &p, int k) {
  require_order(k);
  if (!is_baxter(p))
    throw std::invalid_argument("tree_of_perm: " + to_string(p) +
                                " is not a Baxter permutation");
  return build(p, k);
}

std::optional<int> hrd_order(const Permutation &p) {
  if (!is_baxter(p))
    return std::nullopt;
  return max_skeleton(p);
}

bool is_hrd(const Permutation &p, int k) {
  require_order(k);
  auto order = hrd_order(p);
  return order && *order <= k;
}

bool is_ihrd(const Permutation &p) {
  return p.size() >= 2 && is_baxter(p) && is_simple(p);
}

GenTree attach_leaf_labels(const GenTree &t) {
  const Permutation p = perm_of_tree(t);
  GenTree out = t;
  int position = 1;
  std::function<void(GenTree &)> visit = [&](GenTree &node) {
    if (node.is_leaf()) {
      node.room = p[position++];
      return;
    }
    for (auto &c : node.children)
      visit(c);
  };
  visit(out);
  return out;
}

namespace {

MosaicFloorplan realize(const GenTree &t) {
  if (t.is_leaf())
    return MosaicFloorplan{1, 1, {{1, 0, 0, 1, 1}}};
  // bp2fp names rooms by label value; slot i holds value label[i].
  const MosaicFloorplan host = bp2fp(t.label);
  std::map<int, MosaicFloorplan> inner;
  for (int i = 1; i <= t.label.size(); ++i) {
    const GenTree &child = t.children[i - 1];
    if (!child.is_leaf())
      inner.emplace(t.label[i], realize(child));
  }
  return embed(host, inner);
}

} // namespace

MosaicFloorplan floorplan_of_tree(const GenTree &t) {
  check_tree(t);
  return realize(t);
}

namespace {

// Compositions of `total` into `parts` positive parts, lexicographic.
void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int> &)> &fn) {
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      current.push_back(remaining);
      fn(current);
      current.pop_back();
      return;
    }
    for (int first = 1; first <= remaining - (slots - 1); ++first) {
      current.push_back(first);
      rec(remaining - first, slots - 1);
      current.pop_back();
    }
  };
  rec(total, parts);
}

} // namespace

std::vector<GenTree> enumerate_trees(int k, int n) {
  require_order(k);
  if (n < 1)
    throw std::invalid_argument("leaf count must be positive");

  std::vector<Permutation> labels;
  for (int l = 2; l <= std::min(k, n); ++l)
    for (auto &p : census_simple_baxter(l, true).permutations)
      labels.push_back(std::move(p));
  std::sort(labels.begin(), labels.end());

  std::vector<std::vector<GenTree>> by_size(n + 1);
  by_size[1].push_back(GenTree::leaf());
  for (int m = 2; m <= n; ++m) {
    auto &out = by_size[m];
    for (const Permutation &label : labels) {
      if (label.size() > m)
        continue;
      for_each_composition(m, label.size(), [&](const std::vector<int> &sizes) {
        std::vector<GenTree> children(sizes.size());
        std::function<void(std::size_t)> pick = [&](std::size_t slot) {
          if (slot == sizes.size()) {
            out.push_back(GenTree::node(label, children));
            return;
          }
          for (const GenTree &c : by_size[sizes[slot]]) {
            if (slot == 0 && label.size() == 2 && !c.is_leaf() && c.label == label)
              continue;
            children[slot] = c;
            pick(slot + 1);
          }
        };
        pick(0);
      });
    }
  }
  return std::move(by_size[n]);
}

std::string format_tree(const GenTree &t) {
  if (t.is_leaf())
    return ".";
  std::string out = "(" + to_compact_string(t.label);
  for (const auto &c : t.children)
    out += " " + format_tree(c);
  return out + ")";
}

namespace {

class TreeParser {
public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  GenTree parse() {
    GenTree t = tree();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return t;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  GenTree tree() {
    skip_space();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    if (text_[pos_] == '.') {
      ++pos_;
      return GenTree::leaf();
    }
    if (text_[pos_] != '(')
      fail("expected '(' or '.'");
    const std::size_t open = pos_++;

    std::vector<std::string_view> tokens;
    while (at_digit())
      tokens.push_back(digits());
    if (tokens.empty())
      fail("expected a node label");
    std::vector<int> values;
    if (tokens.size() == 1) {
      for (char c : tokens[0])
        values.push_back(c - '0');
    } else {
      for (auto tok : tokens) {
        int v = 0;
        std::from_chars(tok.data(), tok.data() + tok.size(), v);
        values.push_back(v);
      }
    }

    std::vector<GenTree> children;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != ')') {
      children.push_back(tree());
      skip_space();
    }
    if (pos_ >= text_.size())
      fail("missing ')'");
    ++pos_;

    try {
      GenTree t = GenTree::node(Permutation(std::move(values)), std::move(children));
      GenTree shallow = t;
      for (auto &c : shallow.children)
        c = GenTree::leaf(); // children were checked when they were parsed
      check_tree(shallow);
      if (violates_skew(t))
        throw std::invalid_argument("skew rule: first child of " +
                                    to_compact_string(t.label) +
                                    " carries the same label");
      return t;
    } catch (const std::invalid_argument &e) {
      throw ParseError(1, static_cast<int>(open) + 1, e.what());
    }
  }
};

} // namespace

GenTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

} // namespace hrd
