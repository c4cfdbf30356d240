#ifndef HRD_PERMUTATION_HPP
#define HRD_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hrd {

/// Raised by every text parser in the library. Line and column are one-based.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string &message);

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/**
 * A bijection on {1..n}, n >= 1, stored in one-line notation.
 *
 * Positions and values are one-indexed: p[1] is the first entry. The
 * constructor rejects anything that is not a bijection.
 */
class Permutation {
public:
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int position) const { return values_[position - 1]; }
  std::span<const int> values() const { return values_; }

  /// Position of `value`, one-indexed.
  int position_of(int value) const;

  friend auto operator<=>(const Permutation &, const Permutation &) = default;
  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> values_;
};

/// Whitespace-separated form, e.g. "4 1 3 5 2".
std::string to_string(const Permutation &p);
/// Digit form ("41352") when n <= 9, otherwise the spaced form.
std::string to_compact_string(const Permutation &p);
std::ostream &operator<<(std::ostream &os, const Permutation &p);

/// Parses the spaced form, or the compact digit form when it is a single
/// token of at most nine digits.
Permutation parse_permutation(std::string_view text, int line = 1);

/// Rank-orders an arbitrary sequence of distinct integers.
Permutation standardize(std::span<const int> values);

/// Segment [start, end] of positions (inclusive, one-indexed) whose values
/// form a consecutive integer range.
struct Block {
  int start;
  int end;

  int length() const { return end - start + 1; }
  friend auto operator<=>(const Block &, const Block &) = default;
};

/// sigma[alpha_1, ..., alpha_m]. `children` are listed by position.
struct Decomposition {
  Permutation skeleton;
  std::vector<Permutation> children;

  friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

struct Symmetries {
  Permutation reverse;
  Permutation complement;
  Permutation inverse;
};

bool contains_pattern(const Permutation &text, const Permutation &pattern);

/// No quadruple i<j<k<l with p[k] < p[i]+1 = p[l] < p[j] or
/// p[j] < p[i] = p[l]+1 < p[k]. Runs in O(n^2) by scanning between each
/// pair of adjacent values.
bool is_baxter(const Permutation &p);

/// All blocks, trivial ones included, sorted by (start, end).
std::vector<Block> blocks(const Permutation &p);

/// True when every block is a singleton or the whole range. 1, 12 and 21
/// are simple under this definition.
bool is_simple(const Permutation &p);

Permutation one_point_delete(const Permutation &p, int position);

Permutation inflate(const Permutation &skeleton,
                    std::span<const Permutation> children);

/// Canonical substitution decomposition with a simple non-singleton
/// skeleton. For skeleton 12 (21) the first child is the shortest
/// prefix, so it is not itself 12- (21-) decomposable.
Decomposition decompose(const Permutation &p);

Symmetries symmetries(const Permutation &p);

/// Skeleton 12 or 21.
inline bool is_trivial_cut(const Permutation &p) { return p.size() == 2; }

} // namespace hrd

#endif
