#include "hrd/counting.hpp"

#include "hrd/gentree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hrd {

namespace {

void require_size(int n) {
  if (n < 1)
    throw std::invalid_argument("size n must be at least 1");
}

// s_l for l = 0..limit.
std::vector<BigInt> skeleton_counts(int limit) {
  std::vector<BigInt> s(limit + 1, 0);
  for (int l = 2; l <= limit; ++l)
    s[l] = skeleton_count(l);
  return s;
}

} // namespace

BigInt count_hrd_literal(int n) {
  require_size(n);
  // T[0] = 0 absorbs the iterations whose last part the printed loop
  // bounds allow to reach zero.
  std::vector<BigInt> T(n + 1, 0);
  T[1] = 1;
  for (int m = 2; m <= n; ++m) {
    BigInt x = 0, y = 0, z = 0;
    for (int i = 1; i <= m - 1; ++i)
      x += T[i] * T[m - i];
    for (int i = 1; i <= m - 4; ++i)
      for (int j = 1; j <= std::min(m - i, m - 4); ++j)
        for (int k = 1; k <= std::min(m - (i + j), m - 4); ++k)
          for (int l = 1; l <= std::min(m - (i + j + k), m - 4); ++l)
            y += T[i] * T[j] * T[k] * T[l] * T[m - (i + j + k + l)];
    for (int h = 1; h <= m - 5; ++h)
      for (int i = 1; i <= std::min(m - h, m - 5); ++i)
        for (int j = 1; j <= std::min(m - (h + i), m - 5); ++j)
          for (int k = 1; k <= std::min(m - (h + i + j), m - 5); ++k)
            for (int l = 1; l <= std::min(m - (h + i + j + k), m - 5); ++l)
              z += T[h] * T[i] * T[j] * T[k] * T[l] *
                   T[m - (h + i + j + k + l)];
    T[m] = x + 2 * y + 2 * z + T[m - 1];
  }
  return T[n];
}

std::vector<BigInt> count_hrd_sequence(int k, int n) {
  require_order(k);
  require_size(n);
  const std::vector<BigInt> s = skeleton_counts(std::min(k, n));
  std::vector<BigInt> t(n + 1, 0), a(n + 1, 0);
  t[1] = 1;

  // Sum over compositions of m into `parts` parts of the product of t.
  std::function<BigInt(int, int)> composition_sum = [&](int m, int parts) {
    if (parts == 1)
      return t[m];
    BigInt total = 0;
    for (int first = 1; first <= m - (parts - 1); ++first)
      total += t[first] * composition_sum(m - first, parts - 1);
    return total;
  };

  for (int m = 2; m <= n; ++m) {
    // root 12: first child any non-12 tree (a leaf when i = 1)
    a[m] = t[m - 1];
    for (int i = 2; i <= m - 1; ++i)
      a[m] += t[m - i] * (t[i] - a[i]);
    BigInt skeletons = 0;
    for (int l = 4; l <= std::min(k, m); ++l)
      if (s[l] != 0)
        skeletons += s[l] * composition_sum(m, l);
    t[m] = 2 * a[m] + skeletons;
  }
  return t;
}

BigInt count_hrd(int k, int n) { return count_hrd_sequence(k, n)[n]; }

CountTable count_hrd_fast(int k, int n_max) {
  require_order(k);
  require_size(n_max);
  const std::vector<BigInt> s = skeleton_counts(std::min(k, n_max));

  CountTable table;
  table.k = k;
  table.t.assign(n_max + 1, 0);
  table.a.assign(n_max + 1, 0);
  table.b.assign(n_max + 1, 0);
  table.composition_sums.assign(k + 1, std::vector<BigInt>(n_max + 1, 0));
  auto &t = table.t;
  auto &a = table.a;
  auto &b = table.b;
  auto &C = table.composition_sums;

  t[1] = 1;
  for (int m = 2; m <= n_max; ++m) {
    // C_l[m] only reads t below m, so it can be filled before t[m].
    for (int l = 2; l <= std::min(k, m); ++l) {
      BigInt sum = 0;
      for (int i = 1; i <= m - (l - 1); ++i) {
        const BigInt &rest = l == 2 ? t[m - i] : C[l - 1][m - i];
        if (rest != 0)
          sum += t[i] * rest;
      }
      C[l][m] = std::move(sum);
    }
    BigInt sum_a = t[m - 1], sum_b = t[m - 1];
    for (int i = 2; i <= m - 1; ++i) {
      sum_a += t[m - i] * (t[i] - a[i]);
      sum_b += t[m - i] * (t[i] - b[i]);
    }
    if (sum_a != sum_b)
      throw std::logic_error("12- and 21-rooted counts diverge at m = " +
                             std::to_string(m));
    a[m] = std::move(sum_a);
    b[m] = std::move(sum_b);

    BigInt total = a[m] + b[m];
    for (int l = 4; l <= std::min(k, m); ++l)
      if (s[l] != 0)
        total += s[l] * C[l][m];
    t[m] = std::move(total);
  }
  return table;
}

BigInt oracle_count(int k, int n, bool override_cap) {
  require_order(k);
  require_size(n);
  if (n > kOracleCap && !override_cap)
    throw CapExceeded("oracle scan of S_" + std::to_string(n) +
                      " exceeds the cap of " + std::to_string(kOracleCap));
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  BigInt count = 0;
  do {
    if (is_hrd(Permutation(values), k))
      ++count;
  } while (std::next_permutation(values.begin(), values.end()));
  return count;
}

std::vector<BigInt> sequence(int k, int n_max) {
  CountTable table = count_hrd_fast(k, n_max);
  return {table.t.begin() + 1, table.t.end()};
}

bool consistent(const CountTable &table) {
  const int n = table.n_max();
  const int k = table.k;
  if (k < 2 || n < 1 || table.t[1] != 1 ||
      static_cast<int>(table.a.size()) != n + 1)
    return false;
  const std::vector<BigInt> s = skeleton_counts(std::min(k, n));
  const auto &t = table.t;
  const auto &a = table.a;

  // Composition sums rebuilt from the stored t alone.
  std::vector<std::vector<BigInt>> C(k + 1, std::vector<BigInt>(n + 1, 0));
  for (int m = 1; m <= n; ++m)
    C[1][m] = t[m];
  for (int l = 2; l <= std::min(k, n); ++l)
    for (int m = l; m <= n; ++m)
      for (int i = 1; i <= m - (l - 1); ++i)
        C[l][m] += t[i] * C[l - 1][m - i];

  if (a[1] != 0)
    return false;
  for (int m = 2; m <= n; ++m) {
    BigInt expect_a = t[m - 1];
    for (int i = 2; i <= m - 1; ++i)
      expect_a += t[m - i] * (t[i] - a[i]);
    if (a[m] != expect_a)
      return false;
    BigInt b = t[m] - a[m];
    for (int l = 4; l <= std::min(k, m); ++l)
      b -= s[l] * C[l][m];
    if (b != a[m])
      return false;
  }
  return true;
}

} // namespace hrd
