// One line per acceptance criterion; exit status 1 if any fails.
#include "oracles.hpp"

#include "hrd/census.hpp"
#include "hrd/cli.hpp"
#include "hrd/counting.hpp"
#include "hrd/gentree.hpp"
#include "hrd/lowerbound.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using hrd::BigInt;
using hrd::Permutation;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure and a short summary line.
class Checker {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok && pass_) {
      pass_ = false;
      failure_ = what;
    }
  }
  void note(const std::string &text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  Outcome outcome() const { return {pass_, pass_ ? notes_ : "first failure: " + failure_}; }

private:
  bool pass_ = true;
  std::string failure_, notes_;
};

std::vector<Permutation> baxter_of_length(int n) {
  std::vector<Permutation> out;
  for (const auto &v : oracle::all_permutations(n))
    if (oracle::is_baxter(v))
      out.emplace_back(v);
  return out;
}

std::string str(const BigInt &x) { return x.str(); }

Outcome schroeder() {
  Checker c;
  std::ostringstream out, err;
  hrd::cli::run({"sequence", "--k", "2", "--max", "7", "--no-memo"}, out, err);
  c.expect(out.str() == "1 2 6 22 90 394 1806\n", "sequence output " + out.str());
  const auto r = oracle::schroeder(7);
  for (int n = 1; n <= 7; ++n) {
    const BigInt o = hrd::oracle_count(2, n);
    c.expect(o == r[n - 1], "oracle_count(2," + std::to_string(n) + ") = " + str(o));
  }
  c.note("I_2 = 1 2 6 22 90 394 1806");
  return c.outcome();
}

Outcome order5_recurrence() {
  Checker c;
  const auto fast = hrd::count_hrd_fast(5, 30);
  const auto direct = hrd::count_hrd_sequence(5, 30);
  for (int n = 1; n <= 30; ++n) {
    const BigInt lit = hrd::count_hrd_literal(n);
    c.expect(lit == direct[n] && lit == fast.t[n], "n=" + std::to_string(n));
  }
  for (int n = 1; n <= 8; ++n)
    c.expect(hrd::oracle_count(5, n) == direct[n], "oracle n=" + std::to_string(n));
  int baxter5 = 0;
  for (const auto &v : oracle::all_permutations(5))
    baxter5 += oracle::is_baxter(v);
  c.expect(direct[5] == 92 && baxter5 == 92, "t_5 = " + str(direct[5]));
  c.note("t_5 = 92, t_30 = " + str(direct[30]));
  return c.outcome();
}

Outcome census() {
  Checker c;
  const std::vector<std::uint64_t> expected{0, 0, 2, 0, 0, 2};
  for (int l = 2; l <= 5; ++l)
    c.expect(hrd::census_simple_baxter(l).count == expected[l], "s_" + std::to_string(l));
  const auto five = hrd::census_simple_baxter(5, true).permutations;
  c.expect(std::set<Permutation>(five.begin(), five.end()) ==
               std::set<Permutation>{Permutation{4, 1, 3, 5, 2}, Permutation{2, 5, 3, 1, 4}},
           "s_5 list");
  const auto s6 = hrd::census_simple_baxter(6).count;
  const auto s7 = hrd::census_simple_baxter(7).count;
  const auto s8 = hrd::census_simple_baxter(8).count;
  c.expect(s7 >= 1, "s_7 >= 1");
  c.note("s_6 = " + std::to_string(s6) + ", s_7 = " + std::to_string(s7) +
         ", s_8 = " + std::to_string(s8));
  return c.outcome();
}

Outcome roundtrips() {
  Checker c;
  int perms = 0, trees = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Permutation &p : baxter_of_length(n)) {
      c.expect(hrd::fp2bp(hrd::bp2fp(p)) == p, "bp2fp " + hrd::to_string(p));
      ++perms;
    }
  for (int k = 2; k <= 7; ++k)
    for (int n = 1; n <= 7; ++n)
      for (const hrd::GenTree &t : hrd::enumerate_trees(k, n)) {
        c.expect(hrd::fp2bp(hrd::floorplan_of_tree(t)) == hrd::perm_of_tree(t),
                 "tree " + hrd::format_tree(t));
        ++trees;
      }
  c.note(std::to_string(perms) + " permutations, " + std::to_string(trees) + " trees");
  return c.outcome();
}

Outcome blocks_envelopes() {
  Checker c;
  int floorplans = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Permutation &p : baxter_of_length(n)) {
      std::set<std::vector<int>> from_blocks;
      for (auto [i, j] : oracle::blocks(oracle::values_of(p))) {
        if (j == i || j - i + 1 == n)
          continue;
        std::vector<int> labels;
        for (int pos = i; pos <= j; ++pos)
          labels.push_back(p[pos + 1]);
        std::sort(labels.begin(), labels.end());
        from_blocks.insert(labels);
      }
      std::set<std::vector<int>> envelopes;
      for (const auto &e : hrd::enveloping_rectangles(hrd::bp2fp(p)))
        if (e.size() > 1 && static_cast<int>(e.size()) < n)
          envelopes.insert(e);
      c.expect(from_blocks == envelopes, hrd::to_string(p));
      ++floorplans;
    }
  c.note(std::to_string(floorplans) + " floorplans");
  return c.outcome();
}

bool sum_decomposable(const Permutation &p, const Permutation &skeleton) {
  return p.size() > 1 && hrd::decompose(p).skeleton == skeleton;
}

Outcome decomposition() {
  Checker c;
  std::uint64_t cases = 0;
  const std::vector<Permutation> skeletons{Permutation{1, 2}, Permutation{2, 1},
                                           Permutation{2, 5, 3, 1, 4},
                                           Permutation{4, 1, 3, 5, 2}};
  std::vector<std::vector<Permutation>> by_length(9);
  for (int n = 1; n <= 8; ++n)
    for (const auto &v : oracle::all_permutations(n))
      by_length[n].emplace_back(v);

  for (const Permutation &sigma : skeletons) {
    const int m = sigma.size();
    std::vector<Permutation> children;
    std::function<void(int)> fill = [&](int budget) {
      const int slot = static_cast<int>(children.size());
      if (slot == m) {
        const Permutation p = hrd::inflate(sigma, children);
        const auto d = hrd::decompose(p);
        c.expect(d.skeleton == sigma && d.children == children, hrd::to_string(p));
        ++cases;
        return;
      }
      const int reserve = m - slot - 1;
      for (int len = 1; len <= budget - reserve; ++len)
        for (const Permutation &alpha : by_length[len]) {
          if (slot == 0 && m == 2 && sum_decomposable(alpha, sigma))
            continue;
          children.push_back(alpha);
          fill(budget - len);
          children.pop_back();
        }
    };
    fill(8);
  }

  int domain = 0;
  for (int k = 2; k <= 7; ++k) {
    std::set<std::string> seen;
    for (int n = 1; n <= 7; ++n)
      for (const Permutation &p : baxter_of_length(n))
        if (auto t = hrd::tree_of_perm(p, k)) {
          c.expect(seen.insert(hrd::format_tree(*t)).second, "tree collision");
          c.expect(hrd::perm_of_tree(*t) == p, "tree inverse");
          ++domain;
        }
  }
  c.note(std::to_string(cases) + " inflations, " + std::to_string(domain) + " trees");
  return c.outcome();
}

Outcome families() {
  Checker c;
  for (const Permutation &seed : {Permutation{4, 1, 3, 5, 2}, Permutation{2, 5, 3, 1, 4}})
    for (int n = 5; n <= 11; ++n) {
      const auto r = hrd::insertion_family(5, n, seed);
      c.expect(r.distinct == r.expected && r.all_baxter && r.all_hrd_k && r.none_hrd_below,
               hrd::format_report(r));
    }
  c.note("3^6 = 729 members at n = 11 for both seeds");
  return c.outcome();
}

Outcome strictness() {
  Checker c;
  auto verified = [&](const hrd::MosaicFloorplan &f, int rooms) {
    const Permutation label = hrd::fp2bp(f);
    const auto v = oracle::values_of(label);
    c.expect(hrd::validate(f).ok() && f.size() == rooms && oracle::is_baxter(v) &&
                 oracle::is_simple(v),
             "IHRD_" + std::to_string(rooms) + " " + hrd::to_string(label));
  };
  for (int k : {7, 8}) {
    const Permutation seed = hrd::census_simple_baxter(k, true).permutations.front();
    auto first = hrd::grow_ihrd_traced(hrd::bp2fp(seed));
    verified(first.floorplan, k + 2);
    std::string note = "IHRD_" + std::to_string(k) + " " + hrd::to_compact_string(seed) +
                       " -> IHRD_" + std::to_string(k + 2) +
                       (first.used_fallback ? " (fallback)" : " (local move)");
    if (k == 7) {
      auto second = hrd::grow_ihrd_traced(first.floorplan);
      verified(second.floorplan, 11);
      note += " -> IHRD_11" + std::string(second.used_fallback ? " (fallback)" : " (local move)");
    }
    c.note(note);
  }
  return c.outcome();
}

Outcome performance() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  const auto table = hrd::count_hrd_fast(5, 300);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 4.0, "count_hrd_fast(5, 300) took " + std::to_string(secs) + " s");
  for (int n = 1; n <= 30; ++n)
    c.expect(table.t[n] == hrd::count_hrd_literal(n), "literal n=" + std::to_string(n));
  char buf[64];
  std::snprintf(buf, sizeof buf, "fast(5, 300) in %.3f s", secs);
  c.note(buf);
  c.note("t_300 has " + std::to_string(str(table.t[300]).size()) + " digits");
  return c.outcome();
}

Outcome gap() {
  Checker c;
  for (int k : {4, 6}) {
    const bool skeleton = hrd::skeleton_count(k + 1) >= 1;
    for (int n = k + 1; n <= 8; ++n) {
      const BigInt diff = hrd::oracle_count(k + 1, n) - hrd::oracle_count(k, n);
      const BigInt bound =
          skeleton ? BigInt(boost::multiprecision::pow(BigInt(3), n - (k + 1))) : BigInt(0);
      c.expect(diff >= bound, "k=" + std::to_string(k) + " n=" + std::to_string(n));
      c.note("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " + str(diff) +
             " >= " + str(bound));
    }
  }
  return c.outcome();
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Schroeder identity for k = 2", schroeder},
      {"order-5 recurrence: literal = general = fast = oracle", order5_recurrence},
      {"census fixtures s_2..s_5, s_7 >= 1", census},
      {"bp2fp/fp2bp and tree floorplan roundtrips", roundtrips},
      {"blocks = enveloping rectangles, n <= 7", blocks_envelopes},
      {"decomposition uniqueness", decomposition},
      {"lower-bound families 3^(n-5), n <= 11", families},
      {"hierarchy strictness by grow_ihrd", strictness},
      {"count_hrd_fast(5, 300) performance", performance},
      {"gap echo for k in {4, 6}", gap},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first
              << " (" << timing << ")" << (o.detail.empty() ? "" : ": " + o.detail) << '\n';
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
