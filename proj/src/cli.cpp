#include "hrd/cli.hpp"

#include "hrd/counting.hpp"
#include "hrd/gentree.hpp"
#include "hrd/lowerbound.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hrd::cli {

namespace {

std::string read_file(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string join(const std::vector<std::string> &tokens) {
  std::string out;
  for (const auto &t : tokens) {
    if (!out.empty())
      out += ' ';
    out += t;
  }
  return out;
}

struct PermInput {
  std::vector<std::string> tokens;
  std::string file;

  void attach(CLI::App *app) {
    app->add_option("perm", tokens, "permutation, e.g. \"2 4 1 3\" or 2413");
    app->add_option("--file", file, "read the permutation from a file");
  }

  Permutation get() const {
    if (!file.empty() && !tokens.empty())
      throw std::invalid_argument("give the permutation inline or with --file, not both");
    if (!file.empty())
      return parse_permutation(read_file(file));
    if (tokens.empty())
      throw std::invalid_argument("missing permutation");
    return parse_permutation(join(tokens));
  }
};

const char *boolean(bool b) { return b ? "true" : "false"; }

MemoOptions memo_options(bool no_memo) {
  return {default_memo_directory(), !no_memo};
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Hierarchical rectangular dissections and Baxter permutations", "hrd"};
  app.require_subcommand(1);

  std::ostringstream buf;
  std::function<int()> action;

  // check
  auto *check = app.add_subcommand("check", "test a permutation predicate");
  std::string predicate;
  int check_k = 0;
  PermInput check_perm;
  check->add_option("predicate", predicate)
      ->required()
      ->check(CLI::IsMember({"baxter", "simple", "ihrd", "hrd"}));
  check->add_option("--k", check_k, "order, for hrd");
  check_perm.attach(check);
  check->callback([&] {
    action = [&] {
      const Permutation p = check_perm.get();
      bool answer = false;
      if (predicate == "baxter")
        answer = is_baxter(p);
      else if (predicate == "simple")
        answer = is_simple(p);
      else if (predicate == "ihrd")
        answer = is_ihrd(p);
      else {
        if (check_k == 0)
          throw std::invalid_argument("check hrd needs --k");
        require_order(check_k);
        answer = is_hrd(p, check_k);
      }
      buf << boolean(answer) << '\n';
      return answer ? kOk : kFalse;
    };
  });

  // decompose
  auto *decomp = app.add_subcommand("decompose", "canonical substitution decomposition");
  PermInput decomp_perm;
  decomp_perm.attach(decomp);
  decomp->callback([&] {
    action = [&] {
      const Decomposition d = decompose(decomp_perm.get());
      buf << "skeleton " << to_string(d.skeleton) << '\n';
      for (std::size_t i = 0; i < d.children.size(); ++i)
        buf << "child " << i + 1 << ' ' << to_string(d.children[i]) << '\n';
      return kOk;
    };
  });

  // tree
  auto *tree = app.add_subcommand("tree", "skewed generating tree of order k");
  PermInput tree_perm;
  int tree_k = 0;
  tree_perm.attach(tree);
  tree->add_option("--k", tree_k)->required();
  tree->callback([&] {
    action = [&] {
      require_order(tree_k);
      const auto t = tree_of_perm(tree_perm.get(), tree_k);
      if (!t) {
        buf << "none\n";
        return kFalse;
      }
      buf << format_tree(*t) << '\n';
      return kOk;
    };
  });

  // fp2bp, render, grow-ihrd
  std::string fp_file;
  auto *fp2bp_cmd = app.add_subcommand("fp2bp", "Abe-label of a floorplan file");
  fp2bp_cmd->add_option("file", fp_file)->required();
  fp2bp_cmd->callback([&] {
    action = [&] {
      buf << to_string(fp2bp(parse_floorplan(read_file(fp_file)))) << '\n';
      return kOk;
    };
  });
  auto *render = app.add_subcommand("render", "draw a floorplan file");
  render->add_option("file", fp_file)->required();
  render->callback([&] {
    action = [&] {
      buf << render_ascii(parse_floorplan(read_file(fp_file)));
      return kOk;
    };
  });
  auto *grow = app.add_subcommand("grow-ihrd", "irreducible floorplan with two more rooms");
  grow->add_option("file", fp_file)->required();
  grow->callback([&] {
    action = [&] {
      const GrowResult r = grow_ihrd_traced(parse_floorplan(read_file(fp_file)));
      buf << format_floorplan(r.floorplan);
      err << "move: " << r.move << '\n';
      return kOk;
    };
  });

  // bp2fp
  auto *bp2fp_cmd = app.add_subcommand("bp2fp", "floorplan of a Baxter permutation");
  PermInput bp_perm;
  bp_perm.attach(bp2fp_cmd);
  bp2fp_cmd->callback([&] {
    action = [&] {
      buf << format_floorplan(bp2fp(bp_perm.get()));
      return kOk;
    };
  });

  // count
  auto *count = app.add_subcommand("count", "number of HRD_k permutations of length n");
  int count_k = 0, count_n = 0;
  bool literal = false, fast = false, oracle = false, override_cap = false, no_memo = false;
  count->add_option("--k", count_k)->required();
  count->add_option("--n", count_n)->required();
  auto *lit = count->add_flag("--literal", literal, "order-5 dynamic program as printed");
  auto *fst = count->add_flag("--fast", fast, "convolution counter");
  auto *orc = count->add_flag("--oracle", oracle, "exhaustive scan of S_n");
  lit->excludes(fst)->excludes(orc);
  fst->excludes(orc);
  count->add_flag("--override", override_cap, "lift the oracle cap");
  count->add_flag("--no-memo", no_memo, "do not read or write stored tables");
  count->callback([&] {
    action = [&] {
      require_order(count_k);
      if (count_n < 1)
        throw std::invalid_argument("--n must be at least 1");
      BigInt value;
      if (literal) {
        if (count_k != 5)
          throw std::invalid_argument("--literal counts order 5 only");
        value = count_hrd_literal(count_n);
      } else if (fast) {
        value = memoized_table(count_k, count_n, memo_options(no_memo)).t[count_n];
      } else if (oracle) {
        value = oracle_count(count_k, count_n, override_cap);
      } else {
        value = count_hrd(count_k, count_n);
      }
      buf << value << '\n';
      return kOk;
    };
  });

  // sequence
  auto *seq = app.add_subcommand("sequence", "I_{k,1..max}");
  int seq_k = 0, seq_max = 0;
  bool csv = false;
  seq->add_option("--k", seq_k)->required();
  seq->add_option("--max", seq_max)->required();
  seq->add_flag("--csv", csv, "one \"n,count\" row per line");
  seq->add_flag("--no-memo", no_memo, "do not read or write stored tables");
  seq->callback([&] {
    action = [&] {
      require_order(seq_k);
      if (seq_max < 1)
        throw std::invalid_argument("--max must be at least 1");
      const CountTable table = memoized_table(seq_k, seq_max, memo_options(no_memo));
      if (csv) {
        buf << "n,count\n";
        for (int m = 1; m <= seq_max; ++m)
          buf << m << ',' << table.t[m] << '\n';
      } else {
        for (int m = 1; m <= seq_max; ++m)
          buf << (m > 1 ? " " : "") << table.t[m];
        buf << '\n';
      }
      return kOk;
    };
  });

  // census
  auto *census = app.add_subcommand("census", "simple Baxter permutations of one length");
  int census_len = 0;
  bool list = false;
  census->add_option("--len", census_len)->required();
  census->add_flag("--list", list, "print the permutations too");
  census->add_flag("--override", override_cap, "allow one length above the cap");
  census->callback([&] {
    action = [&] {
      const CensusEntry e = census_simple_baxter(census_len, list, override_cap);
      buf << e.count << '\n';
      for (const Permutation &p : e.permutations)
        buf << to_string(p) << '\n';
      return kOk;
    };
  });

  // lowerbound
  auto *lb = app.add_subcommand("lowerbound", "3^(n-k) family grown from one IHRD_k");
  int lb_k = 0, lb_n = 0;
  std::string seed_text;
  bool all_sites = false;
  lb->add_option("--k", lb_k)->required();
  lb->add_option("--n", lb_n)->required();
  lb->add_option("--seed", seed_text, "simple Baxter permutation of length k");
  lb->add_flag("--all-sites", all_sites, "use every safe site, not three");
  lb->add_flag("--override", override_cap, "lift the family size cap");
  lb->callback([&] {
    action = [&] {
      require_order(lb_k);
      if (lb_n < lb_k)
        throw std::invalid_argument("--n must be at least --k");
      if (lb_n - lb_k > kFamilyCap && !override_cap)
        throw CapExceeded("n - k above " + std::to_string(kFamilyCap));
      std::optional<Permutation> seed;
      if (!seed_text.empty()) {
        seed = parse_permutation(seed_text);
      } else {
        const CensusEntry e = census_simple_baxter(lb_k, true);
        if (e.permutations.empty())
          throw std::invalid_argument("no simple Baxter permutation of length " +
                                      std::to_string(lb_k));
        seed = e.permutations.front();
      }
      buf << format_report(insertion_family(lb_k, lb_n, *seed, all_sites)) << '\n';
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "hrd: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    const int code = action();
    out << buf.str();
    return code;
  } catch (const ParseError &e) {
    err << "hrd: parse error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CapExceeded &e) {
    err << "hrd: " << e.what() << " (use --override)\n";
    return kCapped;
  } catch (const std::invalid_argument &e) {
    err << "hrd: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception &e) {
    err << "hrd: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

} // namespace hrd::cli
