#include "hrd/counting.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hrd {

namespace {

constexpr const char *kMagic = "hrd-count-table";
constexpr int kVersion = 1;

} // namespace

std::filesystem::path default_memo_directory() {
  if (const char *dir = std::getenv("HRD_MEMO_DIR"); dir && *dir)
    return dir;
  if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "hrd";
  if (const char *home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "hrd";
  return std::filesystem::temp_directory_path() / "hrd";
}

std::filesystem::path memo_path(const std::filesystem::path &dir, int k) {
  return dir / ("hrd_k" + std::to_string(k) + ".txt");
}

void save_table(const CountTable &table, const std::filesystem::path &file) {
  std::filesystem::create_directories(file.parent_path());
  // Write-then-rename so a concurrent reader never sees a partial file.
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp);
    out << kMagic << " v" << kVersion << " k=" << table.k << '\n';
    for (int m = 1; m <= table.n_max(); ++m)
      out << m << ' ' << table.t[m] << ' ' << table.a[m] << '\n';
  }
  std::filesystem::rename(tmp, file);
}

std::optional<CountTable> load_table(const std::filesystem::path &file, int k) {
  std::ifstream in(file);
  if (!in)
    return std::nullopt;
  std::string header;
  std::getline(in, header);
  std::ostringstream expected;
  expected << kMagic << " v" << kVersion << " k=" << k;
  if (header != expected.str())
    return std::nullopt;

  CountTable table;
  table.k = k;
  table.t.push_back(0);
  table.a.push_back(0);
  std::string line;
  int m_expected = 1;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream fields(line);
    int m = 0;
    std::string t_text, a_text;
    if (!(fields >> m >> t_text >> a_text) || m != m_expected)
      return std::nullopt;
    try {
      table.t.emplace_back(t_text);
      table.a.emplace_back(a_text);
    } catch (const std::exception &) {
      return std::nullopt;
    }
    ++m_expected;
  }
  if (table.n_max() < 1 || !consistent(table))
    return std::nullopt;
  table.b = table.a;
  return table;
}

CountTable memoized_table(int k, int n_max, const MemoOptions &options) {
  if (!options.enabled)
    return count_hrd_fast(k, n_max);
  const auto file = memo_path(options.directory, k);
  if (auto stored = load_table(file, k); stored && stored->n_max() >= n_max) {
    stored->t.resize(n_max + 1);
    stored->a.resize(n_max + 1);
    stored->b.resize(n_max + 1);
    return *stored;
  }
  CountTable table = count_hrd_fast(k, n_max);
  try {
    save_table(table, file);
  } catch (const std::exception &) {
    // best effort: the table is still returned
  }
  return table;
}

} // namespace hrd
