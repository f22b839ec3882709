// Test-only oracles and generators. Nothing here calls into the library
// beyond constructing values, so the oracles stay independent of it.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

inline std::int64_t catalan(int k) { return binomial(2 * k, k) / (k + 1); }

/// Hook length count of SYT of shape (n-k, k)*, i.e. the ballot number.
inline std::int64_t two_column_count(int n, int k) { return binomial(n, k) - binomial(n, k - 1); }

/// Matching by the parenthesis rule: col2 entries close the most recent open
/// first-column entry.
inline std::vector<std::pair<int, int>> stack_matching(int n, const std::vector<int>& col2) {
  std::vector<int> open;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= n; ++v) {
    if (std::find(col2.begin(), col2.end(), v) != col2.end()) {
      edges.emplace_back(open.back(), v);
      open.pop_back();
    } else {
      open.push_back(v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::vector<int> col1_of(int n, const std::vector<int>& col2) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (std::find(col2.begin(), col2.end(), v) == col2.end()) out.push_back(v);
  return out;
}

/// Evacuation of a rectangle: rotate by 180 degrees and complement entries.
inline std::vector<int> evacuation_rect(int n, const std::vector<int>& col2) {
  std::vector<int> out;
  for (int v : col1_of(n, col2)) out.push_back(n + 1 - v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Textbook promotion: delete 1, slide the hole out by jeu de taquin,
/// subtract 1 from every entry and put n in the vacated cell. Rectangles only.
inline std::vector<int> textbook_promotion(int n, const std::vector<int>& col2) {
  const int k = n / 2;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(k), std::vector<int>(2));
  const auto col1 = col1_of(n, col2);
  for (int r = 0; r < k; ++r) {
    grid[r][0] = col1[r];
    grid[r][1] = col2[r];
  }
  int r = 0, c = 0;
  while (true) {
    const bool has_below = r + 1 < k;
    const bool has_right = c == 0;
    if (!has_below && !has_right) break;
    if (has_right && (!has_below || grid[r][1] < grid[r + 1][c])) {
      grid[r][c] = grid[r][1];
      c = 1;
    } else {
      grid[r][c] = grid[r + 1][c];
      ++r;
    }
  }
  grid[r][c] = n + 1;
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.push_back(grid[i][1] - 1);
  return out;
}

/// Uniform random ballot sequence, generated by rejection-free counting:
/// each step chooses the second column with probability proportional to the
/// number of completions.
class TableauGen {
 public:
  explicit TableauGen(std::uint32_t seed) : rng_(seed) {}

  std::vector<int> col2(int n, int k) {
    std::vector<int> out;
    int ones = 0, twos = 0;
    for (int v = 1; v <= n; ++v) {
      // completions if v goes to column 2 vs column 1
      const std::int64_t to2 = twos < k && twos < ones ? completions(n - v, ones, twos + 1, k) : 0;
      const std::int64_t to1 = ones < n - k ? completions(n - v, ones + 1, twos, k) : 0;
      std::uniform_int_distribution<std::int64_t> pick(0, to1 + to2 - 1);
      if (pick(rng_) < to2) {
        out.push_back(v);
        ++twos;
      } else {
        ++ones;
      }
    }
    return out;
  }

  std::mt19937& rng() { return rng_; }

 private:
  // Ways to finish with `left` more labels from column lengths (ones, twos).
  static std::int64_t completions(int left, int ones, int twos, int k) {
    const int need2 = k - twos;
    if (need2 < 0 || need2 > left) return 0;
    // Ballot count for a lattice path from (ones, twos) staying twos <= ones.
    const int n1 = left - need2;
    const std::int64_t all = binomial(left, need2);
    // reflect at the line twos = ones + 1
    const int shift = ones - twos + 1;
    const std::int64_t bad = (need2 - shift >= 0 && n1 + shift <= left) ? binomial(left, need2 - shift) : 0;
    return all - bad;
  }

  std::mt19937 rng_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
    ++count;
  return count;
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout.
inline CommandResult run(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace oracle
