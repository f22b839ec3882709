#include "springweb/tableaux.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

#include "springweb/error.hpp"

namespace springweb {

TwoColumnShape::TwoColumnShape(int n, int k) : n_(n), k_(k) {
  if (n < 2 || k < 1 || 2 * k > n) {
    throw InvalidInput("two column shape needs 1 <= k <= n/2, got n=" + std::to_string(n) +
                       ", k=" + std::to_string(k));
  }
}

std::vector<int> TwoColumnShape::rows() const {
  std::vector<int> out(static_cast<std::size_t>(n_ - k_), 1);
  std::fill_n(out.begin(), k_, 2);
  return out;
}

std::string TwoColumnShape::to_string() const {
  return "(" + std::to_string(n_ - k_) + ", " + std::to_string(k_) + ")*";
}

TwoColumnTableau::TwoColumnTableau(TwoColumnShape shape, std::vector<int> col2)
    : shape_(shape), col2_(std::move(col2)) {
  if (static_cast<int>(col2_.size()) != shape_.k()) {
    throw InvalidInput("second column has " + std::to_string(col2_.size()) +
                       " entries, shape needs " + std::to_string(shape_.k()));
  }
  for (std::size_t i = 0; i < col2_.size(); ++i) {
    const int b = col2_[i];
    if (b < 1 || b > shape_.n()) throw InvalidInput("entry " + std::to_string(b) + " outside [n]");
    if (i > 0 && col2_[i - 1] >= b) throw InvalidInput("second column must be strictly increasing");
    if (b < 2 * static_cast<int>(i + 1)) {
      throw InvalidInput("not standard: b_" + std::to_string(i + 1) + " = " + std::to_string(b) +
                         " < " + std::to_string(2 * (i + 1)));
    }
  }
}

TwoColumnTableau TwoColumnTableau::rectangular(std::vector<int> col2) {
  const int k = static_cast<int>(col2.size());
  return TwoColumnTableau(TwoColumnShape(2 * k, k), std::move(col2));
}

bool TwoColumnTableau::in_col2(int v) const {
  return std::binary_search(col2_.begin(), col2_.end(), v);
}

std::vector<int> TwoColumnTableau::col1() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n() - k()));
  for (int v = 1; v <= n(); ++v) {
    if (!in_col2(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> TwoColumnTableau::rows() const {
  const auto c1 = col1();
  std::vector<std::vector<int>> out;
  for (std::size_t r = 0; r < c1.size(); ++r) {
    if (r < col2_.size()) {
      out.push_back({c1[r], col2_[r]});
    } else {
      out.push_back({c1[r]});
    }
  }
  return out;
}

std::string TwoColumnTableau::to_string() const {
  std::ostringstream os;
  os << "col2={";
  for (std::size_t i = 0; i < col2_.size(); ++i) os << (i ? "," : "") << col2_[i];
  os << "} n=" << n();
  return os.str();
}

namespace {

void extend(const TwoColumnShape& shape, std::vector<int>& prefix,
            std::vector<TwoColumnTableau>& out) {
  const int i = static_cast<int>(prefix.size());
  if (i == shape.k()) {
    out.emplace_back(shape, prefix);
    return;
  }
  const int lo = std::max(2 * (i + 1), prefix.empty() ? 1 : prefix.back() + 1);
  // Leave room for the remaining k-i-1 entries.
  const int hi = shape.n() - (shape.k() - i - 1);
  for (int b = lo; b <= hi; ++b) {
    prefix.push_back(b);
    extend(shape, prefix, out);
    prefix.pop_back();
  }
}

using Grid = std::vector<std::array<int, 2>>;

Grid to_grid(const TwoColumnTableau& t) {
  Grid g(static_cast<std::size_t>(t.k()));
  const auto c1 = t.col1();
  for (int r = 0; r < t.k(); ++r) {
    g[r][0] = c1[r];
    g[r][1] = t.col2()[r];
  }
  return g;
}

TwoColumnTableau from_grid(const Grid& g) {
  std::vector<int> col2;
  col2.reserve(g.size());
  for (const auto& row : g) col2.push_back(row[1]);
  return TwoColumnTableau::rectangular(std::move(col2));
}

void require_rectangular(const TwoColumnTableau& t) {
  if (!t.rectangular()) throw NonRectangularShape(t.n(), t.k());
}

}  // namespace

std::vector<TwoColumnTableau> enumerate_tableaux(const TwoColumnShape& shape) {
  std::vector<TwoColumnTableau> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(shape.k()));
  extend(shape, prefix, out);
  return out;
}

std::vector<int> tau_star(const TwoColumnTableau& t) {
  std::vector<int> out;
  for (int b : t.col2()) {
    if (b - 1 >= 1 && !t.in_col2(b - 1)) out.push_back(b - 1);
  }
  return out;
}

std::optional<int> balanced_prefix(const TwoColumnTableau& t, int max_i) {
  for (int i = 1; i <= std::min(max_i, t.k()); ++i) {
    if (t.b(i) == 2 * i) return i;
  }
  return std::nullopt;
}

TwoColumnTableau promotion(const TwoColumnTableau& t) {
  require_rectangular(t);
  Grid g = to_grid(t);
  int r = t.k() - 1;
  int c = 1;  // n sits in the last cell
  while (r > 0 || c > 0) {
    const int above = r > 0 ? g[r - 1][c] : 0;
    const int left = c > 0 ? g[r][c - 1] : 0;
    if (above > left) {
      g[r][c] = above;
      --r;
    } else {
      g[r][c] = left;
      --c;
    }
  }
  for (auto& row : g) {
    row[0] += 1;
    row[1] += 1;
  }
  g[0][0] = 1;
  return from_grid(g);
}

TwoColumnTableau evacuation(const TwoColumnTableau& t) {
  require_rectangular(t);
  constexpr int kEmpty = 0;
  const int rows = t.k();
  const int n = t.n();
  Grid g = to_grid(t);
  Grid out(static_cast<std::size_t>(rows));
  auto occupied = [&](int r, int c) { return r < rows && c < 2 && g[r][c] != kEmpty; };

  for (int step = 1; step <= n; ++step) {
    // The smallest remaining entry is always at the corner.
    int r = 0;
    int c = 0;
    g[0][0] = kEmpty;
    for (;;) {
      const bool has_below = occupied(r + 1, c);
      const bool has_right = occupied(r, c + 1);
      if (!has_below && !has_right) break;
      if (has_below && (!has_right || g[r + 1][c] < g[r][c + 1])) {
        g[r][c] = g[r + 1][c];
        g[r + 1][c] = kEmpty;
        ++r;
      } else {
        g[r][c] = g[r][c + 1];
        g[r][c + 1] = kEmpty;
        ++c;
      }
    }
    out[r][c] = n + 1 - step;
  }
  return from_grid(out);
}

std::vector<int> parse_label_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::erase_if(item, [](unsigned char ch) { return std::isspace(ch); });
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidInput("not an integer: '" + item + "' in label list '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) return out;
    pos = comma + 1;
  }
}

}  // namespace springweb
