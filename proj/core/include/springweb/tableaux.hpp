#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace springweb {

/// Two column partition (n-k, k)^*: k rows of length two followed by n-2k
/// rows of length one.
class TwoColumnShape {
 public:
  /// Throws InvalidInput unless 1 <= k <= n/2.
  TwoColumnShape(int n, int k);

  static TwoColumnShape rectangle(int k) { return TwoColumnShape(2 * k, k); }

  int n() const { return n_; }
  int k() const { return k_; }
  bool rectangular() const { return n_ == 2 * k_; }

  /// Row lengths of the Young diagram, top to bottom: (2,...,2,1,...,1).
  std::vector<int> rows() const;

  std::string to_string() const;

  friend bool operator==(const TwoColumnShape&, const TwoColumnShape&) = default;
  friend auto operator<=>(const TwoColumnShape&, const TwoColumnShape&) = default;

 private:
  int n_;
  int k_;
};

/// Standard Young tableau of a two column shape, identified by its second
/// column b_1 < ... < b_k. The first column is the complement in [n].
class TwoColumnTableau {
 public:
  /// Throws InvalidInput if col2 is not strictly increasing, leaves [n], has
  /// the wrong length, or violates b_i >= 2i.
  TwoColumnTableau(TwoColumnShape shape, std::vector<int> col2);

  /// Rectangular tableau (k,k)^* with n = 2 * col2.size().
  static TwoColumnTableau rectangular(std::vector<int> col2);

  const TwoColumnShape& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int k() const { return shape_.k(); }
  bool rectangular() const { return shape_.rectangular(); }

  const std::vector<int>& col2() const { return col2_; }
  std::vector<int> col1() const;

  /// 1-based access to b_i.
  int b(int i) const { return col2_.at(static_cast<std::size_t>(i - 1)); }
  bool in_col2(int v) const;

  /// Entries of the tableau row by row, each row left to right.
  std::vector<std::vector<int>> rows() const;

  std::string to_string() const;

  friend bool operator==(const TwoColumnTableau&, const TwoColumnTableau&) = default;
  friend auto operator<=>(const TwoColumnTableau&, const TwoColumnTableau&) = default;

 private:
  TwoColumnShape shape_;
  std::vector<int> col2_;
};

/// Every tableau of the shape, lexicographic in col2.
std::vector<TwoColumnTableau> enumerate_tableaux(const TwoColumnShape& shape);

/// First-column entries j with j+1 in the second column, ascending.
std::vector<int> tau_star(const TwoColumnTableau& t);

/// Smallest i in [1, max_i] with b_i = 2i, if any. Such an i exists iff the
/// first i rows of t are a tableau of shape (i,i)^*.
std::optional<int> balanced_prefix(const TwoColumnTableau& t, int max_i);

/// Promotion on a rectangular tableau, oriented so that the associated
/// matching (and web) rotates clockwise, i -> i+1. Throws NonRectangularShape.
TwoColumnTableau promotion(const TwoColumnTableau& t);

/// Schuetzenberger evacuation by repeated jeu de taquin. Involution.
/// Throws NonRectangularShape.
TwoColumnTableau evacuation(const TwoColumnTableau& t);

/// Parses "3,4,6,8,10". Throws InvalidInput on garbage.
std::vector<int> parse_label_list(const std::string& text);

}  // namespace springweb
