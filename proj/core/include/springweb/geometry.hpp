#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "springweb/diagrams.hpp"
#include "springweb/tableaux.hpp"
#include "springweb/webs.hpp"

namespace springweb {

/// One base of an iterated fiber bundle: P^n, Gr_d(n) (d-planes in C^n),
/// Fl(n), or a product of those.
struct BundleFactor {
  enum class Kind { Projective, Grassmannian, Flag, Product };

  Kind kind = Kind::Projective;
  int d = 0;
  int n = 0;
  std::vector<BundleFactor> parts;

  static BundleFactor projective(int n);
  static BundleFactor grassmannian(int d, int n);
  static BundleFactor flag(int n);
  static BundleFactor product(std::vector<BundleFactor> parts);

  int dimension() const;
  bool is_point() const;
  /// "P^2", "Gr_5(6)", "Fl(7)", "Fl(7) x Fl(3)".
  std::string to_string() const;

  friend bool operator==(const BundleFactor&, const BundleFactor&) = default;
  friend std::strong_ordering operator<=>(const BundleFactor& x, const BundleFactor& y);
};

/// Innermost base first.
using BundleBase = std::vector<BundleFactor>;

std::string to_string(const BundleBase& base);

/// Drops point factors (also inside products), collapses one-member products
/// and sorts product members, so Fl(a) x Fl(b) == Fl(b) x Fl(a).
BundleBase canonicalize(const BundleBase& base);
int dimension(const BundleBase& base);

/// sum (i-1) * eta_i for a partition eta (weakly decreasing, positive parts).
int springer_dimension(std::span<const int> partition);
int springer_dimension(const TwoColumnShape& shape);

struct FmsoTriple {
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const FmsoTriple&, const FmsoTriple&) = default;
};

/// (a, b, c) of a smooth tableau from tau*(T), with the non-rectangular
/// variant when |tau*| = 2 and n lies in the first column. Throws
/// SingularComponent.
FmsoTriple fmso_triple(const TwoColumnTableau& t);

/// (Fl(a+b) x Fl(b+c), Gr_a(a+c), P^b, ..., P^{k-1}) with k the length of
/// the second column. Not canonicalised.
BundleBase base_from_triple(const FmsoTriple& triple, int k);
BundleBase base_from_triple(const TwoColumnTableau& t);

/// Base read off a forest web from its claw sizes and the multiplicity at the
/// second claw. Throws NonForestWeb.
BundleBase base_from_web(const HourglassWeb& w);

/// Base read off a matching-and-ray diagram from its short edges, rays and
/// pseudoclaw sizes. Throws SingularComponent.
BundleBase base_from_diagram(const MatchingRayDiagram& m);

}  // namespace springweb
