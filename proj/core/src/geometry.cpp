#include "springweb/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "springweb/classify.hpp"
#include "springweb/error.hpp"

namespace springweb {

std::strong_ordering operator<=>(const BundleFactor& x, const BundleFactor& y) {
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.d <=> y.d; c != 0) return c;
  if (auto c = x.n <=> y.n; c != 0) return c;
  return std::lexicographical_compare_three_way(x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end());
}

BundleFactor BundleFactor::projective(int n) {
  if (n < 0) throw InvalidInput("P^n needs n >= 0");
  return {Kind::Projective, 0, n, {}};
}

BundleFactor BundleFactor::grassmannian(int d, int n) {
  if (d < 0 || d > n) throw InvalidInput("Gr_d(n) needs 0 <= d <= n");
  return {Kind::Grassmannian, d, n, {}};
}

BundleFactor BundleFactor::flag(int n) {
  if (n < 0) throw InvalidInput("Fl(n) needs n >= 0");
  return {Kind::Flag, 0, n, {}};
}

BundleFactor BundleFactor::product(std::vector<BundleFactor> parts) {
  return {Kind::Product, 0, 0, std::move(parts)};
}

int BundleFactor::dimension() const {
  switch (kind) {
    case Kind::Projective: return n;
    case Kind::Grassmannian: return d * (n - d);
    case Kind::Flag: return n * (n - 1) / 2;
    case Kind::Product:
      return std::accumulate(parts.begin(), parts.end(), 0,
                             [](int acc, const BundleFactor& f) { return acc + f.dimension(); });
  }
  return 0;
}

bool BundleFactor::is_point() const {
  if (kind == Kind::Product) {
    return std::all_of(parts.begin(), parts.end(), [](const BundleFactor& f) { return f.is_point(); });
  }
  return dimension() == 0;
}

std::string BundleFactor::to_string() const {
  switch (kind) {
    case Kind::Projective: return "P^" + std::to_string(n);
    case Kind::Grassmannian: return "Gr_" + std::to_string(d) + "(" + std::to_string(n) + ")";
    case Kind::Flag: return "Fl(" + std::to_string(n) + ")";
    case Kind::Product: {
      if (parts.empty()) return "pt";
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i].to_string();
      return out;
    }
  }
  return "?";
}

std::string to_string(const BundleBase& base) {
  std::string out = "(";
  for (std::size_t i = 0; i < base.size(); ++i) out += (i ? ", " : "") + base[i].to_string();
  return out + ")";
}

BundleBase canonicalize(const BundleBase& base) {
  BundleBase out;
  for (const auto& f : base) {
    if (f.is_point()) continue;
    if (f.kind != BundleFactor::Kind::Product) {
      out.push_back(f);
      continue;
    }
    std::vector<BundleFactor> parts;
    for (const auto& p : canonicalize(f.parts)) {
      // Nested products flatten.
      if (p.kind == BundleFactor::Kind::Product) {
        parts.insert(parts.end(), p.parts.begin(), p.parts.end());
      } else {
        parts.push_back(p);
      }
    }
    std::sort(parts.begin(), parts.end());
    if (parts.size() == 1) {
      out.push_back(parts.front());
    } else {
      out.push_back(BundleFactor::product(std::move(parts)));
    }
  }
  return out;
}

int dimension(const BundleBase& base) {
  return std::accumulate(base.begin(), base.end(), 0,
                         [](int acc, const BundleFactor& f) { return acc + f.dimension(); });
}

int springer_dimension(std::span<const int> partition) {
  int total = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0 || (i > 0 && partition[i] > partition[i - 1])) {
      throw InvalidInput("partition parts must be positive and weakly decreasing");
    }
    total += static_cast<int>(i) * partition[i];
  }
  return total;
}

int springer_dimension(const TwoColumnShape& shape) {
  const auto rows = shape.rows();
  return springer_dimension(rows);
}

FmsoTriple fmso_triple(const TwoColumnTableau& t) {
  if (!smooth_by_tableau_general(t).smooth) {
    throw SingularComponent("tableau " + t.to_string() + " indexes a singular component");
  }
  const auto tau = tau_star(t);
  const int n = t.n();
  const int k = t.k();
  const int long_col = n - k;  // equals k on rectangles
  switch (tau.size()) {
    case 1: {
      const int alpha = tau[0];
      return {alpha - k, k, long_col - alpha};
    }
    case 2: {
      const int alpha = tau[0];
      const int beta = tau[1];
      if (!t.in_col2(n)) return {long_col - (beta - alpha), k - alpha, beta - k};
      return {long_col - (beta - alpha), beta - long_col, long_col - alpha};
    }
    default: {
      const int alpha = tau[0];
      const int beta = tau[1];
      const int gamma = tau[2];
      return {long_col - (gamma - beta), (gamma - alpha) - long_col, long_col - (beta - alpha)};
    }
  }
}

namespace {

void append_projective_run(BundleBase& base, int from, int to) {
  for (int p = from; p <= to; ++p) base.push_back(BundleFactor::projective(p));
}

BundleBase standard_base(int flag_left, int flag_right, int gr_d, int gr_n, int p_from, int k) {
  BundleBase base;
  base.push_back(BundleFactor::product({BundleFactor::flag(flag_left), BundleFactor::flag(flag_right)}));
  base.push_back(BundleFactor::grassmannian(gr_d, gr_n));
  append_projective_run(base, p_from, k - 1);
  return base;
}

}  // namespace

BundleBase base_from_triple(const FmsoTriple& tr, int k) {
  return standard_base(tr.a + tr.b, tr.b + tr.c, tr.a, tr.a + tr.c, tr.b, k);
}

BundleBase base_from_triple(const TwoColumnTableau& t) { return base_from_triple(fmso_triple(t), t.k()); }

BundleBase base_from_web(const HourglassWeb& w) {
  if (!is_forest(w)) throw NonForestWeb("bundle base is only defined for forest webs");
  const int k = w.k();
  const auto order = claws_from_first(w);
  if (order.size() == 2) {
    // i: longest run 1, 2, ..., i inside one claw.
    const int c1 = w.claw_of(1);
    int i = 1;
    while (i < 2 * k && w.claw_of(i + 1) == c1) ++i;
    BundleBase base;
    base.push_back(BundleFactor::product({BundleFactor::flag(i), BundleFactor::flag(k)}));
    append_projective_run(base, i, k - 1);
    return base;
  }
  const auto& first = w.claws()[order[0]];
  const auto& second = w.claws()[order[1]];
  const auto& third = w.claws()[order[2]];
  const int i = static_cast<int>(first.boundary.size());
  const int j = static_cast<int>(second.boundary.size());
  const int m = static_cast<int>(third.boundary.size());
  const int filled = w.filled().front();
  const int ell = w.multiplicity(second.vertex, filled);
  return standard_base(i, j, ell, m, k - m, k);
}

BundleBase base_from_diagram(const MatchingRayDiagram& m) {
  if (!smooth_by_diagram(m).smooth) throw SingularComponent("diagram indexes a singular component");
  const int n = m.n();
  const int k = m.edge_count();
  const int r = m.ray_count();
  const auto se = short_edges(m);
  if (se.size() == 1) {
    const int i = se[0];
    const int ell = static_cast<int>(std::count_if(m.rays().begin(), m.rays().end(), [&](int v) { return v <= i; }));
    BundleBase base;
    base.push_back(BundleFactor::product({BundleFactor::flag(i), BundleFactor::flag(n - i)}));
    base.push_back(BundleFactor::grassmannian(ell, r));
    return base;
  }
  if (se.size() == 2) {
    const int i = se[0];
    const int j = se[1];
    const int ell = pseudoclaw(m, i, j).size();
    if (m.is_ray(n)) return standard_base(n - j, j - i, ell, r + i, k - i, k);
    return standard_base(i, j - i, ell, r + (n - j), j - (r + k), k);
  }
  const int i = se[0];
  const int j = se[1];
  const int h = se[2];
  const int ell = pseudoclaw(m, j, h).size();
  return standard_base(j - i, h - j, ell, n + r - (h - i), (h - i) - (r + k), k);
}

}  // namespace springweb
