#include "cht/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cht {

namespace {

struct NameEntry {
  ConstructionName name;
  std::string_view text;
};

constexpr std::array<NameEntry, 7> kNames{{
    {ConstructionName::counterexample, "counterexample"},
    {ConstructionName::odd_circle, "odd_circle"},
    {ConstructionName::star_neighbors, "star_neighbors"},
    {ConstructionName::gossett, "gossett"},
    {ConstructionName::triple_blocks, "triple_blocks"},
    {ConstructionName::double_star, "double_star"},
    {ConstructionName::parabola_points, "parabola_points"},
}};

void require(bool ok, std::string_view what, std::size_t n) {
  if (!ok) {
    throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) + " not supported");
  }
}

Instance finish(PointSet points, const std::vector<std::vector<Index>>& hulls, VariantFlags flags) {
  return Instance::build(std::move(points), hulls, flags).sorted();
}

}  // namespace

std::string_view to_string(ConstructionName name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.text;
  return "?";
}

std::optional<ConstructionName> parse_construction_name(std::string_view text) {
  for (const auto& e : kNames)
    if (e.text == text) return e.name;
  return std::nullopt;
}

const std::vector<ConstructionName>& all_construction_names() {
  static const std::vector<ConstructionName> names = [] {
    std::vector<ConstructionName> out;
    for (const auto& e : kNames) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::size_t min_points(ConstructionName name) {
  switch (name) {
    case ConstructionName::counterexample: return 6;
    case ConstructionName::odd_circle:
    case ConstructionName::star_neighbors:
    case ConstructionName::gossett:
    case ConstructionName::triple_blocks: return 3;
    case ConstructionName::double_star: return 2;
    case ConstructionName::parabola_points: return 1;
  }
  return 1;
}

bool accepts(ConstructionName name, std::size_t n) {
  if (n < min_points(name)) return false;
  if (name == ConstructionName::odd_circle) return n % 2 == 1;
  if (name == ConstructionName::triple_blocks) return n % 3 == 0;
  return true;
}

Instance generate(ConstructionName name, std::size_t n) {
  switch (name) {
    case ConstructionName::counterexample: return gen_counterexample(n);
    case ConstructionName::odd_circle: return gen_odd_circle(n);
    case ConstructionName::star_neighbors: return gen_star_neighbors(n);
    case ConstructionName::gossett: return gen_gossett(n);
    case ConstructionName::triple_blocks: return gen_triple_blocks(n);
    case ConstructionName::double_star: return gen_double_star(n);
    case ConstructionName::parabola_points: {
      Instance inst;
      inst.points = parabola_points(n);
      return inst;
    }
  }
  throw std::invalid_argument("unknown construction");
}

PointSet parabola_points(std::size_t n) {
  require(n >= 1, "parabola_points", n);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long v = static_cast<long>(i);
    pts.emplace_back(v, v * v);
  }
  return PointSet(std::move(pts));
}

Instance gen_counterexample(std::size_t n) {
  require(n >= 6, "counterexample", n);
  const std::size_t k = n - 4;
  // The arc is y = x^2 - 1 on [-1, 1]; every chord of it passes above
  // (0, -2), so q' = (0, -3) sees the whole arc from below and p, p' are the
  // extreme directions. q is far below so that q' is interior to p p' q.
  std::vector<Point> pts;
  pts.emplace_back(-1, 0);                              // p
  pts.emplace_back(1, 0);                               // p'
  pts.emplace_back(Rational(1, 7), Rational(-10));      // q
  pts.emplace_back(0, -3);                              // q'
  for (std::size_t i = 1; i <= k; ++i) {
    Rational x(static_cast<long>(2 * i), static_cast<unsigned long>(k + 1));
    x.canonicalize();
    x -= 1;
    Rational y = x * x - 1;
    pts.emplace_back(x, y);
  }
  constexpr Index p = 0, pp = 1, q = 2, qq = 3;
  auto r = [](std::size_t i) -> Index { return 3 + i; };  // r_i, 1-based

  // Counterclockwise around q': p', r_k, ..., r_1, p, q.
  std::vector<Index> around{pp};
  for (std::size_t i = k; i >= 1; --i) around.push_back(r(i));
  around.push_back(p);
  around.push_back(q);

  std::vector<std::vector<Index>> hulls;
  for (std::size_t i = 0; i < around.size(); ++i) {
    hulls.push_back({qq, around[i], around[(i + 1) % around.size()]});
  }
  std::vector<Index> even{p, pp}, odd{p, pp};
  for (std::size_t i = 1; i <= k; ++i) (i % 2 == 0 ? even : odd).push_back(r(i));
  hulls.push_back(even);
  hulls.push_back(odd);
  return finish(PointSet(std::move(pts)), hulls, {});
}

Instance gen_odd_circle(std::size_t n) {
  require(n >= 3 && n % 2 == 1, "odd_circle", n);
  // Rational points on the unit circle from t = tan(theta/2) rounded to a
  // fixed denominator; t increases with theta so the cyclic order is that of
  // the regular n-gon.
  const long denom = 1000 * static_cast<long>(n);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = -std::numbers::pi + std::numbers::pi / static_cast<double>(n) +
                         2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const long num = std::lround(std::tan(theta / 2.0) * static_cast<double>(denom));
    Rational t(num, static_cast<unsigned long>(denom));
    t.canonicalize();
    Rational t2 = t * t;
    Rational x = (1 - t2) / (1 + t2);
    Rational y = 2 * t / (1 + t2);
    pts.emplace_back(x, y);
  }
  const std::size_t half = (n - 1) / 2;
  std::vector<std::vector<Index>> hulls;
  for (Index i = 0; i < n; ++i) {
    const Index j = (i + half) % n;
    const Index l = (i + half + 1) % n;
    // Each segment i-j arises again as j-(j+half+1); keep one copy.
    if (i < j) hulls.push_back({i, j});
    if (i < l) hulls.push_back({i, l});
  }
  std::sort(hulls.begin(), hulls.end());
  hulls.erase(std::unique(hulls.begin(), hulls.end()), hulls.end());
  return finish(PointSet(std::move(pts)), hulls, {});
}

Instance gen_star_neighbors(std::size_t n) {
  require(n >= 3, "star_neighbors", n);
  std::vector<std::vector<Index>> hulls;
  for (Index i = 1; i < n; ++i) hulls.push_back({0, i});
  hulls.push_back({1, n - 1});
  return finish(parabola_points(n), hulls, {});
}

Instance gen_gossett(std::size_t n) {
  require(n >= 3, "gossett", n);
  // Around point 0 of the parabola the others appear in index order.
  std::vector<std::vector<Index>> hulls;
  for (Index i = 1; i < n; ++i) hulls.push_back({0, i});
  for (Index i = 1; i + 1 < n; i += 2) hulls.push_back({0, i, i + 1});
  VariantFlags flags;
  flags.allow_containment = true;
  return finish(parabola_points(n), hulls, flags);
}

Instance gen_triple_blocks(std::size_t n) {
  require(n >= 3 && n % 3 == 0, "triple_blocks", n);
  const std::size_t b = n / 3;
  std::vector<std::vector<Index>> hulls;
  for (Index i = 0; i < b; ++i)
    for (Index j = b; j < 2 * b; ++j)
      for (Index l = 2 * b; l < n; ++l) hulls.push_back({i, j, l});
  VariantFlags flags;
  flags.allow_triple_interior = true;
  return finish(parabola_points(n), hulls, flags);
}

Instance gen_double_star(std::size_t n) {
  require(n >= 2, "double_star", n);
  std::vector<std::vector<Index>> hulls;
  for (Index i = 1; i < n; ++i) {
    hulls.push_back({0, i});
    hulls.push_back({0, i});
  }
  VariantFlags flags;
  flags.allow_multiset = true;
  flags.allow_containment = true;
  return finish(parabola_points(n), hulls, flags);
}

}  // namespace cht
