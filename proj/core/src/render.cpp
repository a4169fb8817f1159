#include "ptorus/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ptorus/errors.hpp"

namespace ptorus {

namespace {

struct Walker {
  const std::vector<MoebiusMap>& letters;  // generators then inverses
  const std::vector<Complex>& base;
  const RenderTarget& target;
  std::vector<Complex> out;

  bool budget_left() const {
    return static_cast<long long>(out.size()) < target.point_budget;
  }

  void emit(const MoebiusMap& word) {
    for (const Complex& z : base) {
      if (!budget_left()) return;
      const RiemannPoint img = word.apply(RiemannPoint(z));
      if (!img.is_infinity()) out.push_back(img.value());
    }
  }

  // Largest derivative magnitude over the base points; once it falls below
  // the contraction threshold the whole subtree collapses to one pixel.
  double spread(const MoebiusMap& word) const {
    double worst = 0.0;
    for (const Complex& z : base)
      worst = std::max(worst, std::abs(word.derivative(z)));
    return worst;
  }

  void dfs(const MoebiusMap& word, size_t last_letter, int depth) {
    if (!budget_left()) return;
    emit(word);
    if (depth >= target.max_depth) return;
    if (spread(word) < target.contraction_threshold) return;
    const size_t n = letters.size();
    const size_t half = n / 2;
    for (size_t i = 0; i < n; ++i) {
      if (last_letter != n && i == (last_letter + half) % n) continue;
      dfs(compose(word, letters[i]), i, depth + 1);
    }
  }
};

}  // namespace

RenderResult render_limit_set(const RenderTarget& target, int workers) {
  if (target.generators.empty())
    throw std::invalid_argument("render: no generators");
  if (target.point_budget < 1)
    throw std::invalid_argument("render: point budget must be >= 1");
  if (!(target.x1 > target.x0) || !(target.y1 > target.y0))
    throw std::invalid_argument("render: empty bounding box");

  std::vector<MoebiusMap> letters = target.generators;
  for (const auto& g : target.generators) letters.push_back(g.inverse());

  // Tracked base points: finite fixed points of the generators, plus the
  // commutator's when a second generator exists.
  std::vector<Complex> base;
  auto add_fixed = [&](const MoebiusMap& g) {
    try {
      for (const auto& fp : fixed_points(g))
        if (!fp.is_infinity()) base.push_back(fp.value());
    } catch (const IdentityMap&) {
    }
  };
  for (const auto& g : target.generators) add_fixed(g);
  if (target.generators.size() >= 2) {
    const MoebiusMap& A = target.generators[0];
    const MoebiusMap& B = target.generators[1];
    add_fixed(compose(compose(A, B), compose(A.inverse(), B.inverse())));
  }
  if (base.empty())
    throw EmptyOutput(
        "render: degenerate group, every tracked orbit is the orbit of "
        "infinity");

  // Top-level branches run independently; the merge order is fixed by the
  // letter order, so output is independent of scheduling.
  const size_t n = letters.size();
  std::vector<Walker> walkers;
  walkers.reserve(n);
  for (size_t i = 0; i < n; ++i)
    walkers.push_back(Walker{letters, base, target, {}});

  auto run_branch = [&](size_t i) {
    walkers[i].dfs(letters[i], i, 1);
  };
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) run_branch(i);
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < n; ++i) pool.emplace_back(run_branch, i);
    for (auto& t : pool) t.join();
  }

  RenderResult result;
  {
    Walker root{letters, base, target, {}};
    root.emit(MoebiusMap::identity());
    result.points = std::move(root.out);
  }
  for (auto& w : walkers) {
    result.points.insert(result.points.end(), w.out.begin(), w.out.end());
    if (static_cast<long long>(result.points.size()) >= target.point_budget) {
      result.points.resize(static_cast<size_t>(target.point_budget));
      break;
    }
  }

  result.histogram.assign(
      static_cast<size_t>(target.width) * static_cast<size_t>(target.height),
      0);
  const double sx = target.width / (target.x1 - target.x0);
  const double sy = target.height / (target.y1 - target.y0);
  for (const Complex& z : result.points) {
    const int px = static_cast<int>((z.real() - target.x0) * sx);
    const int py = static_cast<int>((target.y1 - z.imag()) * sy);
    if (px < 0 || px >= target.width || py < 0 || py >= target.height)
      continue;
    ++result.histogram[static_cast<size_t>(py) * target.width + px];
    ++result.in_box;
  }
  if (result.in_box == 0)
    throw EmptyOutput("render: no orbit point landed in the bounding box");
  return result;
}

}  // namespace ptorus
