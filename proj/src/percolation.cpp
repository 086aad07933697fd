// SPDX-License-Identifier: Apache-2.0
#include "qcp/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qcp/constants.hpp"
#include "qcp/parallel.hpp"

namespace qcp {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, stream, index); parallel and serial runs draw
// identical numbers.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t index) {
  return mix64(mix64(seed ^ mix64(stream)) + index * 0x9e3779b97f4a7c15ULL);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    state = mix64(state);
    return state;
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> rank_;

  explicit UnionFind(int n) : parent(n), rank_(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }
};

void add_edge(std::vector<std::pair<std::int32_t, std::int32_t>>& edges, int a, int b) {
  edges.emplace_back(a, b);
}

LatticeGraph finalize(int site_count,
                      std::vector<std::pair<std::int32_t, std::int32_t>> edges,
                      std::vector<std::int32_t> left,
                      std::vector<std::int32_t> right) {
  LatticeGraph g;
  g.site_count = site_count;
  std::vector<std::int32_t> degree(site_count, 0);
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  g.neighbor_offsets.assign(site_count + 1, 0);
  for (int i = 0; i < site_count; ++i)
    g.neighbor_offsets[i + 1] = g.neighbor_offsets[i] + degree[i];
  g.neighbors.resize(g.neighbor_offsets.back());
  std::vector<std::int32_t> cursor(g.neighbor_offsets.begin(),
                                   g.neighbor_offsets.end() - 1);
  for (auto [a, b] : edges) {
    g.neighbors[cursor[a]++] = b;
    g.neighbors[cursor[b]++] = a;
  }
  g.left_boundary = std::move(left);
  g.right_boundary = std::move(right);
  return g;
}

constexpr std::uint64_t stream_spanning = 1;
constexpr std::uint64_t stream_threshold = 2;
constexpr std::uint64_t stream_kcurve = 3;

}  // namespace

LatticeGraph build_lattice(const LatticeSpec& spec) {
  const int n = spec.size;
  if (n < 2) throw std::invalid_argument("build_lattice: size must be >= 2");

  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  std::vector<std::int32_t> left, right;

  switch (spec.kind) {
    case LatticeKind::square: {
      auto id = [n](int r, int c) { return r * n + c; };
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          if (c + 1 < n) add_edge(edges, id(r, c), id(r, c + 1));
          if (r + 1 < n) add_edge(edges, id(r, c), id(r + 1, c));
        }
      }
      for (int r = 0; r < n; ++r) {
        left.push_back(id(r, 0));
        right.push_back(id(r, n - 1));
      }
      return finalize(n * n, std::move(edges), std::move(left), std::move(right));
    }
    case LatticeKind::honeycomb: {
      // Brick-wall coordinates: rows fully chained, one vertical bond per
      // site with alternating parity; interior sites are trivalent. A column
      // advances sqrt(3)/2 bond lengths, a row 3/2, so the row count is
      // scaled to keep the spanning region geometrically square.
      const int cols = n;
      const int rows = std::max(2, static_cast<int>(std::lround(n / std::sqrt(3.0))));
      auto id = [cols](int r, int c) { return r * cols + c; };
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          if (c + 1 < cols) add_edge(edges, id(r, c), id(r, c + 1));
          if ((r + c) % 2 == 0 && r + 1 < rows) add_edge(edges, id(r, c), id(r + 1, c));
        }
      }
      for (int r = 0; r < rows; ++r) {
        left.push_back(id(r, 0));
        right.push_back(id(r, cols - 1));
      }
      return finalize(rows * cols, std::move(edges), std::move(left), std::move(right));
    }
    case LatticeKind::square_octagon: {
      // One tilted square per cell, corners N/E/S/W; ring edges around the
      // square plus one link per corner into the adjacent cell.
      constexpr int north = 0, east = 1, south = 2, west = 3;
      auto id = [n](int r, int c, int corner) { return 4 * (r * n + c) + corner; };
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          add_edge(edges, id(r, c, north), id(r, c, east));
          add_edge(edges, id(r, c, east), id(r, c, south));
          add_edge(edges, id(r, c, south), id(r, c, west));
          add_edge(edges, id(r, c, west), id(r, c, north));
          if (c + 1 < n) add_edge(edges, id(r, c, east), id(r, c + 1, west));
          if (r + 1 < n) add_edge(edges, id(r, c, south), id(r + 1, c, north));
        }
      }
      for (int r = 0; r < n; ++r) {
        left.push_back(id(r, 0, west));
        right.push_back(id(r, n - 1, east));
      }
      return finalize(4 * n * n, std::move(edges), std::move(left), std::move(right));
    }
  }
  throw std::invalid_argument("build_lattice: unknown lattice kind");
}

bool spans(const LatticeGraph& g, std::span<const char> occupied) {
  if (static_cast<int>(occupied.size()) != g.site_count)
    throw std::invalid_argument("spans: occupation mask size mismatch");
  const std::int32_t left = g.site_count;
  const std::int32_t right = g.site_count + 1;
  UnionFind uf(g.site_count + 2);
  for (int i = 0; i < g.site_count; ++i) {
    if (!occupied[i]) continue;
    for (std::int32_t e = g.neighbor_offsets[i]; e < g.neighbor_offsets[i + 1]; ++e) {
      const std::int32_t j = g.neighbors[e];
      if (j > i && occupied[j]) uf.unite(i, j);
    }
  }
  for (std::int32_t s : g.left_boundary)
    if (occupied[s]) uf.unite(left, s);
  for (std::int32_t s : g.right_boundary)
    if (occupied[s]) uf.unite(right, s);
  return uf.find(left) == uf.find(right);
}

double spanning_probability(const LatticeSpec& spec, double p, int trials,
                            std::uint64_t seed, int workers) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("spanning_probability: p must lie in [0, 1]");
  if (trials < 1)
    throw std::invalid_argument("spanning_probability: trials must be >= 1");

  const LatticeGraph g = build_lattice(spec);
  std::vector<char> hits(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
    thread_local std::vector<char> occupied;
    Rng rng(derived_seed(seed, stream_spanning, t));
    occupied.resize(g.site_count);
    for (int i = 0; i < g.site_count; ++i)
      occupied[i] = rng.uniform01() < p ? 1 : 0;
    hits[t] = spans(g, occupied);
  });
  int count = 0;
  for (char h : hits) count += h;
  return static_cast<double>(count) / trials;
}

PercolationEstimate site_threshold(const LatticeSpec& spec, int trials,
                                   std::uint64_t seed, int n_seeds, int workers) {
  if (trials < 10)
    throw std::invalid_argument(
        "site_threshold: too few trials to resolve the 0.5 crossing; use >= 10 "
        "(>= 200 recommended)");
  if (n_seeds < 1)
    throw std::invalid_argument("site_threshold: n_seeds must be >= 1");

  constexpr double bracket_width = 0.002;
  std::vector<double> estimates(n_seeds);
  std::uint64_t eval_index = 0;
  for (int s = 0; s < n_seeds; ++s) {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > bracket_width) {
      const double mid = 0.5 * (lo + hi);
      const double span = spanning_probability(
          spec, mid, trials, derived_seed(seed, stream_threshold, eval_index++),
          workers);
      (span < 0.5 ? lo : hi) = mid;
    }
    estimates[s] = 0.5 * (lo + hi);
  }

  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= n_seeds;
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  // Floor at the bracket quantization so the spread is never reported as 0.
  const double quantization = bracket_width / (2.0 * std::sqrt(3.0 * n_seeds));
  const double sample_error =
      n_seeds > 1 ? std::sqrt(var / (n_seeds - 1) / n_seeds) : 0.0;
  const double std_error = std::max(sample_error, quantization);

  // Guard against brackets trapped by sampling noise.
  const double below = spanning_probability(
      spec, std::max(0.0, mean - 0.05), trials,
      derived_seed(seed, stream_threshold, eval_index++), workers);
  const double above = spanning_probability(
      spec, std::min(1.0, mean + 0.05), trials,
      derived_seed(seed, stream_threshold, eval_index++), workers);
  if (!(below < 0.5 && above > 0.5))
    throw std::runtime_error(
        "site_threshold: non-monotone bracket around the estimate; increase "
        "trials or lattice size");

  return PercolationEstimate{mean, std_error, trials, spec.size};
}

double zero_t_boundary_from_pth(double p_th) {
  if (!(p_th > 0.0 && p_th < 1.0))
    throw std::invalid_argument("zero_t_boundary: p_th must lie in (0, 1)");
  const double a_squared = p_th / (4.0 - p_th);
  const double a = std::sqrt(a_squared);
  return 3.0 * (a_squared - 1.0) / (4.0 * a);
}

double zero_t_boundary(const LatticeSpec& spec, Model /*model*/, int trials,
                       std::uint64_t seed, int n_seeds, int workers) {
  // The inversion is identical for both models; the parameter is delta or d_z.
  const PercolationEstimate est = site_threshold(spec, trials, seed, n_seeds, workers);
  return zero_t_boundary_from_pth(est.p_th);
}

namespace {

// Early-exit BFS distance between two cells of an L x L grid through
// surviving sites; -1 when unreachable.
int grid_distance(const std::vector<char>& alive, int size, int from, int to,
                  std::vector<std::int32_t>& dist_buf, std::vector<std::int32_t>& queue_buf) {
  if (from == to) return 0;
  dist_buf.assign(static_cast<std::size_t>(size) * size, -1);
  queue_buf.clear();
  dist_buf[from] = 0;
  queue_buf.push_back(from);
  for (std::size_t head = 0; head < queue_buf.size(); ++head) {
    const int cur = queue_buf[head];
    const int r = cur / size, c = cur % size;
    const int d = dist_buf[cur];
    const std::array<int, 4> next{r > 0 ? cur - size : -1, r + 1 < size ? cur + size : -1,
                                  c > 0 ? cur - 1 : -1, c + 1 < size ? cur + 1 : -1};
    for (int nb : next) {
      if (nb < 0 || !alive[nb] || dist_buf[nb] >= 0) continue;
      if (nb == to) return d + 1;
      dist_buf[nb] = d + 1;
      queue_buf.push_back(nb);
    }
  }
  return -1;
}

// Nearest surviving cell to `cell` (BFS rings over the full grid); -1 when
// none lies within `radius` steps.
int snap_to_alive(const std::vector<char>& alive, int size, int cell, int radius,
                  std::vector<std::int32_t>& dist_buf, std::vector<std::int32_t>& queue_buf) {
  if (alive[cell]) return cell;
  dist_buf.assign(static_cast<std::size_t>(size) * size, -1);
  queue_buf.clear();
  dist_buf[cell] = 0;
  queue_buf.push_back(cell);
  for (std::size_t head = 0; head < queue_buf.size(); ++head) {
    const int cur = queue_buf[head];
    const int r = cur / size, c = cur % size;
    const int d = dist_buf[cur];
    if (d >= radius) continue;
    const std::array<int, 4> next{r > 0 ? cur - size : -1, r + 1 < size ? cur + size : -1,
                                  c > 0 ? cur - 1 : -1, c + 1 < size ? cur + 1 : -1};
    for (int nb : next) {
      if (nb < 0 || dist_buf[nb] >= 0) continue;
      if (alive[nb]) return nb;
      dist_buf[nb] = d + 1;
      queue_buf.push_back(nb);
    }
  }
  return -1;
}

struct KTrialResult {
  double k = 0.0;
  bool usable = false;
};

KTrialResult k_trial(int size, double p_l, int spacing, std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  std::vector<char> alive(static_cast<std::size_t>(size) * size);
  for (auto& cell : alive) cell = rng.uniform01() >= p_l ? 1 : 0;

  // Node array at the given spacing; enumerate adjacent (horizontal and
  // vertical) node pairs and sample from them.
  const int nodes_per_row = (size - 1) / spacing + 1;
  auto node_cell = [&](int i, int j) { return (i * spacing) * size + j * spacing; };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nodes_per_row; ++i) {
    for (int j = 0; j < nodes_per_row; ++j) {
      if (j + 1 < nodes_per_row)
        pairs.emplace_back(node_cell(i, j), node_cell(i, j + 1));
      if (i + 1 < nodes_per_row)
        pairs.emplace_back(node_cell(i, j), node_cell(i + 1, j));
    }
  }
  if (pairs.empty()) return {};

  constexpr int target_pairs = 32;
  const int wanted = std::min<int>(target_pairs, static_cast<int>(pairs.size()));
  const int budget = 3 * wanted;
  const int snap_radius = std::max(4, 2 * spacing);

  std::vector<std::int32_t> dist_buf, queue_buf;
  double length_sum = 0.0;
  int successes = 0;
  for (int attempt = 0; attempt < budget && successes < wanted; ++attempt) {
    const auto [ca, cb] = pairs[rng.below(pairs.size())];
    const int a = snap_to_alive(alive, size, ca, snap_radius, dist_buf, queue_buf);
    const int b = snap_to_alive(alive, size, cb, snap_radius, dist_buf, queue_buf);
    if (a < 0 || b < 0) continue;
    const int d = grid_distance(alive, size, a, b, dist_buf, queue_buf);
    if (d < 0) continue;
    length_sum += static_cast<double>(d) / spacing;
    ++successes;
  }
  if (successes < (wanted + 1) / 2) return {};
  return KTrialResult{static_cast<double>(successes) / length_sum, true};
}

}  // namespace

KCurve::KCurve(std::vector<KCurvePoint> points, std::string source)
    : points_(std::move(points)), source_(std::move(source)) {
  if (points_.empty()) throw std::invalid_argument("KCurve: empty table");
  std::sort(points_.begin(), points_.end(),
            [](const KCurvePoint& a, const KCurvePoint& b) { return a.p_l < b.p_l; });
  for (const KCurvePoint& pt : points_) {
    if (!std::isfinite(pt.p_l) || pt.p_l < 0.0 || pt.p_l > 1.0)
      throw std::invalid_argument("KCurve: p_l values must lie in [0, 1]");
    if (!std::isfinite(pt.k) || pt.k <= 0.0) break;  // usable leading run only
    usable_.push_back(pt);
  }
}

double KCurve::eval(double p_l) const {
  if (usable_.empty())
    throw std::domain_error("KCurve: no usable points");
  constexpr double slack = 1e-12;
  if (p_l < usable_.front().p_l - slack || p_l > usable_.back().p_l + slack)
    throw std::domain_error("KCurve: p_l = " + std::to_string(p_l) +
                            " outside the sampled range [" +
                            std::to_string(usable_.front().p_l) + ", " +
                            std::to_string(usable_.back().p_l) +
                            "]; extrapolation is not allowed");
  p_l = std::clamp(p_l, usable_.front().p_l, usable_.back().p_l);
  auto hi = std::lower_bound(
      usable_.begin(), usable_.end(), p_l,
      [](const KCurvePoint& pt, double v) { return pt.p_l < v; });
  if (hi == usable_.begin()) return hi->k;
  if (hi == usable_.end()) return usable_.back().k;
  const auto lo = hi - 1;
  const double t = (p_l - lo->p_l) / (hi->p_l - lo->p_l);
  return lo->k + t * (hi->k - lo->k);
}

KCurve estimate_k_curve(std::span<const double> loss_grid, int size, int trials,
                        std::uint64_t seed, double spacing_scale, int workers) {
  if (loss_grid.empty())
    throw std::invalid_argument("estimate_k_curve: empty loss grid");
  for (double p : loss_grid)
    if (!(p >= 0.0 && p <= 0.45))
      throw std::invalid_argument("estimate_k_curve: p_l values must lie in [0, 0.45]");
  if (size < 8) throw std::invalid_argument("estimate_k_curve: size must be >= 8");
  if (trials < 1) throw std::invalid_argument("estimate_k_curve: trials must be >= 1");
  if (!(spacing_scale > 0.0))
    throw std::invalid_argument("estimate_k_curve: spacing scale must be > 0");

  std::vector<KCurvePoint> points(loss_grid.size());
  const std::size_t total = loss_grid.size() * static_cast<std::size_t>(trials);
  std::vector<KTrialResult> results(total);
  parallel_for(total, workers, [&](std::size_t idx) {
    const std::size_t ip = idx / trials;
    const double p_l = loss_grid[ip];
    if (p_l > ftq::loss_tolerance_2d) return;  // beyond the 2D loss tolerance
    const int spacing =
        std::max(1, static_cast<int>(std::ceil(spacing_scale / (1.0 - p_l))));
    results[idx] =
        k_trial(size, p_l, spacing, derived_seed(seed, stream_kcurve, idx));
  });

  for (std::size_t ip = 0; ip < loss_grid.size(); ++ip) {
    KCurvePoint& pt = points[ip];
    pt.p_l = loss_grid[ip];
    if (pt.p_l > ftq::loss_tolerance_2d) {
      pt.k = std::numeric_limits<double>::quiet_NaN();
      pt.std_error = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    std::vector<double> ks;
    for (int t = 0; t < trials; ++t) {
      const KTrialResult& r = results[ip * trials + t];
      if (r.usable) ks.push_back(r.k);
    }
    if (ks.size() * 2 < static_cast<std::size_t>(trials) || ks.empty()) {
      pt.k = 0.0;  // unusable point
      pt.std_error = 0.0;
      continue;
    }
    double mean = 0.0;
    for (double k : ks) mean += k;
    mean /= static_cast<double>(ks.size());
    double var = 0.0;
    for (double k : ks) var += (k - mean) * (k - mean);
    pt.k = mean;
    pt.std_error = ks.size() > 1
                       ? std::sqrt(var / (ks.size() - 1) / ks.size())
                       : 0.0;
  }

  std::string source = "estimator(L=" + std::to_string(size) +
                       ",trials=" + std::to_string(trials) +
                       ",seed=" + std::to_string(seed) +
                       ",c0=" + std::to_string(spacing_scale) + ")";
  return KCurve(std::move(points), std::move(source));
}

}  // namespace qcp
