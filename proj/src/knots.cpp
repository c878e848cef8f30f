#include "splineradon/knots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <sstream>

namespace splineradon {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int cell_count_for(std::size_t n, int dim) {
  if (n < 2) return 1;
  if (dim == 1) return static_cast<int>(std::max<std::size_t>(1, n / 2));
  return static_cast<int>(std::max(1.0, std::floor(std::sqrt(static_cast<double>(n) / 2.0))));
}

double fill_distance_probe(const SpatialIndex& index, const Box& box, int dim) {
  const int cells = KnotSet::fill_probe_cells(dim);
  const double sx = box.width(0) / cells;
  double max_d = 0.0;
  if (dim == 1) {
    for (int i = 0; i <= cells; ++i) {
      max_d = std::max(max_d, index.nearest_distance({box.lo.x + sx * i, 0.0}));
    }
  } else {
    const double sy = box.width(1) / cells;
    for (int j = 0; j <= cells; ++j) {
      const double y = box.lo.y + sy * j;
      for (int i = 0; i <= cells; ++i) {
        max_d = std::max(max_d, index.nearest_distance({box.lo.x + sx * i, y}));
      }
    }
  }
  return 2.0 * max_d;
}

}  // namespace

SpatialIndex::SpatialIndex(const std::vector<Vec2>& points, int dim)
    : points_(points), dim_(dim) {
  if (points_.empty()) return;
  lo_ = hi_ = points_[0];
  for (const Vec2& p : points_) {
    lo_.x = std::min(lo_.x, p.x);
    lo_.y = std::min(lo_.y, p.y);
    hi_.x = std::max(hi_.x, p.x);
    hi_.y = std::max(hi_.y, p.y);
  }
  ncx_ = cell_count_for(points_.size(), dim_);
  ncy_ = dim_ == 2 ? ncx_ : 1;
  wx_ = std::max(hi_.x - lo_.x, 1e-300) / ncx_;
  wy_ = std::max(hi_.y - lo_.y, 1e-300) / ncy_;

  const std::size_t ncells = static_cast<std::size_t>(ncx_) * ncy_;
  std::vector<std::uint32_t> counts(ncells, 0);
  auto cell_of = [&](Vec2 p) {
    int cx = std::clamp(static_cast<int>((p.x - lo_.x) / wx_), 0, ncx_ - 1);
    int cy = std::clamp(static_cast<int>((p.y - lo_.y) / wy_), 0, ncy_ - 1);
    return static_cast<std::size_t>(cy) * ncx_ + cx;
  };
  for (const Vec2& p : points_) ++counts[cell_of(p)];
  cell_start_.assign(ncells + 1, 0);
  for (std::size_t c = 0; c < ncells; ++c) cell_start_[c + 1] = cell_start_[c] + counts[c];
  cell_items_.resize(points_.size());
  std::vector<std::uint32_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
  for (std::uint32_t i = 0; i < points_.size(); ++i) {
    cell_items_[cursor[cell_of(points_[i])]++] = i;
  }
}

void SpatialIndex::collect(int cx, int cy, Vec2 x, std::size_t skip,
                           double& best_d2, std::size_t& best_idx) const {
  if (cx < 0 || cx >= ncx_ || cy < 0 || cy >= ncy_) return;
  const std::size_t c = static_cast<std::size_t>(cy) * ncx_ + cx;
  for (std::uint32_t s = cell_start_[c]; s < cell_start_[c + 1]; ++s) {
    const std::size_t i = cell_items_[s];
    if (i == skip) continue;
    const double d2 = (points_[i] - x).norm_sq();
    if (d2 < best_d2 || (d2 == best_d2 && i < best_idx)) {
      best_d2 = d2;
      best_idx = i;
    }
  }
}

std::size_t SpatialIndex::nearest(Vec2 x) const {
  if (points_.empty()) throw config_error("SpatialIndex: nearest on empty point set");
  const int cx0 = std::clamp(static_cast<int>((x.x - lo_.x) / wx_), 0, ncx_ - 1);
  const int cy0 = std::clamp(static_cast<int>((x.y - lo_.y) / wy_), 0, ncy_ - 1);
  double best_d2 = kInf;
  std::size_t best_idx = points_.size();
  const int max_ring = std::max(ncx_, ncy_);
  const double wmin = dim_ == 2 ? std::min(wx_, wy_) : wx_;
  for (int ring = 0; ring <= max_ring; ++ring) {
    if (best_idx < points_.size()) {
      // Cells on ring r are at least (r-1)*wmin away from x.
      const double lb = (ring - 1) * wmin;
      if (lb > 0.0 && lb * lb > best_d2) break;
    }
    if (ring == 0) {
      collect(cx0, cy0, x, points_.size(), best_d2, best_idx);
      continue;
    }
    for (int dx = -ring; dx <= ring; ++dx) {
      collect(cx0 + dx, cy0 - ring, x, points_.size(), best_d2, best_idx);
      if (ncy_ > 1) collect(cx0 + dx, cy0 + ring, x, points_.size(), best_d2, best_idx);
    }
    for (int dy = -ring + 1; dy <= ring - 1; ++dy) {
      collect(cx0 - ring, cy0 + dy, x, points_.size(), best_d2, best_idx);
      collect(cx0 + ring, cy0 + dy, x, points_.size(), best_d2, best_idx);
    }
  }
  return best_idx;
}

double SpatialIndex::nearest_distance(Vec2 x) const {
  return (points_[nearest(x)] - x).norm();
}

std::vector<std::size_t> SpatialIndex::knearest(Vec2 x, std::size_t count) const {
  count = std::min(count, points_.size());
  if (count == 0) return {};
  using Entry = std::pair<double, std::size_t>;  // (d2, index), max-heap
  std::priority_queue<Entry> heap;
  const int cx0 = std::clamp(static_cast<int>((x.x - lo_.x) / wx_), 0, ncx_ - 1);
  const int cy0 = std::clamp(static_cast<int>((x.y - lo_.y) / wy_), 0, ncy_ - 1);
  const double wmin = dim_ == 2 ? std::min(wx_, wy_) : wx_;
  auto scan_cell = [&](int cx, int cy) {
    if (cx < 0 || cx >= ncx_ || cy < 0 || cy >= ncy_) return;
    const std::size_t c = static_cast<std::size_t>(cy) * ncx_ + cx;
    for (std::uint32_t s = cell_start_[c]; s < cell_start_[c + 1]; ++s) {
      const std::size_t i = cell_items_[s];
      const double d2 = (points_[i] - x).norm_sq();
      if (heap.size() < count) {
        heap.emplace(d2, i);
      } else if (Entry{d2, i} < heap.top()) {
        heap.pop();
        heap.emplace(d2, i);
      }
    }
  };
  const int max_ring = std::max(ncx_, ncy_);
  for (int ring = 0; ring <= max_ring; ++ring) {
    if (heap.size() == count) {
      const double lb = (ring - 1) * wmin;
      if (lb > 0.0 && lb * lb > heap.top().first) break;
    }
    if (ring == 0) {
      scan_cell(cx0, cy0);
      continue;
    }
    for (int dx = -ring; dx <= ring; ++dx) {
      scan_cell(cx0 + dx, cy0 - ring);
      if (ncy_ > 1) scan_cell(cx0 + dx, cy0 + ring);
    }
    for (int dy = -ring + 1; dy <= ring - 1; ++dy) {
      scan_cell(cx0 - ring, cy0 + dy);
      scan_cell(cx0 + ring, cy0 + dy);
    }
  }
  std::vector<Entry> sorted;
  sorted.reserve(heap.size());
  while (!heap.empty()) {
    sorted.push_back(heap.top());
    heap.pop();
  }
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> out;
  out.reserve(sorted.size());
  for (const Entry& e : sorted) out.push_back(e.second);
  return out;
}

double SpatialIndex::min_pairwise_distance() const {
  double best = kInf;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Vec2 x = points_[i];
    const int cx0 = std::clamp(static_cast<int>((x.x - lo_.x) / wx_), 0, ncx_ - 1);
    const int cy0 = std::clamp(static_cast<int>((x.y - lo_.y) / wy_), 0, ncy_ - 1);
    double d2 = best * best;
    if (!std::isfinite(d2)) d2 = kInf;
    std::size_t idx = points_.size();
    const double wmin = dim_ == 2 ? std::min(wx_, wy_) : wx_;
    const int max_ring = std::max(ncx_, ncy_);
    for (int ring = 0; ring <= max_ring; ++ring) {
      const double lb = (ring - 1) * wmin;
      if (lb > 0.0 && lb * lb > d2) break;
      if (ring == 0) {
        collect(cx0, cy0, x, i, d2, idx);
        continue;
      }
      for (int dx = -ring; dx <= ring; ++dx) {
        collect(cx0 + dx, cy0 - ring, x, i, d2, idx);
        if (ncy_ > 1) collect(cx0 + dx, cy0 + ring, x, i, d2, idx);
      }
      for (int dy = -ring + 1; dy <= ring - 1; ++dy) {
        collect(cx0 - ring, cy0 + dy, x, i, d2, idx);
        collect(cx0 + ring, cy0 + dy, x, i, d2, idx);
      }
    }
    if (idx < points_.size()) best = std::min(best, std::sqrt(d2));
  }
  return best;
}

KnotSet::KnotSet(std::vector<Vec2> points, int dim, const Box& box)
    : points_(std::move(points)), dim_(dim), domain_(box), index_(points_, dim) {
  if (dim_ != 1 && dim_ != 2) throw config_error("KnotSet: dim must be 1 or 2");
  if (points_.empty()) throw config_error("KnotSet: empty knot set");
  separation_ = points_.size() > 1 ? index_.min_pairwise_distance() : kInf;
  if (!(separation_ > 0.0)) {
    throw config_error("KnotSet: knots must be pairwise distinct");
  }
  fill_distance_ = fill_distance_probe(index_, domain_, dim_);
}

KnotSet KnotSet::from_points(std::vector<Vec2> points, int dim, const Box& box) {
  return KnotSet(std::move(points), dim, box);
}

KnotSet KnotSet::lattice(const Box& box, int dim, double spacing) {
  if (!(spacing > 0.0)) throw config_error("lattice: spacing must be positive");
  auto axis_indices = [&](double lo, double hi) {
    const long i0 = static_cast<long>(std::ceil(lo / spacing - 1e-9));
    const long i1 = static_cast<long>(std::floor(hi / spacing + 1e-9));
    if (i1 - i0 + 1 < 2) {
      throw config_error("lattice: box too small, fewer than 2 knots per axis");
    }
    return std::pair<long, long>{i0, i1};
  };
  const auto [x0, x1] = axis_indices(box.lo.x, box.hi.x);
  std::vector<Vec2> pts;
  if (dim == 1) {
    for (long i = x0; i <= x1; ++i) pts.push_back({spacing * i, 0.0});
  } else {
    const auto [y0, y1] = axis_indices(box.lo.y, box.hi.y);
    for (long jy = y0; jy <= y1; ++jy) {
      for (long ix = x0; ix <= x1; ++ix) pts.push_back({spacing * ix, spacing * jy});
    }
  }
  return KnotSet(std::move(pts), dim, box);
}

KnotSet KnotSet::jittered(const Box& box, int dim, double spacing, double jitter,
                          std::uint64_t seed) {
  if (!(jitter >= 0.0) || jitter >= 0.5) {
    throw config_error("jittered: jitter must lie in [0, 0.5) to keep cells disjoint");
  }
  KnotSet base = lattice(box, dim, spacing);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-jitter * spacing, jitter * spacing);
  std::vector<Vec2> pts = base.points();
  for (Vec2& p : pts) {
    p.x += offset(rng);
    if (dim == 2) p.y += offset(rng);
  }
  return KnotSet(std::move(pts), dim, box);
}

std::vector<std::size_t> KnotSet::nearest_neighbors(Vec2 x, std::size_t count) const {
  if (count == 0 || count > points_.size()) {
    throw config_error("nearest_neighbors: count must be in [1, size]");
  }
  return index_.knearest(x, count);
}

void KnotSet::validate() const {
  const double sep = points_.size() > 1 ? index_.min_pairwise_distance() : kInf;
  if (!(sep > 0.0)) throw config_error("KnotSet::validate: duplicate knots");
  if (std::abs(sep - separation_) > 1e-12) {
    std::ostringstream msg;
    msg << "KnotSet::validate: separation mismatch, stored " << separation_
        << " recomputed " << sep;
    throw config_error(msg.str());
  }
  const double fill = fill_distance_probe(index_, domain_, dim_);
  if (std::abs(fill - fill_distance_) > 1e-12) {
    std::ostringstream msg;
    msg << "KnotSet::validate: fill distance mismatch, stored " << fill_distance_
        << " recomputed " << fill;
    throw config_error(msg.str());
  }
}

void PolarGridSpec::validate() const {
  if (p < 2) throw config_error("PolarGridSpec: p must be >= 2");
  if (q < 1) throw config_error("PolarGridSpec: q must be >= 1");
}

PolarKnots polar_grid(const PolarGridSpec& spec) {
  spec.validate();
  std::vector<Vec2> pts;
  pts.reserve(spec.flat_count());
  std::vector<std::size_t> flat_to_knot(spec.flat_count());
  std::size_t origin = 0;
  bool have_origin = false;
  for (int j = 1; j <= spec.p; ++j) {
    for (int r = -spec.q; r <= spec.q - 1; ++r) {
      const std::size_t f = spec.flat_index(j, r);
      if (r == 0) {
        if (!have_origin) {
          origin = pts.size();
          pts.push_back({0.0, 0.0});
          have_origin = true;
        }
        flat_to_knot[f] = origin;
      } else {
        flat_to_knot[f] = pts.size();
        pts.push_back(spec.point(j, r));
      }
    }
  }
  const double extent = kPi * spec.q;
  const Box box{{-extent, -extent}, {extent, extent}};
  return PolarKnots{spec, KnotSet::from_points(std::move(pts), 2, box),
                    std::move(flat_to_knot), origin};
}

bool density_gate(const KnotSet& knots, double sigma, const SplineParams& params) {
  params.validate();
  if (sigma < 0.0) throw config_error("density_gate: sigma must be nonnegative");
  return knots.fill_distance() < 1.0 / ((sigma + params.eps) * params.c_bound);
}

}  // namespace splineradon
