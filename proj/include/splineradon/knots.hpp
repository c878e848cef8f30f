// Knot sets: lattices, jittered lattices, the polar frequency grid, and the
// two scalars that characterize them (fill distance and separation).
#pragma once

#include <cstdint>
#include <vector>

#include "splineradon/common.hpp"
#include "splineradon/special_functions.hpp"

namespace splineradon {

// Uniform-bucket index over a fixed point cloud for nearest-neighbor queries.
// All queries are deterministic; ties are broken by the lower point index.
class SpatialIndex {
 public:
  SpatialIndex() = default;
  SpatialIndex(const std::vector<Vec2>& points, int dim);

  std::size_t nearest(Vec2 x) const;
  std::vector<std::size_t> knearest(Vec2 x, std::size_t count) const;
  // Distance from x to the nearest point.
  double nearest_distance(Vec2 x) const;
  double min_pairwise_distance() const;
  std::size_t size() const { return points_.size(); }

 private:
  struct CellRange;
  void collect(int cx, int cy, Vec2 x, std::size_t skip,
               double& best_d2, std::size_t& best_idx) const;

  std::vector<Vec2> points_;
  int dim_ = 1;
  Vec2 lo_{}, hi_{};
  int ncx_ = 1, ncy_ = 1;
  double wx_ = 1.0, wy_ = 1.0;
  std::vector<std::uint32_t> cell_start_;  // CSR offsets, size ncx*ncy+1
  std::vector<std::uint32_t> cell_items_;  // point indices grouped by cell
};

// Finite knot set over a bounded working box. Immutable after construction.
// fill_distance is measured as twice the maximal distance from a dense dyadic
// probe grid over the box to the nearest knot; separation is the minimal
// pairwise distance.
class KnotSet {
 public:
  static KnotSet lattice(const Box& box, int dim, double spacing);
  static KnotSet jittered(const Box& box, int dim, double spacing, double jitter,
                          std::uint64_t seed);
  static KnotSet from_points(std::vector<Vec2> points, int dim, const Box& box);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  Vec2 point(std::size_t i) const { return points_[i]; }
  const std::vector<Vec2>& points() const { return points_; }
  const Box& domain() const { return domain_; }
  double fill_distance() const { return fill_distance_; }
  double separation() const { return separation_; }
  const SpatialIndex& index() const { return index_; }

  // Indices of the `count` knots nearest to x, sorted by (distance, index).
  std::vector<std::size_t> nearest_neighbors(Vec2 x, std::size_t count) const;

  // Recomputes both scalars from scratch and checks them against the stored
  // values (1e-12); checks pairwise distinctness. Throws config_error.
  void validate() const;

  // Probe-grid resolution used when measuring fill distance.
  static int fill_probe_cells(int dim) { return dim == 1 ? 4096 : 256; }

 private:
  KnotSet(std::vector<Vec2> points, int dim, const Box& box);

  std::vector<Vec2> points_;
  int dim_ = 1;
  Box domain_{};
  double fill_distance_ = 0.0;
  double separation_ = 0.0;
  SpatialIndex index_;
};

// Polar frequency grid G_{p,q} = { pi * r * theta_j }.
struct PolarGridSpec {
  int p = 2;  // directions, angles alpha_j = (j-1) pi / p, j = 1..p
  int q = 2;  // radial half-count, radii pi*r for r = -q..q-1

  void validate() const;  // p >= 2, q >= 1
  double angle(int j) const { return (j - 1) * kPi / p; }
  Vec2 direction(int j) const { return {std::cos(angle(j)), std::sin(angle(j))}; }
  Vec2 point(int j, int r) const { return kPi * r * direction(j); }
  // Deterministic enumeration index over (j, r) before origin deduplication.
  std::size_t flat_index(int j, int r) const {
    return static_cast<std::size_t>(j - 1) * (2 * q) + static_cast<std::size_t>(r + q);
  }
  std::size_t flat_count() const { return static_cast<std::size_t>(p) * (2 * q); }
};

// Polar grid as a knot set. The p copies of the origin (r = 0) collapse to a
// single knot; flat_to_knot maps every (j, r) enumeration slot to its knot.
struct PolarKnots {
  PolarGridSpec spec;
  KnotSet knots;
  std::vector<std::size_t> flat_to_knot;
  std::size_t origin_knot = 0;
};

PolarKnots polar_grid(const PolarGridSpec& spec);

// True iff fill_distance < 1 / ((sigma + eps) * c_bound). Advisory: callers
// warn rather than fail when the gate does not pass.
bool density_gate(const KnotSet& knots, double sigma, const SplineParams& params);

}  // namespace splineradon
