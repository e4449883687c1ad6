#ifndef HYPVOL_VERIFY_HPP
#define HYPVOL_VERIFY_HPP

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "hypvol/bounds.hpp"

namespace hypvol::verify {

enum class LemmaId { evil_star, no_short_geodesic, short_geodesic };

const char* lemma_name(LemmaId id);

// Base regions together with per-region subdivision counts.  The interval
// fields drive the displacement sweep, the rectangle fields the
// short-geodesic sweep; a driver uses whichever list it needs.
// refinement_factor multiplies every count uniformly.
struct GridSpec {
  std::vector<bounds::HalfOpenInterval> intervals;
  std::vector<int> interval_subdivisions;
  std::vector<bounds::ParamRectangle> rectangles;
  std::vector<std::array<int, 2>> rectangle_subdivisions;
  int refinement_factor = 1;
};

// [0.58, 0.598), [0.598, 0.608), [0.608, 0.618), [0.618, 0.7),
// [0.7, log 7), each split into 20 subintervals.
GridSpec default_no_short_geodesic_grid();

// [0.003, 0.103] x [0, 0.5] as 40 x 100, [0.1, 0.5] x [0, 0.5] as 50 x 100,
// [0.5, 0.58] x [0, 0.5] as 80 x 100.  The small overlaps between
// consecutive regions are intentional; coverage of the union is what
// matters.
GridSpec default_short_geodesic_grid();

// A grid cell: an interval [lo, hi) or, when is_rectangle is set, a
// rectangle [lo, hi] x [y_lo, y_hi].
struct Cell {
  double lo = 0.0;
  double hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
  bool is_rectangle = false;
};

struct CellResult {
  Cell cell;
  double bound_value = 0.0;
  std::string branch_info;
};

// Outcome of one verification sweep.  min_value is the smallest bound over
// all cells (ties broken by the deterministic cell order) and passed means
// min_value > threshold strictly.  For the short-geodesic sweep,
// closure_value carries the y > 0.5 closure bound, which must also clear
// the threshold; it is NaN for the other lemmas.
struct VerificationReport {
  LemmaId lemma_id = LemmaId::evil_star;
  bounds::Mode mode = bounds::Mode::sound;
  double threshold = 0.0;
  double min_value = 0.0;
  Cell min_cell;
  bool passed = false;
  std::vector<CellResult> cells;
  double closure_value = std::numeric_limits<double>::quiet_NaN();
  double timing_seconds = 0.0;
};

// Evaluates Delta(a, b) on the five intervals with endpoints 0.58, 0.63,
// 0.67, 0.68, 0.69, 0.7.  Each cell records the raw Delta value, which must
// be negative; bound_value and min_value carry the margins -Delta so that
// the pass condition keeps the usual sense (min_value > 0).
VerificationReport verify_evil_star();

// Sweeps the useful intervals of the grid.  Per cell I = [a, b):
// bound_value = m_near(I, mode) + v_far(b, lambda0), the provably sound
// right-endpoint reading; the left-endpoint sum m_near(I, mode) +
// v_far(a, lambda0) is recorded in branch_info.  threads <= 0 picks the
// hardware concurrency; the thread count never affects the report.
VerificationReport verify_no_short_geodesic(
    const GridSpec& grid, bounds::Mode mode = bounds::Mode::sound,
    int threads = 0);

// Sweeps the rectangles of the grid with rect_bounds and also computes the
// closure bound v_n(delta0, 2 rho(delta0) + 0.5) covering offsets y > 0.5.
VerificationReport verify_short_geodesic(const GridSpec& grid,
                                         int threads = 0);

}  // namespace hypvol::verify

#endif
