#include "hypvol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <thread>

#include "hypvol/errors.hpp"
#include "hypvol/hyptrig.hpp"

namespace hypvol::verify {

namespace {

// Shared endpoint formula; all cells of a region derive their endpoints
// from it so adjacent cells match bit-exactly and the region is tiled
// without gaps.
double endpoint(double lo, double hi, int n, int i) {
  if (i == 0) return lo;
  if (i == n) return hi;
  return lo + i * (hi - lo) / n;
}

std::string format_branch(const char* fmt, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return std::string(buf);
}

// Evaluates eval(i) for i in [0, n) across workers, each result landing in
// its own slot; the caller reduces afterwards in index order, so the thread
// count cannot change the report.
void parallel_cells(int n, int threads,
                    const std::function<void(int)>& eval) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) eval(i);
    return;
  }
  std::mutex failure_mutex;
  int failed_index = -1;
  std::string failure;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (int i = t; i < n; i += threads) {
        try {
          eval(i);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (failed_index < 0 || i < failed_index) {
            failed_index = i;
            failure = e.what();
          }
        }
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failed_index >= 0) {
    throw convergence_error("cell " + std::to_string(failed_index) + ": " +
                            failure);
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void reduce_min(VerificationReport& report) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < report.cells.size(); ++i) {
    if (report.cells[i].bound_value < report.cells[best].bound_value) {
      best = i;
    }
  }
  report.min_value = report.cells[best].bound_value;
  report.min_cell = report.cells[best].cell;
}

}  // namespace

const char* lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::evil_star:
      return "evil-star";
    case LemmaId::no_short_geodesic:
      return "no-short-geodesic";
    case LemmaId::short_geodesic:
      return "short-geodesic";
  }
  return "unknown";
}

GridSpec default_no_short_geodesic_grid() {
  const bounds::Constants& c = bounds::constants();
  GridSpec grid;
  grid.intervals = {{c.delta0, 0.598},
                    {0.598, 0.608},
                    {0.608, 0.618},
                    {0.618, 0.7},
                    {0.7, c.lambda0}};
  grid.interval_subdivisions = {20, 20, 20, 20, 20};
  return grid;
}

GridSpec default_short_geodesic_grid() {
  const bounds::Constants& c = bounds::constants();
  GridSpec grid;
  grid.rectangles = {{0.003, 0.103, 0.0, 0.5},
                     {0.1, 0.5, 0.0, 0.5},
                     {0.5, c.delta0, 0.0, 0.5}};
  grid.rectangle_subdivisions = {{40, 100}, {50, 100}, {80, 100}};
  return grid;
}

VerificationReport verify_evil_star() {
  Timer timer;
  VerificationReport report;
  report.lemma_id = LemmaId::evil_star;
  report.threshold = 0.0;
  const double edges[] = {0.58, 0.63, 0.67, 0.68, 0.69, 0.7};
  for (int i = 0; i + 1 < 6; ++i) {
    CellResult result;
    result.cell.lo = edges[i];
    result.cell.hi = edges[i + 1];
    double delta = bounds::delta_ab(edges[i], edges[i + 1]);
    result.bound_value = -delta;
    result.branch_info =
        format_branch("delta=%.17g (sense reversed: pass iff delta < 0)",
                      delta, 0.0);
    report.cells.push_back(std::move(result));
  }
  reduce_min(report);
  report.passed = report.min_value > report.threshold;
  report.timing_seconds = timer.seconds();
  return report;
}

VerificationReport verify_no_short_geodesic(const GridSpec& grid,
                                            bounds::Mode mode, int threads) {
  const bounds::Constants& c = bounds::constants();
  if (grid.intervals.empty() ||
      grid.intervals.size() != grid.interval_subdivisions.size()) {
    throw domain_error(
        "verify_no_short_geodesic: grid must pair intervals with counts");
  }
  if (grid.refinement_factor < 1) {
    throw domain_error("verify_no_short_geodesic: refinement must be >= 1");
  }
  Timer timer;
  VerificationReport report;
  report.lemma_id = LemmaId::no_short_geodesic;
  report.mode = mode;
  report.threshold = c.vol_threshold;
  std::vector<bounds::HalfOpenInterval> cells;
  for (std::size_t r = 0; r < grid.intervals.size(); ++r) {
    const auto& region = grid.intervals[r];
    int n = grid.interval_subdivisions[r] * grid.refinement_factor;
    for (int i = 0; i < n; ++i) {
      cells.push_back({endpoint(region.lo, region.hi, n, i),
                       endpoint(region.lo, region.hi, n, i + 1)});
    }
  }
  report.cells.resize(cells.size());
  parallel_cells(static_cast<int>(cells.size()), threads, [&](int i) {
    const bounds::HalfOpenInterval& interval = cells[i];
    double near_bound = bounds::m_near(interval, mode);
    double right = near_bound + bounds::v_far(interval.hi, c.lambda0);
    double left = near_bound + bounds::v_far(interval.lo, c.lambda0);
    CellResult& result = report.cells[i];
    result.cell.lo = interval.lo;
    result.cell.hi = interval.hi;
    result.bound_value = right;
    result.branch_info =
        format_branch("mnear=%.17g left_endpoint_sum=%.17g", near_bound,
                      left);
  });
  reduce_min(report);
  report.passed = report.min_value > report.threshold;
  report.timing_seconds = timer.seconds();
  return report;
}

VerificationReport verify_short_geodesic(const GridSpec& grid, int threads) {
  const bounds::Constants& c = bounds::constants();
  if (grid.rectangles.empty() ||
      grid.rectangles.size() != grid.rectangle_subdivisions.size()) {
    throw domain_error(
        "verify_short_geodesic: grid must pair rectangles with counts");
  }
  if (grid.refinement_factor < 1) {
    throw domain_error("verify_short_geodesic: refinement must be >= 1");
  }
  Timer timer;
  VerificationReport report;
  report.lemma_id = LemmaId::short_geodesic;
  report.threshold = c.vol_threshold;
  std::vector<bounds::ParamRectangle> cells;
  for (std::size_t r = 0; r < grid.rectangles.size(); ++r) {
    const auto& region = grid.rectangles[r];
    int nl = grid.rectangle_subdivisions[r][0] * grid.refinement_factor;
    int ny = grid.rectangle_subdivisions[r][1] * grid.refinement_factor;
    for (int il = 0; il < nl; ++il) {
      for (int iy = 0; iy < ny; ++iy) {
        cells.push_back({endpoint(region.l_lo, region.l_hi, nl, il),
                         endpoint(region.l_lo, region.l_hi, nl, il + 1),
                         endpoint(region.y_lo, region.y_hi, ny, iy),
                         endpoint(region.y_lo, region.y_hi, ny, iy + 1)});
      }
    }
  }
  report.cells.resize(cells.size());
  parallel_cells(static_cast<int>(cells.size()), threads, [&](int i) {
    const bounds::ParamRectangle& rect = cells[i];
    bounds::RectBounds rb = bounds::rect_bounds(rect);
    CellResult& result = report.cells[i];
    result.cell.lo = rect.l_lo;
    result.cell.hi = rect.l_hi;
    result.cell.y_lo = rect.y_lo;
    result.cell.y_hi = rect.y_hi;
    result.cell.is_rectangle = true;
    result.bound_value = rb.w_s;
    result.branch_info = format_branch(
        rb.used_plus ? "chi_s=%.17g v_n_s=%.17g branch=plus"
                     : "chi_s=%.17g v_n_s=%.17g branch=minus",
        rb.chi_s, rb.v_n_s);
  });
  reduce_min(report);
  report.closure_value =
      bounds::v_n(c.delta0, 2.0 * hyptrig::rho_short(c.delta0) + 0.5);
  report.passed = report.min_value > report.threshold &&
                  report.closure_value > report.threshold;
  report.timing_seconds = timer.seconds();
  return report;
}

}  // namespace hypvol::verify
