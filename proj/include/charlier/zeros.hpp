#pragma once

#include <optional>
#include <vector>

#include "charlier/parallel.hpp"
#include "charlier/params.hpp"

// Zero location: empirical zeros of C_n^{(a)} via sign changes of the exact
// oracle, and the predicted positions (integer-pinned small zeros, band-cosine
// zeros, Airy-edge zeros).

namespace charlier {

enum class PredictionSource { corollary_integer, band_cosine, airy_edge };

struct ZeroReport {
    long k = 0;                 // 1-based, increasing within the scan
    double x_empirical = 0.0;
    std::optional<double> x_predicted;
    std::optional<PredictionSource> prediction_source;
    std::optional<double> abs_gap;
};

// All sign changes of eval_recurrence on an adaptive grid over [lo, hi],
// bisected to |interval| <= 1e-12 max(1, |x|). A full scan (lo <= 0,
// hi >= n + 2 sqrt(an) + margin) must find exactly n zeros; grid refinement
// escalates twice before IncompleteScan.
std::vector<ZeroReport> find_zeros(const CharlierParams& params, long n, double lo,
                                   double hi, ExecMode mode = ExecMode::parallel,
                                   int workers = 0);

// Corollary positions: [0, 1, ..., k_max-1] (exponentially small error omitted).
std::vector<Real> predict_small_zeros(const CharlierParams& params, long n, long k_max);

// For each negative Airy zero iota_j solve n^{1/3} eta(t) + n^{-1/6} Phi(t) =
// iota_j near t = 2 sqrt a; returns x = n + sqrt(n) t, decreasing in j.
std::vector<Real> predict_edge_zeros(const CharlierParams& params, long n, long j_max);

// Band-cosine zero predictions inside [x_lo, x_hi] (phase through odd pi/2).
std::vector<Real> predict_band_zeros(const CharlierParams& params, long n, double x_lo,
                                     double x_hi);

// first j_max negative zeros of Ai, by bisection on airy_eval
std::vector<Real> airy_zeros(long j_max, int digits);

// attach nearest predictions to an empirical report (used by the CLI)
void attach_predictions(const CharlierParams& params, long n, std::vector<ZeroReport>& zs);

}  // namespace charlier
