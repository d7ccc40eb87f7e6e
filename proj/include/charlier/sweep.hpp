#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "charlier/parallel.hpp"
#include "charlier/params.hpp"
#include "charlier/router.hpp"
#include "charlier/zeros.hpp"

// Sweep engines behind the CLI: error-comparison tables, region maps and zero
// atlases, emitted as deterministic CSV/JSON rows. Points are processed by the
// shared parallel kernel; output order is fixed by point index regardless of
// completion order.

namespace charlier {

enum class PointKind { x, y, t, theta };
enum class AgainstKind { none, bo_wong_0, bo_wong_right, bo_wong_left };

struct SweepSpec {
    std::string a = "1";
    std::vector<long> n_list;                    // non-empty, ascending
    PointKind kind = PointKind::y;
    std::vector<std::complex<double>> points;    // theta/t/y/x values (or s with --against)
    std::vector<std::string> formulas;           // formula tags and/or "oracle"
    AgainstKind against = AgainstKind::none;
    int precision_bits = 256;
    bool allow_slow = false;
    ExecMode mode = ExecMode::parallel;
    int workers = 0;

    void validate() const;  // throws DomainError on an inconsistent spec
};

struct CompareRow {
    long n;
    std::complex<double> point;
    std::string formula;
    double oracle_log10, oracle_phase;
    double value_log10, value_phase;
    double rel_err;
    double err_scaled;     // rel_err * n^p for the formula's claimed p
    std::string error_order;
    std::string bw_formula;            // --against only
    std::optional<double> bw_log10, bw_phase, bw_vs_formula;
};

std::vector<CompareRow> run_compare(const SweepSpec& spec);

struct RegionRow {
    double y_re, y_im;
    std::string zone, primary;
    std::string alternates;            // ';'-joined
    std::optional<double> max_disagreement;
};

struct RegionMapSpec {
    std::string a = "1";
    long n = 2048;
    double y_re0 = -2, y_re1 = 3, y_im0 = -1.5, y_im1 = 1.5;
    long nx = 50, ny = 50;
    int precision_bits = 256;
    ExecMode mode = ExecMode::parallel;
    int workers = 0;
};

std::vector<RegionRow> run_regionmap(const RegionMapSpec& spec);

struct ZeroSweepResult {
    std::vector<ZeroReport> zeros;
    std::vector<double> density_bin_lo;   // --density: bins over y in [0, 1]
    std::vector<double> density_height;
};

ZeroSweepResult run_zeros(const std::string& a, long n, std::optional<double> lo,
                          std::optional<double> hi, bool predictions, bool density,
                          int precision_bits, ExecMode mode, int workers);

// Bo-Wong/Goh leading forms (Section-5 comparison targets), monic scale
LogComplex bo_wong_y_leading(const CharlierParams& params, long n, const Real& y);
LogComplex bo_wong_right_leading(const CharlierParams& params, long n, const Real& s);
LogComplex bo_wong_left_leading(const CharlierParams& params, long n, const Real& s);

// deterministic text formatting shared by the writers
std::string format_double(double v);
std::string csv_escape(const std::string& field);

std::string compare_csv(const std::vector<CompareRow>& rows);
std::string regionmap_csv(const std::vector<RegionRow>& rows);
std::string zeros_csv(const ZeroSweepResult& res, bool predictions, bool density);

}  // namespace charlier
