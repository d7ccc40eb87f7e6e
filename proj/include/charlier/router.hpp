#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charlier/approx.hpp"
#include "charlier/params.hpp"

// Region routing: pick the applicable formula(s) for (a, n, x), evaluate the
// primary plus every alternate, and report pairwise disagreement diagnostics.

namespace charlier {

enum class ZoneRationale {
    outer_zone,
    origin_zone,
    interior_zone,
    intermediate_zone,
    band_zone,
    right_edge,
    left_edge,
};

const char* to_string(ZoneRationale z);

// Zone thresholds are engineering choices absent from the paper (which only
// asserts overlapping validity); override as needed.
struct RouterConfig {
    double origin_abs_y = 0.8;
    double segment_clearance = 0.2;
    double outer_one_clearance = 0.5;
    double interior_lo = 0.1;
    double interior_hi = 0.9;
    double collar_factor = 0.75;  // collar = factor * sqrt(a)
    long n_min = 8;
};

struct RegionDecision {
    FormulaTag primary_formula;
    std::vector<FormulaTag> alternates;
    CReal y;
    CReal t;
    ZoneRationale rationale;
};

RegionDecision classify(const CharlierParams& params, long n, const CReal& x,
                        const RouterConfig& cfg = {});

struct AlternateEval {
    FormulaTag tag;
    std::optional<ApproxResult> result;   // empty if the formula raised
    std::optional<double> rel_disagreement;  // vs the primary value
    std::string error;
};

struct RoutedEval {
    RegionDecision decision;
    ApproxResult primary;
    bool primary_fell_back = false;   // primary raised; an alternate supplied the value
    std::string fallback_note;
    std::vector<AlternateEval> alternates;
};

RoutedEval evaluate(const CharlierParams& params, long n, const CReal& x,
                    const RouterConfig& cfg = {});

// evaluate one formula tag at x (the dispatch evaluate() uses)
ApproxResult evaluate_formula(const CharlierParams& params, long n, const CReal& x,
                              FormulaTag tag);

}  // namespace charlier
