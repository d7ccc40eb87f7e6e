#include "charlier/router.hpp"

#include <cmath>

#include "charlier/exact.hpp"
#include "charlier/intermediate.hpp"
#include "charlier/non_oscillatory.hpp"
#include "charlier/turning.hpp"

namespace charlier {

const char* to_string(FormulaTag t) {
    switch (t) {
        case FormulaTag::outer: return "outer";
        case FormulaTag::origin: return "origin";
        case FormulaTag::interior: return "interior";
        case FormulaTag::intermediate: return "intermediate";
        case FormulaTag::band: return "band";
        case FormulaTag::turn_right: return "turn_right";
        case FormulaTag::turn_left: return "turn_left";
    }
    return "?";
}

const char* to_string(ErrorOrder e) {
    switch (e) {
        case ErrorOrder::one_over_n: return "O(1/n)";
        case ErrorOrder::one_over_sqrt_n: return "O(n^-1/2)";
        case ErrorOrder::airy_uniform: return "O(n^-1/2) with Airy";
        case ErrorOrder::exp_small: return "exp-small";
    }
    return "?";
}

FormulaTag formula_tag_from_string(const std::string& s) {
    if (s == "outer") return FormulaTag::outer;
    if (s == "origin") return FormulaTag::origin;
    if (s == "interior") return FormulaTag::interior;
    if (s == "intermediate") return FormulaTag::intermediate;
    if (s == "band") return FormulaTag::band;
    if (s == "turn_right") return FormulaTag::turn_right;
    if (s == "turn_left") return FormulaTag::turn_left;
    throw DomainError("unknown formula tag: " + s);
}

const char* to_string(ZoneRationale z) {
    switch (z) {
        case ZoneRationale::outer_zone: return "outer_zone";
        case ZoneRationale::origin_zone: return "origin_zone";
        case ZoneRationale::interior_zone: return "interior_zone";
        case ZoneRationale::intermediate_zone: return "intermediate_zone";
        case ZoneRationale::band_zone: return "band_zone";
        case ZoneRationale::right_edge: return "right_edge";
        case ZoneRationale::left_edge: return "left_edge";
    }
    return "?";
}

namespace {

struct Geometry {
    double abs_y, dist_seg, abs_ym1, t_re, t_im, abs_t_im;
    bool y_real;
    double two_sa, collar;
};

Geometry geometry(const CharlierParams& params, long n, const CReal& x,
                  const RouterConfig& cfg) {
    int digits = params.digits();
    Real rn = make_real(n, digits);
    CReal y = x / rn;
    CReal t = (y - CReal(make_real(1L, digits))) * boost::multiprecision::sqrt(rn);
    Geometry g;
    g.abs_y = to_double(charlier::abs(y));
    g.dist_seg = to_double(dist_to_unit_segment(y));
    g.abs_ym1 = to_double(charlier::abs(y - CReal(make_real(1L, digits))));
    g.t_re = to_double(t.re);
    g.t_im = to_double(t.im);
    g.abs_t_im = std::fabs(g.t_im);
    g.y_real = y.im.is_zero();
    g.two_sa = 2 * std::sqrt(to_double(params.a_at(digits)));
    g.collar = cfg.collar_factor * std::sqrt(to_double(params.a_at(digits)));
    return g;
}

bool formula_pre_ok(const Geometry& g, double y_re, FormulaTag tag) {
    double sa = g.two_sa / 2;
    double dr = std::hypot(g.t_re - g.two_sa, g.t_im);
    double dl = std::hypot(g.t_re + g.two_sa, g.t_im);
    switch (tag) {
        case FormulaTag::outer:
            return g.dist_seg > 0;
        case FormulaTag::origin:
            return g.abs_ym1 > 1e-9;
        case FormulaTag::interior:
            return g.y_real && y_re > 0 && y_re < 1;
        case FormulaTag::intermediate:
            // dist(t, (-inf, 2 sqrt a]) > 0, and stay within the |y-1| < delta zone
            return (g.abs_t_im > 0 || g.t_re > g.two_sa) && g.abs_ym1 <= 0.5;
        case FormulaTag::band:
            return g.y_real && std::fabs(g.t_re) < g.two_sa;
        case FormulaTag::turn_right:
            return dr <= 1.5 * sa;
        case FormulaTag::turn_left:
            return dl <= 1.5 * sa;
    }
    return false;
}

}  // namespace

RegionDecision classify(const CharlierParams& params, long n, const CReal& x,
                        const RouterConfig& cfg) {
    if (n < cfg.n_min) throw DomainError("classify: n below n_min");
    int digits = params.digits();
    Real rn = make_real(n, digits);
    CReal y = x / rn;
    CReal t = (y - CReal(make_real(1L, digits))) * boost::multiprecision::sqrt(rn);
    Geometry g = geometry(params, n, x, cfg);
    double y_re = to_double(y.re);
    double sa = g.two_sa / 2;

    RegionDecision d;
    d.y = y;
    d.t = t;

    auto add_alt = [&](FormulaTag tag) {
        if (tag != d.primary_formula && formula_pre_ok(g, y_re, tag))
            d.alternates.push_back(tag);
    };

    double dr = std::hypot(g.t_re - g.two_sa, g.t_im);
    double dl = std::hypot(g.t_re + g.two_sa, g.t_im);
    double collar = cfg.collar_factor * sa;

    if (g.abs_y < cfg.origin_abs_y && g.dist_seg > cfg.segment_clearance) {
        d.primary_formula = FormulaTag::origin;
        d.rationale = ZoneRationale::origin_zone;
        add_alt(FormulaTag::outer);
        add_alt(FormulaTag::interior);
        return d;
    }
    if (g.dist_seg > cfg.segment_clearance && g.abs_y >= cfg.origin_abs_y &&
        g.abs_ym1 > cfg.outer_one_clearance) {
        d.primary_formula = FormulaTag::outer;
        d.rationale = ZoneRationale::outer_zone;
        add_alt(FormulaTag::origin);
        add_alt(FormulaTag::intermediate);
        return d;
    }
    if (g.y_real && y_re > cfg.interior_lo && y_re < cfg.interior_hi) {
        d.primary_formula = FormulaTag::interior;
        d.rationale = ZoneRationale::interior_zone;
        add_alt(FormulaTag::origin);
        return d;
    }
    if (dr <= collar) {
        d.primary_formula = FormulaTag::turn_right;
        d.rationale = ZoneRationale::right_edge;
        add_alt(FormulaTag::intermediate);
        add_alt(FormulaTag::band);
        return d;
    }
    if (dl <= collar) {
        d.primary_formula = FormulaTag::turn_left;
        d.rationale = ZoneRationale::left_edge;
        add_alt(FormulaTag::band);
        add_alt(FormulaTag::interior);
        return d;
    }
    if (g.y_real && std::fabs(g.t_re) < g.two_sa) {
        d.primary_formula = FormulaTag::band;
        d.rationale = ZoneRationale::band_zone;
        add_alt(FormulaTag::interior);
        add_alt(FormulaTag::turn_right);
        return d;
    }
    // remaining: near y = 1 but off the t-zones
    if (g.y_real && g.t_re < -g.two_sa && y_re > 0 && y_re < 1) {
        // real saturated side left of the band: intermediate's precondition
        // fails on the cut, the interior form is the valid one
        d.primary_formula = FormulaTag::interior;
        d.rationale = ZoneRationale::interior_zone;
        add_alt(FormulaTag::turn_left);
        return d;
    }
    if (g.y_real && g.dist_seg == 0.0) {
        // real y in [0, 0.1] (or tiny negative strip): Theorem 1 via the
        // identity path on the positive axis
        d.primary_formula = FormulaTag::origin;
        d.rationale = ZoneRationale::origin_zone;
        add_alt(FormulaTag::interior);
        return d;
    }
    if (g.y_real && g.t_re > g.two_sa) {
        d.primary_formula = FormulaTag::intermediate;
        d.rationale = ZoneRationale::intermediate_zone;
        add_alt(FormulaTag::outer);
        add_alt(FormulaTag::turn_right);
        return d;
    }
    if (!g.y_real) {
        if (g.dist_seg <= cfg.segment_clearance && g.abs_y < cfg.origin_abs_y) {
            // thin complex strip near the segment's left part: Theorem 1 holds
            d.primary_formula = FormulaTag::origin;
            d.rationale = ZoneRationale::origin_zone;
            add_alt(FormulaTag::outer);
            return d;
        }
        d.primary_formula = FormulaTag::intermediate;
        d.rationale = ZoneRationale::intermediate_zone;
        add_alt(FormulaTag::outer);
        add_alt(FormulaTag::origin);
        add_alt(FormulaTag::turn_right);
        return d;
    }
    // real y < 0 close to the segment endpoint
    d.primary_formula = FormulaTag::origin;
    d.rationale = ZoneRationale::origin_zone;
    add_alt(FormulaTag::outer);
    return d;
}

ApproxResult evaluate_formula(const CharlierParams& params, long n, const CReal& x,
                              FormulaTag tag) {
    int digits = params.digits();
    Real rn = make_real(n, digits);
    CReal y = x / rn;
    CReal t = (y - CReal(make_real(1L, digits))) * boost::multiprecision::sqrt(rn);
    switch (tag) {
        case FormulaTag::outer:
            return outer_formula(params, n, y);
        case FormulaTag::origin:
            return origin_gamma_formula(params, n, y);
        case FormulaTag::interior:
            if (!y.is_real())
                throw DomainError("interior formula needs real y");
            return interior_oscillatory_formula(params, n, y.re);
        case FormulaTag::intermediate:
            return intermediate_formula(params, n, t);
        case FormulaTag::band: {
            if (!t.is_real()) throw DomainError("band formula needs real t");
            Real c = t.re / (2 * params.sqrt_a(digits));
            if (!(c > -1 && c < 1)) throw DomainError("band formula needs |t| < 2 sqrt a");
            return band_cosine_formula(params, n, boost::multiprecision::acos(c));
        }
        case FormulaTag::turn_right:
            return airy_formula_right(params, n, t);
        case FormulaTag::turn_left:
            if (t.is_real())
                return airy_formula_left(params, n, t.re, LeftRadiusPolicy::relaxed);
            return airy_formula_left_two_term(params, n, t);
    }
    throw Error("evaluate_formula: unknown tag");
}

RoutedEval evaluate(const CharlierParams& params, long n, const CReal& x,
                    const RouterConfig& cfg) {
    RoutedEval out{classify(params, n, x, cfg), {}, false, {}, {}};
    bool have_primary = false;
    try {
        out.primary = evaluate_formula(params, n, x, out.decision.primary_formula);
        have_primary = true;
    } catch (const Error& e) {
        out.fallback_note = std::string("primary formula failed: ") + e.what();
    }
    for (FormulaTag tag : out.decision.alternates) {
        AlternateEval alt;
        alt.tag = tag;
        try {
            alt.result = evaluate_formula(params, n, x, tag);
            if (!have_primary) {
                out.primary = *alt.result;
                out.primary_fell_back = true;
                have_primary = true;
            }
        } catch (const Error& e) {
            alt.error = e.what();
        }
        out.alternates.push_back(std::move(alt));
    }
    if (!have_primary)
        throw Error("evaluate: primary and all alternates failed at this point");
    for (auto& alt : out.alternates)
        if (alt.result)
            alt.rel_disagreement = lc_rel_diff(alt.result->value, out.primary.value);
    return out;
}

}  // namespace charlier
