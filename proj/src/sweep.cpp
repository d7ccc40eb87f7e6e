#include "charlier/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "charlier/exact.hpp"
#include "charlier/intermediate.hpp"
#include "charlier/non_oscillatory.hpp"
#include "charlier/special.hpp"
#include "charlier/turning.hpp"

namespace charlier {

using boost::multiprecision::lgamma;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

// ---------------------------------------------------------------------------
// parallel kernel driver (serial reference twin kept for testing)

void for_each_index_serial(std::size_t count, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
}

void for_each_index_parallel(std::size_t count, int workers,
                             const std::function<void(std::size_t)>& body) {
    if (workers > 0) omp_set_num_threads(workers);
    long c = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < c; ++i) body(static_cast<std::size_t>(i));
}

void for_each_index(std::size_t count, ExecMode mode, int workers,
                    const std::function<void(std::size_t)>& body) {
    if (mode == ExecMode::serial)
        for_each_index_serial(count, body);
    else
        for_each_index_parallel(count, workers, body);
}

// ---------------------------------------------------------------------------
// Bo-Wong/Goh Section-5 leading forms

LogComplex bo_wong_y_leading(const CharlierParams& params, long n, const Real& y) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real yw = y;
    yw.precision(digits);
    Real rn = make_real(n, digits);
    Real nm = rn * (1 - yw);  // n(1-y)
    Real s, c;
    sin_cos_pi(nm, s, c);
    if (s.is_zero()) return LogComplex::zero(digits);
    Real lg = lgamma(rn + 1) + log(yw / (1 - yw)) / 2 + a / (1 - yw) +
              rn * yw * log(yw) + nm * log(1 - yw) + log(boost::multiprecision::abs(s)) +
              (log(make_real(2L, digits)) - log(rn) - log(pi_at(digits))) / 2;
    return lc_from_slv(SignedLogValue::from_log(s.sign(), lg));
}

LogComplex bo_wong_right_leading(const CharlierParams& params, long n, const Real& s) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real sw = s;
    sw.precision(digits);
    Real rn = make_real(n, digits);
    Real n16 = pow(rn, make_real(1L, digits) / 6);
    AiryPair p = airy_eval(sw * pow(a, -make_real(1L, digits) / 6), digits);
    if (p.ai.is_zero()) return LogComplex::zero(digits);
    Real lg = lgamma(rn + 1) + 3 * a / 2 +
              (sqrt(a * rn) + sw / 2 * n16 + a / 2) * log(rn / a) -
              log(a * rn) / 6 + log(boost::multiprecision::abs(p.ai));
    return lc_from_slv(SignedLogValue::from_log(p.ai.sign(), lg));
}

LogComplex bo_wong_left_leading(const CharlierParams& params, long n, const Real& s) {
    int digits = params.digits();
    Real a = params.a_at(digits);
    Real sw = s;
    sw.precision(digits);
    Real rn = make_real(n, digits);
    Real n16 = pow(rn, make_real(1L, digits) / 6);
    Real x = rn - 2 * sqrt(a * rn) + sw * n16 + a;
    Real p = pi_at(digits);
    // 2 Re[e^{(x pi + pi/3)i} Ai(e^{pi i/3} s a^{-1/6})]
    CReal rot = exp(CReal(make_real(0L, digits), p / 3));
    CReal ai = airy_ai_complex(rot * CReal(sw * pow(a, -make_real(1L, digits) / 6)), digits);
    Real sx, cx;
    sin_cos_pi(x, sx, cx);
    // e^{(x pi + pi/3) i} = (cos(x pi) + i sin(x pi)) e^{i pi/3}
    CReal ph = CReal(cx, sx) * exp(CReal(make_real(0L, digits), p / 3));
    Real twice_re = 2 * (ph * ai).re;
    if (twice_re.is_zero()) return LogComplex::zero(digits);
    int sign = ((n % 2 == 0) ? 1 : -1) * twice_re.sign();
    Real lg = lgamma(rn + 1) + 3 * a / 2 + (x - rn) / 2 * log(rn / a) - log(a * rn) / 6 +
              log(boost::multiprecision::abs(twice_re));
    return lc_from_slv(SignedLogValue::from_log(sign, lg));
}

// ---------------------------------------------------------------------------
// compare sweep

void SweepSpec::validate() const {
    if (n_list.empty()) throw DomainError("sweep: empty n list");
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw DomainError("sweep: n list must be ascending");
    if (points.empty()) throw DomainError("sweep: empty point set");
    if (points.size() > 1000000) throw DomainError("sweep: point set exceeds 10^6");
    if (formulas.empty() && against == AgainstKind::none)
        throw DomainError("sweep: no formulas requested");
    for (long n : n_list)
        if (n > 2000 && !allow_slow)
            throw DomainError("sweep: oracle beyond n = 2000 requires --allow-slow");
}

namespace {

double err_exponent(ErrorOrder e) {
    switch (e) {
        case ErrorOrder::one_over_n: return 1.0;
        case ErrorOrder::one_over_sqrt_n:
        case ErrorOrder::airy_uniform: return 0.5;
        case ErrorOrder::exp_small: return 0.0;
    }
    return 0.0;
}

CReal point_to_x(const CharlierParams& params, long n, PointKind kind,
                 std::complex<double> pt, int digits) {
    Real rn = make_real(n, digits);
    CReal p(make_real(pt.real(), digits), make_real(pt.imag(), digits));
    switch (kind) {
        case PointKind::x: return p;
        case PointKind::y: return p * rn;
        case PointKind::t: return CReal(rn) + p * sqrt(rn);
        case PointKind::theta: {
            if (!p.is_real()) throw DomainError("theta points must be real");
            Real t = 2 * params.sqrt_a(digits) * boost::multiprecision::cos(p.re);
            return CReal(rn + sqrt(rn) * t);
        }
    }
    throw DomainError("bad point kind");
}

struct AgainstEval {
    std::string name;
    LogComplex bw;
    std::string our_tag;
};

}  // namespace

std::vector<CompareRow> run_compare(const SweepSpec& spec) {
    spec.validate();
    PrecisionPolicy pol;
    pol.working_bits = spec.precision_bits;
    CharlierParams params(spec.a, pol);
    int digits = params.digits();

    std::vector<std::string> formulas = spec.formulas;
    if (spec.against != AgainstKind::none && formulas.empty()) {
        switch (spec.against) {
            case AgainstKind::bo_wong_0: formulas = {"origin"}; break;
            case AgainstKind::bo_wong_right: formulas = {"turn_right"}; break;
            case AgainstKind::bo_wong_left: formulas = {"turn_left"}; break;
            default: break;
        }
    }

    struct Task {
        long n;
        std::complex<double> pt;
    };
    std::vector<Task> tasks;
    for (long n : spec.n_list)
        for (auto pt : spec.points) tasks.push_back({n, pt});

    std::vector<std::vector<CompareRow>> buckets(tasks.size());
    for_each_index(tasks.size(), spec.mode, spec.workers, [&](std::size_t i) {
        const Task& tk = tasks[i];
        long n = tk.n;
        std::complex<double> raw = tk.pt;

        // --against interprets the point as the Section-5 scaling parameter
        std::complex<double> pt = raw;
        PointKind kind = spec.kind;
        if (spec.against == AgainstKind::bo_wong_right ||
            spec.against == AgainstKind::bo_wong_left) {
            double a = to_double(params.a_at(digits));
            double s = raw.real();
            double sn = (spec.against == AgainstKind::bo_wong_right) ? 1.0 : -1.0;
            double y = 1 + sn * 2 * std::sqrt(a / n) + s / std::pow(n, 5.0 / 6.0) +
                       a / static_cast<double>(n);
            pt = y;
            kind = PointKind::y;
        }

        CReal x = point_to_x(params, n, kind, pt, digits);
        LogComplex oracle = eval_recurrence(params, n, x);
        for (const std::string& f : formulas) {
            CompareRow row;
            row.n = n;
            row.point = raw;
            row.formula = f;
            row.oracle_log10 = lc_log10_mod(oracle);
            row.oracle_phase = lc_phase_double(oracle);
            try {
                LogComplex val;
                std::string order = "exact";
                double p_exp = 0.0;
                if (f == "oracle") {
                    val = oracle;
                } else {
                    ApproxResult r = evaluate_formula(params, n, x, formula_tag_from_string(f));
                    val = r.value;
                    order = to_string(r.error_order);
                    p_exp = err_exponent(r.error_order);
                }
                row.value_log10 = lc_log10_mod(val);
                row.value_phase = lc_phase_double(val);
                row.rel_err = lc_rel_diff(val, oracle);
                row.err_scaled = row.rel_err * std::pow(static_cast<double>(n), p_exp);
                row.error_order = order;

                if (spec.against != AgainstKind::none) {
                    Real sv = make_real(raw.real(), digits);
                    LogComplex bw;
                    switch (spec.against) {
                        case AgainstKind::bo_wong_0:
                            row.bw_formula = "bo-wong-0";
                            bw = bo_wong_y_leading(params, n, sv);
                            break;
                        case AgainstKind::bo_wong_right:
                            row.bw_formula = "bo-wong-right";
                            bw = bo_wong_right_leading(params, n, sv);
                            break;
                        case AgainstKind::bo_wong_left:
                            row.bw_formula = "bo-wong-left";
                            bw = bo_wong_left_leading(params, n, sv);
                            break;
                        default: break;
                    }
                    row.bw_log10 = lc_log10_mod(bw);
                    row.bw_phase = lc_phase_double(bw);
                    row.bw_vs_formula = lc_rel_diff(bw, val);
                }
            } catch (const Error& e) {
                row.value_log10 = std::nan("");
                row.value_phase = std::nan("");
                row.rel_err = std::nan("");
                row.err_scaled = std::nan("");
                row.error_order = std::string("error: ") + e.what();
            }
            buckets[i].push_back(std::move(row));
        }
    });

    std::vector<CompareRow> rows;
    for (auto& b : buckets)
        for (auto& r : b) rows.push_back(std::move(r));
    return rows;
}

// ---------------------------------------------------------------------------
// region map

std::vector<RegionRow> run_regionmap(const RegionMapSpec& spec) {
    if (spec.nx < 1 || spec.ny < 1 || spec.nx * spec.ny > 1000000)
        throw DomainError("regionmap: grid must have between 1 and 10^6 cells");
    PrecisionPolicy pol;
    pol.working_bits = spec.precision_bits;
    CharlierParams params(spec.a, pol);
    int digits = params.digits();
    Real rn = make_real(spec.n, digits);

    std::size_t count = static_cast<std::size_t>(spec.nx) * spec.ny;
    std::vector<RegionRow> rows(count);
    for_each_index(count, spec.mode, spec.workers, [&](std::size_t idx) {
        long i = static_cast<long>(idx) % spec.nx;
        long j = static_cast<long>(idx) / spec.nx;
        double yre = spec.nx == 1 ? spec.y_re0
                                  : spec.y_re0 + (spec.y_re1 - spec.y_re0) * i / (spec.nx - 1);
        double yim = spec.ny == 1 ? spec.y_im0
                                  : spec.y_im0 + (spec.y_im1 - spec.y_im0) * j / (spec.ny - 1);
        CReal y(make_real(yre, digits), make_real(yim, digits));
        RegionRow& row = rows[idx];
        row.y_re = yre;
        row.y_im = yim;
        try {
            RoutedEval ev = evaluate(params, spec.n, y * rn);
            row.zone = to_string(ev.decision.rationale);
            row.primary = to_string(ev.decision.primary_formula);
            std::string alts;
            double maxd = -1;
            for (const auto& alt : ev.alternates) {
                if (!alts.empty()) alts += ';';
                alts += to_string(alt.tag);
                if (alt.rel_disagreement)
                    maxd = std::max(maxd, *alt.rel_disagreement);
            }
            row.alternates = alts;
            if (maxd >= 0) row.max_disagreement = maxd;
        } catch (const Error& e) {
            row.zone = "unroutable";
            row.primary = std::string("error: ") + e.what();
        }
    });
    return rows;
}

// ---------------------------------------------------------------------------
// zeros

ZeroSweepResult run_zeros(const std::string& a, long n, std::optional<double> lo,
                          std::optional<double> hi, bool predictions, bool density,
                          int precision_bits, ExecMode mode, int workers) {
    PrecisionPolicy pol;
    pol.working_bits = precision_bits;
    CharlierParams params(a, pol);
    double av = to_double(params.a_at(params.digits()));
    double full_hi = n + 2 * std::sqrt(av * n) +
                     3.0 * std::pow(static_cast<double>(n), 1.0 / 6.0) + 4.0;
    ZeroSweepResult res;
    res.zeros = find_zeros(params, n, lo.value_or(-1.0), hi.value_or(full_hi), mode, workers);
    if (predictions) attach_predictions(params, n, res.zeros);
    if (density) {
        constexpr int kBins = 10;
        res.density_bin_lo.resize(kBins);
        res.density_height.assign(kBins, 0.0);
        for (int b = 0; b < kBins; ++b) res.density_bin_lo[b] = b / static_cast<double>(kBins);
        for (const auto& z : res.zeros) {
            double y = z.x_empirical / n;
            int b = static_cast<int>(y * kBins);
            if (b >= 0 && b < kBins) res.density_height[b] += 1.0;
        }
        for (int b = 0; b < kBins; ++b)
            res.density_height[b] /= (static_cast<double>(n) / kBins);
    }
    return res;
}

// ---------------------------------------------------------------------------
// deterministic writers

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

constexpr const char* kEol = "\r\n";  // RFC 4180

void csv_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i]);
    }
    out += kEol;
}

std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string compare_csv(const std::vector<CompareRow>& rows) {
    std::string out;
    csv_row(out, {"n", "point_re", "point_im", "formula", "oracle_log10", "oracle_phase",
                  "value_log10", "value_phase", "rel_err", "err_scaled", "error_order",
                  "bw_formula", "bw_log10", "bw_phase", "bw_vs_formula"});
    for (const auto& r : rows)
        csv_row(out, {std::to_string(r.n), format_double(r.point.real()),
                      format_double(r.point.imag()), r.formula, format_double(r.oracle_log10),
                      format_double(r.oracle_phase), format_double(r.value_log10),
                      format_double(r.value_phase), format_double(r.rel_err),
                      format_double(r.err_scaled), r.error_order, r.bw_formula,
                      opt_str(r.bw_log10), opt_str(r.bw_phase), opt_str(r.bw_vs_formula)});
    return out;
}

std::string regionmap_csv(const std::vector<RegionRow>& rows) {
    std::string out;
    csv_row(out, {"y_re", "y_im", "zone", "primary", "alternates", "max_disagreement"});
    for (const auto& r : rows)
        csv_row(out, {format_double(r.y_re), format_double(r.y_im), r.zone, r.primary,
                      r.alternates, opt_str(r.max_disagreement)});
    return out;
}

std::string zeros_csv(const ZeroSweepResult& res, bool predictions, bool density) {
    std::string out;
    if (predictions)
        csv_row(out, {"k", "x_empirical", "x_predicted", "prediction_source", "abs_gap"});
    else
        csv_row(out, {"k", "x_empirical"});
    for (const auto& z : res.zeros) {
        if (predictions) {
            std::string src;
            if (z.prediction_source) {
                switch (*z.prediction_source) {
                    case PredictionSource::corollary_integer: src = "corollary_integer"; break;
                    case PredictionSource::band_cosine: src = "band_cosine"; break;
                    case PredictionSource::airy_edge: src = "airy_edge"; break;
                }
            }
            csv_row(out, {std::to_string(z.k), format_double(z.x_empirical),
                          z.x_predicted ? format_double(*z.x_predicted) : std::string(), src,
                          z.abs_gap ? format_double(*z.abs_gap) : std::string()});
        } else {
            csv_row(out, {std::to_string(z.k), format_double(z.x_empirical)});
        }
    }
    if (density) {
        csv_row(out, {"bin_lo", "bin_hi", "density"});
        for (std::size_t b = 0; b < res.density_bin_lo.size(); ++b) {
            double lo = res.density_bin_lo[b];
            double hi = lo + 0.1;
            csv_row(out, {format_double(lo), format_double(hi),
                          format_double(res.density_height[b])});
        }
    }
    return out;
}

}  // namespace charlier
