// Command-line interface: point evaluation, error-comparison sweeps, region
// maps, and zero atlases, as deterministic CSV/JSON.
//
// Exit codes: 0 ok, 2 flag/usage errors, 3 formula precondition violations,
// 4 incomplete zero scan.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "charlier/exact.hpp"
#include "charlier/router.hpp"
#include "charlier/sweep.hpp"

using json = nlohmann::ordered_json;
using namespace charlier;

namespace {

constexpr const char* kSchemaVersion = "1.0";

// complex literal: "re", "re+imi", "re-imi", e.g. "1.5+2i", "-0.5", "2-0.25i"
std::complex<double> parse_complex(const std::string& s) {
    if (s.empty()) throw DomainError("empty number");
    if (s.back() != 'i') {
        size_t pos = 0;
        double re = std::stod(s, &pos);
        if (pos != s.size()) throw DomainError("bad number: " + s);
        return {re, 0.0};
    }
    std::string body = s.substr(0, s.size() - 1);
    // split at the last +/- that is not an exponent sign
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)  // pure imaginary "2i" / "-1.5i" / "i"
        return {0.0, body.empty() || body == "+" ? 1.0 : (body == "-" ? -1.0 : std::stod(body))};
    double re = std::stod(body.substr(0, split));
    std::string ims = body.substr(split);
    double im = (ims == "+" ? 1.0 : ims == "-" ? -1.0 : std::stod(ims));
    return {re, im};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& s) {
    std::vector<std::complex<double>> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_complex(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

void emit(const std::string& text, const std::string& csv_path) {
    if (csv_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream f(csv_path, std::ios::binary);
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
}

struct CommonFlags {
    std::string a = "1";
    int precision_bits = 256;
    bool as_json = false;
    std::string csv_path;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonFlags& c) {
    cmd->add_option("--a", c.a, "parameter a > 0");
    cmd->add_option("--precision-bits", c.precision_bits, "working precision in bits");
    cmd->add_flag("--json", c.as_json, "emit a JSON document");
    cmd->add_option("--csv", c.csv_path, "write CSV to this path");
    cmd->add_option("--workers", c.workers, "worker thread count (0 = library default)");
}

json params_json(const CommonFlags& c, long n) {
    return json{{"a", c.a}, {"n", n}, {"precision_bits", c.precision_bits}};
}

int run_eval(const CommonFlags& c, long n, const std::string& xs, const std::string& ys,
             const std::string& ts, const std::string& ths, const std::string& formula) {
    int given = !xs.empty() + !ys.empty() + !ts.empty() + !ths.empty();
    if (given != 1) {
        std::cerr << "eval: give exactly one of --x, --y, --t, --theta\n";
        return 2;
    }
    PrecisionPolicy pol;
    pol.working_bits = c.precision_bits;
    CharlierParams params(c.a, pol);
    int digits = params.digits();
    Real rn = make_real(n, digits);

    std::complex<double> pv = parse_complex(!xs.empty() ? xs : !ys.empty() ? ys
                                            : !ts.empty() ? ts : ths);
    CReal x(make_real(pv.real(), digits), make_real(pv.imag(), digits));
    if (!ys.empty()) x = x * rn;
    if (!ts.empty()) x = CReal(rn) + x * boost::multiprecision::sqrt(rn);
    if (!ths.empty()) {
        Real t = 2 * params.sqrt_a(digits) * boost::multiprecision::cos(x.re);
        x = CReal(rn + boost::multiprecision::sqrt(rn) * t);
    }

    LogComplex value;
    std::string tag = formula.empty() ? "oracle" : formula;
    std::string order = "exact";
    if (tag == "oracle") {
        value = eval_recurrence(params, n, x);
    } else {
        ApproxResult r = evaluate_formula(params, n, x, formula_tag_from_string(tag));
        value = r.value;
        order = to_string(r.error_order);
    }

    double l10 = lc_log10_mod(value);
    double ph = lc_phase_double(value);
    std::string decimal;
    if (!std::isfinite(l10)) {
        decimal = "0";
    } else if (std::fabs(l10) <= 300.0) {
        bool real_phase = std::fabs(ph) < 1e-12 || std::fabs(std::fabs(ph) - 3.14159265358979) < 1e-12;
        if (real_phase) {
            SignedLogValue s = lc_to_slv(value, 1e-9);
            decimal = format_double(s.sign * std::pow(10.0, l10));
        } else {
            CReal v = lc_to_creal(value);
            decimal =
                format_double(to_double(v.re)) + "+" + format_double(to_double(v.im)) + "i";
        }
    }

    if (c.as_json) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "eval";
        doc["params"] = params_json(c, n);
        json row{{"formula", tag},
                 {"error_order", order},
                 {"phase", ph},
                 {"log10_mod", std::isfinite(l10) ? json(l10) : json("-inf")}};
        if (!decimal.empty()) row["decimal"] = decimal;
        doc["rows"] = json::array({row});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("formula: %s\nerror_order: %s\nphase: %s\nlog10_mod: %s\n", tag.c_str(),
                    order.c_str(), format_double(ph).c_str(), format_double(l10).c_str());
        if (!decimal.empty()) std::printf("decimal: %s\n", decimal.c_str());
    }
    return 0;
}

json compare_rows_json(const std::vector<CompareRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row{{"n", r.n},
                 {"point_re", r.point.real()},
                 {"point_im", r.point.imag()},
                 {"formula", r.formula},
                 {"oracle_log10", r.oracle_log10},
                 {"oracle_phase", r.oracle_phase},
                 {"value_log10", r.value_log10},
                 {"value_phase", r.value_phase},
                 {"rel_err", r.rel_err},
                 {"err_scaled", r.err_scaled},
                 {"error_order", r.error_order}};
        if (r.bw_log10) {
            row["bw_formula"] = r.bw_formula;
            row["bw_log10"] = *r.bw_log10;
            row["bw_phase"] = *r.bw_phase;
            row["bw_vs_formula"] = *r.bw_vs_formula;
        }
        arr.push_back(row);
    }
    return arr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision Charlier polynomial evaluation and asymptotics"};
    app.require_subcommand(1);

    // ---- eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate at one point");
    CommonFlags ec;
    add_common(eval_cmd, ec);
    long eval_n = 0;
    std::string ex, ey, et, eth, eformula;
    eval_cmd->add_option("--n", eval_n, "degree")->required();
    eval_cmd->add_option("--x", ex, "x (float or re+imi)");
    eval_cmd->add_option("--y", ey, "y = x/n");
    eval_cmd->add_option("--t", et, "t = sqrt(n)(y-1)");
    eval_cmd->add_option("--theta", eth, "theta with t = 2 sqrt(a) cos theta");
    eval_cmd->add_option("--formula", eformula, "formula tag or 'oracle' (default oracle)");

    // ---- compare
    auto* cmp_cmd = app.add_subcommand("compare", "formula-vs-oracle error table");
    CommonFlags cc;
    add_common(cmp_cmd, cc);
    std::string cn, cx, cy, ct, cth, cformulas, cagainst;
    bool allow_slow = false;
    cmp_cmd->add_option("--n", cn, "comma list of degrees")->required();
    cmp_cmd->add_option("--x", cx, "comma list of x points");
    cmp_cmd->add_option("--y", cy, "comma list of y points");
    cmp_cmd->add_option("--t", ct, "comma list of t points");
    cmp_cmd->add_option("--theta", cth, "comma list of theta points");
    cmp_cmd->add_option("--formula", cformulas, "comma list of formula tags / 'oracle'");
    cmp_cmd->add_option("--against", cagainst, "bo-wong-0 | bo-wong-right | bo-wong-left");
    cmp_cmd->add_flag("--allow-slow", allow_slow, "permit the oracle beyond n = 2000");

    // ---- regionmap
    auto* map_cmd = app.add_subcommand("regionmap", "router decisions on a y-grid");
    CommonFlags mc;
    add_common(map_cmd, mc);
    RegionMapSpec mspec;
    map_cmd->add_option("--n", mspec.n, "degree for the t-scaling");
    map_cmd->add_option("--re0", mspec.y_re0, "Re y lower bound");
    map_cmd->add_option("--re1", mspec.y_re1, "Re y upper bound");
    map_cmd->add_option("--im0", mspec.y_im0, "Im y lower bound");
    map_cmd->add_option("--im1", mspec.y_im1, "Im y upper bound");
    map_cmd->add_option("--nx", mspec.nx, "grid columns");
    map_cmd->add_option("--ny", mspec.ny, "grid rows");

    // ---- zeros
    auto* z_cmd = app.add_subcommand("zeros", "empirical zero atlas");
    CommonFlags zc;
    add_common(z_cmd, zc);
    long zn = 0;
    double zlo = -1.0, zhi = -1.0;
    bool zpred = false, zdens = false;
    bool zlo_set = false, zhi_set = false;
    z_cmd->add_option("--n", zn, "degree")->required();
    z_cmd->add_option("--lo", zlo, "scan lower bound")->each([&](const std::string&) {
        zlo_set = true;
    });
    z_cmd->add_option("--hi", zhi, "scan upper bound")->each([&](const std::string&) {
        zhi_set = true;
    });
    z_cmd->add_flag("--predictions", zpred, "attach predicted zeros and gaps");
    z_cmd->add_flag("--density", zdens, "emit the y-density histogram");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*eval_cmd) return run_eval(ec, eval_n, ex, ey, et, eth, eformula);

        if (*cmp_cmd) {
            SweepSpec spec;
            spec.a = cc.a;
            spec.precision_bits = cc.precision_bits;
            spec.allow_slow = allow_slow;
            spec.workers = cc.workers;
            try {
                spec.n_list = parse_long_list(cn);
                int given = !cx.empty() + !cy.empty() + !ct.empty() + !cth.empty();
                if (given != 1) throw DomainError("give exactly one of --x/--y/--t/--theta");
                if (!cx.empty()) { spec.kind = PointKind::x; spec.points = parse_complex_list(cx); }
                if (!cy.empty()) { spec.kind = PointKind::y; spec.points = parse_complex_list(cy); }
                if (!ct.empty()) { spec.kind = PointKind::t; spec.points = parse_complex_list(ct); }
                if (!cth.empty()) { spec.kind = PointKind::theta; spec.points = parse_complex_list(cth); }
                for (const std::string& f : [&] {
                         std::vector<std::string> out;
                         std::string cur;
                         for (char c : cformulas + ",") {
                             if (c == ',') {
                                 if (!cur.empty()) out.push_back(cur);
                                 cur.clear();
                             } else cur += c;
                         }
                         return out;
                     }())
                    spec.formulas.push_back(f);
                if (cagainst == "bo-wong-0") spec.against = AgainstKind::bo_wong_0;
                else if (cagainst == "bo-wong-right") spec.against = AgainstKind::bo_wong_right;
                else if (cagainst == "bo-wong-left") spec.against = AgainstKind::bo_wong_left;
                else if (!cagainst.empty()) throw DomainError("unknown --against: " + cagainst);
                spec.validate();
            } catch (const Error& e) {
                std::cerr << "compare: " << e.what() << "\n";
                return 2;
            } catch (const std::invalid_argument&) {
                std::cerr << "compare: bad numeric flag value\n";
                return 2;
            }
            std::vector<CompareRow> rows = run_compare(spec);
            if (cc.as_json) {
                json doc;
                doc["schema_version"] = kSchemaVersion;
                doc["command"] = "compare";
                doc["params"] = json{{"a", cc.a}, {"precision_bits", cc.precision_bits}};
                doc["rows"] = compare_rows_json(rows);
                std::cout << doc.dump(2) << "\n";
            } else {
                emit(compare_csv(rows), cc.csv_path);
            }
            return 0;
        }

        if (*map_cmd) {
            mspec.a = mc.a;
            mspec.precision_bits = mc.precision_bits;
            mspec.workers = mc.workers;
            std::vector<RegionRow> rows;
            try {
                rows = run_regionmap(mspec);
            } catch (const DomainError& e) {
                std::cerr << "regionmap: " << e.what() << "\n";
                return 2;
            }
            if (mc.as_json) {
                json doc;
                doc["schema_version"] = kSchemaVersion;
                doc["command"] = "regionmap";
                doc["params"] = json{{"a", mc.a}, {"n", mspec.n},
                                     {"precision_bits", mc.precision_bits}};
                json arr = json::array();
                for (const auto& r : rows) {
                    json row{{"y_re", r.y_re}, {"y_im", r.y_im}, {"zone", r.zone},
                             {"primary", r.primary}, {"alternates", r.alternates}};
                    if (r.max_disagreement) row["max_disagreement"] = *r.max_disagreement;
                    arr.push_back(row);
                }
                doc["rows"] = arr;
                std::cout << doc.dump(2) << "\n";
            } else {
                emit(regionmap_csv(rows), mc.csv_path);
            }
            return 0;
        }

        if (*z_cmd) {
            if (zn < 1) {
                std::cerr << "zeros: --n must be >= 1 (degree-0 has no zeros)\n";
                return 2;
            }
            ZeroSweepResult res;
            try {
                res = run_zeros(zc.a, zn, zlo_set ? std::optional<double>(zlo) : std::nullopt,
                                zhi_set ? std::optional<double>(zhi) : std::nullopt, zpred,
                                zdens, zc.precision_bits,
                                ExecMode::parallel, zc.workers);
            } catch (const IncompleteScan& e) {
                std::cerr << "zeros: " << e.what() << " (found " << e.zeros_found << ")\n";
                return 4;
            }
            if (zc.as_json) {
                json doc;
                doc["schema_version"] = kSchemaVersion;
                doc["command"] = "zeros";
                doc["params"] = json{{"a", zc.a}, {"n", zn},
                                     {"precision_bits", zc.precision_bits}};
                json arr = json::array();
                for (const auto& z : res.zeros) {
                    json row{{"k", z.k}, {"x_empirical", z.x_empirical}};
                    if (z.x_predicted) row["x_predicted"] = *z.x_predicted;
                    if (z.abs_gap) row["abs_gap"] = *z.abs_gap;
                    arr.push_back(row);
                }
                doc["rows"] = arr;
                if (zdens) {
                    doc["density"] = json::array();
                    for (std::size_t b = 0; b < res.density_bin_lo.size(); ++b)
                        doc["density"].push_back(json{{"bin_lo", res.density_bin_lo[b]},
                                                      {"density", res.density_height[b]}});
                }
                std::cout << doc.dump(2) << "\n";
            } else {
                emit(zeros_csv(res, zpred, zdens), zc.csv_path);
            }
            return 0;
        }
    } catch (const BranchError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const OutOfNeighborhood& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const AmbiguousDominance& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
