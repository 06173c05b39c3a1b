#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigspline/analysis.hpp"
#include "trigspline/detail/numeric.hpp"
#include "trigspline/errors.hpp"
#include "trigspline/polyoracle.hpp"
#include "trigspline/power.hpp"
#include "trigspline/spline.hpp"

namespace trigspline::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

struct RawSamples {
    bool has_t = false;
    std::vector<double> t;
    std::vector<double> v;
};

bool parse_double(const std::string& field, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(field, &pos);
        while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
        return pos == field.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

RawSamples read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    RawSamples raw;
    std::string line;
    bool first = true;
    int width = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::vector<std::string> fields = split(line, ',');
        std::vector<double> nums(fields.size());
        bool numeric = fields.size() >= 1 && fields.size() <= 2;
        for (size_t i = 0; numeric && i < fields.size(); ++i)
            numeric = parse_double(fields[i], nums[i]);
        if (!numeric) {
            if (first) { // header row
                first = false;
                continue;
            }
            throw ValidationError("cannot parse CSV row '" + line + "'");
        }
        if (width == 0) width = static_cast<int>(fields.size());
        if (static_cast<int>(fields.size()) != width)
            throw ValidationError("inconsistent CSV column count in '" + path + "'");
        if (width == 2) {
            raw.has_t = true;
            raw.t.push_back(nums[0]);
            raw.v.push_back(nums[1]);
        } else {
            raw.v.push_back(nums[0]);
        }
        first = false;
    }
    if (raw.v.empty()) throw ValidationError("no sample rows in '" + path + "'");
    return raw;
}

// Order value-only rows as given; match a t column against the grid nodes to
// 1e-9 and place each row at its node.
SampleSet samples_from(const RawSamples& raw, const UniformGrid& grid) {
    const int big_n = grid.size();
    if (static_cast<int>(raw.v.size()) != big_n)
        throw GridMismatch("sample row count " + std::to_string(raw.v.size()) +
                           " does not match N = " + std::to_string(big_n));
    if (!raw.has_t) return SampleSet(grid, raw.v);

    std::vector<double> values(static_cast<size_t>(big_n));
    std::vector<bool> seen(static_cast<size_t>(big_n), false);
    for (size_t row = 0; row < raw.t.size(); ++row) {
        const double tr = wrap_to_period(raw.t[row]);
        int match = -1;
        for (int j = 1; j <= big_n; ++j) {
            double d = std::abs(tr - grid.node(j));
            d = std::min(d, detail::kTwoPi - d);
            if (d <= 1e-9) {
                match = j;
                break;
            }
        }
        if (match < 0)
            throw GridMismatch("sample abscissa " + fmt17(raw.t[row]) +
                               " does not match any grid node to 1e-9");
        if (seen[static_cast<size_t>(match - 1)])
            throw GridMismatch("duplicate sample for grid node " + std::to_string(match));
        seen[static_cast<size_t>(match - 1)] = true;
        values[static_cast<size_t>(match - 1)] = raw.v[row];
    }
    return SampleSet(grid, values);
}

struct CliSpec {
    int big_n = 0;
    SplineSpec spec;
};

ParamVector param_from_json(const json& j, const char* name) {
    if (!j.is_array() || j.size() != 3)
        throw ValidationError(std::string(name) + " must be an array of 3 reals");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

CliSpec load_spec(const std::string& path, const TailControl& default_tail) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open spec file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("cannot parse spec file '" + path + "': " + e.what());
    }
    try {
        CliSpec out;
        out.big_n = j.at("N").get<int>();
        out.spec.i1 = indicator_from_int(j.at("I1").get<int>());
        out.spec.i2 = indicator_from_int(j.at("I2").get<int>());
        out.spec.r = j.at("r").get<int>();
        out.spec.kind = factor_kind_from_string(j.at("nu").get<std::string>());
        out.spec.gamma = param_from_json(j.at("gamma"), "gamma");
        out.spec.eta = param_from_json(j.at("eta"), "eta");
        out.spec.tail.rel_tol = j.value("tail_rel_tol", default_tail.rel_tol);
        out.spec.tail.max_terms = j.value("tail_max_terms", default_tail.max_terms);
        validate(out.spec);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("invalid spec file '" + path + "': " + e.what());
    }
}

TailControl default_tail_from_env() {
    TailControl tail;
    if (const char* env = std::getenv("TRIGSPLINE_TAIL_TOL")) {
        double v = 0.0;
        if (!parse_double(env, v) || v <= 0.0)
            throw ValidationError("TRIGSPLINE_TAIL_TOL must be a positive real, got '" +
                                  std::string(env) + "'");
        tail.rel_tol = v;
    }
    return tail;
}

json to_json_array(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"trigonometric interpolation splines"};
    app.require_subcommand(1);

    // nodes
    int nodes_n = 0;
    int nodes_ind = 0;
    auto* nodes_cmd = app.add_subcommand("nodes", "print the grid nodes as CSV");
    nodes_cmd->add_option("--N", nodes_n, "node count (odd, >= 3)")->required();
    nodes_cmd->add_option("--indicator", nodes_ind, "grid indicator (0 or 1)")->required();

    // coeffs
    std::string coeffs_in;
    int coeffs_ind = 0;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "DFT coefficients of samples as JSON");
    coeffs_cmd->add_option("--in", coeffs_in, "samples CSV (t,value or value rows)")->required();
    coeffs_cmd->add_option("--indicator", coeffs_ind, "grid indicator (0 or 1)")->required();

    // eval
    std::string eval_spec, eval_in;
    double eval_t0 = 0.0, eval_t1 = detail::kTwoPi;
    int eval_points = 1000, eval_deriv = 0;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate the spline on a point range as CSV");
    eval_cmd->add_option("--spec", eval_spec, "spline spec JSON")->required();
    eval_cmd->add_option("--in", eval_in, "samples CSV")->required();
    eval_cmd->add_option("--t0", eval_t0, "range start");
    eval_cmd->add_option("--t1", eval_t1, "range end");
    eval_cmd->add_option("--points", eval_points, "number of points");
    eval_cmd->add_option("--deriv", eval_deriv, "derivative order q");

    // power
    std::string power_spec, power_in;
    int power_deriv = 0;
    auto* power_cmd = app.add_subcommand("power", "average power report as JSON");
    power_cmd->add_option("--spec", power_spec, "spline spec JSON")->required();
    power_cmd->add_option("--in", power_in, "samples CSV")->required();
    power_cmd->add_option("--deriv", power_deriv, "derivative order q");

    // compare
    std::string cmp_spec, cmp_in, cmp_oracle = "cubic";
    int cmp_points = 1000;
    auto* cmp_cmd = app.add_subcommand("compare", "spline vs polynomial oracle as JSON");
    cmp_cmd->add_option("--spec", cmp_spec, "spline spec JSON")->required();
    cmp_cmd->add_option("--in", cmp_in, "samples CSV")->required();
    cmp_cmd->add_option("--oracle", cmp_oracle, "cubic or linear")->required();
    cmp_cmd->add_option("--points", cmp_points, "comparison points");

    // moments
    std::string mom_in;
    auto* mom_cmd = app.add_subcommand("moments", "cyclic-system vs trig-spline moments as JSON");
    mom_cmd->add_option("--in", mom_in, "samples CSV")->required();

    // sweep
    std::string sweep_in, sweep_nu = "nu1", sweep_grid = "default";
    int sweep_r = 3, sweep_deriv = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep of the average power as CSV");
    sweep_cmd->add_option("--in", sweep_in, "samples CSV")->required();
    sweep_cmd->add_option("--r", sweep_r, "spline order");
    sweep_cmd->add_option("--nu", sweep_nu, "factor kind nu1|nu2|nu3|nu4");
    sweep_cmd->add_option("--deriv", sweep_deriv, "derivative order q");
    sweep_cmd->add_option("--grid", sweep_grid, "parameter grid name (default)");

    // convergence
    std::string conv_fn = "expsin", conv_nu = "nu1", conv_ns = "9,17,35";
    int conv_r = 3;
    auto* conv_cmd = app.add_subcommand("convergence", "error decay across grid sizes");
    conv_cmd->add_option("--fn", conv_fn, "target function (expsin)");
    conv_cmd->add_option("--r", conv_r, "spline order");
    conv_cmd->add_option("--nu", conv_nu, "factor kind");
    conv_cmd->add_option("--Ns", conv_ns, "comma-separated odd grid sizes");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("trigspline");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const TailControl default_tail = default_tail_from_env();

        if (nodes_cmd->parsed()) {
            const UniformGrid grid = make_grid(nodes_n, indicator_from_int(nodes_ind));
            out << "t\n";
            for (double t : grid.nodes()) out << fmt17(t) << "\n";
            return 0;
        }

        if (coeffs_cmd->parsed()) {
            const RawSamples raw = read_csv(coeffs_in);
            const UniformGrid grid =
                make_grid(static_cast<int>(raw.v.size()), indicator_from_int(coeffs_ind));
            const FourierCoeffs c = dft_coeffs(samples_from(raw, grid));
            json j;
            j["a0"] = c.a0();
            j["a"] = to_json_array(c.a());
            j["b"] = to_json_array(c.b());
            out << j.dump() << "\n";
            return 0;
        }

        if (eval_cmd->parsed()) {
            const CliSpec cs = load_spec(eval_spec, default_tail);
            const UniformGrid grid = make_grid(cs.big_n, cs.spec.i2);
            const TrigSpline s = build_spline(samples_from(read_csv(eval_in), grid), cs.spec);
            if (eval_points < 1) throw ValidationError("--points must be >= 1");
            out << "t,value\n";
            for (int i = 0; i < eval_points; ++i) {
                const double t = eval_points == 1
                                     ? eval_t0
                                     : eval_t0 + (eval_t1 - eval_t0) * i / (eval_points - 1);
                out << fmt17(t) << "," << fmt17(s.eval(t, eval_deriv)) << "\n";
            }
            return 0;
        }

        if (power_cmd->parsed()) {
            const CliSpec cs = load_spec(power_spec, default_tail);
            const UniformGrid grid = make_grid(cs.big_n, cs.spec.i2);
            const TrigSpline s = build_spline(samples_from(read_csv(power_in), grid), cs.spec);
            const PowerReport report = power_spline_series(s, power_deriv);
            json j;
            j["series"] = report.series_value;
            j["quadrature"] = report.quadrature_value;
            j["pc"] = report.pc;
            j["ps"] = report.ps;
            out << j.dump() << "\n";
            return 0;
        }

        if (cmp_cmd->parsed()) {
            const CliSpec cs = load_spec(cmp_spec, default_tail);
            if (cs.spec.i2 != Indicator::I0)
                throw ValidationError("compare requires I2 = 0 (the oracle grid)");
            const UniformGrid grid = make_grid(cs.big_n, Indicator::I0);
            const SampleSet samples = samples_from(read_csv(cmp_in), grid);
            const TrigSpline s = build_spline(samples, cs.spec);
            PeriodicPolySpline oracle = cmp_oracle == "cubic" ? build_cubic_periodic(samples)
                                        : cmp_oracle == "linear"
                                            ? build_linear(samples)
                                            : throw ValidationError("--oracle must be cubic or linear");
            const ErrorStats stats = error_stats([&](double t) { return s.eval(t); },
                                                 [&](double t) { return oracle.eval(t); },
                                                 cmp_points);
            json j;
            j["sup_err"] = stats.sup_err;
            j["l2_err"] = stats.l2_err;
            out << j.dump() << "\n";
            return 0;
        }

        if (mom_cmd->parsed()) {
            const RawSamples raw = read_csv(mom_in);
            const UniformGrid grid =
                make_grid(static_cast<int>(raw.v.size()), Indicator::I0);
            const SampleSet samples = samples_from(raw, grid);
            const std::vector<double> cyclic = build_cubic_periodic(samples).moments();
            const std::vector<double> trig = moments_via_trigspline(samples);
            double scale = 0.0;
            for (double m : cyclic) scale = std::max(scale, std::abs(m));
            double diff = 0.0;
            for (size_t i = 0; i < cyclic.size(); ++i)
                diff = std::max(diff, std::abs(cyclic[i] - trig[i]));
            json j;
            j["cyclic"] = to_json_array(cyclic);
            j["trig"] = to_json_array(trig);
            j["max_rel_diff"] = scale > 0.0 ? diff / scale : diff;
            out << j.dump() << "\n";
            return 0;
        }

        if (sweep_cmd->parsed()) {
            if (sweep_grid != "default")
                throw ValidationError("unknown sweep grid '" + sweep_grid + "'");
            const RawSamples raw = read_csv(sweep_in);
            const UniformGrid grid =
                make_grid(static_cast<int>(raw.v.size()), Indicator::I0);
            const SampleSet samples = samples_from(raw, grid);
            const SweepResult result =
                sweep_power(samples, sweep_r, factor_kind_from_string(sweep_nu), sweep_deriv,
                            SweepGrid::default_grid(), default_tail);
            err << "baseline_power=" << fmt17(result.baseline_power) << "\n";
            out << "g1,g2,g3,power,flag\n";
            for (const SweepCell& cell : result.cells) {
                out << fmt17(cell.gamma.g1) << "," << fmt17(cell.gamma.g2) << ","
                    << fmt17(cell.gamma.g3) << ",";
                if (cell.degenerate)
                    out << "nan,degenerate\n";
                else
                    out << fmt17(cell.power) << ",ok\n";
            }
            return 0;
        }

        if (conv_cmd->parsed()) {
            if (conv_fn != "expsin")
                throw ValidationError("unknown --fn '" + conv_fn + "' (supported: expsin)");
            std::vector<int> ns;
            for (const std::string& tok : split(conv_ns, ',')) {
                if (tok.empty()) continue;
                try {
                    size_t pos = 0;
                    ns.push_back(std::stoi(tok, &pos));
                    if (pos != tok.size()) throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw ValidationError("cannot parse --Ns entry '" + tok + "'");
                }
            }
            const auto f = [](double t) { return std::exp(std::sin(t)); };
            const ConvergenceResult result =
                convergence_order(f, conv_r, factor_kind_from_string(conv_nu), ns);
            out << "N,sup_err\n";
            for (const auto& [big_n, sup] : result.errors)
                out << big_n << "," << fmt17(sup) << "\n";
            json j;
            j["order"] = result.order;
            j["exact"] = result.exact;
            out << j.dump() << "\n";
            return 0;
        }

        err << "no subcommand\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace trigspline::cli
