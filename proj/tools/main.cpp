// disknorm CLI: generate class members, estimate hyperbolic sup-norms, audit
// memberships, and emit envelope / sharpness / harmonic tables as CSV or JSON.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "disknorm/bounds.hpp"
#include "disknorm/json_io.hpp"
#include "disknorm/random.hpp"

using namespace disknorm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParameter = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

// fixed 9-significant-digit decimal formatting for CSV cells
std::string sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string complex_str(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", z.real(), z.imag());
    return buf;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out << payload;
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open input file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GridFlags {
    double rmax = 0.9995;
    int radii = 96;
    int angles = 128;
    bool no_refine = false;
    double refine_tol = 1e-6;

    GridSpec to_grid() const {
        GridSpec g;
        g.r_max = rmax;
        g.radii_count = radii;
        g.angle_count = angles;
        g.refine = !no_refine;
        g.refine_tol = refine_tol;
        return g;
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
    cmd->add_option("--rmax", flags.rmax, "grid radial extent (default 0.9995)");
    cmd->add_option("--radii", flags.radii, "radial sample count (default 96)");
    cmd->add_option("--angles", flags.angles, "angular sample count (default 128)");
    cmd->add_flag("--no-refine", flags.no_refine, "skip local pattern-search refinement");
    cmd->add_option("--refine-tol", flags.refine_tol, "refinement step tolerance (default 1e-6)");
}

FunctionHandle load_function(const std::string& named, const std::string& input,
                             double lambda_for_named, int order) {
    if (!named.empty()) {
        if (named == "extremal") {
            return extremal_ozaki(lambda_for_named);
        }
        return named_function(named);
    }
    if (!input.empty()) {
        return function_from_json(read_input(input), order);
    }
    throw BadParameter("supply --named or --input");
}

json norm_estimate_json(const NormEstimate& est) {
    return json{{"value", est.value},
                {"argmax", {est.argmax.real(), est.argmax.imag()}},
                {"grid",
                 {{"radii", est.grid.radii_count},
                  {"angles", est.grid.angle_count},
                  {"r_max", est.grid.r_max},
                  {"refined", est.refined},
                  {"refine_tol", est.grid.refine_tol}}},
                {"lower_bound_only", est.lower_bound_only}};
}

std::string describe_estimate(const std::string& kind, const NormEstimate& est) {
    std::ostringstream out;
    out << "kind: " << kind << "\n";
    out << "value: " << sig9(est.value) << "\n";
    out << "argmax: " << complex_str(est.argmax) << " (|z| = " << sig9(std::abs(est.argmax))
        << ")\n";
    out << "grid: " << est.grid.radii_count << " radii x " << est.grid.angle_count
        << " angles, r_max " << sig9(est.grid.r_max)
        << (est.refined ? ", refined" : ", unrefined") << "\n";
    out << "lower_bound_only: true (finite-sample supremum)\n";
    return out.str();
}

// ---- generate ----------------------------------------------------------

int cmd_generate(const std::string& klass, double lambda, double beta, std::uint64_t seed,
                 int order, const std::string& out_path) {
    Rng rng(seed);
    FunctionHandle handle = [&] {
        if (klass == "f0") {
            const BlaschkeDescriptor phi = random_blaschke(rng);
            return ozaki_member(phi, lambda, order);
        }
        if (klass == "g") {
            const BlaschkeDescriptor phi = random_blaschke(rng);
            return gbeta_member(phi, beta, order);
        }
        throw BadParameter("--class must be f0 or g");
    }();
    write_output(out_path, function_to_json(handle));
    return kExitOk;
}

// ---- norm ---------------------------------------------------------------

int cmd_norm(const std::string& kind, const std::string& named, const std::string& input,
             double lambda, int order, const GridFlags& grid_flags, const std::string& format,
             const std::string& out_path) {
    const FunctionHandle f = load_function(named, input, lambda, order);
    const GridSpec grid = grid_flags.to_grid();

    std::string label = kind;
    NormEstimate est;
    bool becker_ok = false;
    if (kind == "pre") {
        est = norm_of(f, NormKind::PreSchwarzian, grid);
        label = "pre_schwarzian";
    } else if (kind == "schwarzian") {
        est = norm_of(f, NormKind::Schwarzian, grid);
    } else if (kind == "becker") {
        const BeckerReport report = becker_functional(f, grid);
        est = report.estimate;
        becker_ok = report.criterion_satisfied;
        label = "becker_functional";
    } else {
        throw BadParameter("--kind must be pre, schwarzian or becker");
    }

    if (format == "json") {
        json j = norm_estimate_json(est);
        j["kind"] = label;
        if (kind == "becker") {
            j["univalence"] = becker_ok ? "criterion satisfied (sufficient only)"
                                        : "inconclusive (value exceeds 1)";
        }
        write_output(out_path, j.dump(2) + "\n");
        return kExitOk;
    }

    std::string text = describe_estimate(label, est);
    if (kind == "becker") {
        text += becker_ok ? "univalence: criterion satisfied (sufficient only)\n"
                          : "univalence: inconclusive (value exceeds 1; criterion is "
                            "sufficient only)\n";
    }
    write_output(out_path, text);
    return kExitOk;
}

// ---- member -------------------------------------------------------------

int cmd_member(const std::string& klass, const std::string& named, const std::string& input,
               double lambda, double beta, int order, const GridFlags& grid_flags,
               const std::string& format, const std::string& out_path) {
    const FunctionHandle f = load_function(named, input, lambda, order);
    const GridSpec grid = grid_flags.to_grid();
    validate(grid);

    const double audit_rmax = std::min(grid.r_max, f.field_domain_radius());
    constexpr double kTolerance = -1e-9;

    double min_primary = std::numeric_limits<double>::infinity();
    double min_secondary = std::numeric_limits<double>::infinity();
    Complex worst(0.0, 0.0);
    for (int i = 0; i < grid.radii_count; ++i) {
        const double r = audit_rmax * std::sin(0.5 * std::numbers::pi *
                                               static_cast<double>(i) / grid.radii_count);
        for (int k = 0; k < grid.angle_count; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / grid.angle_count);
            double primary = 0.0;
            double secondary = 0.0;
            if (klass == "f0") {
                const F0Residuals res = f0_residuals(f, OzakiParams{lambda}, z);
                primary = res.res_iii;
                secondary = res.res_ii;
            } else if (klass == "g") {
                primary = g_residual(f, GBetaParams{beta}, z);
                secondary = primary;
            } else {
                throw BadParameter("--class must be f0 or g");
            }
            if (std::min(primary, secondary) < std::min(min_primary, min_secondary)) {
                worst = z;
            }
            min_primary = std::min(min_primary, primary);
            min_secondary = std::min(min_secondary, secondary);
            if (r == 0.0) {
                break;
            }
        }
    }

    const bool pass = min_primary >= kTolerance && min_secondary >= kTolerance;
    if (format == "json") {
        json j{{"class", klass},
               {"pass", pass},
               {"tolerance", kTolerance},
               {"worst_point", {worst.real(), worst.imag()}},
               {"grid_r_max", audit_rmax}};
        if (klass == "f0") {
            j["lambda"] = lambda;
            j["min_res_iii"] = min_primary;
            j["min_res_ii"] = min_secondary;
        } else {
            j["beta"] = beta;
            j["min_residual"] = min_primary;
        }
        write_output(out_path, j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream out;
    if (klass == "f0") {
        out << "class: f0 (lambda " << sig9(lambda) << ")\n";
        out << "min res_iii: " << sig9(min_primary) << "\n";
        out << "min res_ii: " << sig9(min_secondary) << "\n";
    } else {
        out << "class: g (beta " << sig9(beta) << ")\n";
        out << "min residual: " << sig9(min_primary) << "\n";
    }
    out << "worst point: " << complex_str(worst) << "\n";
    out << "grid: " << grid.radii_count << " x " << grid.angle_count << ", r_max "
        << sig9(audit_rmax) << "\n";
    out << "verdict: " << (pass ? "PASS" : "FAIL") << " (tolerance " << sig9(kTolerance)
        << ")\n";
    write_output(out_path, out.str());
    return kExitOk;
}

// ---- envelope -----------------------------------------------------------

int cmd_envelope(double lambda, int count, double row_rmax, double tol,
                 const std::string& format, const std::string& out_path) {
    if (count < 2 || !(row_rmax > 0.0) || !(row_rmax < 1.0)) {
        throw BadParameter("envelope needs count >= 2 and row r_max in (0, 1)");
    }
    const OzakiParams params{lambda};
    json rows = json::array();
    std::ostringstream csv;
    csv << "r,dist_lower,dist_upper,growth_lower,growth_upper\n";
    for (int i = 0; i < count; ++i) {
        const double r = row_rmax * i / (count - 1);
        const EnvelopeRow dist = distortion_envelope(params, r);
        const EnvelopeRow grow = growth_envelope(params, r, tol);
        if (format == "json") {
            rows.push_back(json{{"r", r},
                                {"dist_lower", dist.lower},
                                {"dist_upper", dist.upper},
                                {"growth_lower", grow.lower},
                                {"growth_upper", grow.upper}});
        } else {
            csv << sig9(r) << ',' << sig9(dist.lower) << ',' << sig9(dist.upper) << ','
                << sig9(grow.lower) << ',' << sig9(grow.upper) << '\n';
        }
    }
    if (format == "json") {
        write_output(out_path, json{{"lambda", lambda}, {"rows", rows}}.dump(2) + "\n");
    } else {
        write_output(out_path, csv.str());
    }
    return kExitOk;
}

// ---- sharpness ----------------------------------------------------------

int cmd_sharpness(const std::vector<double>& lambdas, std::optional<double> gamma,
                  const GridFlags& grid_flags, const std::string& format,
                  const std::string& out_path) {
    const GridSpec grid = grid_flags.to_grid();
    json rows = json::array();
    std::ostringstream csv;
    csv << "lambda,pre_norm,pre_bound,s_norm,s_printed,s_pointwise0";
    if (gamma) {
        csv << ",s_gamma";
    }
    csv << ",discrepancy,flagged\n";
    for (double lambda : lambdas) {
        const std::optional<GammaParam> gp =
            gamma ? std::optional<GammaParam>(GammaParam{*gamma}) : std::nullopt;
        const SharpConstants consts = sharp_constants(OzakiParams{lambda}, gp);
        const FunctionHandle f = extremal_ozaki(lambda);
        const double pre = norm_of(f, NormKind::PreSchwarzian, grid).value;
        const double s = norm_of(f, NormKind::Schwarzian, grid).value;
        const double discrepancy = s - consts.schwarzian_printed_constant;
        const bool flagged = discrepancy > 1e-3;
        if (format == "json") {
            json row{{"lambda", lambda},
                     {"pre_norm", pre},
                     {"pre_bound", consts.pre_schwarzian_bound},
                     {"s_norm", s},
                     {"s_printed", consts.schwarzian_printed_constant},
                     {"s_pointwise0", consts.schwarzian_pointwise(0.0)},
                     {"discrepancy", discrepancy},
                     {"flagged", flagged}};
            if (consts.schwarzian_gamma_bound) {
                row["s_gamma"] = *consts.schwarzian_gamma_bound;
            }
            rows.push_back(std::move(row));
        } else {
            csv << sig9(lambda) << ',' << sig9(pre) << ',' << sig9(consts.pre_schwarzian_bound)
                << ',' << sig9(s) << ',' << sig9(consts.schwarzian_printed_constant) << ','
                << sig9(consts.schwarzian_pointwise(0.0));
            if (consts.schwarzian_gamma_bound) {
                csv << ',' << sig9(*consts.schwarzian_gamma_bound);
            }
            csv << ',' << sig9(discrepancy) << ',' << (flagged ? 1 : 0) << '\n';
        }
    }
    if (format == "json") {
        write_output(out_path, json{{"rows", rows}}.dump(2) + "\n");
    } else {
        write_output(out_path, csv.str());
    }
    return kExitOk;
}

// ---- harmonic -----------------------------------------------------------

int cmd_harmonic(double beta, std::optional<double> single_t, int t_count, double t_max,
                 int order, const GridFlags& grid_flags, bool literal_variant,
                 const std::string& probe, const std::string& format,
                 const std::string& out_path) {
    const GridSpec grid = grid_flags.to_grid();
    std::vector<double> ts;
    if (single_t) {
        ts.push_back(*single_t);
    } else {
        if (t_count < 1 || !(t_max > 0.0) || !(t_max < 1.0)) {
            throw BadParameter("harmonic needs t-count >= 1 and t-max in (0, 1)");
        }
        for (int i = 1; i <= t_count; ++i) {
            ts.push_back(t_max * i / t_count);
        }
    }

    std::optional<Complex> probe_z;
    if (!probe.empty()) {
        double re = 0.0;
        double im = 0.0;
        if (std::sscanf(probe.c_str(), "%lf,%lf", &re, &im) != 2) {
            throw BadParameter("--probe expects re,im");
        }
        probe_z = Complex(re, im);
    }

    const double bound = 2.0 * beta + 1.0;
    json rows = json::array();
    std::ostringstream csv;
    csv << "beta,t,r0,r0_in_range,m_direct,m_printed,printed_minus_direct,disk_sup";
    if (probe_z) {
        csv << ",schwarzian_probe_re,schwarzian_probe_im";
    }
    csv << "\n";

    double max_disk = 0.0;
    double last_m = 0.0;
    bool monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (double t : ts) {
        const MtAudit audit = mt_audit(GBetaParams{beta}, t, grid, order);
        max_disk = std::max(max_disk, audit.disk_sup);
        monotone = monotone && audit.m_direct >= prev - 1e-9;
        prev = audit.m_direct;
        last_m = audit.m_direct;

        std::optional<Complex> sv;
        if (probe_z) {
            const HarmonicHandle F =
                make_harmonic(gbeta_member(BlaschkeDescriptor::unimodular(), beta, order),
                              BlaschkeDescriptor::automorphism_factor(t));
            sv = harmonic_schwarzian(F, *probe_z,
                                     literal_variant ? HarmonicSchwarzianVariant::Literal
                                                     : HarmonicSchwarzianVariant::Corrected);
        }

        if (format == "json") {
            json row{{"beta", beta},
                     {"t", t},
                     {"r0", audit.r0_in_range ? json(audit.r0) : json()},
                     {"r0_in_range", audit.r0_in_range},
                     {"m_direct", audit.m_direct},
                     {"m_printed", audit.m_printed_defined ? json(audit.m_printed) : json()},
                     {"disk_sup", audit.disk_sup}};
            if (sv) {
                row["schwarzian_probe"] = {sv->real(), sv->imag()};
            }
            rows.push_back(std::move(row));
        } else {
            csv << sig9(beta) << ',' << sig9(t) << ','
                << (audit.m_printed_defined ? sig9(audit.r0) : "undefined") << ','
                << (audit.r0_in_range ? 1 : 0) << ',' << sig9(audit.m_direct) << ','
                << (audit.m_printed_defined ? sig9(audit.m_printed) : "undefined") << ','
                << (audit.m_printed_defined ? sig9(audit.m_printed - audit.m_direct) : "undefined")
                << ',' << sig9(audit.disk_sup);
            if (sv) {
                csv << ',' << sig9(sv->real()) << ',' << sig9(sv->imag());
            }
            csv << '\n';
        }
    }

    std::ostringstream summary;
    summary << "# max disk_sup " << sig9(max_disk) << " vs bound " << sig9(bound)
            << (max_disk <= bound + 1e-6 ? " (within bound)" : " (EXCEEDS bound)") << "\n";
    summary << "# m_direct at t_max " << sig9(last_m) << " vs limit " << sig9(bound)
            << " (gap " << sig9(bound - last_m) << ")\n";
    summary << "# m_direct monotone nondecreasing: " << (monotone ? "yes" : "NO") << "\n";
    summary << "# note: the printed closed form for M_t differs from direct maximization;"
               " both are reported per row\n";

    if (format == "json") {
        write_output(out_path, json{{"rows", rows},
                                    {"bound", bound},
                                    {"max_disk_sup", max_disk},
                                    {"m_direct_monotone", monotone}}
                                       .dump(2) +
                                   "\n");
    } else {
        write_output(out_path, csv.str() + summary.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pre-Schwarzian and Schwarzian derivative toolkit for the unit disk"};
    app.require_subcommand(1);

    std::string klass;
    std::string named;
    std::string input;
    std::string out_path;
    std::string format = "csv";
    std::string kind = "pre";
    std::string probe;
    double lambda = 0.5;
    double beta = 1.0;
    std::uint64_t seed = 1;
    int order = kDefaultSeriesOrder;
    int io_order = 0;  // 0 keeps the stored order of file input
    double quad_tol = 1e-10;
    GridFlags grid_flags;
    bool harmonic_literal = false;

    auto* generate = app.add_subcommand("generate", "draw a random class member and write JSON");
    generate->add_option("--class", klass, "f0 or g")->required();
    generate->add_option("--lambda", lambda, "class parameter for f0");
    generate->add_option("--beta", beta, "class parameter for g");
    generate->add_option("--seed", seed, "PRNG seed (default 1)");
    generate->add_option("--order", order, "series truncation order (default 256)");
    generate->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* norm = app.add_subcommand("norm", "estimate a weighted sup-norm");
    norm->add_option("--kind", kind, "pre, schwarzian or becker");
    norm->add_option("--named", named, "identity, koebe, half_log or extremal");
    norm->add_option("--input", input, "function JSON file");
    norm->add_option("--lambda", lambda, "lambda for --named extremal");
    norm->add_option("--order", io_order, "series order override for file input");
    norm->add_option("--format", format, "csv|text or json");
    norm->add_option("--out", out_path, "output path");
    add_grid_flags(norm, grid_flags);

    auto* member = app.add_subcommand("member", "audit class membership residuals");
    member->add_option("--class", klass, "f0 or g")->required();
    member->add_option("--named", named, "named function to audit");
    member->add_option("--input", input, "function JSON file");
    member->add_option("--lambda", lambda, "lambda for f0");
    member->add_option("--beta", beta, "beta for g");
    member->add_option("--order", io_order, "series order override for file input");
    member->add_option("--format", format, "text or json");
    member->add_option("--out", out_path, "output path");
    add_grid_flags(member, grid_flags);

    auto* envelope = app.add_subcommand("envelope", "distortion and growth envelope table");
    envelope->add_option("--lambda", lambda, "class parameter")->required();
    int env_count = 20;
    double env_rmax = 0.95;
    envelope->add_option("--count", env_count, "row count (default 20)");
    envelope->add_option("--row-rmax", env_rmax, "largest tabulated radius (default 0.95)");
    envelope->add_option("--tol", quad_tol, "quadrature tolerance (default 1e-10)");
    envelope->add_option("--format", format, "csv or json");
    envelope->add_option("--out", out_path, "output path");

    auto* sharpness = app.add_subcommand("sharpness", "extremal norm sweep with constants");
    std::vector<double> lambdas{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::optional<double> gamma;
    sharpness->add_option("--lambdas", lambdas, "lambda values (default 0.5..1.0 step 0.1)");
    sharpness->add_option("--gamma", gamma, "|phi(0)| for the gamma-weighted Schwarzian bound");
    sharpness->add_option("--format", format, "csv or json");
    sharpness->add_option("--out", out_path, "output path");
    add_grid_flags(sharpness, grid_flags);

    auto* harmonic = app.add_subcommand("harmonic", "harmonic sharpness audit over t");
    harmonic->add_option("--beta", beta, "class parameter")->required();
    std::optional<double> single_t;
    int t_count = 50;
    double t_max = 0.999;
    harmonic->add_option("--t", single_t, "audit a single t");
    harmonic->add_option("--t-count", t_count, "t-grid size (default 50)");
    harmonic->add_option("--t-max", t_max, "largest t (default 0.999)");
    harmonic->add_option("--order", order, "series order for the analytic part");
    harmonic->add_flag("--harmonic-literal", harmonic_literal,
                       "use the literal variant of the harmonic Schwarzian at --probe");
    harmonic->add_option("--probe", probe, "evaluate the harmonic Schwarzian at re,im per row");
    harmonic->add_option("--format", format, "csv or json");
    harmonic->add_option("--out", out_path, "output path");
    add_grid_flags(harmonic, grid_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            return cmd_generate(klass, lambda, beta, seed, order, out_path);
        }
        if (norm->parsed()) {
            return cmd_norm(kind, named, input, lambda, io_order, grid_flags, format, out_path);
        }
        if (member->parsed()) {
            return cmd_member(klass, named, input, lambda, beta, io_order, grid_flags, format,
                              out_path);
        }
        if (envelope->parsed()) {
            return cmd_envelope(lambda, env_count, env_rmax, quad_tol, format, out_path);
        }
        if (sharpness->parsed()) {
            return cmd_sharpness(lambdas, gamma, grid_flags, format, out_path);
        }
        if (harmonic->parsed()) {
            return cmd_harmonic(beta, single_t, t_count, t_max, order, grid_flags,
                                harmonic_literal, probe, format, out_path);
        }
    } catch (const BadParameter& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const EmptyGrid& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const DegenerateMobius& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const NonFiniteValue& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        // quadrature failures and degeneracies
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
