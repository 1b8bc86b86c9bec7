// eprsim: command-line front end for the EPR correlation library.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eprsim/chsh.hpp"
#include "eprsim/experiment.hpp"
#include "eprsim/parallel.hpp"
#include "eprsim/report.hpp"
#include "eprsim/states.hpp"
#include "eprsim/symmetry.hpp"

namespace {

using namespace eprsim;
using nlohmann::ordered_json;

struct Common {
    std::string model = "entangled";
    std::string kind = "fermion";
    std::optional<std::uint64_t> seed;
    unsigned workers = default_workers();
    std::string simd = "auto";
    std::string format = "text";
};

struct Resolved {
    PairModel model;
    ParticleKind kind;
    std::uint64_t seed;
    McOptions mc;
};

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string g10(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::uint64_t random_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Resolved resolve(const Common& c) {
    Resolved r{};
    r.model = c.model == "entangled" ? PairModel::entangled : PairModel::disentangled;
    r.kind = c.kind == "photon" ? ParticleKind::photon : ParticleKind::fermion;
    if (c.seed) {
        r.seed = *c.seed;
    } else {
        r.seed = random_seed();
        std::cerr << "seed = " << r.seed << " (random; pass --seed " << r.seed << " to reproduce)\n";
    }
    if (c.workers == 0) throw std::invalid_argument("--workers must be at least 1");
    r.mc.workers = c.workers;
    if (c.simd != "auto") {
        r.mc.kernels = simd::kernels_by_name(c.simd);
        if (r.mc.kernels == nullptr) throw std::invalid_argument("SIMD variant '" + c.simd + "' is not available");
    }
    return r;
}

void add_common(CLI::App* cmd, Common& c, bool with_model) {
    if (with_model) {
        cmd->add_option("--model", c.model, "Pair model")->check(CLI::IsMember({"entangled", "disentangled"}));
        cmd->add_option("--kind", c.kind, "Particle kind")->check(CLI::IsMember({"fermion", "photon"}));
        cmd->add_option("--seed", c.seed, "RNG seed (random and printed when omitted)");
        cmd->add_option("--workers", c.workers, "Worker threads (default: EPRSIM_WORKERS or 1)");
        cmd->add_option("--simd", c.simd, "Kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
    }
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

// Converts user angles to the spin/helicity-frame theta_ab.
std::vector<double> frame_angles(std::vector<double> angles, bool degrees, bool polarizer, ParticleKind kind) {
    if (polarizer && kind != ParticleKind::photon)
        throw std::invalid_argument("--polarizer-angles requires --kind photon");
    for (double& a : angles) {
        if (!std::isfinite(a)) throw std::invalid_argument("angles must be finite");
        if (degrees) a *= std::numbers::pi / 180.0;
        if (polarizer) a = helicity_angle_from_polarizer(a);
    }
    return angles;
}

ordered_json config_echo(const Resolved& r) {
    ordered_json j;
    j["model"] = to_string(r.model);
    j["kind"] = to_string(r.kind);
    j["workers"] = r.mc.workers;
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// ---------------------------------------------------------------- correlate

struct CorrelateArgs {
    Common common;
    std::vector<double> theta{0.0};
    bool degrees = false;
    bool polarizer = false;
    bool mc = false;
    std::uint64_t n = 1000000;
};

int cmd_correlate(const CorrelateArgs& args) {
    const auto r = resolve(args.common);
    const auto angles = frame_angles(args.theta, args.degrees, args.polarizer, r.kind);
    if (args.mc && args.n == 0) throw std::invalid_argument("--n must be at least 1");
    const auto geometry = natural_geometry(r.kind);

    struct Row {
        double theta, analytic, mc, se;
    };
    std::vector<Row> rows;
    for (double theta : angles) {
        const auto pair = AnalyzerPair::planar(theta, r.kind);
        Row row{theta, 0.0, std::nan(""), std::nan("")};
        row.analytic = r.model == PairModel::entangled ? -pair.cos_ab() : analytic_average_correlation(pair, geometry);
        if (args.mc) {
            if (r.model == PairModel::entangled) {
                ExperimentConfig ec;
                ec.model = r.model;
                ec.kind = r.kind;
                ec.n_pairs = args.n;
                ec.seed = r.seed;
                ec.settings = pair;
                ec.mc = r.mc;
                const auto counts = run_pairs(ec);
                row.mc = normalized_correlation(counts);
                row.se = correlation_std_error(counts);
            } else {
                const auto est = mc_average_correlation(pair, geometry, args.n, r.seed, r.mc);
                row.mc = est.mean;
                row.se = est.std_error;
            }
        }
        rows.push_back(row);
    }

    const auto& fmt = args.common.format;
    if (fmt == "json") {
        ordered_json doc;
        doc["format_version"] = kFormatVersion;
        auto cfg = config_echo(r);
        cfg["geometry"] = to_string(geometry.kind);
        cfg["mc"] = args.mc;
        cfg["n"] = args.n;
        doc["config"] = cfg;
        doc["seed"] = r.seed;
        ordered_json out = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j{{"theta_ab_rad", row.theta}, {"e_analytic", row.analytic}};
            if (args.mc) {
                j["e_mc"] = row.mc;
                j["std_err"] = row.se;
            }
            out.push_back(j);
        }
        doc["rows"] = out;
        std::cout << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::cout << "# format_version=" << kFormatVersion << '\n';
        std::cout << (args.mc ? "theta_ab_rad,e_analytic,e_mc,std_err\n" : "theta_ab_rad,e_analytic\n");
        for (const auto& row : rows) {
            std::cout << g17(row.theta) << ',' << g17(row.analytic);
            if (args.mc) std::cout << ',' << g17(row.mc) << ',' << g17(row.se);
            std::cout << '\n';
        }
    } else {
        std::cout << "model=" << to_string(r.model) << " kind=" << to_string(r.kind)
                  << " geometry=" << to_string(geometry.kind) << " seed=" << r.seed << '\n';
        for (const auto& row : rows) {
            std::cout << "theta_ab=" << g10(row.theta) << "  E=" << g10(row.analytic);
            if (args.mc)
                std::cout << "  E_mc=" << g10(row.mc) << " +/- " << g10(row.se) << "  3sigma=[" << g10(row.mc - 3 * row.se)
                          << ", " << g10(row.mc + 3 * row.se) << "]  n=" << args.n;
            std::cout << '\n';
        }
    }
    return 0;
}

// --------------------------------------------------------------------- chsh

struct ChshArgs {
    Common common;
    bool optimize = false;
    bool degenerate = false;
    bool degrees = false;
    bool polarizer = false;
    std::vector<double> settings;
    std::uint64_t n = 0;
};

CorrelationModel model_for(const Resolved& r) {
    if (r.model == PairModel::entangled) return entangled_model();
    return scaled_cosine_model(r.kind == ParticleKind::photon ? 0.5 : 1.0 / 3.0);
}

ordered_json vec_json(const UnitVec3& v) { return ordered_json::array({v.x(), v.y(), v.z()}); }

int cmd_chsh(const ChshArgs& args) {
    const auto r = resolve(args.common);
    const auto model = model_for(r);

    ChshSettings settings = ChshSettings::planar(0.0, std::numbers::pi / 2, std::numbers::pi / 4, 3 * std::numbers::pi / 4);
    if (!args.settings.empty()) {
        if (args.settings.size() != 4) throw std::invalid_argument("--settings takes exactly four angles a,a',b,b'");
        const auto s = frame_angles(args.settings, args.degrees, args.polarizer, r.kind);
        settings = ChshSettings::planar(s[0], s[1], s[2], s[3]);
    }
    if (args.optimize) settings = optimize_settings(model, r.kind == ParticleKind::photon).settings;
    if (args.degenerate) {
        settings.a_prime = settings.a;
        settings.b_prime = settings.b;
    }
    const auto report = violation_report(model, settings);

    std::optional<ChshExperiment> sim;
    if (args.n > 0) {
        ExperimentConfig base;
        base.model = r.model;
        base.kind = r.kind;
        base.n_pairs = args.n;
        base.seed = r.seed;
        base.geometry = natural_geometry(r.kind);
        base.mc = r.mc;
        sim = run_chsh_experiment(base, settings);
    }

    const auto& fmt = args.common.format;
    if (fmt == "json") {
        ordered_json doc;
        doc["format_version"] = kFormatVersion;
        auto cfg = config_echo(r);
        cfg["optimize"] = args.optimize;
        cfg["degenerate"] = args.degenerate;
        cfg["n"] = args.n;
        doc["config"] = cfg;
        doc["seed"] = r.seed;
        doc["s"] = report.s;
        doc["abs_s"] = std::abs(report.s);
        doc["classical_bound"] = report.classical_bound;
        doc["tsirelson_bound"] = report.tsirelson_bound;
        doc["violates"] = report.violates;
        doc["settings"] = {{"a", vec_json(settings.a)},
                           {"a_prime", vec_json(settings.a_prime)},
                           {"b", vec_json(settings.b)},
                           {"b_prime", vec_json(settings.b_prime)}};
        if (sim) doc["simulated"] = {{"s", sim->s}, {"std_err", sim->std_error}};
        std::cout << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        std::cout << "# format_version=" << kFormatVersion << '\n';
        std::cout << "s,abs_s,classical_bound,tsirelson_bound,violates,s_sim,std_err\n";
        std::cout << g17(report.s) << ',' << g17(std::abs(report.s)) << ',' << g17(report.classical_bound) << ','
                  << g17(report.tsirelson_bound) << ',' << (report.violates ? "true" : "false") << ','
                  << (sim ? g17(sim->s) : "") << ',' << (sim ? g17(sim->std_error) : "") << '\n';
    } else {
        const auto show = [](const char* name, const UnitVec3& v) {
            std::cout << "  " << name << " = (" << g10(v.x()) << ", " << g10(v.y()) << ", " << g10(v.z()) << ")\n";
        };
        std::cout << "model=" << to_string(r.model) << " kind=" << to_string(r.kind) << '\n';
        std::cout << "S = " << g17(report.s) << "  |S| = " << g17(std::abs(report.s)) << '\n';
        std::cout << "classical bound = " << report.classical_bound << ", quantum bound = " << g17(report.tsirelson_bound)
                  << '\n';
        std::cout << "violates = " << (report.violates ? "true" : "false") << '\n';
        std::cout << "settings:\n";
        show("a ", settings.a);
        show("a'", settings.a_prime);
        show("b ", settings.b);
        show("b'", settings.b_prime);
        if (sim)
            std::cout << "simulated S = " << g10(sim->s) << " +/- " << g10(sim->std_error) << " (n=" << args.n
                      << " per setting, seed=" << r.seed << ")\n";
    }
    return 0;
}

// ----------------------------------------------------------------- simulate

struct SimulateArgs {
    Common common;
    std::uint64_t n = 1000000;
    std::size_t angles = 12;
    std::vector<double> theta;
    bool degrees = false;
    bool polarizer = false;
    std::string out_csv;
    std::string out_json;
};

int cmd_simulate(const SimulateArgs& args) {
    const auto r = resolve(args.common);
    if (args.n == 0) throw std::invalid_argument("--n must be at least 1");

    SweepRecord record;
    auto& cfg = record.config;
    cfg.model = r.model;
    cfg.kind = r.kind;
    cfg.n_per_angle = args.n;
    cfg.seed = r.seed;
    cfg.angles = args.theta.empty() ? default_sweep_angles(args.angles)
                                    : frame_angles(args.theta, args.degrees, args.polarizer, r.kind);
    cfg.geometry = natural_geometry(r.kind);
    cfg.mc = r.mc;
    record.points = run_sweep(cfg);
    record.fit = fit_visibility(std::span<const SweepPoint>(record.points));

    if (!args.out_csv.empty()) write_file(args.out_csv, to_csv(record.points));
    if (!args.out_json.empty()) write_file(args.out_json, to_json(record));

    const auto& fmt = args.common.format;
    const bool files = !args.out_csv.empty() || !args.out_json.empty();
    std::ostream& summary = (!files && fmt != "text") ? std::cerr : std::cout;
    if (!files && fmt == "csv") std::cout << to_csv(record.points);
    if (!files && fmt == "json") std::cout << to_json(record);
    if (!files && fmt == "text") {
        std::cout << "model=" << to_string(r.model) << " kind=" << to_string(r.kind) << " n=" << args.n
                  << " seed=" << r.seed << '\n';
        for (const auto& p : record.points)
            std::cout << "theta_ab=" << g10(p.theta_ab) << "  E=" << g10(normalized_correlation(p.counts)) << " +/- "
                      << g10(correlation_std_error(p.counts)) << '\n';
    }
    summary << "V = " << g10(record.fit->v) << "  residual = " << g10(record.fit->residual) << '\n';
    return 0;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const Common& common) {
    struct Row {
        std::string label;
        SymmetryClassification c;
    };
    std::vector<Row> rows;
    for (auto b : {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus, BellLabel::PsiMinus})
        rows.push_back({to_string(b), classify(bell_state(b))});
    for (auto h1 : {Helicity::R, Helicity::L})
        for (auto h2 : {Helicity::R, Helicity::L}) {
            const HelicityState s{h1, h2};
            rows.push_back({s.label(), classify(s.ket())});
        }

    if (common.format == "json") {
        ordered_json doc;
        doc["format_version"] = kFormatVersion;
        ordered_json out = ordered_json::array();
        for (const auto& row : rows)
            out.push_back({{"state", row.label}, {"parity", to_string(row.c.parity)}, {"r_perp", to_string(row.c.r_perp)}});
        doc["rows"] = out;
        std::cout << doc.dump(2) << '\n';
    } else if (common.format == "csv") {
        std::cout << "# format_version=" << kFormatVersion << "\nstate,parity,r_perp\n";
        for (const auto& row : rows)
            std::cout << row.label << ',' << to_string(row.c.parity) << ',' << to_string(row.c.r_perp) << '\n';
    } else {
        std::printf("%-8s %-20s %-20s\n", "state", "parity", "R_perp");
        for (const auto& row : rows)
            std::printf("%-8s %-20s %-20s\n", row.label.c_str(), to_string(row.c.parity), to_string(row.c.r_perp));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EPR pair correlations: entangled versus disentangled"};
    app.require_subcommand(1);

    CorrelateArgs correlate;
    auto* c = app.add_subcommand("correlate", "Analytic and Monte Carlo correlation E(theta_ab)");
    add_common(c, correlate.common, true);
    c->add_option("--theta-ab", correlate.theta, "Analyzer angle(s), comma separated")->delimiter(',');
    c->add_flag("--degrees", correlate.degrees, "Angles are in degrees");
    c->add_flag("--polarizer-angles", correlate.polarizer, "Photon polarizer angles (doubled to helicity frame)");
    c->add_flag("--mc", correlate.mc, "Also estimate E by Monte Carlo");
    c->add_option("--n", correlate.n, "Monte Carlo samples per angle");

    ChshArgs chsh;
    chsh.common.kind = "photon";
    auto* h = app.add_subcommand("chsh", "CHSH statistic and bound comparison");
    add_common(h, chsh.common, true);
    h->add_flag("--optimize", chsh.optimize, "Search for settings maximizing |S|");
    h->add_flag("--degenerate", chsh.degenerate, "Use a' = a and b' = b");
    h->add_option("--settings", chsh.settings, "Planar azimuths a,a',b,b'")->delimiter(',');
    h->add_flag("--degrees", chsh.degrees, "Angles are in degrees");
    h->add_flag("--polarizer-angles", chsh.polarizer, "Photon polarizer angles (doubled to helicity frame)");
    h->add_option("--n", chsh.n, "Also simulate each setting with this many pairs");

    SimulateArgs sim;
    auto* s = app.add_subcommand("simulate", "Coincidence-count sweep and visibility fit");
    add_common(s, sim.common, true);
    s->add_option("--n", sim.n, "Pairs per angle");
    s->add_option("--angles", sim.angles, "Number of equally spaced angles in [0, pi]")->check(CLI::Range(2, 100000));
    s->add_option("--theta-ab", sim.theta, "Explicit angles, comma separated")->delimiter(',');
    s->add_flag("--degrees", sim.degrees, "Angles are in degrees");
    s->add_flag("--polarizer-angles", sim.polarizer, "Photon polarizer angles (doubled to helicity frame)");
    s->add_option("--out-csv", sim.out_csv, "Write the sweep as CSV");
    s->add_option("--out-json", sim.out_json, "Write the sweep as JSON");

    Common classify;
    auto* k = app.add_subcommand("classify", "Parity / R_perp classification table");
    add_common(k, classify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (c->parsed()) return cmd_correlate(correlate);
        if (h->parsed()) return cmd_chsh(chsh);
        if (s->parsed()) return cmd_simulate(sim);
        return cmd_classify(classify);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
