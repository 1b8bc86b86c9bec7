#include "eprsim/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace eprsim {

namespace {

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const SweepPoint> points) {
    out << "# format_version=" << kFormatVersion << '\n';
    out << "theta_ab_rad,n_pp,n_pm,n_mp,n_mm,e_hat,std_err\n";
    for (const auto& p : points) {
        const auto& c = p.counts;
        out << g17(p.theta_ab) << ',' << c.n_pp << ',' << c.n_pm << ',' << c.n_mp << ',' << c.n_mm << ','
            << g17(normalized_correlation(c)) << ',' << g17(correlation_std_error(c)) << '\n';
    }
}

std::string to_csv(std::span<const SweepPoint> points) {
    std::ostringstream os;
    write_csv(os, points);
    return os.str();
}

std::string to_json(const SweepRecord& record) {
    using nlohmann::ordered_json;
    const auto& cfg = record.config;
    const auto geometry = cfg.geometry ? *cfg.geometry : natural_geometry(cfg.kind);

    ordered_json config;
    config["model"] = to_string(cfg.model);
    config["kind"] = to_string(cfg.kind);
    config["n_per_angle"] = cfg.n_per_angle;
    config["angles"] = cfg.angles;
    config["geometry"] = to_string(geometry.kind);
    config["workers"] = cfg.mc.workers;

    ordered_json rows = ordered_json::array();
    for (const auto& p : record.points) {
        const auto& c = p.counts;
        rows.push_back({{"theta_ab_rad", p.theta_ab},
                        {"n_pp", c.n_pp},
                        {"n_pm", c.n_pm},
                        {"n_mp", c.n_mp},
                        {"n_mm", c.n_mm},
                        {"e_hat", normalized_correlation(c)},
                        {"std_err", correlation_std_error(c)}});
    }

    ordered_json doc;
    doc["format_version"] = kFormatVersion;
    doc["config"] = std::move(config);
    doc["seed"] = cfg.seed;
    doc["rows"] = std::move(rows);
    if (record.fit) doc["visibility"] = {{"v", record.fit->v}, {"residual", record.fit->residual}};
    return doc.dump(2) + "\n";
}

}  // namespace eprsim
