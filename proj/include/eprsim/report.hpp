#pragma once

// Versioned CSV / JSON serialization of sweep results.

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "eprsim/experiment.hpp"

namespace eprsim {

inline constexpr int kFormatVersion = 1;

struct SweepRecord {
    SweepConfig config;
    std::vector<SweepPoint> points;
    std::optional<VisibilityFit> fit;
};

/// Header "# format_version=1", then theta_ab_rad,n_pp,n_pm,n_mp,n_mm,e_hat,std_err
/// with doubles printed as %.17g.
void write_csv(std::ostream& out, std::span<const SweepPoint> points);
std::string to_csv(std::span<const SweepPoint> points);

/// {"format_version": 1, "config": {...}, "seed": ..., "rows": [...], "visibility": {...}}
std::string to_json(const SweepRecord& record);

}  // namespace eprsim
