#pragma once

#include "epifit/core_model.hpp"
#include "epifit/data_ingest.hpp"
#include "epifit/date.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace epifit::test {

/// Observed-style series read straight off a model trajectory:
/// active = I, removed = R, cumulative confirmed = N - S.
inline EpiSeries series_from(const Trajectory& traj, Date start, std::string region = "Model") {
    EpiSeries s;
    s.region = std::move(region);
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const auto& x = traj.states[k];
        s.dates.push_back(start + static_cast<int>(k));
        s.active.push_back(x.i);
        s.removed.push_back(x.r);
        s.confirmed.push_back(traj.params.population - x.s);
    }
    return s;
}

inline std::string data_path(const std::string& rel) { return std::string(EPIFIT_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace epifit::test
