// csv.hpp — deterministic CSV emission (12 significant digits)
#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "dynamics.hpp"

namespace qslcv {

/// "%.12g" rendering; identical input yields identical bytes.
std::string format_value(double v);

/// Trajectory export: one optional `# key=value …` comment line, the header
/// row `t,re_u,im_u,abs_u,re_du,im_du,Omega,gamma`, then one row per grid
/// point. Truncated coefficients are written as nan.
void write_trajectory_csv(std::ostream& os, const AmplitudeTrajectory& traj,
                          std::string_view config_comment);

/// Same, to a file path. Throws io_error on failure.
void write_trajectory_csv_file(const std::string& path, const AmplitudeTrajectory& traj,
                               std::string_view config_comment);

} // namespace qslcv
