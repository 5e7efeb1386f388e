#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "errors.hpp"

namespace qslcv {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const AmplitudeTrajectory& traj,
                          std::string_view config_comment) {
    if (!config_comment.empty()) os << "# " << config_comment << "\n";
    os << "t,re_u,im_u,abs_u,re_du,im_du,Omega,gamma\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        os << format_value(traj.t[i]) << ',' << format_value(traj.u[i].real()) << ','
           << format_value(traj.u[i].imag()) << ',' << format_value(std::abs(traj.u[i]))
           << ',' << format_value(traj.du[i].real()) << ','
           << format_value(traj.du[i].imag()) << ',' << format_value(traj.omega_t[i])
           << ',' << format_value(traj.gamma_t[i]) << '\n';
    }
}

void write_trajectory_csv_file(const std::string& path, const AmplitudeTrajectory& traj,
                               std::string_view config_comment) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    write_trajectory_csv(os, traj, config_comment);
    os.flush();
    if (!os) throw io_error("write failed: " + path);
}

} // namespace qslcv
