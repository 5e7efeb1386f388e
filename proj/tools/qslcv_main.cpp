// qslcv_main.cpp — command-line front end (links the C API only)
//
// Subcommands: evolve, boundstate, qsl, fig1, fig2, fig3, threshold.
// Exit codes: 0 success, 2 usage/validation error, 3 numeric/runtime failure.

#include "qslcv/qslcv.h"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numeric_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(qslcv_status status) {
    if (status == QSLCV_OK) return;
    const std::string msg =
        std::string(qslcv_status_name(status)) + ": " + qslcv_last_error();
    if (status == QSLCV_ERROR_INVALID_ARGUMENT || status == QSLCV_ERROR_DOMAIN)
        throw usage_error(msg);
    throw numeric_failure(msg);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- RAII over the C handles ------------------------------------------------

using ParamsPtr = std::unique_ptr<qslcv_params, decltype(&qslcv_params_destroy)>;
using TrajPtr = std::unique_ptr<qslcv_trajectory, decltype(&qslcv_trajectory_destroy)>;

ParamsPtr make_params(double eta, double s, double omega_c) {
    qslcv_params* raw = nullptr;
    check(qslcv_params_create(eta, s, omega_c, &raw));
    return {raw, &qslcv_params_destroy};
}

// ---- configuration -----------------------------------------------------------

struct Config {
    double eta = 0.1;
    double s = 1.0;
    double omega_c = 10.0;
    double alpha = 10.0;
    double tau = 400.0;
    std::string step = "auto";
    std::string out = "-";
    std::string config_path;
    bool oracle = false;
    bool markov = false;
    bool shift = false;
    bool branch_cut = false;
    std::size_t oracle_modes = 0; // 0: derived from omega-max and tau
    double oracle_omega_max = 0.0; // 0: 20·omega_c
    unsigned threads = 0;          // 0: hardware concurrency
    bool want_asymptote = false;   // boundstate: emit the asymptotic amplitude columns
    // sweep controls
    double eta_min = 0.02;
    double eta_max = 0.2;
    std::size_t eta_count = 10;
    std::size_t tau_count = 200;
    double omega_c_min = 2.0;
    double omega_c_max = 20.0;
    std::size_t omega_c_count = 10;
    double fig2_eta = 0.1; // coupling held fixed in the fig2 omega_c sweep
};

double parse_step(const std::string& text) {
    if (text == "auto") return 0.0;
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !(v > 0.0)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw usage_error("--step must be 'auto' or a positive number, got '" + text + "'");
    }
}

std::string normalize_key(std::string key) {
    key.erase(std::remove(key.begin(), key.end(), '-'), key.end());
    return key;
}

// One `key = value` per line, `#` comments; keys are the flag names without
// dashes. Flags given on the command line win over the file.
void load_config_file(const std::string& path, Config& cfg) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string text) {
            const auto begin = text.find_first_not_of(" \t\r");
            if (begin == std::string::npos) return std::string();
            const auto end = text.find_last_not_of(" \t\r");
            return text.substr(begin, end - begin + 1);
        };
        if (eq == std::string::npos) {
            if (!trim(line).empty())
                throw usage_error(path + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
            continue;
        }
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        auto as_double = [&](const char* what) {
            try {
                std::size_t used = 0;
                const double v = std::stod(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
                return v;
            } catch (const std::exception&) {
                throw usage_error(path + ": bad numeric value for " + what + ": '" +
                                  value + "'");
            }
        };
        auto as_count = [&](const char* what) {
            const double v = as_double(what);
            if (v < 0 || v != std::floor(v))
                throw usage_error(path + ": bad count for " + std::string(what));
            return static_cast<std::size_t>(v);
        };
        auto as_bool = [&](const char* what) {
            if (value == "1" || value == "true" || value == "yes") return true;
            if (value == "0" || value == "false" || value == "no") return false;
            throw usage_error(path + ": bad boolean for " + std::string(what) + ": '" +
                              value + "'");
        };
        if (key == "eta") cfg.eta = as_double("eta");
        else if (key == "s") cfg.s = as_double("s");
        else if (key == "omegac") cfg.omega_c = as_double("omega-c");
        else if (key == "alpha") cfg.alpha = as_double("alpha");
        else if (key == "tau") cfg.tau = as_double("tau");
        else if (key == "step") cfg.step = value;
        else if (key == "out") cfg.out = value;
        else if (key == "oracle") cfg.oracle = as_bool("oracle");
        else if (key == "markov") cfg.markov = as_bool("markov");
        else if (key == "shift") cfg.shift = as_bool("shift");
        else if (key == "branchcut") cfg.branch_cut = as_bool("branch-cut");
        else if (key == "oraclemodes") cfg.oracle_modes = as_count("oracle-modes");
        else if (key == "oracleomegamax") cfg.oracle_omega_max = as_double("oracle-omega-max");
        else if (key == "threads") cfg.threads = static_cast<unsigned>(as_count("threads"));
        else if (key == "etamin") cfg.eta_min = as_double("eta-min");
        else if (key == "etamax") cfg.eta_max = as_double("eta-max");
        else if (key == "etacount") cfg.eta_count = as_count("eta-count");
        else if (key == "taucount") cfg.tau_count = as_count("tau-count");
        else if (key == "omegacmin") cfg.omega_c_min = as_double("omega-c-min");
        else if (key == "omegacmax") cfg.omega_c_max = as_double("omega-c-max");
        else if (key == "omegaccount") cfg.omega_c_count = as_count("omega-c-count");
        else if (key == "fig2eta") cfg.fig2_eta = as_double("fig2-eta");
        else throw usage_error(path + ": unknown config key '" + key + "'");
    }
}

void validate_common(const Config& cfg) {
    if (cfg.eta < 0.0) throw usage_error("--eta must be >= 0");
    if (!(cfg.s > 0.0)) throw usage_error("--s must be > 0");
    if (!(cfg.omega_c > 0.0)) throw usage_error("--omega-c must be > 0");
    if (!(cfg.alpha > 0.0)) throw usage_error("--alpha must be > 0");
    if (!(cfg.tau > 0.0)) throw usage_error("--tau must be > 0");
}

// ---- output -------------------------------------------------------------------

class Output {
public:
    explicit Output(const std::string& target) {
        if (target != "-" && !target.empty()) {
            file_.open(target);
            if (!file_) throw numeric_failure("cannot open for writing: " + target);
            os_ = &file_;
        } else {
            os_ = &std::cout;
        }
    }
    std::ostream& stream() { return *os_; }
    void finish() {
        os_->flush();
        if (!*os_) throw numeric_failure("write failed");
    }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

// ---- deterministic worker pool --------------------------------------------------

std::vector<std::string> run_jobs(std::size_t count, unsigned threads,
                                  const std::function<std::string(std::size_t)>& job) {
    std::vector<std::string> results(count);
    if (count == 0) return results;
    unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, count));

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = job(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw usage_error("sweep counts must be >= 2");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return grid;
}

// ---- shared solve helpers -------------------------------------------------------

TrajPtr solve_for(const Config& cfg, const qslcv_params* params) {
    qslcv_trajectory* raw = nullptr;
    const double step = parse_step(cfg.step);
    if (cfg.oracle) {
        const double omega_max =
            (cfg.oracle_omega_max > 0.0) ? cfg.oracle_omega_max : 20.0 * cfg.omega_c;
        std::size_t modes = cfg.oracle_modes;
        if (modes == 0) {
            const double recurrence_floor = omega_max * cfg.tau / (2.0 * M_PI);
            modes = std::max<std::size_t>(
                4000, static_cast<std::size_t>(std::ceil(1.5 * recurrence_floor)));
        }
        check(qslcv_solve_discretized_bath(params, cfg.tau, modes, omega_max,
                                           step > 0.0 ? step : 0.01, &raw));
    } else if (cfg.markov) {
        check(qslcv_solve_markov(params, cfg.tau, step, cfg.shift ? 1 : 0, &raw));
    } else {
        check(qslcv_solve_exact(params, cfg.tau, step, &raw));
    }
    return {raw, &qslcv_trajectory_destroy};
}

std::string model_comment(const Config& cfg, bool with_alpha) {
    std::ostringstream os;
    os << "eta=" << fmt(cfg.eta) << " s=" << fmt(cfg.s) << " omega-c=" << fmt(cfg.omega_c);
    if (with_alpha) os << " alpha=" << fmt(cfg.alpha);
    os << " tau=" << fmt(cfg.tau) << " step=" << cfg.step;
    return os.str();
}

// ---- subcommands ---------------------------------------------------------------

int cmd_evolve(const Config& cfg) {
    validate_common(cfg);
    ParamsPtr params = make_params(cfg.eta, cfg.s, cfg.omega_c);
    TrajPtr traj = solve_for(cfg, params.get());
    std::string comment = model_comment(cfg, false);
    comment += std::string(" oracle=") + (cfg.oracle ? "1" : "0") + " markov=" +
               (cfg.markov ? "1" : "0") + " shift=" + (cfg.shift ? "1" : "0");
    const std::string path = (cfg.out == "-" || cfg.out.empty()) ? "/dev/stdout" : cfg.out;
    check(qslcv_trajectory_write_csv(traj.get(), path.c_str(), comment.c_str()));
    return 0;
}

int cmd_boundstate(const Config& cfg) {
    if (cfg.eta < 0.0) throw usage_error("--eta must be >= 0");
    ParamsPtr params = make_params(cfg.eta, cfg.s, cfg.omega_c);
    qslcv_bound_state bound{};
    check(qslcv_find_bound_state(params.get(), &bound));

    const bool with_asymptote = cfg.want_asymptote;
    Output out(cfg.out);
    out.stream() << "# eta=" << fmt(cfg.eta) << " s=" << fmt(cfg.s)
                 << " omega-c=" << fmt(cfg.omega_c)
                 << " branch-cut=" << (cfg.branch_cut ? 1 : 0) << "\n";
    const double nan = std::nan("");
    if (!with_asymptote) {
        out.stream() << "eta,s,omega_c,exists,E_b,Z\n"
                     << fmt(cfg.eta) << ',' << fmt(cfg.s) << ',' << fmt(cfg.omega_c) << ','
                     << bound.exists << ',' << fmt(bound.exists ? bound.e_b : nan) << ','
                     << fmt(bound.exists ? bound.z : nan) << "\n";
    } else {
        double re = 0.0, im = 0.0;
        check(qslcv_asymptotic_amplitude(params.get(), &bound, cfg.tau,
                                         cfg.branch_cut ? 1 : 0, 1, &re, &im));
        out.stream() << "eta,s,omega_c,exists,E_b,Z,tau,re_u_asym,im_u_asym\n"
                     << fmt(cfg.eta) << ',' << fmt(cfg.s) << ',' << fmt(cfg.omega_c) << ','
                     << bound.exists << ',' << fmt(bound.exists ? bound.e_b : nan) << ','
                     << fmt(bound.exists ? bound.z : nan) << ',' << fmt(cfg.tau) << ','
                     << fmt(re) << ',' << fmt(im) << "\n";
    }
    out.finish();
    return 0;
}

int cmd_qsl(const Config& cfg) {
    validate_common(cfg);
    ParamsPtr params = make_params(cfg.eta, cfg.s, cfg.omega_c);
    qslcv_qsl_report report{};
    if (cfg.markov) {
        check(qslcv_markov_qsl_report(params.get(), cfg.alpha, cfg.tau,
                                      cfg.shift ? 1 : 0, &report));
    } else {
        TrajPtr traj = solve_for(cfg, params.get());
        check(qslcv_qsl_report_at(traj.get(), cfg.alpha, 0.0, cfg.tau, &report));
    }
    Output out(cfg.out);
    out.stream() << "# " << model_comment(cfg, true) << " markov=" << (cfg.markov ? 1 : 0)
                 << " shift=" << (cfg.shift ? 1 : 0) << "\n"
                 << "eta,s,omega_c,alpha_abs,tau,v_bar,l_b,ratio,v_bar_w,l_w,ratio_w\n"
                 << fmt(cfg.eta) << ',' << fmt(cfg.s) << ',' << fmt(cfg.omega_c) << ','
                 << fmt(cfg.alpha) << ',' << fmt(report.tau) << ',' << fmt(report.v_bar)
                 << ',' << fmt(report.l_b) << ',' << fmt(report.ratio) << ','
                 << fmt(report.v_bar_w) << ',' << fmt(report.l_w) << ','
                 << fmt(report.ratio_w) << "\n";
    out.finish();
    return 0;
}

int cmd_fig1(const Config& cfg) {
    validate_common(cfg);
    const std::vector<double> etas = linspace(cfg.eta_min, cfg.eta_max, cfg.eta_count);
    std::vector<double> taus(cfg.tau_count);
    for (std::size_t i = 0; i < cfg.tau_count; ++i)
        taus[i] = cfg.tau * static_cast<double>(i + 1) / static_cast<double>(cfg.tau_count);

    auto job = [&](std::size_t i) {
        Config point = cfg;
        point.eta = etas[i];
        point.oracle = false;
        point.markov = false;
        ParamsPtr params = make_params(point.eta, point.s, point.omega_c);
        TrajPtr traj = solve_for(point, params.get());
        std::vector<qslcv_qsl_report> reports(taus.size());
        check(qslcv_qsl_report_series(traj.get(), point.alpha, 0.0, taus.data(),
                                      taus.size(), reports.data()));
        std::ostringstream block;
        for (const auto& r : reports)
            block << fmt(point.eta) << ',' << fmt(r.tau) << ',' << fmt(r.v_bar) << ','
                  << fmt(r.ratio) << "\n";
        return block.str();
    };
    const std::vector<std::string> blocks = run_jobs(etas.size(), cfg.threads, job);

    Output out(cfg.out);
    out.stream() << "# " << model_comment(cfg, true) << " eta-min=" << fmt(cfg.eta_min)
                 << " eta-max=" << fmt(cfg.eta_max) << " eta-count=" << cfg.eta_count
                 << " tau-count=" << cfg.tau_count << "\n"
                 << "eta,tau,v_bar,ratio\n";
    for (const auto& block : blocks) out.stream() << block;
    out.finish();
    return 0;
}

int cmd_fig2(const Config& cfg) {
    validate_common(cfg);
    const std::vector<double> etas = linspace(cfg.eta_min, cfg.eta_max, cfg.eta_count);
    const std::vector<double> omega_cs =
        linspace(cfg.omega_c_min, cfg.omega_c_max, cfg.omega_c_count);

    auto point_row = [&](const char* sweep, double eta, double omega_c) {
        Config point = cfg;
        point.eta = eta;
        point.omega_c = omega_c;
        point.oracle = false;
        point.markov = false;
        ParamsPtr params = make_params(eta, point.s, omega_c);
        TrajPtr traj = solve_for(point, params.get());
        qslcv_qsl_report report{};
        check(qslcv_qsl_report_at(traj.get(), point.alpha, 0.0, point.tau, &report));
        qslcv_bound_state bound{};
        check(qslcv_find_bound_state(params.get(), &bound));
        const double analytic =
            bound.exists ? std::abs(point.alpha * bound.z * bound.e_b) : std::nan("");
        std::ostringstream row;
        row << sweep << ',' << fmt(eta) << ',' << fmt(point.s) << ',' << fmt(omega_c)
            << ',' << fmt(point.alpha) << ',' << fmt(report.tau) << ','
            << fmt(report.v_bar) << ',' << fmt(report.ratio) << ',' << fmt(analytic)
            << "\n";
        return row.str();
    };
    auto job = [&](std::size_t i) {
        if (i < etas.size()) return point_row("eta", etas[i], cfg.omega_c);
        return point_row("omega_c", cfg.fig2_eta, omega_cs[i - etas.size()]);
    };
    const std::vector<std::string> rows =
        run_jobs(etas.size() + omega_cs.size(), cfg.threads, job);

    Output out(cfg.out);
    out.stream() << "# " << model_comment(cfg, true) << " eta-min=" << fmt(cfg.eta_min)
                 << " eta-max=" << fmt(cfg.eta_max) << " eta-count=" << cfg.eta_count
                 << " omega-c-min=" << fmt(cfg.omega_c_min)
                 << " omega-c-max=" << fmt(cfg.omega_c_max)
                 << " omega-c-count=" << cfg.omega_c_count
                 << " fig2-eta=" << fmt(cfg.fig2_eta) << "\n"
                 << "sweep,eta,s,omega_c,alpha_abs,tau,v_bar,ratio,v_bar_analytic\n";
    for (const auto& row : rows) out.stream() << row;
    out.finish();
    return 0;
}

int cmd_fig3(const Config& cfg) {
    validate_common(cfg);
    const std::vector<double> etas{0.06, 0.12};
    std::vector<double> taus;
    for (double tau = 1.0; tau <= cfg.tau + 1e-9; tau += 1.0) taus.push_back(tau);

    auto job = [&](std::size_t i) {
        Config point = cfg;
        point.eta = etas[i];
        point.oracle = false;
        point.markov = false;
        ParamsPtr params = make_params(point.eta, point.s, point.omega_c);
        TrajPtr traj = solve_for(point, params.get());
        std::vector<qslcv_qsl_report> reports(taus.size());
        check(qslcv_qsl_report_series(traj.get(), point.alpha, 0.0, taus.data(),
                                      taus.size(), reports.data()));
        std::ostringstream block;
        for (const auto& r : reports)
            block << fmt(point.eta) << ',' << fmt(r.tau) << ',' << fmt(100.0 * r.ratio)
                  << ',' << fmt(100.0 * r.ratio_w) << "\n";
        return block.str();
    };
    const std::vector<std::string> blocks = run_jobs(etas.size(), cfg.threads, job);

    Output out(cfg.out);
    out.stream() << "# " << model_comment(cfg, true) << " eta={0.06,0.12}\n"
                 << "eta,tau,ratio_x100,ratio_w_x100\n";
    for (const auto& block : blocks) out.stream() << block;
    out.finish();
    return 0;
}

int cmd_threshold(const Config& cfg) {
    const std::vector<double> s_grid{0.5, 1.0, 2.0, 3.0};
    const std::vector<double> omega_c_grid{5.0, 10.0, 20.0};

    auto job = [&](std::size_t i) {
        const double s = s_grid[i / omega_c_grid.size()];
        const double omega_c = omega_c_grid[i % omega_c_grid.size()];
        double numeric = 0.0;
        check(qslcv_bound_state_threshold(s, omega_c, &numeric));
        const double analytic = 1.0 / (omega_c * std::tgamma(s));
        const double rel_err = std::abs(numeric - analytic) / analytic;
        std::ostringstream row;
        row << fmt(s) << ',' << fmt(omega_c) << ',' << fmt(numeric) << ','
            << fmt(analytic) << ',' << fmt(rel_err) << "\n";
        return row.str();
    };
    const std::vector<std::string> rows =
        run_jobs(s_grid.size() * omega_c_grid.size(), cfg.threads, job);

    Output out(cfg.out);
    out.stream() << "# s={0.5,1,2,3} omega-c={5,10,20}\n"
                 << "s,omega_c,eta_star_numeric,eta_star_analytic,rel_err\n";
    for (const auto& row : rows) out.stream() << row;
    out.finish();
    return 0;
}

void add_model_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--eta", cfg.eta, "coupling constant");
    cmd->add_option("--s", cfg.s, "Ohmicity exponent");
    cmd->add_option("--omega-c", cfg.omega_c, "cutoff frequency (units of omega_0)");
    cmd->add_option("--alpha", cfg.alpha, "|alpha| of the initial coherent state");
    cmd->add_option("--tau", cfg.tau, "evolution horizon (units of 1/omega_0)");
    cmd->add_option("--step", cfg.step, "solver step ('auto' or a positive number)");
    cmd->add_option("--out", cfg.out, "output path ('-' for stdout)");
    cmd->add_option("--config", cfg.config_path, "config file (key = value lines)");
    cmd->add_option("--threads", cfg.threads, "sweep worker threads (0: all cores)");
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;

    // The config file provides defaults; command-line flags win.
    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc) {
                load_config_file(argv[i + 1], cfg);
                break;
            }
            if (arg.rfind("--config=", 0) == 0) {
                load_config_file(arg.substr(9), cfg);
                break;
            }
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"quantum speed limit of a dissipative single-mode Gaussian system"};
    app.require_subcommand(1);

    CLI::App* evolve = app.add_subcommand("evolve", "solve u(t) and write the trajectory CSV");
    add_model_options(evolve, cfg);
    evolve->add_flag("--oracle", cfg.oracle, "use the discretized-bath evolution");
    evolve->add_flag("--markov", cfg.markov, "use the Born-Markov closed form");
    evolve->add_flag("--shift", cfg.shift, "include the frequency shift (Markov form)");
    evolve->add_option("--oracle-modes", cfg.oracle_modes, "bath modes (0: auto)");
    evolve->add_option("--oracle-omega-max", cfg.oracle_omega_max,
                       "bath frequency cutoff (0: 20*omega_c)");

    CLI::App* boundstate =
        app.add_subcommand("boundstate", "bound-state existence, energy, and residue");
    add_model_options(boundstate, cfg);
    boundstate->add_flag("--branch-cut", cfg.branch_cut,
                         "include the band integral in the asymptotic amplitude");

    CLI::App* qsl = app.add_subcommand("qsl", "QSL report at the horizon tau");
    add_model_options(qsl, cfg);
    qsl->add_flag("--oracle", cfg.oracle, "use the discretized-bath evolution");
    qsl->add_flag("--markov", cfg.markov, "closed-form Born-Markov pipeline");
    qsl->add_flag("--shift", cfg.shift, "include the frequency shift (Markov form)");
    qsl->add_option("--oracle-modes", cfg.oracle_modes, "bath modes (0: auto)");
    qsl->add_option("--oracle-omega-max", cfg.oracle_omega_max,
                    "bath frequency cutoff (0: 20*omega_c)");

    CLI::App* fig1 = app.add_subcommand(
        "fig1", "v_bar and tau_QSL/tau over an (eta, tau) grid");
    add_model_options(fig1, cfg);
    fig1->add_option("--eta-min", cfg.eta_min, "sweep start");
    fig1->add_option("--eta-max", cfg.eta_max, "sweep end");
    fig1->add_option("--eta-count", cfg.eta_count, "sweep points");
    fig1->add_option("--tau-count", cfg.tau_count, "horizon grid points");

    CLI::App* fig2 = app.add_subcommand(
        "fig2", "steady-state sweeps over eta and omega_c at fixed tau");
    add_model_options(fig2, cfg);
    fig2->add_option("--eta-min", cfg.eta_min, "eta sweep start");
    fig2->add_option("--eta-max", cfg.eta_max, "eta sweep end");
    fig2->add_option("--eta-count", cfg.eta_count, "eta sweep points");
    fig2->add_option("--omega-c-min", cfg.omega_c_min, "omega_c sweep start");
    fig2->add_option("--omega-c-max", cfg.omega_c_max, "omega_c sweep end");
    fig2->add_option("--omega-c-count", cfg.omega_c_count, "omega_c sweep points");
    fig2->add_option("--fig2-eta", cfg.fig2_eta, "coupling held fixed in the omega_c sweep");

    CLI::App* fig3 = app.add_subcommand(
        "fig3", "tau_QSL/tau and tau^W_QSL/tau vs tau for eta = 0.06 and 0.12");
    add_model_options(fig3, cfg);

    CLI::App* threshold =
        app.add_subcommand("threshold", "numeric vs analytic bound-state threshold");
    add_model_options(threshold, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (evolve->parsed()) return cmd_evolve(cfg);
        if (boundstate->parsed()) {
            cfg.want_asymptote = boundstate->count("--tau") > 0 || cfg.branch_cut;
            return cmd_boundstate(cfg);
        }
        if (qsl->parsed()) return cmd_qsl(cfg);
        if (fig1->parsed()) return cmd_fig1(cfg);
        if (fig2->parsed()) return cmd_fig2(cfg);
        if (fig3->parsed()) return cmd_fig3(cfg);
        if (threshold->parsed()) return cmd_threshold(cfg);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
