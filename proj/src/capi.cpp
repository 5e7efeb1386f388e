// capi.cpp — extern "C" surface of the shared library
#include "qslcv/qslcv.h"

#include <complex>
#include <cstring>
#include <string>

#include "csv.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "qsl.hpp"
#include "spectral.hpp"
#include "spectrum.hpp"

struct qslcv_params {
    qslcv::SpectralParams v;
};

struct qslcv_trajectory {
    qslcv::AmplitudeTrajectory v;
};

namespace {

thread_local std::string g_last_error;

qslcv_status fail(qslcv_status status, const char* what) {
    g_last_error = what ? what : "";
    return status;
}

template <typename Fn>
qslcv_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QSLCV_OK;
    } catch (const std::invalid_argument& e) {
        return fail(QSLCV_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(QSLCV_ERROR_DOMAIN, e.what());
    } catch (const qslcv::io_error& e) {
        return fail(QSLCV_ERROR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QSLCV_ERROR_NUMERIC, "out of memory");
    } catch (const std::exception& e) {
        return fail(QSLCV_ERROR_NUMERIC, e.what());
    }
}

qslcv_qsl_report convert(const qslcv::QslReport& r) {
    return {r.tau, r.ell, r.l_b, r.v_bar, r.ratio, r.v_bar_w, r.l_w, r.ratio_w};
}

} // namespace

extern "C" {

const char* qslcv_status_name(qslcv_status status) {
    switch (status) {
        case QSLCV_OK: return "ok";
        case QSLCV_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case QSLCV_ERROR_DOMAIN: return "domain error";
        case QSLCV_ERROR_NUMERIC: return "numeric error";
        case QSLCV_ERROR_IO: return "io error";
    }
    return "unknown";
}

const char* qslcv_version_string(void) { return "0.1.0"; }

const char* qslcv_last_error(void) { return g_last_error.c_str(); }

qslcv_status qslcv_params_create(double eta, double s, double omega_c, qslcv_params** out) {
    if (!out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null out pointer");
    *out = nullptr;
    return guarded([&] { *out = new qslcv_params{qslcv::SpectralParams(eta, s, omega_c)}; });
}

void qslcv_params_destroy(qslcv_params* params) { delete params; }

qslcv_status qslcv_params_get(const qslcv_params* params, double* eta, double* s,
                              double* omega_c, double* omega_0) {
    if (!params) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null params");
    if (eta) *eta = params->v.eta;
    if (s) *s = params->v.s;
    if (omega_c) *omega_c = params->v.omega_c;
    if (omega_0) *omega_0 = params->v.omega_0;
    return QSLCV_OK;
}

qslcv_status qslcv_spectral_density(const qslcv_params* params, double omega, double* out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = qslcv::spectral_density(params->v, omega); });
}

qslcv_status qslcv_memory_kernel(const qslcv_params* params, double t, double* out_re,
                                 double* out_im) {
    if (!params || !out_re || !out_im)
        return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::complex<double> mu = qslcv::memory_kernel(params->v, t);
        *out_re = mu.real();
        *out_im = mu.imag();
    });
}

qslcv_status qslcv_markov_decay_rate(const qslcv_params* params, double* out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = qslcv::markov_decay_rate(params->v); });
}

qslcv_status qslcv_frequency_shift(const qslcv_params* params, double omega, double* out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = qslcv::frequency_shift(params->v, omega); });
}

qslcv_status qslcv_solve_exact(const qslcv_params* params, double tau, double step,
                               qslcv_trajectory** out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new qslcv_trajectory{qslcv::solve_amplitude(params->v, tau, step)};
    });
}

qslcv_status qslcv_solve_markov(const qslcv_params* params, double tau, double step,
                                int include_shift, qslcv_trajectory** out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const double h = (step > 0.0) ? step : std::min(0.01, 0.5 / params->v.omega_c);
        *out = new qslcv_trajectory{
            qslcv::markov_trajectory(params->v, tau, h, include_shift != 0)};
    });
}

qslcv_status qslcv_solve_discretized_bath(const qslcv_params* params, double tau,
                                          size_t n_modes, double omega_max, double step,
                                          qslcv_trajectory** out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const double h = (step > 0.0) ? step : 0.01;
        *out = new qslcv_trajectory{
            qslcv::discretized_bath_oracle(params->v, tau, n_modes, omega_max, h)};
    });
}

void qslcv_trajectory_destroy(qslcv_trajectory* traj) { delete traj; }

size_t qslcv_trajectory_size(const qslcv_trajectory* traj) {
    return traj ? traj->v.size() : 0;
}

double qslcv_trajectory_step(const qslcv_trajectory* traj) {
    return traj ? traj->v.step : 0.0;
}

qslcv_status qslcv_trajectory_copy_data(const qslcv_trajectory* traj, double* t,
                                        double* re_u, double* im_u, double* re_du,
                                        double* im_du, double* omega, double* gamma) {
    if (!traj) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null trajectory");
    const qslcv::AmplitudeTrajectory& v = traj->v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (t) t[i] = v.t[i];
        if (re_u) re_u[i] = v.u[i].real();
        if (im_u) im_u[i] = v.u[i].imag();
        if (re_du) re_du[i] = v.du[i].real();
        if (im_du) im_du[i] = v.du[i].imag();
        if (omega) omega[i] = v.omega_t[i];
        if (gamma) gamma[i] = v.gamma_t[i];
    }
    return QSLCV_OK;
}

qslcv_status qslcv_trajectory_write_csv(const qslcv_trajectory* traj, const char* path,
                                        const char* config_comment) {
    if (!traj || !path) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        qslcv::write_trajectory_csv_file(path, traj->v,
                                         config_comment ? config_comment : "");
    });
}

qslcv_status qslcv_find_bound_state(const qslcv_params* params, qslcv_bound_state* out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const qslcv::BoundState b = qslcv::find_bound_state(params->v);
        *out = {b.exists ? 1 : 0, b.e_b, b.z};
    });
}

qslcv_status qslcv_bound_state_threshold(double s, double omega_c, double* eta_star) {
    if (!eta_star) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *eta_star = qslcv::bound_state_threshold(s, omega_c); });
}

qslcv_status qslcv_asymptotic_amplitude(const qslcv_params* params,
                                        const qslcv_bound_state* bound, double tau,
                                        int include_branch_cut, int printed_weight,
                                        double* out_re, double* out_im) {
    if (!params || !bound || !out_re || !out_im)
        return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        qslcv::BoundState b;
        b.exists = bound->exists != 0;
        b.e_b = bound->e_b;
        b.z = bound->z;
        const std::complex<double> u = qslcv::asymptotic_amplitude(
            b, params->v, tau, include_branch_cut != 0,
            printed_weight ? qslcv::BranchCutWeight::printed
                           : qslcv::BranchCutWeight::standard);
        *out_re = u.real();
        *out_im = u.imag();
    });
}

qslcv_status qslcv_qsl_report_at(const qslcv_trajectory* traj, double alpha_re,
                                 double alpha_im, double tau, qslcv_qsl_report* out) {
    if (!traj || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        qslcv::CoherentTrajectory ct{{alpha_re, alpha_im}, &traj->v};
        qslcv::QslEvaluator eval(ct);
        *out = convert(eval.at(eval.index_of(tau)));
    });
}

qslcv_status qslcv_qsl_report_series(const qslcv_trajectory* traj, double alpha_re,
                                     double alpha_im, const double* taus, size_t count,
                                     qslcv_qsl_report* out) {
    if (!traj || !taus || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        qslcv::CoherentTrajectory ct{{alpha_re, alpha_im}, &traj->v};
        qslcv::QslEvaluator eval(ct);
        for (size_t i = 0; i < count; ++i) out[i] = convert(eval.at(eval.index_of(taus[i])));
    });
}

qslcv_status qslcv_markov_qsl_report(const qslcv_params* params, double alpha_abs,
                                     double tau, int include_shift, qslcv_qsl_report* out) {
    if (!params || !out) return fail(QSLCV_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = convert(
            qslcv::markov_qsl_report(params->v, alpha_abs, tau, include_shift != 0));
    });
}

} // extern "C"
