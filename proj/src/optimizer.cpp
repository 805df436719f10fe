#include "geez/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace geez {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

// Minimizer of the cubic through (a, fa, da) and (b, fb, db); NaN when the
// interpolant has no interior minimum.
double cubic_min(double a, double fa, double da, double b, double fb, double db) {
    const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
    const double disc = d1 * d1 - da * db;
    if (disc < 0.0) return std::nan("");
    const double d2 = std::sqrt(disc) * (b > a ? 1.0 : -1.0);
    const double denom = db - da + 2.0 * d2;
    if (denom == 0.0) return std::nan("");
    return b - (b - a) * (db + d2 - d1) / denom;
}

constexpr double kAlphaFloor = 1e-16;
constexpr double kAlphaCeil = 1e16;

} // namespace

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::GradientTolerance: return "gradient_tolerance";
        case StopReason::LossGoal: return "loss_goal";
        case StopReason::MaxIterations: return "max_iterations";
        case StopReason::Stall: return "stall";
    }
    return "unknown";
}

void CgTrace::write_csv(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write trace " + path.string());
    out << "iter,loss,grad_inf_norm,alpha,beta,restart\n";
    char buf[256];
    for (const CgIterationRecord& r : iterations) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%d\n", r.iter, r.loss,
                      r.grad_inf_norm, r.alpha, r.beta, r.restart ? 1 : 0);
        out << buf;
    }
}

double polak_ribiere_beta(const std::vector<double>& g, const std::vector<double>& g_prev) {
    if (g.size() != g_prev.size()) throw DimensionError("polak_ribiere_beta: size mismatch");
    double denom = 0.0;
    for (double x : g_prev) denom += x * x;
    if (denom == 0.0) throw Error("polak_ribiere_beta: previous gradient is zero");
    double num = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) num += g[i] * (g[i] - g_prev[i]);
    return std::max(0.0, num / denom);
}

LineSearchResult line_search_wolfe(const PhiFn& phi, double phi0, double dphi0,
                                   double alpha_init, const CgConfig& cfg) {
    if (!(dphi0 < 0.0))
        throw LineSearchError("line search requires a descent direction (phi'(0) = " +
                              std::to_string(dphi0) + ")");

    const double c1 = cfg.wolfe_c1;
    const double c2 = cfg.wolfe_c2;
    int evals = 0;

    bool have_best = false;
    double best_alpha = 0.0, best_f = phi0;

    auto sufficient = [&](double a, double f) { return f <= phi0 + c1 * a * dphi0; };

    auto eval = [&](double a) {
        const auto [f, dphi] = phi(a);
        ++evals;
        if (sufficient(a, f) && (!have_best || f < best_f)) {
            have_best = true;
            best_alpha = a;
            best_f = f;
        }
        return std::make_pair(f, dphi);
    };

    // Budget exhausted or the zoom interval collapsed: fall back to the best
    // sufficient-decrease point, re-evaluated so the final phi call lands on
    // the returned alpha.
    auto fallback = [&]() -> LineSearchResult {
        if (!have_best)
            throw LineSearchError("line search stalled: no decrease found down to alpha = 1e-16");
        const auto [f, dphi] = phi(best_alpha);
        ++evals;
        return {best_alpha, f, dphi, evals, false};
    };

    auto zoom = [&](double lo_a, double lo_f, double lo_d, double hi_a, double hi_f,
                    double hi_d) -> LineSearchResult {
        for (;;) {
            if (evals >= cfg.max_line_search_evals) return fallback();
            const double left = std::min(lo_a, hi_a);
            const double right = std::max(lo_a, hi_a);
            const double width = right - left;
            if (width <= kAlphaFloor) {
                if (have_best && best_alpha > 0.0) return fallback();
                throw LineSearchError(
                    "line search stalled: bracket collapsed without sufficient decrease");
            }
            double aj = cubic_min(lo_a, lo_f, lo_d, hi_a, hi_f, hi_d);
            if (!std::isfinite(aj) || aj <= left + 0.1 * width || aj >= right - 0.1 * width)
                aj = left + 0.5 * width;

            const auto [fj, dj] = eval(aj);
            if (!sufficient(aj, fj) || fj >= lo_f) {
                hi_a = aj;
                hi_f = fj;
                hi_d = dj;
            } else {
                if (std::fabs(dj) <= -c2 * dphi0) return {aj, fj, dj, evals, true};
                if (dj * (hi_a - lo_a) >= 0.0) {
                    hi_a = lo_a;
                    hi_f = lo_f;
                    hi_d = lo_d;
                }
                lo_a = aj;
                lo_f = fj;
                lo_d = dj;
            }
        }
    };

    double a_prev = 0.0, f_prev = phi0, d_prev = dphi0;
    double a = std::clamp(alpha_init, kAlphaFloor, kAlphaCeil);
    bool first = true;
    for (;;) {
        if (evals >= cfg.max_line_search_evals) return fallback();
        const auto [f_a, d_a] = eval(a);
        if (!sufficient(a, f_a) || (!first && f_a >= f_prev))
            return zoom(a_prev, f_prev, d_prev, a, f_a, d_a);
        if (std::fabs(d_a) <= -c2 * dphi0) return {a, f_a, d_a, evals, true};
        if (d_a >= 0.0) return zoom(a, f_a, d_a, a_prev, f_prev, d_prev);
        a_prev = a;
        f_prev = f_a;
        d_prev = d_a;
        a = std::min(2.0 * a, kAlphaCeil);
        first = false;
    }
}

CgResult cg_minimize(Objective& obj, std::vector<double> theta0, const CgConfig& cfg) {
    const std::size_t n = theta0.size();
    if (n == 0) throw Error("cg_minimize: empty parameter vector");
    const int restart_interval =
        cfg.restart_interval > 0 ? cfg.restart_interval : static_cast<int>(n);

    CgResult res;
    res.theta = std::move(theta0);

    std::vector<double> g(n), g_prev(n), d(n, 0.0), theta_trial(n), g_trial(n);
    double f = obj.value_and_gradient(res.theta, g);
    double gnorm = inf_norm(g);
    if (!std::isfinite(f) || !std::isfinite(gnorm))
        throw Error("cg_minimize: objective returned non-finite values at the start point");
    res.trace.iterations.push_back({0, f, gnorm, 0.0, 0.0, false});

    double cache_alpha = std::nan("");
    int k = 0;
    int since_restart = 0;
    double prev_decrease = 0.0;
    StopReason stop = StopReason::MaxIterations;

    while (true) {
        if (gnorm <= cfg.gradient_tolerance) {
            stop = StopReason::GradientTolerance;
            break;
        }
        if (f <= cfg.loss_goal) {
            stop = StopReason::LossGoal;
            break;
        }
        if (k >= cfg.max_iterations) {
            stop = StopReason::MaxIterations;
            break;
        }
        ++k;

        bool restart = k == 1 || since_restart >= restart_interval;
        double beta = 0.0;
        if (!restart) {
            beta = polak_ribiere_beta(g, g_prev);
            if (beta == 0.0) {
                restart = true;
            } else {
                double dg = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    d[i] = -g[i] + beta * d[i];
                    dg += d[i] * g[i];
                }
                if (dg >= 0.0) restart = true; // conjugacy degraded to non-descent
            }
        }
        if (restart) {
            beta = 0.0;
            for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
        }
        const double dphi0 = dot(d, g);

        double alpha_init;
        if (k == 1) {
            alpha_init = 1.0 / gnorm;
        } else {
            // Warm start from the previous decrease; the quadratic estimate
            // 2 (f_prev - f) / |phi'(0)| capped at the unit step.
            alpha_init = std::min(1.0, 2.0 * prev_decrease / -dphi0);
            if (!std::isfinite(alpha_init) || alpha_init <= 0.0) alpha_init = 1.0;
        }

        const int iter_index = k;
        PhiFn phi = [&](double alpha) {
            for (std::size_t i = 0; i < n; ++i) theta_trial[i] = res.theta[i] + alpha * d[i];
            const double ft = obj.value_and_gradient(theta_trial, g_trial);
            if (!std::isfinite(ft))
                throw Error("cg_minimize: objective returned non-finite value at iteration " +
                            std::to_string(iter_index));
            cache_alpha = alpha;
            return std::make_pair(ft, dot(g_trial, d));
        };

        LineSearchResult ls;
        try {
            ls = line_search_wolfe(phi, f, dphi0, alpha_init, cfg);
        } catch (const LineSearchError&) {
            --k;
            stop = StopReason::Stall;
            break;
        }
        if (cache_alpha != ls.alpha) phi(ls.alpha);

        prev_decrease = f - ls.f;
        f = ls.f;
        std::swap(res.theta, theta_trial);
        std::swap(g_prev, g);
        std::swap(g, g_trial);
        gnorm = inf_norm(g);
        res.trace.iterations.push_back({k, f, gnorm, ls.alpha, beta, restart});
        since_restart = restart ? 1 : since_restart + 1;
        // Without the curvature condition the next PR direction is unreliable.
        if (!ls.wolfe_satisfied) since_restart = restart_interval;
    }

    res.stop = stop;
    res.final_loss = f;
    res.iterations = k;
    return res;
}

} // namespace geez
