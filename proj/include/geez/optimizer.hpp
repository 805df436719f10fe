#ifndef GEEZ_OPTIMIZER_HPP
#define GEEZ_OPTIMIZER_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "geez/errors.hpp"

namespace geez {

// Full-batch nonlinear conjugate gradient with Polak-Ribiere (PR+) updates,
// a strong-Wolfe bracket/zoom line search, and restart safeguards. Generic
// over any objective that supplies value and gradient.

class Objective {
public:
    virtual ~Objective() = default;
    virtual double value(const std::vector<double>& theta) = 0;
    virtual double value_and_gradient(const std::vector<double>& theta,
                                      std::vector<double>& grad) = 0;
};

struct CgConfig {
    int max_iterations = 1000;
    double gradient_tolerance = 1e-6; // on the max-norm of the gradient
    double loss_goal = 1e-5;          // stop once the objective falls this low
    double wolfe_c1 = 1e-4;
    double wolfe_c2 = 0.1;
    int max_line_search_evals = 40;
    int restart_interval = 0;         // 0 means dimension of theta
};

struct CgIterationRecord {
    int iter;
    double loss;
    double grad_inf_norm;
    double alpha;   // accepted step length (0 for the initial record)
    double beta;    // PR+ coefficient used to build the direction
    bool restart;   // direction was reset to steepest descent
};

struct CgTrace {
    std::vector<CgIterationRecord> iterations;
    void write_csv(const std::filesystem::path& path) const;
};

enum class StopReason { GradientTolerance, LossGoal, MaxIterations, Stall };
std::string stop_reason_name(StopReason r);

struct CgResult {
    std::vector<double> theta;
    CgTrace trace;
    StopReason stop = StopReason::MaxIterations;
    double final_loss = 0.0;
    int iterations = 0;
};

// PR+ coefficient: max(0, g . (g - g_prev) / (g_prev . g_prev)).
// Throws when g_prev is the zero vector.
double polak_ribiere_beta(const std::vector<double>& g, const std::vector<double>& g_prev);

// One evaluation of the 1-D restriction: alpha -> (phi(alpha), phi'(alpha)).
using PhiFn = std::function<std::pair<double, double>(double)>;

struct LineSearchResult {
    double alpha = 0.0;
    double f = 0.0;     // phi(alpha)
    double dphi = 0.0;  // phi'(alpha)
    int evals = 0;
    bool wolfe_satisfied = false; // false: budget ran out, best decrease point returned
};

// Bracket-then-zoom search for a step satisfying the strong Wolfe conditions
//   phi(a) <= phi(0) + c1 a phi'(0)   and   |phi'(a)| <= c2 |phi'(0)|.
// Requires phi'(0) < 0. When the evaluation budget runs out, the best point
// satisfying sufficient decrease is returned with wolfe_satisfied = false.
// Throws LineSearchError on an ascent direction or when no decrease exists
// down to alpha = 1e-16.
LineSearchResult line_search_wolfe(const PhiFn& phi, double phi0, double dphi0,
                                   double alpha_init, const CgConfig& cfg);

// Minimizes the objective from theta0. The trace carries one record for the
// initial point and one per accepted step; losses decrease strictly until the
// stop iteration. Throws on non-finite objective values.
CgResult cg_minimize(Objective& obj, std::vector<double> theta0, const CgConfig& cfg);

} // namespace geez

#endif
