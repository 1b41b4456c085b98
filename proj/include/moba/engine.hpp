#pragma once

#include <functional>
#include <vector>

#include "moba/core.hpp"
#include "moba/metrics.hpp"

namespace moba {

/// Scalar minimization target over a box. `evaluate` must be
/// deterministic and reentrant.
struct ScalarObjective {
    std::function<double(const RealVector&)> evaluate;
    BoundsBox bounds;

    std::size_t dimension() const { return bounds.dimension(); }
};

/// Swarm state. bats[best_index] holds the lowest stored fitness;
/// positions always lie inside the objective's bounds.
struct Population {
    std::vector<Bat> bats;
    std::size_t best_index = 0;
    long iteration = 0;

    const Bat& best() const { return bats[best_index]; }
};

struct EngineDiagnostics {
    long nan_rejections = 0;
};

/// Frequency draw f_min + (f_max - f_min) * beta for a given beta.
double frequency_from_beta(double beta, const BatParams& p);

/// Frequency draw with beta uniform in [0,1].
double sample_frequency(RngStream& rng, const BatParams& p);

/// v + (x - x_best) * f, componentwise. The (x - x_best) orientation is
/// deliberate; see README on fidelity to the source formulation.
RealVector update_velocity(const RealVector& v, const RealVector& x,
                           const RealVector& x_best, double f);

/// clamp_to_bounds(x + v, b).
RealVector update_position(const RealVector& x, const RealVector& v,
                           const BoundsBox& b);

/// Deterministic core of the local random walk for a given epsilon.
RealVector walk_step(const RealVector& x_old, const RealVector& epsilon,
                     double avg_loudness, const BoundsBox& b);

/// x_old + epsilon * avg_loudness with epsilon fresh-uniform in [-1,1]^d,
/// clamped to the box.
RealVector local_random_walk(const RealVector& x_old, double avg_loudness,
                             RngStream& rng, const BoundsBox& b);

/// One annealing step: (alpha * A, r0 * (1 - exp(-gamma * t))).
std::pair<double, double> update_loudness_and_rate(double loudness, double r0,
                                                   const BatParams& p, long t);

/// Mean loudness across the population.
double average_loudness(const Population& pop);

/// Fresh population: positions uniform in the box, velocities zero,
/// frequencies uniform in [f_min, f_max], loudness and initial pulse rate
/// drawn from their init ranges (current pulse rate starts at zero).
Population init_population(const ScalarObjective& obj, const BatParams& p,
                           RngStream& rng, EngineDiagnostics* diag = nullptr);

/// One iteration over all bats: motion-equation candidate, pulse-gated
/// local walk around the current best, loudness-gated greedy acceptance,
/// then best re-ranking. NaN evaluations are rejected and counted.
void engine_step(Population& pop, const ScalarObjective& obj,
                 const BatParams& p, RngStream& rng,
                 EngineDiagnostics* diag = nullptr);

struct SingleObjectiveResult {
    RealVector best_position;
    double best_fitness = 0.0;
    ConvergenceTrace trace;
    EngineDiagnostics diagnostics;
};

/// Optional per-iteration hook; returns the front error to attach to the
/// trace record at the given best position, if one is defined.
using FrontErrorFn = std::function<std::optional<double>(const RealVector&)>;

/// Full single-objective run: init, max_iterations engine steps, and a
/// per-iteration trace (length max_iterations + 1 including the initial
/// state).
SingleObjectiveResult run_single_objective(const ScalarObjective& obj,
                                           const BatParams& p, RngStream& rng,
                                           const FrontErrorFn& front_error_at = {});

}  // namespace moba
