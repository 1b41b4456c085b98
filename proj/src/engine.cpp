#include "moba/engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace moba {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t argmin_fitness(const std::vector<Bat>& bats) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < bats.size(); ++i)
        if (bats[i].fitness < bats[best].fitness) best = i;
    return best;
}

double checked_eval(const ScalarObjective& obj, const RealVector& x,
                    EngineDiagnostics* diag) {
    const double f = obj.evaluate(x);
    if (std::isnan(f)) {
        if (diag != nullptr) ++diag->nan_rejections;
        return kInf;  // ranks last, never accepted
    }
    return f;
}

}  // namespace

double frequency_from_beta(double beta, const BatParams& p) {
    return p.f_min + (p.f_max - p.f_min) * beta;
}

double sample_frequency(RngStream& rng, const BatParams& p) {
    return frequency_from_beta(rng.uniform01(), p);
}

RealVector update_velocity(const RealVector& v, const RealVector& x,
                           const RealVector& x_best, double f) {
    if (v.size() != x.size() || x.size() != x_best.size())
        throw std::invalid_argument("update_velocity: dimension mismatch");
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] + (x[i] - x_best[i]) * f;
    return out;
}

RealVector update_position(const RealVector& x, const RealVector& v,
                           const BoundsBox& b) {
    if (x.size() != v.size())
        throw std::invalid_argument("update_position: dimension mismatch");
    RealVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + v[i];
    return clamp_to_bounds(out, b);
}

RealVector walk_step(const RealVector& x_old, const RealVector& epsilon,
                     double avg_loudness, const BoundsBox& b) {
    if (x_old.size() != epsilon.size())
        throw std::invalid_argument("walk_step: dimension mismatch");
    RealVector out(x_old.size());
    for (std::size_t i = 0; i < x_old.size(); ++i)
        out[i] = x_old[i] + epsilon[i] * avg_loudness;
    return clamp_to_bounds(out, b);
}

RealVector local_random_walk(const RealVector& x_old, double avg_loudness,
                             RngStream& rng, const BoundsBox& b) {
    return walk_step(x_old, rng.uniform_symmetric(x_old.size()), avg_loudness, b);
}

std::pair<double, double> update_loudness_and_rate(double loudness, double r0,
                                                   const BatParams& p, long t) {
    return {p.alpha * loudness,
            r0 * (1.0 - std::exp(-p.gamma * static_cast<double>(t)))};
}

double average_loudness(const Population& pop) {
    double sum = 0.0;
    for (const auto& bat : pop.bats) sum += bat.loudness;
    return sum / static_cast<double>(pop.bats.size());
}

Population init_population(const ScalarObjective& obj, const BatParams& p,
                           RngStream& rng, EngineDiagnostics* diag) {
    p.validate();
    Population pop;
    pop.bats.resize(p.population_size);
    for (auto& bat : pop.bats) {
        bat.position = uniform_in_box(obj.bounds, rng);
        bat.velocity.assign(obj.dimension(), 0.0);
        bat.frequency = sample_frequency(rng, p);
        bat.loudness = rng.uniform(p.loudness_init_range.lo, p.loudness_init_range.hi);
        bat.initial_pulse_rate = rng.uniform(p.rate_init_range.lo, p.rate_init_range.hi);
        bat.pulse_rate = 0.0;  // r_i^0 (1 - exp(0))
        bat.accept_count = 0;
        bat.fitness = checked_eval(obj, bat.position, diag);
    }
    pop.best_index = argmin_fitness(pop.bats);
    pop.iteration = 0;
    return pop;
}

void engine_step(Population& pop, const ScalarObjective& obj,
                 const BatParams& p, RngStream& rng, EngineDiagnostics* diag) {
    // Best position and mean loudness are frozen at the start of the step.
    const RealVector x_best = pop.best().position;
    const double avg_loudness = average_loudness(pop);

    for (auto& bat : pop.bats) {
        const double frequency = sample_frequency(rng, p);
        RealVector velocity =
            update_velocity(bat.velocity, bat.position, x_best, frequency);
        RealVector candidate = update_position(bat.position, velocity, obj.bounds);

        if (rng.uniform01() > bat.pulse_rate)
            candidate = local_random_walk(x_best, avg_loudness, rng, obj.bounds);

        const double candidate_fitness = checked_eval(obj, candidate, diag);

        const double acceptance_draw = rng.uniform01();
        if (acceptance_draw < bat.loudness && candidate_fitness < bat.fitness) {
            bat.position = std::move(candidate);
            bat.velocity = std::move(velocity);
            bat.frequency = frequency;
            bat.fitness = candidate_fitness;
            ++bat.accept_count;
            const auto [loudness, rate] = update_loudness_and_rate(
                bat.loudness, bat.initial_pulse_rate, p, bat.accept_count);
            bat.loudness = loudness;
            bat.pulse_rate = rate;
        }
    }

    pop.best_index = argmin_fitness(pop.bats);
    ++pop.iteration;
}

SingleObjectiveResult run_single_objective(const ScalarObjective& obj,
                                           const BatParams& p, RngStream& rng,
                                           const FrontErrorFn& front_error_at) {
    p.validate();
    SingleObjectiveResult result;
    Population pop = init_population(obj, p, rng, &result.diagnostics);

    auto record = [&](long iteration) {
        std::optional<double> fe;
        if (front_error_at) fe = front_error_at(pop.best().position);
        result.trace.append(iteration, pop.best().fitness, fe);
    };

    record(0);
    for (long t = 0; t < p.max_iterations; ++t) {
        engine_step(pop, obj, p, rng, &result.diagnostics);
        record(pop.iteration);
    }

    result.best_position = pop.best().position;
    result.best_fitness = pop.best().fitness;
    return result;
}

}  // namespace moba
