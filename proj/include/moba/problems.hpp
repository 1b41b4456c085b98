#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moba/core.hpp"
#include "moba/metrics.hpp"
#include "moba/pareto.hpp"

namespace moba {

/// A benchmark instance: objectives to minimize, inequality constraints in
/// the g(x) <= 0 convention, box bounds, and the analytic front when one
/// is known.
struct Problem {
    std::string name;
    int dimension = 0;
    int num_objectives = 0;
    BoundsBox bounds;
    std::function<ObjectiveVector(const RealVector&)> objectives;
    std::vector<std::function<double(const RealVector&)>> constraints;
    std::optional<TrueFront> true_front;

    ObjectiveVector evaluate(const RealVector& x) const { return objectives(x); }

    /// Largest positive constraint value at x (0 when feasible or
    /// unconstrained).
    double max_violation(const RealVector& x) const;
};

/// ZDT helper g = 1 + 9 sum(x_2..x_d) / (d-1).
double zdt_g(const RealVector& x);

ObjectiveVector zdt1(const RealVector& x);
ObjectiveVector zdt2(const RealVector& x);
ObjectiveVector zdt3(const RealVector& x);

/// LZ4 kernel h(v) = |v| / (1 + exp(2|v|)).
double lz4_h(double v);
ObjectiveVector lz4(const RealVector& x);

/// Point on the LZ4 Pareto set: x_j = sin(6 pi x1 + j pi / d) for j >= 2.
RealVector lz4_pareto_set_point(double x1, int dimension);

struct WeldedBeamEvaluation {
    ObjectiveVector objectives;          // (fabrication cost, end deflection)
    std::vector<double> constraints;     // g1..g7, feasible when <= 0
};

/// Welded beam design, decision vector ordered (w, L, d, h).
WeldedBeamEvaluation welded_beam(const RealVector& x);

/// Weighted-sum scalarization with a static quadratic exterior penalty:
/// scalarize(f(x), w) + penalty * sum_j max(0, g_j(x))^2.
double penalized_scalar(const Problem& problem, const RealVector& x,
                        const WeightVector& w, double penalty);

/// Registry of benchmark problems, keyed by the exact names
/// "zdt1", "zdt2", "zdt3", "lz4", "welded-beam".
Problem make_problem(const std::string& name,
                     std::optional<int> dimension = std::nullopt);

const std::vector<std::string>& problem_names();

}  // namespace moba
