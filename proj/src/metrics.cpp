#include "moba/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace moba {

TrueFront TrueFront::closed_form(std::function<double(double)> f2_of_f1,
                                 double f1_min, double f1_max) {
    TrueFront f;
    f.kind = Kind::ClosedForm;
    f.f2_of_f1 = std::move(f2_of_f1);
    f.f1_min = f1_min;
    f.f1_max = f1_max;
    return f;
}

TrueFront TrueFront::sampled(std::vector<std::array<double, 2>> points) {
    if (points.empty())
        throw std::invalid_argument("TrueFront: empty sample");
    TrueFront f;
    f.kind = Kind::Sampled;
    f.points = std::move(points);
    f.f1_min = f.points.front()[0];
    f.f1_max = f.points.back()[0];
    return f;
}

double point_front_error(const ObjectiveVector& objectives,
                         const TrueFront& front) {
    if (objectives.size() != 2)
        throw std::invalid_argument("front_error: needs K=2 objectives");
    const double f1 = objectives[0];
    const double f2 = objectives[1];
    if (front.kind == TrueFront::Kind::ClosedForm) {
        const double f1c = std::clamp(f1, front.f1_min, front.f1_max);
        const double r = f2 - front.f2_of_f1(f1c);
        return r * r;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : front.points) {
        const double d1 = f1 - p[0];
        const double d2 = f2 - p[1];
        best = std::min(best, d1 * d1 + d2 * d2);
    }
    return best;
}

std::optional<double> front_error(const ParetoArchive& estimated,
                                  const TrueFront& front) {
    if (estimated.empty()) return std::nullopt;
    double sum = 0.0;
    for (const auto& e : estimated.entries())
        sum += point_front_error(e.objectives, front);
    return sum;
}

TrueFront build_zdt3_front(std::size_t samples) {
    if (samples < 10000)
        throw std::invalid_argument("build_zdt3_front: need >= 10^4 samples");
    std::vector<std::array<double, 2>> kept;
    kept.reserve(samples / 2);
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const double f1 =
            static_cast<double>(i) / static_cast<double>(samples - 1);
        const double f2 = 1.0 - std::sqrt(f1) -
                          f1 * std::sin(10.0 * std::numbers::pi * f1);
        // Grid is sorted by f1, so the non-dominated subset is exactly the
        // strictly-decreasing lower envelope of f2.
        if (f2 < lowest) {
            kept.push_back({f1, f2});
            lowest = f2;
        }
    }
    return TrueFront::sampled(std::move(kept));
}

void ConvergenceTrace::append(long iteration, double best_scalar,
                              std::optional<double> front_error) {
    if (!records_.empty() && iteration <= records_.back().iteration)
        throw std::invalid_argument(
            "ConvergenceTrace: iterations must strictly increase");
    records_.push_back({iteration, best_scalar, front_error});
}

void record_trace_point(ConvergenceTrace& trace, long iteration, double best,
                        const ParetoArchive* archive, const TrueFront* front) {
    std::optional<double> fe;
    if (archive != nullptr && front != nullptr)
        fe = front_error(*archive, *front);
    trace.append(iteration, best, fe);
}

}  // namespace moba
