#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "moba/pareto.hpp"

namespace moba {

/// Analytic Pareto front of a bi-objective problem. Either a closed form
/// f2(f1) over [f1_min, f1_max], or a dense non-dominated point sample
/// (used for discontinuous fronts).
struct TrueFront {
    enum class Kind { ClosedForm, Sampled };

    Kind kind = Kind::ClosedForm;
    std::function<double(double)> f2_of_f1;
    double f1_min = 0.0;
    double f1_max = 1.0;
    std::vector<std::array<double, 2>> points;

    static TrueFront closed_form(std::function<double(double)> f2_of_f1,
                                 double f1_min = 0.0, double f1_max = 1.0);
    static TrueFront sampled(std::vector<std::array<double, 2>> points);
};

/// Sum of squared deviations between the archive and the true front:
/// vertical residuals at each point's f1 for closed forms, nearest sample
/// point squared distance for sampled fronts. Empty archives have no
/// defined error.
std::optional<double> front_error(const ParetoArchive& estimated,
                                  const TrueFront& front);

/// Squared deviation of a single objective pair against the front.
double point_front_error(const ObjectiveVector& objectives,
                         const TrueFront& front);

/// Dense non-dominated sample of the discontinuous ZDT3 front,
/// f2 = 1 - sqrt(f1) - f1 sin(10 pi f1) filtered to its lower envelope.
/// Requires at least 10^4 grid samples.
TrueFront build_zdt3_front(std::size_t samples);

struct TraceRecord {
    long iteration = 0;
    double best_scalar = 0.0;
    std::optional<double> front_error;
};

/// Per-iteration record of the best scalar fitness (non-increasing by
/// construction of the engine) and, when a true front is known, the
/// front error of the current best point.
class ConvergenceTrace {
public:
    void append(long iteration, double best_scalar,
                std::optional<double> front_error = std::nullopt);

    const std::vector<TraceRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

private:
    std::vector<TraceRecord> records_;
};

/// Appends one record; iteration must exceed the last recorded one.
/// When both an archive and a front are supplied the record carries the
/// archive's front error.
void record_trace_point(ConvergenceTrace& trace, long iteration, double best,
                        const ParetoArchive* archive = nullptr,
                        const TrueFront* front = nullptr);

}  // namespace moba
