#include "moba/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moba {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dimension(const RealVector& x, std::size_t d, const char* who) {
    if (x.size() != d)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

BoundsBox unit_box(int d) {
    return BoundsBox(RealVector(d, 0.0), RealVector(d, 1.0));
}

}  // namespace

double Problem::max_violation(const RealVector& x) const {
    double worst = 0.0;
    for (const auto& g : constraints) worst = std::max(worst, g(x));
    return worst;
}

double zdt_g(const RealVector& x) {
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) tail += x[i];
    return 1.0 + 9.0 * tail / static_cast<double>(x.size() - 1);
}

ObjectiveVector zdt1(const RealVector& x) {
    if (x.size() < 2) throw std::invalid_argument("zdt1: need d >= 2");
    const double f1 = x[0];
    const double g = zdt_g(x);
    return {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ObjectiveVector zdt2(const RealVector& x) {
    if (x.size() < 2) throw std::invalid_argument("zdt2: need d >= 2");
    const double f1 = x[0];
    const double g = zdt_g(x);
    const double ratio = f1 / g;
    return {f1, g * (1.0 - ratio * ratio)};
}

ObjectiveVector zdt3(const RealVector& x) {
    if (x.size() < 2) throw std::invalid_argument("zdt3: need d >= 2");
    const double f1 = x[0];
    const double g = zdt_g(x);
    const double ratio = f1 / g;
    return {f1, g * (1.0 - std::sqrt(ratio) - ratio * std::sin(10.0 * kPi * f1))};
}

double lz4_h(double v) {
    const double a = std::abs(v);
    return a / (1.0 + std::exp(2.0 * a));
}

ObjectiveVector lz4(const RealVector& x) {
    if (x.size() < 3) throw std::invalid_argument("lz4: need d >= 3");
    const int d = static_cast<int>(x.size());
    const double x1 = x[0];
    double sum_odd = 0.0, sum_even = 0.0;
    int n_odd = 0, n_even = 0;
    for (int j = 2; j <= d; ++j) {
        const double u = x[j - 1] - std::sin(6.0 * kPi * x1 + j * kPi / d);
        if (j % 2 == 1) {
            sum_odd += lz4_h(u);
            ++n_odd;
        } else {
            sum_even += lz4_h(u);
            ++n_even;
        }
    }
    const double f1 = x1 + 2.0 * sum_odd / n_odd;
    const double f2 = 1.0 - x1 * x1 + 2.0 * sum_even / n_even;
    return {f1, f2};
}

RealVector lz4_pareto_set_point(double x1, int dimension) {
    if (dimension < 3)
        throw std::invalid_argument("lz4_pareto_set_point: need d >= 3");
    RealVector x(dimension);
    x[0] = x1;
    for (int j = 2; j <= dimension; ++j)
        x[j - 1] = std::sin(6.0 * kPi * x1 + j * kPi / dimension);
    return x;
}

WeldedBeamEvaluation welded_beam(const RealVector& x) {
    check_dimension(x, 4, "welded_beam");
    const double w = x[0];
    const double L = x[1];
    const double d = x[2];
    const double h = x[3];

    const double f1 = 1.10471 * w * w * L + 0.04811 * d * h * (14.0 + L);
    const double delta = 65856.0 / (30000.0 * h * d * d * d);

    const double sigma = 504000.0 / (h * d * d);
    const double Q = 6000.0 * (14.0 + L / 2.0);
    const double D = 0.5 * std::sqrt(L * L + (w + d) * (w + d));
    const double J = std::sqrt(2.0) * w * L *
                     (L * L / 6.0 + (w + d) * (w + d) / 2.0);
    const double beta = Q * D / J;
    const double alpha = 6000.0 / (std::sqrt(2.0) * w * L);
    const double tau =
        std::sqrt(alpha * alpha + alpha * beta * L / D + beta * beta);
    const double P = 0.61423e6 * (d * h * h * h / 6.0) *
                     (1.0 - d * std::sqrt(30.0 / 48.0) / 28.0);

    WeldedBeamEvaluation out;
    out.objectives = {f1, delta};
    out.constraints = {
        w - h,
        delta - 0.25,
        tau - 13600.0,
        sigma - 30000.0,
        0.10471 * w * w + 0.04811 * h * d * (14.0 + L) - 5.0,
        0.125 - w,
        6000.0 - P,
    };
    return out;
}

double penalized_scalar(const Problem& problem, const RealVector& x,
                        const WeightVector& w, double penalty) {
    if (penalty < 0.0)
        throw std::invalid_argument("penalized_scalar: penalty must be >= 0");
    double s = scalarize(problem.objectives(x), w);
    for (const auto& g : problem.constraints) {
        const double v = std::max(0.0, g(x));
        s += penalty * v * v;
    }
    return s;
}

Problem make_problem(const std::string& name, std::optional<int> dimension) {
    auto zdt_dim = [&]() {
        const int d = dimension.value_or(30);
        if (d < 2)
            throw std::invalid_argument(name + ": dimension must be >= 2");
        return d;
    };

    if (name == "zdt1" || name == "zdt2" || name == "zdt3") {
        const int d = zdt_dim();
        Problem p{name, d, 2, unit_box(d), nullptr, {}, std::nullopt};
        if (name == "zdt1") {
            p.objectives = zdt1;
            p.true_front =
                TrueFront::closed_form([](double f1) { return 1.0 - std::sqrt(f1); });
        } else if (name == "zdt2") {
            p.objectives = zdt2;
            p.true_front =
                TrueFront::closed_form([](double f1) { return 1.0 - f1 * f1; });
        } else {
            p.objectives = zdt3;
            p.true_front = build_zdt3_front(100000);
        }
        return p;
    }
    if (name == "lz4") {
        const int d = dimension.value_or(30);
        if (d < 3)
            throw std::invalid_argument("lz4: dimension must be >= 3");
        RealVector lo(d, -2.0), hi(d, 2.0);
        lo[0] = 0.0;
        hi[0] = 1.0;
        Problem p{name, d, 2, BoundsBox(std::move(lo), std::move(hi)),
                  lz4,  {}, TrueFront::closed_form([](double f1) {
                      return 1.0 - f1 * f1;
                  })};
        return p;
    }
    if (name == "welded-beam") {
        if (dimension.has_value() && *dimension != 4)
            throw std::invalid_argument("welded-beam: dimension is fixed at 4");
        // x = (w, L, d, h); 0.125 <= w,h <= 2 and 0.1 <= L,d <= 10.
        BoundsBox box({0.125, 0.1, 0.1, 0.125}, {2.0, 10.0, 10.0, 2.0});
        Problem p{"welded-beam", 4, 2, std::move(box),
                  [](const RealVector& x) { return welded_beam(x).objectives; },
                  {},
                  std::nullopt};
        for (int j = 0; j < 7; ++j)
            p.constraints.push_back([j](const RealVector& x) {
                return welded_beam(x).constraints[j];
            });
        return p;
    }
    throw std::invalid_argument("unknown problem: " + name);
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names = {"zdt1", "zdt2", "zdt3",
                                                   "lz4", "welded-beam"};
    return names;
}

}  // namespace moba
