#include "moba/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace moba {

bool all_finite(const RealVector& x) {
    return std::all_of(x.begin(), x.end(),
                       [](double c) { return std::isfinite(c); });
}

BoundsBox::BoundsBox(RealVector lower, RealVector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size())
        throw std::invalid_argument("BoundsBox: lower/upper dimension mismatch");
    if (!all_finite(lower_) || !all_finite(upper_))
        throw std::invalid_argument("BoundsBox: non-finite bound");
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (!(lower_[i] < upper_[i]))
            throw std::invalid_argument("BoundsBox: lower[" + std::to_string(i) +
                                        "] must be strictly below upper");
}

bool BoundsBox::contains(const RealVector& x) const {
    if (x.size() != lower_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
}

void BatParams::validate() const {
    if (population_size < 1)
        throw std::invalid_argument("BatParams: population_size must be >= 1");
    if (!(f_max >= f_min) || !std::isfinite(f_min) || !std::isfinite(f_max))
        throw std::invalid_argument("BatParams: need f_min <= f_max, both finite");
    if (f_min < 0.0)
        throw std::invalid_argument("BatParams: f_min must be >= 0");
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("BatParams: alpha must be in (0,1]");
    if (!(gamma > 0.0))
        throw std::invalid_argument("BatParams: gamma must be > 0");
    if (max_iterations < 0)
        throw std::invalid_argument("BatParams: max_iterations must be >= 0");
    if (!(loudness_init_range.lo > 0.0) ||
        !(loudness_init_range.hi >= loudness_init_range.lo))
        throw std::invalid_argument("BatParams: loudness init range must be positive");
    if (rate_init_range.lo < 0.0 || rate_init_range.hi > 1.0 ||
        !(rate_init_range.hi >= rate_init_range.lo))
        throw std::invalid_argument("BatParams: rate init range must lie in [0,1]");
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
}

RealVector clamp_to_bounds(const RealVector& x, const BoundsBox& b) {
    if (x.size() != b.dimension())
        throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    RealVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = std::min(b.upper()[i], std::max(b.lower()[i], x[i]));
    return y;
}

RealVector uniform_in_box(const BoundsBox& b, RngStream& rng) {
    RealVector x(b.dimension());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.uniform(b.lower()[i], b.upper()[i]);
    return x;
}

}  // namespace moba
