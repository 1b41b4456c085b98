#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace moba {

/// Decision-space vector. Components are expected to be finite; the
/// boundary types (BoundsBox, archive insertion) enforce this where it
/// matters.
using RealVector = std::vector<double>;

bool all_finite(const RealVector& x);

/// Axis-aligned box constraints, lower[i] < upper[i] in every coordinate.
class BoundsBox {
public:
    BoundsBox(RealVector lower, RealVector upper);

    const RealVector& lower() const { return lower_; }
    const RealVector& upper() const { return upper_; }
    std::size_t dimension() const { return lower_.size(); }

    bool contains(const RealVector& x) const;

private:
    RealVector lower_;
    RealVector upper_;
};

/// One agent of the swarm. `pulse_rate` starts at zero and rises toward
/// `initial_pulse_rate` as the bat accumulates accepted improvements
/// (`accept_count` drives the closed-form schedule).
struct Bat {
    RealVector position;
    RealVector velocity;
    double frequency = 0.0;
    double loudness = 1.0;
    double pulse_rate = 0.0;
    double initial_pulse_rate = 0.0;
    double fitness = 0.0;
    long accept_count = 0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Algorithm parameters with the defaults used throughout the benchmarks:
/// n=50, alpha=gamma=0.9, f in [0,1], 5000 iterations.
struct BatParams {
    int population_size = 50;
    double f_min = 0.0;
    double f_max = 1.0;
    double alpha = 0.9;
    double gamma = 0.9;
    Interval loudness_init_range{1.0, 2.0};
    Interval rate_init_range{0.0, 1.0};
    long max_iterations = 5000;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on any out-of-range setting.
    void validate() const;
};

std::uint64_t splitmix64(std::uint64_t z);

/// Fixed mixing function for deriving independent child streams:
/// mix_seed(s, k) = splitmix64(s ^ splitmix64(k)).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded random stream. All draws go through an explicit 53-bit
/// conversion of mt19937_64 output, so sequences are bit-identical for a
/// given seed on every platform. Single-owner: never share one stream
/// across threads; derive children instead.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform in [0,1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [a,b].
    double uniform(double a, double b) {
        return a + (b - a) * uniform01();
    }

    /// Fresh vector with independent components uniform in [-1,1].
    RealVector uniform_symmetric(std::size_t dimension) {
        RealVector v(dimension);
        for (auto& c : v) c = uniform(-1.0, 1.0);
        return v;
    }

    /// Child stream keyed by (this stream's seed, index). Does not consume
    /// draws from this stream.
    RngStream derive(std::uint64_t index) const {
        return RngStream(mix_seed(seed_, index));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// Componentwise clamp of x onto the faces of b.
RealVector clamp_to_bounds(const RealVector& x, const BoundsBox& b);

/// Independent uniform draw per component over [lower[i], upper[i]].
RealVector uniform_in_box(const BoundsBox& b, RngStream& rng);

}  // namespace moba
