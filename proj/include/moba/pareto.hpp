#pragma once

#include <cstddef>
#include <vector>

#include "moba/core.hpp"

namespace moba {

/// Point in objective space (minimization everywhere).
using ObjectiveVector = std::vector<double>;

/// Strict Pareto dominance: u is nowhere worse and somewhere strictly better.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/// u weakly dominates v iff u dominates v or u equals v componentwise.
bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/// Nonnegative weights summing to one.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    /// Normalizes raw positive draws by their sum.
    static WeightVector normalized(const std::vector<double>& raw);

    const std::vector<double>& values() const { return w_; }
    std::size_t size() const { return w_.size(); }

private:
    std::vector<double> w_;
};

/// K independent uniforms in (0,1), normalized by their sum.
WeightVector sample_weights(std::size_t k, RngStream& rng);

/// Weighted sum of objectives.
double scalarize(const ObjectiveVector& f, const WeightVector& w);

struct ArchiveEntry {
    RealVector decision;
    ObjectiveVector objectives;
};

/// Mutually non-dominated set of (decision, objectives) pairs. Duplicate
/// objective vectors collapse onto the first entry inserted.
class ParetoArchive {
public:
    ParetoArchive() = default;

    /// Returns true when the candidate was inserted (possibly evicting
    /// entries it dominates); false when an existing entry weakly
    /// dominates it.
    bool insert(RealVector decision, ObjectiveVector objectives);

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<ArchiveEntry> entries_;
};

/// Free-function form of ParetoArchive::insert.
bool archive_insert(ParetoArchive& archive, RealVector decision,
                    ObjectiveVector objectives);

/// Non-dominated subset of the union; the result is independent of the
/// merge order at the set level.
ParetoArchive merge_archives(const std::vector<ParetoArchive>& archives);

}  // namespace moba
