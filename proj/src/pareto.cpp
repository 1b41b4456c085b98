#include "moba/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moba {

namespace {

void check_same_size(const ObjectiveVector& u, const ObjectiveVector& v,
                     const char* who) {
    if (u.empty() || u.size() != v.size())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
    check_same_size(u, v, "dominates");
    bool strictly_better = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
        if (u[i] < v[i]) strictly_better = true;
    }
    return strictly_better;
}

bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
    check_same_size(u, v, "weakly_dominates");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

WeightVector::WeightVector(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty())
        throw std::invalid_argument("WeightVector: empty");
    double sum = 0.0;
    for (double w : w_) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("WeightVector: weights must be >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("WeightVector: weights must sum to 1");
}

WeightVector WeightVector::normalized(const std::vector<double>& raw) {
    double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
    if (!(sum > 0.0))
        throw std::invalid_argument("WeightVector: raw draws must have positive sum");
    std::vector<double> w(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) w[i] = raw[i] / sum;
    return WeightVector(std::move(w));
}

WeightVector sample_weights(std::size_t k, RngStream& rng) {
    if (k < 1)
        throw std::invalid_argument("sample_weights: need k >= 1");
    std::vector<double> raw(k);
    for (auto& r : raw) {
        do {
            r = rng.uniform01();
        } while (r == 0.0);  // open interval (0,1)
    }
    return WeightVector::normalized(raw);
}

double scalarize(const ObjectiveVector& f, const WeightVector& w) {
    if (f.size() != w.size())
        throw std::invalid_argument("scalarize: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += w.values()[i] * f[i];
    return s;
}

bool ParetoArchive::insert(RealVector decision, ObjectiveVector objectives) {
    if (objectives.empty() || !all_finite(objectives))
        throw std::invalid_argument("ParetoArchive: objectives must be finite");
    if (!entries_.empty() && entries_.front().objectives.size() != objectives.size())
        throw std::invalid_argument("ParetoArchive: objective dimension mismatch");
    for (const auto& e : entries_)
        if (weakly_dominates(e.objectives, objectives)) return false;
    std::erase_if(entries_, [&](const ArchiveEntry& e) {
        return dominates(objectives, e.objectives);
    });
    entries_.push_back({std::move(decision), std::move(objectives)});
    return true;
}

bool archive_insert(ParetoArchive& archive, RealVector decision,
                    ObjectiveVector objectives) {
    return archive.insert(std::move(decision), std::move(objectives));
}

ParetoArchive merge_archives(const std::vector<ParetoArchive>& archives) {
    ParetoArchive merged;
    for (const auto& a : archives)
        for (const auto& e : a.entries())
            merged.insert(e.decision, e.objectives);
    return merged;
}

}  // namespace moba
