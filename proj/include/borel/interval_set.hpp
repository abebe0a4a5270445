#ifndef BOREL_INTERVAL_SET_HPP
#define BOREL_INTERVAL_SET_HPP

// Finite ordered union of disjoint closed intervals on the line, with its
// linear measure. This is the machine-precision side of the artifact: the
// sets it stores come from grid scans, not certified arithmetic.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace borel {

struct ClosedInterval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

class IntervalSet {
public:
    IntervalSet() = default;

    static IntervalSet from_intervals(std::vector<ClosedInterval> raw) {
        for (const auto& iv : raw) {
            if (!(iv.lo <= iv.hi)) {
                throw std::invalid_argument("IntervalSet: interval with lo > hi");
            }
        }
        std::sort(raw.begin(), raw.end(),
                  [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
        IntervalSet out;
        for (const auto& iv : raw) {
            if (!out.ivs_.empty() && iv.lo <= out.ivs_.back().hi) {
                out.ivs_.back().hi = std::max(out.ivs_.back().hi, iv.hi);
            } else {
                out.ivs_.push_back(iv);
            }
        }
        return out;
    }

    const std::vector<ClosedInterval>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }

    double total_length() const {
        double sum = 0.0;
        for (const auto& iv : ivs_) sum += iv.length();
        return sum;
    }

    bool contains(double x) const {
        auto it = std::upper_bound(
            ivs_.begin(), ivs_.end(), x,
            [](double v, const ClosedInterval& iv) { return v < iv.lo; });
        if (it == ivs_.begin()) return false;
        --it;
        return x <= it->hi;
    }

    // Distance from x to the set (0 when inside).
    double distance(double x) const {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& iv : ivs_) {
            if (x < iv.lo) {
                best = std::min(best, iv.lo - x);
            } else if (x > iv.hi) {
                best = std::min(best, x - iv.hi);
            } else {
                return 0.0;
            }
        }
        return best;
    }

    // Total length of this set not covered by `cover`.
    double uncovered_length(const IntervalSet& cover) const {
        double missing = 0.0;
        for (const auto& iv : ivs_) {
            double pos = iv.lo;
            for (const auto& c : cover.ivs_) {
                if (c.hi < pos) continue;
                if (c.lo > iv.hi) break;
                if (c.lo > pos) missing += c.lo - pos;
                pos = std::max(pos, std::min(c.hi, iv.hi));
                if (pos >= iv.hi) break;
            }
            if (pos < iv.hi) missing += iv.hi - pos;
        }
        return missing;
    }

private:
    std::vector<ClosedInterval> ivs_;
};

inline double measure(const IntervalSet& s) { return s.total_length(); }

}  // namespace borel

#endif  // BOREL_INTERVAL_SET_HPP
