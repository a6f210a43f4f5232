#pragma once

#include <cstddef>
#include <span>

namespace gatedfield {

// Compensated (Kahan) accumulator. The result depends only on the order of the
// add() calls, which callers keep fixed (lexicographic mode order, left-to-right
// panel order), so repeated runs are bitwise identical.
class KahanSum {
public:
    void add(double v) {
        const double y = v - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Deterministic pairwise-tree sum. The reduction tree is a function of the
// element count alone, so any parallel schedule that respects the tree
// reproduces the serial result bitwise.
double pairwise_sum(std::span<const double> xs);

} // namespace gatedfield
