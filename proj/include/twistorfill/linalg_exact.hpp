#pragma once

#include <vector>

#include "twistorfill/rational.hpp"

namespace twf::lin {

// Dense matrix over Q(i).  Everything here is exact; sizes stay small (a few
// hundred at most), so plain Gaussian elimination is fine.
class MatQ {
public:
    MatQ() = default;
    MatQ(int rows, int cols) : r_(rows), c_(cols), d_(std::size_t(rows) * cols) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    CQ& operator()(int i, int j) { return d_[std::size_t(i) * c_ + j]; }
    const CQ& operator()(int i, int j) const { return d_[std::size_t(i) * c_ + j]; }

    MatQ transpose() const;
    friend MatQ operator*(const MatQ& a, const MatQ& b);

    bool is_zero() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<CQ> d_;
};

int rank(MatQ m);

// basis of the right kernel (each vector has cols() entries)
std::vector<std::vector<CQ>> kernel_basis(MatQ m);

// solve m x = b exactly; returns false when inconsistent.  Free variables are
// set to zero (minimum support representative).
bool solve(MatQ m, std::vector<CQ> b, std::vector<CQ>& x);

}  // namespace twf::lin
