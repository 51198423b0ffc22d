#include "twistorfill/linalg_exact.hpp"

namespace twf::lin {

MatQ MatQ::transpose() const {
    MatQ t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
    MatQ out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int m = 0; m < a.cols(); ++m) {
            const CQ& av = a(i, m);
            if (av.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const CQ& bv = b(m, j);
                if (!bv.is_zero()) out(i, j) += av * bv;
            }
        }
    return out;
}

bool MatQ::is_zero() const {
    for (const auto& v : d_)
        if (!v.is_zero()) return false;
    return true;
}

namespace {
// row echelon in place; returns pivot columns
std::vector<int> echelon(MatQ& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        CQ inv = CQ(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            CQ f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
}  // namespace

int rank(MatQ m) { return static_cast<int>(echelon(m).size()); }

std::vector<std::vector<CQ>> kernel_basis(MatQ m) {
    int n = m.cols();
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CQ>> basis;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<CQ> v(n);
        v[freec] = CQ(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(int(r), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(MatQ m, std::vector<CQ> b, std::vector<CQ>& x) {
    int rows = m.rows(), cols = m.cols();
    MatQ aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = b[std::size_t(i)];
    }
    auto pivots = echelon(aug);
    x.assign(std::size_t(cols), CQ{});
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return false;  // pivot in the rhs column: inconsistent
        x[std::size_t(pivots[r])] = aug(int(r), cols);
    }
    return true;
}

}  // namespace twf::lin
