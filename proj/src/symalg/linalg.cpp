#include "htk/linalg.hpp"

#include <utility>

namespace htk {

void Matrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw SymalgError("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t p = lead;
        while (p < rows_ && (*this)(p, c) == 0) ++p;
        if (p == rows_) continue;
        if (p != lead)
            for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(lead, k));
        Rational inv = 1 / (*this)(lead, c);
        for (std::size_t k = c; k < cols_; ++k) (*this)(lead, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || (*this)(r, c) == 0) continue;
            Rational f = (*this)(r, c);
            for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) -= f * (*this)(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    data_.resize(lead * cols_);
    rows_ = lead;
    return pivots;
}

std::size_t rank(Matrix m) { return m.rref().size(); }

std::vector<std::vector<Rational>> nullspace(Matrix m) {
    const std::size_t n = m.cols();
    auto pivots = m.rref();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_unique(const Matrix& m, const std::vector<Rational>& rhs) {
    if (rhs.size() != m.rows()) throw SymalgError("solve_unique: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    if (pivots.size() != m.cols()) throw SymalgError("solve_unique: solution is not unique");
    std::vector<Rational> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw SymalgError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

}  // namespace htk
