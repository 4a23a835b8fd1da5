#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "simplie/core/rational.hpp"

namespace simplie {

using Vec = std::vector<Rat>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// Dense exact matrix, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    Mat(size_t rows, size_t cols, Vec flat) : rows_(rows), cols_(cols), a_(std::move(flat)) {
        if (a_.size() != rows_ * cols_) throw std::invalid_argument("Mat: flat size mismatch");
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat zero(size_t rows, size_t cols) { return Mat(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Vec& flat() const { return a_; }

    Rat& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const { return vec_is_zero(a_); }

    Mat operator+(const Mat& o) const {
        require_same_shape(o, "Mat::operator+");
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o, "Mat::operator-");
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Rat& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    Mat scaled(const Rat& c) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
        return r;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
        Vec r(rows_, Rat(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Vec row(size_t i) const {
        Vec r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    Vec col(size_t j) const {
        Vec r(rows_);
        for (size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }

    static Mat from_rows(const std::vector<Vec>& rows, size_t cols) {
        Mat m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Mat from_cols(const std::vector<Vec>& cols, size_t rows) {
        Mat m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("Mat::from_cols: ragged cols");
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c) {
            size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            Rat inv = Rat(1) / (*this)(r, c);
            for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                Rat f = (*this)(i, c);
                if (f == 0) continue;
                for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    size_t rank() const {
        Mat m = *this;
        return m.rref().size();
    }

    // Basis of the right kernel {v : A v = 0}, as columns-of-free-variable vectors.
    std::vector<Vec> kernel_basis() const {
        Mat m = *this;
        std::vector<size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (size_t c : pivots) is_pivot[c] = true;
        std::vector<Vec> basis;
        for (size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            Vec v(cols_, Rat(0));
            v[f] = 1;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solve A x = b if consistent; returns false if inconsistent.
    bool solve(const Vec& b, Vec& x) const {
        if (b.size() != rows_) throw std::invalid_argument("Mat::solve: size mismatch");
        Mat aug(rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<size_t> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return false;  // 0 = 1 row
        x.assign(cols_, Rat(0));
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
        return true;
    }

private:
    void require_same_shape(const Mat& o, const char* who) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument(std::string(who) + ": shape mismatch");
    }

    size_t rows_, cols_;
    Vec a_;
};

}  // namespace simplie
