#pragma once

#include <stdexcept>
#include <vector>

#include "eqindex/rational.hpp"

namespace eqindex {

/// Dense matrix over the Gaussian rationals.
class GMatrix {
public:
    GMatrix() : rows_(0), cols_(0) {}
    GMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("GMatrix: bad shape");
    }

    static GMatrix identity(int n) {
        GMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = GRational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GRational& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const GRational& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    GMatrix operator-() const {
        GMatrix r(rows_, cols_);
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }

    GMatrix& operator+=(const GMatrix& o) {
        check_shape(o);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    GMatrix& operator-=(const GMatrix& o) {
        check_shape(o);
        for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    GMatrix& operator*=(const GRational& s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend GMatrix operator+(GMatrix a, const GMatrix& b) { return a += b; }
    friend GMatrix operator-(GMatrix a, const GMatrix& b) { return a -= b; }
    friend GMatrix operator*(GMatrix a, const GRational& s) { return a *= s; }
    friend GMatrix operator*(const GRational& s, GMatrix a) { return a *= s; }

    friend GMatrix operator*(const GMatrix& a, const GMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("GMatrix: product shape mismatch");
        GMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const GRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const GRational& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const GMatrix& a, const GMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }

    GMatrix conj_transpose() const {
        GMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
        return r;
    }

    GMatrix transpose() const {
        GMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    GRational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("GMatrix: trace of non-square");
        GRational t;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// tr(A B) without forming the product.
    static GRational trace_product(const GMatrix& a, const GMatrix& b) {
        if (a.cols_ != b.rows_ || a.rows_ != b.cols_)
            throw std::invalid_argument("GMatrix: trace_product shape mismatch");
        GRational t;
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const GRational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                t += aik * b.at(k, i);
            }
        return t;
    }

    static GMatrix commutator(const GMatrix& a, const GMatrix& b) { return a * b - b * a; }

    bool is_skew_hermitian() const { return conj_transpose() == -*this; }

private:
    void check_shape(const GMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("GMatrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<GRational> data_;
};

/// Row-reduced echelon basis of a growing span of row vectors; used for
/// rank and membership computations over the Gaussian rationals.
class RowSpan {
public:
    explicit RowSpan(size_t width) : width_(width) {}

    size_t rank() const { return rows_.size(); }
    size_t width() const { return width_; }
    const std::vector<std::vector<GRational>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Reduces v against the span; returns true (and extends the basis)
    /// when v adds a new dimension.
    bool insert(std::vector<GRational> v) {
        if (v.size() != width_) throw std::invalid_argument("RowSpan: width mismatch");
        reduce(v);
        size_t p = first_nonzero(v);
        if (p == width_) return false;
        GRational inv = GRational(1) / v[p];
        for (auto& x : v) x *= inv;
        // Back-eliminate the new pivot from earlier rows to keep RREF.
        for (size_t r = 0; r < rows_.size(); ++r) {
            const GRational& c = rows_[r][p];
            if (c.is_zero()) continue;
            GRational f = c;
            for (size_t j = p; j < width_; ++j) rows_[r][j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + long(pos), std::move(v));
        pivots_.insert(pivots_.begin() + long(pos), p);
        return true;
    }

    bool contains(std::vector<GRational> v) const {
        reduce(v);
        return first_nonzero(v) == width_;
    }

private:
    void reduce(std::vector<GRational>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const GRational& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            GRational f = c;
            for (size_t j = pivots_[r]; j < width_; ++j) v[j] -= f * rows_[r][j];
        }
    }

    size_t first_nonzero(const std::vector<GRational>& v) const {
        for (size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) return j;
        return width_;
    }

    size_t width_;
    std::vector<std::vector<GRational>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace eqindex
