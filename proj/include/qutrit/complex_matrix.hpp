#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "qutrit/errors.hpp"

namespace qutrit {

using Complex = std::complex<double>;

// Largest matrix dimension the toolkit handles (a 2x4 bipartite split).
inline constexpr int kMaxDim = 8;

/// Dense square complex matrix, row-major, dimensions 1..8.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int dim) : dim_(checked_dim(dim)), e_(static_cast<size_t>(dim) * dim) {}

    ComplexMatrix(int dim, std::initializer_list<Complex> entries)
        : dim_(checked_dim(dim)), e_(entries) {
        if (e_.size() != static_cast<size_t>(dim_) * dim_)
            throw DimensionMismatch("entry count does not match dimension");
    }

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    static ComplexMatrix diagonal(std::initializer_list<double> d) {
        return diagonal(std::span<const double>(d.begin(), d.size()));
    }

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

    std::span<Complex> entries() { return e_; }
    std::span<const Complex> entries() const { return e_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex c);

    double max_abs() const;
    bool all_finite() const;

private:
    static int checked_dim(int dim) {
        if (dim < 1 || dim > kMaxDim)
            throw DimensionMismatch("matrix dimension must be in [1, 8], got " + std::to_string(dim));
        return dim;
    }

    int dim_ = 0;
    std::vector<Complex> e_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex c, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex c);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |m(i,j) - conj(m(j,i))| over all entries.
double hermiticity_deviation(const ComplexMatrix& m);

/// max entrywise |a - b|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_y();

}  // namespace qutrit
