#include "qutrit/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qutrit {

double Spectrum::min() const { return values.empty() ? 0.0 : values.back(); }
double Spectrum::max() const { return values.empty() ? 0.0 : values.front(); }
double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

namespace {

double off_diagonal_frobenius(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

double max_off_diagonal(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s = std::max(s, std::abs(m(i, j)));
    return s;
}

// Complex Givens rotation for the 2x2 Hermitian block
// [[app, b], [conj(b), aqq]] with b = |b| e^{i phi}: the unitary
// [[c, -s e^{i phi}], [s e^{-i phi}, c]] annihilates the off-diagonal when
// tan is taken as the smaller root of t^2 + 2 theta t - 1 = 0, with
// theta = (app - aqq) / (2|b|). This form has no cancellation for small
// |b| / gap, so the forced zero below never drifts away from the
// accumulated eigenvectors.
struct BlockRotation {
    double c;          // cosine, real
    Complex s_phase;   // sine times the off-diagonal phase factor
};

BlockRotation block_rotation(Complex app, Complex apq, Complex aqq) {
    const double abs_b = std::abs(apq);
    const double theta = (app.real() - aqq.real()) / (2.0 * abs_b);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const Complex phase = apq / abs_b;
    return {c, t * c * phase};
}

}  // namespace

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& m, double tol) {
    const int n = m.dim();
    const double herm_dev = hermiticity_deviation(m);
    const double herm_bound = kHermitianRelTol * std::max(m.max_abs(), 1e-300);
    if (herm_dev > herm_bound) throw NotHermitian(herm_dev, herm_bound);

    ComplexMatrix a = m;
    // Symmetrize so roundoff asymmetry cannot bias the rotations.
    for (int i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = off_diagonal_frobenius(a) <= tol;
    for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) == 0.0) continue;
                const auto [c, su] = block_rotation(a(p, p), a(p, q), a(q, q));
                // G is identity except G(p,p)=G(q,q)=c, G(q,p)=conj(su),
                // G(p,q)=-su. Apply a <- G† a G, v <- v G.
                for (int k = 0; k < n; ++k) {  // rows: a <- G† a
                    const Complex rp = a(p, k), rq = a(q, k);
                    a(p, k) = c * rp + su * rq;
                    a(q, k) = -std::conj(su) * rp + c * rq;
                }
                for (int k = 0; k < n; ++k) {  // columns: a <- a G
                    const Complex cp = a(k, p), cq = a(k, q);
                    a(k, p) = cp * c + cq * std::conj(su);
                    a(k, q) = -cp * su + cq * c;
                    const Complex vp = v(k, p), vq = v(k, q);
                    v(k, p) = vp * c + vq * std::conj(su);
                    v(k, q) = -vp * su + vq * c;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
            }
        }
        converged = off_diagonal_frobenius(a) <= tol;
    }
    if (!converged)
        throw NoConvergence("Jacobi eigensolver did not converge in " +
                            std::to_string(kJacobiSweepBudget) + " sweeps");

    HermitianEigen out;
    out.residual = max_off_diagonal(a);
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });
    out.values.resize(static_cast<size_t>(n));
    out.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)],
                                               order[static_cast<size_t>(k)]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return out;
}

Spectrum hermitian_spectrum(const ComplexMatrix& m, double tol) {
    auto eig = hermitian_eigendecomposition(m, tol);
    return Spectrum{std::move(eig.values), eig.residual};
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
    const auto eig = hermitian_eigendecomposition(m);
    ComplexMatrix r(m.dim());
    for (size_t k = 0; k < eig.values.size(); ++k) {
        double lam = eig.values[k];
        if (lam < -kPsdClamp) throw NotPSD(lam);
        if (lam < 0.0) lam = 0.0;
        const double s = std::sqrt(lam);
        for (int i = 0; i < m.dim(); ++i) {
            const Complex vi = eig.vectors(i, static_cast<int>(k));
            for (int j = 0; j < m.dim(); ++j)
                r(i, j) += s * vi * std::conj(eig.vectors(j, static_cast<int>(k)));
        }
    }
    // Force exact Hermitian symmetry on the assembled result.
    for (int i = 0; i < m.dim(); ++i) {
        r(i, i) = Complex(r(i, i).real(), 0.0);
        for (int j = i + 1; j < m.dim(); ++j) {
            const Complex v = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
    }
    return r;
}

}  // namespace qutrit
