#include "hgenergy/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>

#include "hgenergy/error.hpp"

namespace hgenergy {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(ErrorCode::InvalidParams, "matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j < i && rows[i][j] != rows[j][i]) {
                throw Error(ErrorCode::InvalidParams, fmt::format("entry ({}, {}) breaks symmetry", i, j));
            }
            m.data_[i * m.order_ + j] = rows[i][j];
        }
    }
    return m;
}

SymMatrix SymMatrix::identity(std::size_t order)
{
    SymMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1.0);
    return m;
}

double SymMatrix::trace() const
{
    double t = 0.0;
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

SymMatrix SymMatrix::shifted(double shift) const
{
    SymMatrix m = *this;
    for (std::size_t i = 0; i < order_; ++i) m.data_[i * order_ + i] -= shift;
    return m;
}

SymMatrix SymMatrix::scaled(double factor) const
{
    SymMatrix m = *this;
    for (double& v : m.data_) v *= factor;
    return m;
}

RectMatrix RectMatrix::transposed() const
{
    RectMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

SymMatrix RectMatrix::gram_rows() const
{
    SymMatrix g(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < rows_; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < cols_; ++c) s += (*this)(i, c) * (*this)(j, c);
            g.set(i, j, s);
        }
    }
    return g;
}

SymMatrix RectMatrix::gram_cols() const { return transposed().gram_rows(); }

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n)
{
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
}

void jacobi_sweep(std::vector<double>& a, std::size_t n)
{
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const double apq = a[p * n + q];
            if (apq == 0.0) continue;
            const double app = a[p * n + p];
            const double aqq = a[q * n + q];
            const double theta = (aqq - app) / (2.0 * apq);
            double t;
            if (std::abs(theta) > 1e150) {
                t = 0.5 / theta;
            } else {
                t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            }
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            double* row_p = &a[p * n];
            double* row_q = &a[q * n];
            for (std::size_t k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                const double akp = row_p[k];
                const double akq = row_q[k];
                const double new_p = c * akp - s * akq;
                const double new_q = s * akp + c * akq;
                row_p[k] = new_p;
                row_q[k] = new_q;
                a[k * n + p] = new_p;
                a[k * n + q] = new_q;
            }
            row_p[p] = app - t * apq;
            row_q[q] = aqq + t * apq;
            row_p[q] = 0.0;
            row_q[p] = 0.0;
        }
    }
}

Spectrum finish(std::vector<double> values, double tol_used)
{
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.tol_used = tol_used;
    s.numeric_rank = static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v) > tol_used; }));
    s.values = std::move(values);
    return s;
}

} // namespace

Spectrum sym_eigenvalues(const SymMatrix& m, const Tolerances& tol)
{
    const std::size_t n = m.order();
    if (n == 0) throw Error(ErrorCode::InvalidParams, "eigenvalues of an empty matrix");

    std::vector<double> a(m.data().begin(), m.data().end());
    const double norm = m.frobenius_norm();
    const double threshold = norm == 0.0 ? tol.jacobi_abs : tol.jacobi_rel * norm;

    int sweeps = 0;
    while (off_diagonal_norm(a, n) > threshold) {
        if (sweeps == tol.max_sweeps) {
            throw Error(ErrorCode::NoConvergence,
                        fmt::format("Jacobi did not converge in {} sweeps (order {})", tol.max_sweeps, n));
        }
        jacobi_sweep(a, n);
        ++sweeps;
    }

    std::vector<double> values(n);
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = a[i * n + i];
        largest = std::max(largest, std::abs(values[i]));
    }
    return finish(std::move(values), tol.rank_rel * std::max(1.0, largest));
}

double psd_clamp_threshold(std::span<const double> values, const Tolerances& tol)
{
    double largest = 0.0;
    for (double v : values) largest = std::max(largest, v);
    return tol.psd_clamp_rel * std::max(1.0, largest);
}

std::vector<double> clamp_psd(std::vector<double> values, const Tolerances& tol)
{
    const double clamp = psd_clamp_threshold(values, tol);
    for (double& v : values) {
        if (v <= -clamp) {
            throw Error(ErrorCode::NegativeGramEigenvalue,
                        fmt::format("Gram eigenvalue {:.17g} below -{:.3g}", v, clamp));
        }
        if (v < clamp) v = 0.0;
    }
    return values;
}

Spectrum singular_values(const RectMatrix& b, const Tolerances& tol)
{
    if (b.rows() == 0 || b.cols() == 0) return Spectrum{};
    const SymMatrix gram = b.rows() <= b.cols() ? b.gram_rows() : b.gram_cols();
    auto eig = sym_eigenvalues(gram, tol).values;
    const double clamp = psd_clamp_threshold(eig, tol);
    eig = clamp_psd(std::move(eig), tol);
    for (double& v : eig) v = std::sqrt(v);
    // Gram order is already min(rows, cols); the clamp zeroes are the padding.
    return finish(std::move(eig), std::sqrt(clamp));
}

double matrix_energy(const Spectrum& s)
{
    double e = 0.0;
    for (double v : s.values) e += std::abs(v);
    return e;
}

double matrix_energy(const SymMatrix& m, const Tolerances& tol) { return matrix_energy(sym_eigenvalues(m, tol)); }

double spectral_radius(const SymMatrix& m, const Tolerances& tol)
{
    const auto s = sym_eigenvalues(m, tol);
    return std::max(std::abs(s.values.front()), std::abs(s.values.back()));
}

} // namespace hgenergy
