#ifndef HGENERGY_SPECTRA_HPP
#define HGENERGY_SPECTRA_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hgenergy/config.hpp"

namespace hgenergy {

/// Dense real symmetric matrix, row-major. Writers always touch both
/// triangles, so the storage is exactly symmetric.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    /// Throws InvalidParams unless `rows` is square and exactly symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix identity(std::size_t order);

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    std::span<const double> data() const noexcept { return data_; }

    void set(std::size_t i, std::size_t j, double value)
    {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }
    void add(std::size_t i, std::size_t j, double value)
    {
        data_[i * order_ + j] += value;
        if (i != j) data_[j * order_ + i] += value;
    }

    double trace() const;
    double frobenius_norm() const;
    /// M - shift * I
    SymMatrix shifted(double shift) const;
    SymMatrix scaled(double factor) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<double> data_;
};

/// Dense real rectangular matrix, row-major.
class RectMatrix {
public:
    RectMatrix() = default;
    RectMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::span<const double> data() const noexcept { return data_; }

    RectMatrix transposed() const;
    /// M * M^T (rows x rows)
    SymMatrix gram_rows() const;
    /// M^T * M (cols x cols)
    SymMatrix gram_cols() const;

    friend bool operator==(const RectMatrix&, const RectMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Eigenvalues (or singular values) in non-increasing order.
struct Spectrum {
    std::vector<double> values;
    // Number of values with |value| > tol_used.
    std::size_t numeric_rank = 0;
    double tol_used = 0.0;
};

/// Cyclic Jacobi with row-major (p < q) sweep order. Throws NoConvergence when
/// the off-diagonal norm is still above threshold after max_sweeps.
Spectrum sym_eigenvalues(const SymMatrix& m, const Tolerances& tol = {});

/// Zeroes values in (-clamp, clamp), clamp = psd_clamp_rel * max(1, max value),
/// and throws NegativeGramEigenvalue for anything below -clamp. Order is kept.
std::vector<double> clamp_psd(std::vector<double> values, const Tolerances& tol = {});
double psd_clamp_threshold(std::span<const double> values, const Tolerances& tol = {});

/// Singular values through the smaller Gram matrix, padded to min(rows, cols).
Spectrum singular_values(const RectMatrix& b, const Tolerances& tol = {});

/// Sum of |lambda_i|.
double matrix_energy(const SymMatrix& m, const Tolerances& tol = {});
double matrix_energy(const Spectrum& s);

double spectral_radius(const SymMatrix& m, const Tolerances& tol = {});

} // namespace hgenergy

#endif // HGENERGY_SPECTRA_HPP
