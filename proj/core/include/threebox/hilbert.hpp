#pragma once

// Exact complex linear algebra on small Hilbert spaces.
//
// Amplitudes are Gaussian rationals. A state carries its squared
// normalization factor separately (1/3 for (|1>+|2>+|3>)/sqrt(3)), so no
// square root is ever taken: every quantity computed here is quadratic in
// amplitudes and therefore stays rational.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "threebox/rational.hpp"

namespace threebox::hilbert {

inline constexpr std::size_t kMaxDimension = 8;

struct Complex {
    Rational re;
    Rational im;

    Complex() = default;
    Complex(Rational real, Rational imag = Rational(0)) : re(std::move(real)), im(std::move(imag)) {}
    Complex(long real) : re(real), im(0) {}

    Complex conj() const { return {re, -im}; }
    Rational norm_squared() const { return re * re + im * im; }
    bool is_real() const { return im == 0; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Rational& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

/// A ket with amplitudes `amplitudes` and overall weight
/// `norm_squared_scale`, i.e. the physical vector is
/// sqrt(norm_squared_scale) * amplitudes.
class StateVector {
public:
    StateVector(std::vector<Complex> amplitudes, Rational norm_squared_scale = Rational(1));

    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Rational& norm_squared_scale() const { return scale_; }

    Rational norm_squared() const;
    bool is_normalized() const { return norm_squared() == 1; }

private:
    std::vector<Complex> amplitudes_;
    Rational scale_;
};

/// |<a|b>|^2 including both normalization scales.
Rational overlap_squared(const StateVector& a, const StateVector& b);

/// Dense square matrix, row-major.
class Matrix {
public:
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<Complex> entries);

    static Matrix identity(std::size_t dim);
    static Matrix zero(std::size_t dim) { return Matrix(dim); }

    std::size_t dim() const { return dim_; }
    const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    Matrix adjoint() const;
    Complex trace() const;
    bool is_hermitian() const { return *this == adjoint(); }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Orthogonal projector. Construction checks P = P^dagger and P*P = P.
class Projector {
public:
    explicit Projector(Matrix matrix);

    /// |v><v| for a normalized v.
    static Projector onto(const StateVector& v);
    static Projector identity(std::size_t dim) { return Projector(Matrix::identity(dim)); }
    static Projector zero(std::size_t dim) { return Projector(Matrix::zero(dim)); }

    Projector complement() const;

    std::size_t dim() const { return matrix_.dim(); }
    const Matrix& matrix() const { return matrix_; }

    friend bool operator==(const Projector&, const Projector&) = default;

private:
    Matrix matrix_;
};

/// Projection-valued measure: pairwise orthogonal projectors summing to 1.
class Pvm {
public:
    explicit Pvm(std::vector<Projector> elements);

    /// {1 - P, P}: outcome 0 is "not P", outcome 1 is "P".
    static Pvm binary(const Projector& p);

    std::size_t dim() const { return elements_.front().dim(); }
    std::size_t size() const { return elements_.size(); }
    const Projector& operator[](std::size_t outcome) const { return elements_.at(outcome); }
    const std::vector<Projector>& elements() const { return elements_; }

private:
    std::vector<Projector> elements_;
};

/// Hermitian, unit-trace operator.
class DensityOperator {
public:
    explicit DensityOperator(Matrix matrix);

    std::size_t dim() const { return matrix_.dim(); }
    const Matrix& matrix() const { return matrix_; }

private:
    Matrix matrix_;
};

/// rho = |v><v|. Throws NormalizationError if v is not normalized.
DensityOperator outer_product(const StateVector& v);

struct Projection {
    Matrix state;    // P rho P, not renormalized
    Rational weight; // Tr[P rho P]
};

/// Lueders update for one projective outcome.
Projection apply_projector(const Projector& p, const DensityOperator& rho);

/// Tr[P A]. Throws ContractViolation if the trace is not real.
Rational trace_product(const Projector& p, const Matrix& a);
Rational trace_product(const Projector& p, const DensityOperator& rho);

}  // namespace threebox::hilbert
