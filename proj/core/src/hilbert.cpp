#include "threebox/hilbert.hpp"

#include <string>

#include "threebox/error.hpp"

namespace threebox::hilbert {

namespace {

void check_dimension(std::size_t dim) {
    if (dim == 0 || dim > kMaxDimension) {
        throw DimensionError("dimension " + std::to_string(dim) + " outside [1, " +
                             std::to_string(kMaxDimension) + "]");
    }
}

void check_same_dimension(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes, Rational norm_squared_scale)
    : amplitudes_(std::move(amplitudes)), scale_(std::move(norm_squared_scale)) {
    check_dimension(amplitudes_.size());
    if (scale_ <= 0) {
        throw NormalizationError("state scale must be positive");
    }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    check_dimension(dim);
    if (index >= dim) {
        throw DimensionError("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = Complex(1);
    return StateVector(std::move(amps));
}

Rational StateVector::norm_squared() const {
    Rational sum(0);
    for (const auto& a : amplitudes_) {
        sum += a.norm_squared();
    }
    return sum * scale_;
}

Rational overlap_squared(const StateVector& a, const StateVector& b) {
    check_same_dimension(a.dim(), b.dim());
    Complex inner;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        inner = inner + a.amplitudes()[i].conj() * b.amplitudes()[i];
    }
    return inner.norm_squared() * a.norm_squared_scale() * b.norm_squared_scale();
}

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) { check_dimension(dim); }

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    check_dimension(dim);
    if (entries_.size() != dim * dim) {
        throw DimensionError("matrix needs " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(entries_.size()));
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = Complex(1);
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = (*this)(r, c).conj();
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex t;
    for (std::size_t i = 0; i < dim_; ++i) {
        t = t + (*this)(i, i);
    }
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_dimension(a.dim_, b.dim_);
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_dimension(a.dim_, b.dim_);
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] - b.entries_[i];
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_dimension(a.dim_, b.dim_);
    const auto n = a.dim_;
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc;
            for (std::size_t k = 0; k < n; ++k) {
                acc = acc + a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = s * a.entries_[i];
    }
    return out;
}

Projector::Projector(Matrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_hermitian()) {
        throw ContractViolation("projector is not Hermitian");
    }
    if (matrix_ * matrix_ != matrix_) {
        throw ContractViolation("projector is not idempotent");
    }
}

Projector Projector::onto(const StateVector& v) {
    if (!v.is_normalized()) {
        throw NormalizationError("cannot project onto a non-normalized state (norm^2 = " +
                                 to_display_string(v.norm_squared()) + ")");
    }
    const auto n = v.dim();
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = v.norm_squared_scale() * (v.amplitudes()[r] * v.amplitudes()[c].conj());
        }
    }
    return Projector(std::move(m));
}

Projector Projector::complement() const {
    return Projector(Matrix::identity(dim()) - matrix_);
}

Pvm::Pvm(std::vector<Projector> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw ContractViolation("PVM needs at least one element");
    }
    const auto n = elements_.front().dim();
    Matrix sum(n);
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        check_same_dimension(n, elements_[a].dim());
        sum = sum + elements_[a].matrix();
        for (std::size_t b = a + 1; b < elements_.size(); ++b) {
            if (elements_[a].matrix() * elements_[b].matrix() != Matrix::zero(n)) {
                throw ContractViolation("PVM elements " + std::to_string(a) + " and " +
                                        std::to_string(b) + " are not orthogonal");
            }
        }
    }
    if (sum != Matrix::identity(n)) {
        throw ContractViolation("PVM elements do not sum to the identity");
    }
}

Pvm Pvm::binary(const Projector& p) { return Pvm({p.complement(), p}); }

DensityOperator::DensityOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    if (!matrix_.is_hermitian()) {
        throw ContractViolation("density operator is not Hermitian");
    }
    if (matrix_.trace() != Complex(1)) {
        throw NormalizationError("density operator trace is not 1");
    }
}

DensityOperator outer_product(const StateVector& v) {
    return DensityOperator(Projector::onto(v).matrix());
}

Projection apply_projector(const Projector& p, const DensityOperator& rho) {
    check_same_dimension(p.dim(), rho.dim());
    Matrix state = p.matrix() * rho.matrix() * p.matrix();
    auto weight = trace_product(Projector::identity(p.dim()), state);
    return {std::move(state), std::move(weight)};
}

Rational trace_product(const Projector& p, const Matrix& a) {
    check_same_dimension(p.dim(), a.dim());
    const auto t = (p.matrix() * a).trace();
    if (!t.is_real()) {
        throw ContractViolation("trace has imaginary part " + to_display_string(t.im));
    }
    return t.re;
}

Rational trace_product(const Projector& p, const DensityOperator& rho) {
    return trace_product(p, rho.matrix());
}

}  // namespace threebox::hilbert
