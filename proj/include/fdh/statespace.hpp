#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fdh {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Stable, strictly proper continuous-time SISO system
///
///   dx/dt = A x + B w,   v = C x
///
/// with A Hurwitz (checked at construction). There is deliberately no
/// feedthrough term: the type cannot represent improper or biproper systems.
class ContinuousStateSpace {
public:
    /// Validating constructor. Throws std::invalid_argument on dimension
    /// mismatch, non-finite entries, or a non-Hurwitz A (tolerance:
    /// eigenvalues must satisfy Re(lambda) < -1e-10).
    ContinuousStateSpace(Matrix A, Matrix B, Matrix C);

    /// Skips the Hurwitz check (dimension checks still apply). Intended for
    /// tests that need marginal systems, e.g. an exactly-zero A.
    static ContinuousStateSpace unchecked(Matrix A, Matrix B, Matrix C);

    /// First-order low-pass  cutoff/(s + cutoff)  realized as
    /// A = [-cutoff], B = [cutoff], C = [1].
    static ContinuousStateSpace first_order_lowpass(double cutoff);

    const Matrix& A() const { return A_; }
    const Matrix& B() const { return B_; }
    const Matrix& C() const { return C_; }
    Eigen::Index order() const { return A_.rows(); }

    /// Evaluates C (sI - A)^{-1} B by a dense linear solve.
    Complex transfer_at(Complex s) const;

private:
    ContinuousStateSpace(Matrix A, Matrix B, Matrix C, bool check_hurwitz);

    Matrix A_;
    Matrix B_;
    Matrix C_;
};

/// Discrete-time LTI system x[n+1] = Ad x[n] + Bd u[n], y[n] = Cd x[n] + Dd u[n].
/// Zero-state systems (pure gains) are represented with 0x0 Ad.
struct DiscreteStateSpace {
    DiscreteStateSpace(Matrix Ad, Matrix Bd, Matrix Cd, Matrix Dd,
                       double sample_period);

    Matrix Ad;
    Matrix Bd;
    Matrix Cd;
    Matrix Dd;
    double sample_period;

    Eigen::Index state_dim() const { return Ad.rows(); }
    Eigen::Index input_dim() const { return Bd.cols(); }
    Eigen::Index output_dim() const { return Cd.rows(); }

    /// All eigenvalues strictly inside the unit circle (|lambda| < 1 - tol).
    /// Checked on demand;  evaluation on the unit circle is well defined only
    /// for Schur Ad, but non-Schur containers are still constructible.
    bool is_schur(double tol = 1e-9) const;
};

/// Finite-horizon controllability gramian M = int_0^t e^{A s} B B^T e^{A^T s} ds.
struct GramianResult {
    Matrix M;
    double horizon;
};

/// e^{A t} by scaling-and-squaring with a Pade-type approximant.
/// Throws std::invalid_argument for non-finite input.
Matrix matrix_exponential(const Matrix& A, double t);

/// Gramian over [0, t] via one exponential of the doubled block matrix
/// [[-A, B B^T], [0, A^T]] t; exact, no quadrature. Symmetry is enforced by
/// averaging the result with its transpose. Requires t >= 0.
GramianResult van_loan_gramian(const ContinuousStateSpace& sys, double t);

/// Impulse-invariant discretization {Ad = e^{AT}, Bd = T B, Cd = C, Dd = 0}.
/// The leading factor T makes the discrete magnitude response match the
/// continuous one at low frequency; pass scale_by_period = false to drop it.
DiscreteStateSpace impulse_invariant_discretize(const ContinuousStateSpace& sys,
                                                double T,
                                                bool scale_by_period = true);

/// Cd (zI - Ad)^{-1} Bd + Dd by linear solve (never expands polynomials).
/// Throws EvaluationAtPoleError when zI - Ad is singular.
ComplexMatrix transfer_at(const DiscreteStateSpace& sys, Complex z);

}  // namespace fdh
