#include "fdh/statespace.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <sstream>

#include "fdh/errors.hpp"

namespace fdh {

namespace {

void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(name) + " contains non-finite entries");
    }
}

}  // namespace

ContinuousStateSpace::ContinuousStateSpace(Matrix A, Matrix B, Matrix C)
    : ContinuousStateSpace(std::move(A), std::move(B), std::move(C), true) {}

ContinuousStateSpace::ContinuousStateSpace(Matrix A, Matrix B, Matrix C,
                                           bool check_hurwitz)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
    const Eigen::Index nu = A_.rows();
    if (nu < 1 || A_.cols() != nu) {
        throw std::invalid_argument("A must be square and non-empty");
    }
    if (B_.rows() != nu || B_.cols() != 1) {
        throw std::invalid_argument("B must be nu x 1");
    }
    if (C_.rows() != 1 || C_.cols() != nu) {
        throw std::invalid_argument("C must be 1 x nu");
    }
    require_finite(A_, "A");
    require_finite(B_, "B");
    require_finite(C_, "C");
    if (check_hurwitz) {
        Eigen::EigenSolver<Matrix> es(A_, /*computeEigenvectors=*/false);
        for (Eigen::Index i = 0; i < nu; ++i) {
            const double re = es.eigenvalues()(i).real();
            if (!(re < -1e-10)) {
                std::ostringstream msg;
                msg << "A is not Hurwitz: eigenvalue with Re = " << re;
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

ContinuousStateSpace ContinuousStateSpace::unchecked(Matrix A, Matrix B, Matrix C) {
    return ContinuousStateSpace(std::move(A), std::move(B), std::move(C), false);
}

ContinuousStateSpace ContinuousStateSpace::first_order_lowpass(double cutoff) {
    if (!(cutoff > 0.0)) {
        throw std::invalid_argument("cutoff must be positive");
    }
    Matrix A(1, 1), B(1, 1), C(1, 1);
    A << -cutoff;
    B << cutoff;
    C << 1.0;
    return ContinuousStateSpace(std::move(A), std::move(B), std::move(C));
}

Complex ContinuousStateSpace::transfer_at(Complex s) const {
    const Eigen::Index nu = order();
    ComplexMatrix lhs = s * ComplexMatrix::Identity(nu, nu) - A_.cast<Complex>();
    Eigen::FullPivLU<ComplexMatrix> lu(lhs);
    if (!lu.isInvertible()) {
        throw EvaluationAtPoleError("sI - A is singular at the requested point");
    }
    ComplexMatrix x = lu.solve(B_.cast<Complex>());
    return (C_.cast<Complex>() * x)(0, 0);
}

DiscreteStateSpace::DiscreteStateSpace(Matrix Ad_, Matrix Bd_, Matrix Cd_,
                                       Matrix Dd_, double sample_period_)
    : Ad(std::move(Ad_)),
      Bd(std::move(Bd_)),
      Cd(std::move(Cd_)),
      Dd(std::move(Dd_)),
      sample_period(sample_period_) {
    const Eigen::Index n = Ad.rows();
    if (Ad.cols() != n) {
        throw std::invalid_argument("Ad must be square");
    }
    if (Bd.rows() != n) {
        throw std::invalid_argument("Bd row count must match state dimension");
    }
    if (Cd.cols() != n) {
        throw std::invalid_argument("Cd column count must match state dimension");
    }
    if (Dd.rows() != Cd.rows() || Dd.cols() != Bd.cols()) {
        throw std::invalid_argument("Dd must be (outputs x inputs)");
    }
    if (!(sample_period > 0.0)) {
        throw std::invalid_argument("sample_period must be positive");
    }
    require_finite(Ad, "Ad");
    require_finite(Bd, "Bd");
    require_finite(Cd, "Cd");
    require_finite(Dd, "Dd");
}

bool DiscreteStateSpace::is_schur(double tol) const {
    if (state_dim() == 0) {
        return true;
    }
    Eigen::EigenSolver<Matrix> es(Ad, /*computeEigenvectors=*/false);
    for (Eigen::Index i = 0; i < state_dim(); ++i) {
        if (std::abs(es.eigenvalues()(i)) >= 1.0 - tol) {
            return false;
        }
    }
    return true;
}

Matrix matrix_exponential(const Matrix& A, double t) {
    if (A.rows() != A.cols()) {
        throw std::invalid_argument("matrix_exponential requires a square matrix");
    }
    require_finite(A, "A");
    if (!std::isfinite(t)) {
        throw std::invalid_argument("time must be finite");
    }
    if (A.rows() == 0) {
        return Matrix(0, 0);
    }
    return (A * t).exp();
}

GramianResult van_loan_gramian(const ContinuousStateSpace& sys, double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("gramian horizon must be non-negative");
    }
    const Eigen::Index nu = sys.order();
    Matrix block(2 * nu, 2 * nu);
    block.setZero();
    block.topLeftCorner(nu, nu) = -sys.A();
    block.topRightCorner(nu, nu) = sys.B() * sys.B().transpose();
    block.bottomRightCorner(nu, nu) = sys.A().transpose();
    const Matrix F = matrix_exponential(block, t);
    const Matrix F12 = F.topRightCorner(nu, nu);
    const Matrix F22 = F.bottomRightCorner(nu, nu);
    Matrix M = F22.transpose() * F12;
    M = 0.5 * (M + M.transpose()).eval();
    return GramianResult{std::move(M), t};
}

DiscreteStateSpace impulse_invariant_discretize(const ContinuousStateSpace& sys,
                                                double T, bool scale_by_period) {
    if (!(T > 0.0)) {
        throw std::invalid_argument("sampling period must be positive");
    }
    Matrix Ad = matrix_exponential(sys.A(), T);
    Matrix Bd = (scale_by_period ? T : 1.0) * sys.B();
    Matrix Dd = Matrix::Zero(1, 1);
    return DiscreteStateSpace(std::move(Ad), std::move(Bd), sys.C(), std::move(Dd), T);
}

ComplexMatrix transfer_at(const DiscreteStateSpace& sys, Complex z) {
    const Eigen::Index n = sys.state_dim();
    if (n == 0) {
        return sys.Dd.cast<Complex>();
    }
    ComplexMatrix lhs = z * ComplexMatrix::Identity(n, n) - sys.Ad.cast<Complex>();
    Eigen::FullPivLU<ComplexMatrix> lu(lhs);
    if (!lu.isInvertible()) {
        throw EvaluationAtPoleError("zI - Ad is singular at the requested point");
    }
    ComplexMatrix x = lu.solve(sys.Bd.cast<Complex>());
    return sys.Cd.cast<Complex>() * x + sys.Dd.cast<Complex>();
}

}  // namespace fdh
