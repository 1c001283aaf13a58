#ifndef SZEGO_GAUSSIAN_HPP
#define SZEGO_GAUSSIAN_HPP

#include <Eigen/Core>

#include <complex>
#include <stdexcept>

namespace szego::gauss {

struct NotPositive : std::runtime_error {
    NotPositive(const std::string& what, double min_eig_) : std::runtime_error(what), min_eig(min_eig_) {}
    double min_eig;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Q(y) = y^T M y with M complex symmetric. The >>0 condition is
// Re(M) positive definite, checked by eigenvalue computation.
struct ComplexQuadraticForm {
    Eigen::MatrixXcd m;

    static ComplexQuadraticForm from_matrix(Eigen::MatrixXcd matrix); // validates symmetry
    int dim() const { return static_cast<int>(m.rows()); }
    double min_re_eigenvalue() const;
    void require_positive() const; // throws NotPositive
};

// integral over R^d of exp(-y^T M y):  det(M/pi)^(-1/2), the branch fixed
// by the principal logs of the eigenvalues of M/pi (unambiguous because
// Re M >> 0 places them in the right half plane).
std::complex<double> gaussian_integral_closed(const ComplexQuadraticForm& q);

// Quadrature oracle after the real change of variables y = Re(M)^(-1/2) u;
// the order doubles until successive values differ by < tol/2.
std::complex<double> gaussian_integral_numeric(const ComplexQuadraticForm& q, double tol);

struct PositivityReport {
    double min_re_eigenvalue = 0;
    int kernel_dim = 0; // eigenvalues of Re(q) at numerical zero
    bool positive = false;
};

struct ComposedPhase {
    Eigen::MatrixXcd q;
    std::complex<double> prefactor;
    PositivityReport report;
};

// Composes two quadratic model phases over shared intermediate variables:
// left phase over (outer_left, shared), right over (shared, outer_right),
// shared variables integrated out exactly by the Schur complement on the
// joint form. The prefactor is the Gaussian integral of the inner block.
ComposedPhase compose_phases(const Eigen::MatrixXcd& q_left, const Eigen::MatrixXcd& q_right,
                             int n_shared);

} // namespace szego::gauss

#endif
