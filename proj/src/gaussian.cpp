#include "szego/gaussian.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace szego::gauss {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXd re_part(const Eigen::MatrixXcd& m)
{
    return m.real();
}

} // namespace

ComplexQuadraticForm ComplexQuadraticForm::from_matrix(Eigen::MatrixXcd matrix)
{
    if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
        throw std::invalid_argument("quadratic form matrix must be square and nonempty");
    double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    double scale = matrix.cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("quadratic form matrix must be symmetric");
    // Fold any representation slack into exact symmetry.
    Eigen::MatrixXcd sym = 0.5 * (matrix + matrix.transpose());
    return ComplexQuadraticForm{std::move(sym)};
}

double ComplexQuadraticForm::min_re_eigenvalue() const
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re_part(m));
    return es.eigenvalues().minCoeff();
}

void ComplexQuadraticForm::require_positive() const
{
    double min_eig = min_re_eigenvalue();
    if (min_eig <= 0)
        throw NotPositive("Re(M) is not positive definite (min eigenvalue " +
                              std::to_string(min_eig) + ")",
                          min_eig);
}

std::complex<double> gaussian_integral_closed(const ComplexQuadraticForm& q)
{
    q.require_positive();
    // -1/2 sum of principal logs of the eigenvalues of M/pi; each
    // eigenvalue has argument in (-pi/2, pi/2) because Re M >> 0, so the
    // branch is unambiguous.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(q.m);
    std::complex<double> log_sum = 0;
    for (int i = 0; i < q.dim(); ++i)
        log_sum += std::log(es.eigenvalues()[i] / kPi);
    return std::exp(-0.5 * log_sum);
}

std::complex<double> gaussian_integral_numeric(const ComplexQuadraticForm& q, double tol)
{
    q.require_positive();
    int d = q.dim();
    if (d > 4)
        throw BudgetExceeded("quadrature supports dimension <= 4");

    // y = A^(-1/2) u with A = Re(M): integrand becomes
    // exp(-|u|^2) exp(-i u^T B' u), magnitude exp(-|u|^2).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re_part(q.m));
    Eigen::MatrixXd a_inv_sqrt = es.operatorInverseSqrt();
    double det_factor = 1.0;
    for (int i = 0; i < d; ++i)
        det_factor /= std::sqrt(es.eigenvalues()[i]);
    Eigen::MatrixXd b_prime =
        a_inv_sqrt * q.m.imag() * a_inv_sqrt; // Re part is the identity by construction

    const double half_width = 7.5; // exp(-56) tail, far below any tol here
    std::complex<double> prev = 0;
    bool have_prev = false;
    for (int n_axis = 17; n_axis <= 1025; n_axis = 2 * n_axis - 1) {
        double nodes_total = std::pow(static_cast<double>(n_axis), d);
        if (nodes_total > 1e7) {
            if (have_prev)
                break; // keep the best estimate below budget
            throw BudgetExceeded("quadrature node budget exceeded before convergence");
        }
        double h = 2.0 * half_width / (n_axis - 1);
        std::vector<double> grid(static_cast<size_t>(n_axis));
        for (int i = 0; i < n_axis; ++i)
            grid[static_cast<size_t>(i)] = -half_width + h * i;

        std::complex<double> sum = 0;
        std::vector<int> idx(static_cast<size_t>(d), 0);
        Eigen::VectorXd u(d);
        for (;;) {
            for (int i = 0; i < d; ++i)
                u[i] = grid[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            double quad_re = u.squaredNorm();
            double quad_im = u.dot(b_prime * u);
            sum += std::exp(std::complex<double>(-quad_re, -quad_im));
            int axis = 0;
            while (axis < d && ++idx[static_cast<size_t>(axis)] == n_axis) {
                idx[static_cast<size_t>(axis)] = 0;
                ++axis;
            }
            if (axis == d)
                break;
        }
        std::complex<double> value = sum * std::pow(h, d) * det_factor;
        if (have_prev && std::abs(value - prev) < tol / 2)
            return value;
        prev = value;
        have_prev = true;
    }
    if (!have_prev)
        throw BudgetExceeded("quadrature node budget exceeded");
    return prev;
}

ComposedPhase compose_phases(const Eigen::MatrixXcd& q_left, const Eigen::MatrixXcd& q_right,
                             int n_shared)
{
    if (n_shared < 1)
        throw std::invalid_argument("composition needs at least one shared variable");
    int left_total = static_cast<int>(q_left.rows());
    int right_total = static_cast<int>(q_right.rows());
    int p = left_total - n_shared;  // outer variables on the left
    int r = right_total - n_shared; // outer variables on the right
    if (p < 0 || r < 0)
        throw std::invalid_argument("shared block larger than a phase");

    // Joint form in (x, z, y): the shared variables are the trailing block
    // of the left phase and the leading block of the right phase.
    Eigen::MatrixXcd inner = q_left.bottomRightCorner(n_shared, n_shared) +
                             q_right.topLeftCorner(n_shared, n_shared);
    ComplexQuadraticForm inner_form = ComplexQuadraticForm::from_matrix(inner);
    double inner_min = inner_form.min_re_eigenvalue();
    if (inner_min <= 0)
        throw NotPositive("intermediate block not positive (min Re eigenvalue " +
                              std::to_string(inner_min) + ")",
                          inner_min);

    Eigen::MatrixXcd outer = Eigen::MatrixXcd::Zero(p + r, p + r);
    outer.topLeftCorner(p, p) = q_left.topLeftCorner(p, p);
    outer.bottomRightCorner(r, r) = q_right.bottomRightCorner(r, r);

    Eigen::MatrixXcd cross = Eigen::MatrixXcd::Zero(p + r, n_shared);
    cross.topRows(p) = q_left.topRightCorner(p, n_shared);
    cross.bottomRows(r) = q_right.bottomLeftCorner(r, n_shared);

    ComposedPhase result;
    result.q = outer - cross * inner.inverse() * cross.transpose();
    result.q = 0.5 * (result.q + result.q.transpose()); // symmetrize roundoff
    result.prefactor = gaussian_integral_closed(inner_form);

    if (p + r > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(re_part(result.q));
        result.report.min_re_eigenvalue = es.eigenvalues().minCoeff();
        double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
        for (int i = 0; i < p + r; ++i)
            if (std::abs(es.eigenvalues()[i]) <= 1e-9 * scale)
                ++result.report.kernel_dim;
        result.report.positive = result.report.min_re_eigenvalue >= -1e-12 * scale;
    } else {
        result.report.positive = true;
    }
    return result;
}

} // namespace szego::gauss
