#include "hypoexp/matexp.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "hypoexp/errors.hpp"

namespace hypoexp {

namespace {

// One-norm thresholds theta_m for the diagonal Pade approximants of degree
// 3, 5, 7, 9, 13 in double precision.
constexpr double kTheta[] = {
    1.495585217958292e-2,   // m = 3
    2.539398330063230e-1,   // m = 5
    9.504178996162932e-1,   // m = 7
    2.097847961257068e0,    // m = 9
    5.371920351148152e0,    // m = 13
};

constexpr double kCoef3[] = {120, 60, 12, 1};
constexpr double kCoef5[] = {30240, 15120, 3360, 420, 30, 1};
constexpr double kCoef7[] = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
constexpr double kCoef9[] = {17643225600., 8821612800., 2075673600., 302702400.,
                             30270240.,    2162160.,    110880.,     3960.,
                             90.,          1.};
constexpr double kCoef13[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                              1187353796428800.,  129060195264000.,   10559470521600.,
                              670442572800.,      33522128640.,       1323241920.,
                              40840800.,          960960.,            16380.,
                              182.,               1.};

double one_norm(const Eigen::MatrixXd& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

// (V - U) X = (V + U), the [m/m] Pade evaluation of e^A.
Eigen::MatrixXd pade_solve(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) {
    return (v - u).partialPivLu().solve(v + u);
}

// Degrees 3/5/7/9: U = A sum b_{2k+1} A^{2k}, V = sum b_{2k} A^{2k}.
Eigen::MatrixXd pade_low(const Eigen::MatrixXd& a, const double* b, int degree) {
    const auto n = a.rows();
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);

    std::vector<Eigen::MatrixXd> even_powers;  // I, A^2, A^4, ...
    even_powers.push_back(identity);
    const Eigen::MatrixXd a2 = a * a;
    for (int k = 2; k <= degree - 1; k += 2) {
        even_powers.push_back(even_powers.back() * a2);
    }

    Eigen::MatrixXd u_poly = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; 2 * k + 1 <= degree; ++k) {
        u_poly += b[2 * k + 1] * even_powers[k];
    }
    for (int k = 0; 2 * k <= degree; ++k) {
        v += b[2 * k] * even_powers[k];
    }
    return pade_solve(a * u_poly, v);
}

// Degree 13, factored through A^6 to keep it at six matrix products.
Eigen::MatrixXd pade13(const Eigen::MatrixXd& a) {
    const auto n = a.rows();
    const double* b = kCoef13;
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd a4 = a2 * a2;
    const Eigen::MatrixXd a6 = a2 * a4;

    const Eigen::MatrixXd u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
             b[3] * a2 + b[1] * identity);
    const Eigen::MatrixXd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                              b[4] * a4 + b[2] * a2 + b[0] * identity;
    return pade_solve(u, v);
}

}  // namespace

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw Error(errc::non_square, "matrix exponential needs a square, non-empty matrix");
    }
    if (!a.allFinite()) {
        throw Error(errc::non_finite, "matrix exponential needs finite entries");
    }

    const double norm = one_norm(a);
    if (norm <= kTheta[0]) return pade_low(a, kCoef3, 3);
    if (norm <= kTheta[1]) return pade_low(a, kCoef5, 5);
    if (norm <= kTheta[2]) return pade_low(a, kCoef7, 7);
    if (norm <= kTheta[3]) return pade_low(a, kCoef9, 9);
    if (norm <= kTheta[4]) return pade13(a);

    const int squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta[4])));
    Eigen::MatrixXd x = pade13(a / std::exp2(squarings));
    for (int i = 0; i < squarings; ++i) {
        x = x * x;
    }
    return x;
}

}  // namespace hypoexp
