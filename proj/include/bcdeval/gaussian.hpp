#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "bcdeval/errors.hpp"
#include "bcdeval/rng.hpp"

namespace bcdeval {

// Closed-form multivariate normal carrier. Covariance may be validated as
// symmetric PSD within tolerance; densities require strict positive
// definiteness.
struct GaussianDist {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;

    int dim() const { return static_cast<int>(mean.size()); }

    void validate() const {
        const double asym = (covariance - covariance.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-10) throw SingularSystemError("covariance not symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw SingularSystemError("covariance has negative eigenvalues");
    }
};

inline double log_density(const GaussianDist& dist, const Eigen::VectorXd& x) {
    const int k = dist.dim();
    Eigen::LLT<Eigen::MatrixXd> llt(dist.covariance);
    if (llt.info() != Eigen::Success)
        throw SingularSystemError("covariance not positive definite");
    double logdet = 0.0;
    for (int i = 0; i < k; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    const Eigen::VectorXd z = llt.matrixL().solve(x - dist.mean);
    return -0.5 * (k * std::log(2.0 * std::numbers::pi) + logdet + z.squaredNorm());
}

inline Eigen::VectorXd sample_gaussian(const GaussianDist& dist, Rng& rng) {
    Eigen::LLT<Eigen::MatrixXd> llt(dist.covariance);
    if (llt.info() != Eigen::Success)
        throw SingularSystemError("covariance not positive definite");
    Eigen::VectorXd z(dist.dim());
    for (int i = 0; i < dist.dim(); ++i) z(i) = rng.normal();
    return dist.mean + llt.matrixL() * z;
}

// KL(a || b) between nondegenerate Gaussians, closed form.
inline double gaussian_kl(const GaussianDist& a, const GaussianDist& b) {
    const int k = a.dim();
    Eigen::LLT<Eigen::MatrixXd> lb(b.covariance), la(a.covariance);
    if (lb.info() != Eigen::Success || la.info() != Eigen::Success)
        throw SingularSystemError("gaussian_kl: covariance not positive definite");
    double logdet_a = 0.0, logdet_b = 0.0;
    for (int i = 0; i < k; ++i) {
        logdet_a += 2.0 * std::log(la.matrixL()(i, i));
        logdet_b += 2.0 * std::log(lb.matrixL()(i, i));
    }
    const Eigen::MatrixXd inv_b = lb.solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::VectorXd dm = b.mean - a.mean;
    const double tr = (inv_b * a.covariance).trace();
    return 0.5 * (tr + dm.dot(inv_b * dm) - k + logdet_b - logdet_a);
}

// differential entropy of a Gaussian, nats
inline double gaussian_entropy(const GaussianDist& dist) {
    const int k = dist.dim();
    Eigen::LLT<Eigen::MatrixXd> llt(dist.covariance);
    if (llt.info() != Eigen::Success)
        throw SingularSystemError("gaussian_entropy: covariance not positive definite");
    double logdet = 0.0;
    for (int i = 0; i < k; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    return 0.5 * (k * (1.0 + std::log(2.0 * std::numbers::pi)) + logdet);
}

}  // namespace bcdeval
