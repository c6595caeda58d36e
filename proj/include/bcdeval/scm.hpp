#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "bcdeval/dag.hpp"
#include "bcdeval/gaussian.hpp"
#include "bcdeval/rng.hpp"

namespace bcdeval {

// Linear Gaussian SCM: X_j = sum_i weights(i,j) X_i + eps_j,
// eps_j ~ N(0, noise_vars[j]). Column j holds the parent coefficients of
// X_j; weights are nonzero only on graph edges.
struct LinearGaussianScm {
    Dag graph;
    Eigen::MatrixXd weights;
    Eigen::VectorXd noise_vars;

    int dim() const { return graph.dim(); }

    void validate() const {
        const int d = dim();
        if (weights.rows() != d || weights.cols() != d || noise_vars.size() != d)
            throw DimensionMismatchError("scm: weight/noise dimensions disagree with graph");
        for (int i = 0; i < d; ++i) {
            if (!(noise_vars(i) > 0.0)) throw ConfigError("scm: noise variances must be positive");
            for (int j = 0; j < d; ++j)
                if (!graph.edge(i, j) && weights(i, j) != 0.0)
                    throw ConfigError("scm: nonzero weight off the graph");
        }
    }
};

enum class Scenario { Identifiable, NonIdentifiable };

struct ScmPriorSpec {
    Scenario scenario = Scenario::Identifiable;
    double weight_variance = 2.0;  // identifiable weights ~ N(0, 2)
    double noise_alpha = 4.0;      // non-identifiable sigma^2 ~ InvGamma(4, 0.5)
    double noise_beta = 0.5;

    void validate() const {
        if (!(weight_variance > 0) || !(noise_alpha > 0) || !(noise_beta > 0))
            throw ConfigError("scm prior: hyperparameters must be positive");
    }
};

struct InterventionSpec {
    int target = 0;
    double value = 0.0;
};

struct Dataset {
    Eigen::MatrixXd samples;  // N x d
    std::optional<InterventionSpec> intervention;
    bool standardized = false;

    int n() const { return static_cast<int>(samples.rows()); }
    int dim() const { return static_cast<int>(samples.cols()); }
};

// Identifiable: sigma_i^2 = 1, weights i.i.d. N(0, weight_variance).
// NonIdentifiable: sigma_i^2 ~ InvGamma(alpha, beta), weights into node i
// drawn N(0, sigma_i^2).
inline LinearGaussianScm draw_scm(const Dag& graph, const ScmPriorSpec& prior,
                                  std::uint64_t seed) {
    prior.validate();
    Rng rng(derive_seed(seed, 0x73636dULL));
    const int d = graph.dim();
    LinearGaussianScm scm{graph, Eigen::MatrixXd::Zero(d, d), Eigen::VectorXd::Ones(d)};
    for (int j = 0; j < d; ++j) {
        double wvar = prior.weight_variance;
        if (prior.scenario == Scenario::NonIdentifiable) {
            scm.noise_vars(j) = rng.inv_gamma(prior.noise_alpha, prior.noise_beta);
            wvar = scm.noise_vars(j);
        }
        for (int i = 0; i < d; ++i)
            if (graph.edge(i, j)) scm.weights(i, j) = rng.normal(0.0, std::sqrt(wvar));
    }
    return scm;
}

// Ancestral sampling in topological order. Under an intervention the
// target's equation is replaced by the constant and its noise ignored.
inline Dataset sample(const LinearGaussianScm& scm, int n,
                      std::optional<InterventionSpec> intervention, std::uint64_t seed) {
    if (n < 1) throw ConfigError("sample: n must be >= 1");
    Rng rng(derive_seed(seed, 0x73616d706cULL));
    const int d = scm.dim();
    const auto order = scm.graph.topological_order();
    Eigen::MatrixXd out(n, d);
    for (int r = 0; r < n; ++r) {
        for (int v : order) {
            if (intervention && intervention->target == v) {
                out(r, v) = intervention->value;
                continue;
            }
            double x = rng.normal(0.0, std::sqrt(scm.noise_vars(v)));
            for (int p = 0; p < d; ++p)
                if (scm.graph.edge(p, v)) x += scm.weights(p, v) * out(r, p);
            out(r, v) = x;
        }
    }
    return Dataset{std::move(out), intervention, false};
}

// Observational: mean 0, covariance (I - W)^-T diag(sigma^2) (I - W)^-1.
// Interventional: the (d-1)-dimensional Gaussian over non-target
// coordinates with the target clamped at its value.
inline GaussianDist joint_gaussian(const LinearGaussianScm& scm,
                                   std::optional<InterventionSpec> intervention = {}) {
    const int d = scm.dim();
    Eigen::MatrixXd w = scm.weights;
    Eigen::VectorXd noise = scm.noise_vars;
    Eigen::VectorXd shift = Eigen::VectorXd::Zero(d);
    if (intervention) {
        const int t = intervention->target;
        w.col(t).setZero();
        noise(t) = 0.0;
        shift(t) = intervention->value;
    }
    const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d) - w.transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) throw SingularSystemError("joint_gaussian: I - W not invertible");
    const Eigen::MatrixXd ainv = lu.inverse();
    Eigen::VectorXd mean = ainv * shift;
    Eigen::MatrixXd cov = ainv * noise.asDiagonal() * ainv.transpose();
    if (!intervention) return GaussianDist{std::move(mean), std::move(cov)};

    const int t = intervention->target;
    GaussianDist out{Eigen::VectorXd(d - 1), Eigen::MatrixXd(d - 1, d - 1)};
    for (int i = 0, r = 0; i < d; ++i) {
        if (i == t) continue;
        out.mean(r) = mean(i);
        for (int j = 0, c = 0; j < d; ++j) {
            if (j == t) continue;
            out.covariance(r, c++) = cov(i, j);
        }
        ++r;
    }
    return out;
}

// sum_i log N(x_i; gamma_i^T x_pa(i), sigma_i^2)
inline double log_likelihood(const LinearGaussianScm& scm, const Eigen::VectorXd& x) {
    const int d = scm.dim();
    double ll = 0.0;
    for (int j = 0; j < d; ++j) {
        double mean = 0.0;
        for (int p = 0; p < d; ++p)
            if (scm.graph.edge(p, j)) mean += scm.weights(p, j) * x(p);
        const double r = x(j) - mean;
        ll += -0.5 * (std::log(2.0 * std::numbers::pi * scm.noise_vars(j)) +
                      r * r / scm.noise_vars(j));
    }
    return ll;
}

// Same factorization with the intervened node's factor dropped; x(target)
// is taken as the clamped value when other equations read it.
inline double log_likelihood_do(const LinearGaussianScm& scm, const Eigen::VectorXd& x,
                                int target) {
    const int d = scm.dim();
    double ll = 0.0;
    for (int j = 0; j < d; ++j) {
        if (j == target) continue;
        double mean = 0.0;
        for (int p = 0; p < d; ++p)
            if (scm.graph.edge(p, j)) mean += scm.weights(p, j) * x(p);
        const double r = x(j) - mean;
        ll += -0.5 * (std::log(2.0 * std::numbers::pi * scm.noise_vars(j)) +
                      r * r / scm.noise_vars(j));
    }
    return ll;
}

// Divide each column by its sample standard deviation (variance-only
// normalization; means are left intact). Intervened constant columns pass
// through unchanged.
inline Dataset standardize(const Dataset& data) {
    if (data.n() < 2) throw ConfigError("standardize: need N >= 2");
    Dataset out = data;
    const int n = data.n();
    for (int j = 0; j < data.dim(); ++j) {
        if (data.intervention && data.intervention->target == j) continue;
        const double mean = data.samples.col(j).mean();
        const double var =
            (data.samples.col(j).array() - mean).square().sum() / (n - 1.0);
        if (var < 1e-12)
            throw DegenerateColumnError("standardize: column " + std::to_string(j) +
                                        " has near-zero variance");
        out.samples.col(j) /= std::sqrt(var);
    }
    out.standardized = true;
    return out;
}

}  // namespace bcdeval
