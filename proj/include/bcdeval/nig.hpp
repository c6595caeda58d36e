#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <numbers>

#include "bcdeval/dag.hpp"
#include "bcdeval/scm.hpp"

namespace bcdeval {

// Normal-Inverse-Gamma prior over one node's (parent weights, noise
// variance): sigma^2 ~ InvGamma(alpha, beta), gamma | sigma^2 ~
// N(mean, sigma^2 precision^-1).
struct NigNodePrior {
    Eigen::MatrixXd precision;  // k x k, symmetric positive definite
    Eigen::VectorXd mean;       // k
    double alpha = 4.0;
    double beta = 0.5;
};

struct NigNodePosterior {
    Eigen::MatrixXd precision;   // Lambda'
    Eigen::VectorXd mean;        // mu'
    double alpha = 0.0;          // alpha' = alpha + N/2
    double beta = 0.0;           // beta'_i
    double log_evidence = 0.0;   // log p(X_i | X_pa) under the prior
};

// Global prior settings; per-node priors are mean*1 and precision*I sized
// to the parent count.
struct NigPrior {
    double alpha = 4.0;
    double beta = 0.5;
    double prior_mean = 0.0;
    double prior_precision = 1.0;

    NigNodePrior node_prior(int k) const {
        return NigNodePrior{Eigen::MatrixXd::Identity(k, k) * prior_precision,
                            Eigen::VectorXd::Constant(k, prior_mean), alpha, beta};
    }

    void validate() const {
        if (!(alpha > 0) || !(beta > 0) || !(prior_precision > 0))
            throw ConfigError("nig prior: alpha, beta, precision must be positive");
    }
};

// Lambda' = X_pa^T X_pa + Lambda
// mu'     = Lambda'^-1 (Lambda mu + X_pa^T x_i)
// alpha'  = alpha + N/2
// beta'   = beta + (x_i^T x_i + mu^T Lambda mu - mu'^T Lambda' mu') / 2
// and the per-node evidence
// log p = -(N/2) log 2pi + (log det Lambda - log det Lambda')/2
//         + alpha log beta - alpha' log beta' + lgamma(alpha') - lgamma(alpha)
inline NigNodePosterior nig_update_node(const Eigen::MatrixXd& x_pa,
                                        const Eigen::VectorXd& x_i,
                                        const NigNodePrior& prior) {
    const int k = static_cast<int>(x_pa.cols());
    const int n = static_cast<int>(x_i.size());
    if (static_cast<int>(x_pa.rows()) != n)
        throw DimensionMismatchError("nig_update: row counts disagree");

    NigNodePosterior post;
    post.precision = prior.precision + x_pa.transpose() * x_pa;
    Eigen::LLT<Eigen::MatrixXd> llt_post(post.precision);
    Eigen::LLT<Eigen::MatrixXd> llt_prior(prior.precision);
    if (k > 0 && (llt_post.info() != Eigen::Success || llt_prior.info() != Eigen::Success))
        throw SingularPrecisionError("nig_update: singular precision");

    double logdet_prior = 0.0, logdet_post = 0.0;
    for (int i = 0; i < k; ++i) {
        logdet_prior += 2.0 * std::log(llt_prior.matrixL()(i, i));
        logdet_post += 2.0 * std::log(llt_post.matrixL()(i, i));
    }

    const Eigen::VectorXd rhs = prior.precision * prior.mean + x_pa.transpose() * x_i;
    post.mean = k > 0 ? llt_post.solve(rhs).eval() : Eigen::VectorXd(0);
    post.alpha = prior.alpha + 0.5 * n;
    const double prior_quad = prior.mean.dot(prior.precision * prior.mean);
    const double post_quad = k > 0 ? post.mean.dot(post.precision * post.mean) : 0.0;
    post.beta = prior.beta + 0.5 * (x_i.squaredNorm() + prior_quad - post_quad);
    if (!(post.beta > 0.0))
        throw SingularPrecisionError("nig_update: nonpositive posterior beta");

    post.log_evidence = -0.5 * n * std::log(2.0 * std::numbers::pi) +
                        0.5 * (logdet_prior - logdet_post) +
                        prior.alpha * std::log(prior.beta) -
                        post.alpha * std::log(post.beta) + std::lgamma(post.alpha) -
                        std::lgamma(prior.alpha);
    return post;
}

inline Eigen::MatrixXd parent_matrix(const Dataset& data, const Dag& graph, int node) {
    const auto pa = graph.parent_list(node);
    Eigen::MatrixXd x(data.n(), static_cast<int>(pa.size()));
    for (std::size_t c = 0; c < pa.size(); ++c) x.col(static_cast<int>(c)) = data.samples.col(pa[c]);
    return x;
}

inline NigNodePosterior nig_update(const Dataset& data, const Dag& graph, int node,
                                   const NigPrior& prior) {
    prior.validate();
    if (node < 0 || node >= graph.dim()) throw ConfigError("nig_update: node out of range");
    if (data.intervention) throw ConfigError("nig_update: observational data required");
    const auto x_pa = parent_matrix(data, graph, node);
    return nig_update_node(x_pa, data.samples.col(node), prior.node_prior(
                               static_cast<int>(x_pa.cols())));
}

// One NIG block per node of a fixed graph.
struct NigPosterior {
    std::vector<NigNodePosterior> nodes;

    double log_evidence() const {
        double s = 0.0;
        for (const auto& n : nodes) s += n.log_evidence;
        return s;
    }
};

inline NigPosterior nig_posterior(const Dataset& data, const Dag& graph,
                                  const NigPrior& prior) {
    NigPosterior post;
    post.nodes.reserve(graph.dim());
    for (int i = 0; i < graph.dim(); ++i) post.nodes.push_back(nig_update(data, graph, i, prior));
    return post;
}

// Per-node factorized NIG evidence, summed over nodes.
inline double log_marginal_likelihood(const Dataset& data, const Dag& graph,
                                      const NigPrior& prior) {
    return nig_posterior(data, graph, prior).log_evidence();
}

}  // namespace bcdeval
