#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "bcdeval/nig.hpp"
#include "bcdeval/rng.hpp"

namespace bcdeval {

inline double logsumexp(std::span<const double> xs) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double x : xs) mx = std::max(mx, x);
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - mx);
    return mx + std::log(s);
}

// Evidence factorizes per (node, parent set), so the whole enumeration
// needs only d * 2^(d-1) conjugate updates. Gram matrix once, submatrices
// per parent mask.
class LocalScoreCache {
public:
    LocalScoreCache(const Dataset& data, const NigPrior& prior, int d)
        : d_(d), n_(data.n()), prior_(prior), gram_(Eigen::MatrixXd::Zero(d, d)) {
        if (data.dim() != d) throw DimensionMismatchError("local cache: data dim mismatch");
        gram_ = data.samples.transpose() * data.samples;
        entries_.resize(static_cast<std::size_t>(d) << d);
        filled_.assign(entries_.size(), false);
    }

    const NigNodePosterior& local(int node, std::uint16_t mask) const {
        const std::size_t idx = (static_cast<std::size_t>(node) << d_) | mask;
        if (!filled_[idx]) {
            entries_[idx] = compute(node, mask);
            filled_[idx] = true;
        }
        return entries_[idx];
    }

    int n() const { return n_; }
    const NigPrior& prior() const { return prior_; }

private:
    NigNodePosterior compute(int node, std::uint16_t mask) const {
        std::vector<int> pa;
        for (int i = 0; i < d_; ++i)
            if (mask & (1u << i)) pa.push_back(i);
        const int k = static_cast<int>(pa.size());
        NigNodePosterior post;
        const auto prior = prior_.node_prior(k);
        post.precision = prior.precision;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) post.precision(a, b) += gram_(pa[a], pa[b]);
        Eigen::LLT<Eigen::MatrixXd> llt(post.precision);
        if (k > 0 && llt.info() != Eigen::Success)
            throw SingularPrecisionError("local score: singular precision");
        double logdet_prior = k * std::log(prior_.prior_precision);
        double logdet_post = 0.0;
        for (int i = 0; i < k; ++i) logdet_post += 2.0 * std::log(llt.matrixL()(i, i));

        Eigen::VectorXd rhs(k);
        for (int a = 0; a < k; ++a)
            rhs(a) = prior_.prior_precision * prior_.prior_mean + gram_(pa[a], node);
        post.mean = k > 0 ? llt.solve(rhs).eval() : Eigen::VectorXd(0);
        post.alpha = prior_.alpha + 0.5 * n_;
        const double prior_quad = k * prior_.prior_precision * prior_.prior_mean * prior_.prior_mean;
        const double post_quad = k > 0 ? post.mean.dot(post.precision * post.mean) : 0.0;
        post.beta = prior_.beta + 0.5 * (gram_(node, node) + prior_quad - post_quad);
        if (!(post.beta > 0.0))
            throw SingularPrecisionError("local score: nonpositive posterior beta");
        post.log_evidence = -0.5 * n_ * std::log(2.0 * std::numbers::pi) +
                            0.5 * (logdet_prior - logdet_post) +
                            prior_.alpha * std::log(prior_.beta) -
                            post.alpha * std::log(post.beta) + std::lgamma(post.alpha) -
                            std::lgamma(prior_.alpha);
        return post;
    }

    int d_;
    int n_;
    NigPrior prior_;
    Eigen::MatrixXd gram_;
    mutable std::vector<NigNodePosterior> entries_;
    mutable std::vector<bool> filled_;
};

enum class GraphPrior { Uniform };

// Exact p(G | D) over the full enumeration, with conjugate parameter
// blocks shared across graphs through the local cache.
class ExactPosterior {
public:
    ExactPosterior(std::vector<Dag> dags, std::vector<double> log_weights,
                   std::shared_ptr<LocalScoreCache> cache)
        : dags_(std::move(dags)), log_weights_(std::move(log_weights)), cache_(std::move(cache)) {
        probs_.resize(log_weights_.size());
        for (std::size_t i = 0; i < log_weights_.size(); ++i) probs_[i] = std::exp(log_weights_[i]);
    }

    int dim() const { return dags_.front().dim(); }
    const std::vector<Dag>& dags() const { return dags_; }
    const std::vector<double>& log_weights() const { return log_weights_; }
    const std::vector<double>& probs() const { return probs_; }
    const LocalScoreCache& cache() const { return *cache_; }
    std::shared_ptr<LocalScoreCache> cache_ptr() const { return cache_; }

    const NigNodePosterior& nig_local(int node, std::uint16_t parent_mask) const {
        return cache_->local(node, parent_mask);
    }

    NigPosterior nig_for(std::size_t dag_index) const {
        NigPosterior post;
        const Dag& g = dags_[dag_index];
        for (int i = 0; i < g.dim(); ++i) post.nodes.push_back(cache_->local(i, g.parents(i)));
        return post;
    }

    std::size_t mode() const {
        return static_cast<std::size_t>(
            std::max_element(log_weights_.begin(), log_weights_.end()) - log_weights_.begin());
    }

private:
    std::vector<Dag> dags_;
    std::vector<double> log_weights_;
    std::vector<double> probs_;
    std::shared_ptr<LocalScoreCache> cache_;
};

inline ExactPosterior exact_graph_posterior(const Dataset& data, const NigPrior& prior,
                                            GraphPrior = GraphPrior::Uniform) {
    prior.validate();
    if (data.intervention)
        throw ConfigError("exact_graph_posterior: observational data required");
    const int d = data.dim();
    if (d > 6) throw DimensionTooLargeError("exact_graph_posterior: d must be <= 6");
    auto dags = enumerate_dags(d);
    auto cache = std::make_shared<LocalScoreCache>(data, prior, d);
    std::vector<double> lw(dags.size());
    for (std::size_t gi = 0; gi < dags.size(); ++gi) {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += cache->local(i, dags[gi].parents(i)).log_evidence;
        lw[gi] = s;  // uniform graph prior cancels in normalization
    }
    const double z = logsumexp(lw);
    for (double& v : lw) v -= z;
    return ExactPosterior(std::move(dags), std::move(lw), std::move(cache));
}

enum class SampleSource { Exact, Tempered, Corrupted, Bootstrap };

struct PosteriorSample {
    Dag graph;
    Eigen::MatrixXd weights;
    Eigen::VectorXd noise_vars;

    LinearGaussianScm as_scm() const { return LinearGaussianScm{graph, weights, noise_vars}; }
};

// M joint draws of (G, phi); optionally importance-weighted (normalized).
struct PosteriorSampleSet {
    std::vector<PosteriorSample> samples;
    std::vector<double> weights;  // empty = uniform
    SampleSource source = SampleSource::Exact;

    int dim() const { return samples.front().graph.dim(); }
    std::size_t size() const { return samples.size(); }

    double weight(std::size_t m) const {
        return weights.empty() ? 1.0 / static_cast<double>(samples.size()) : weights[m];
    }

    PosteriorSampleSet resample(std::size_t m, std::uint64_t seed) const {
        if (samples.empty()) throw EmptySampleSetError("resample: empty sample set");
        if (weights.empty() && m == samples.size()) return *this;
        PosteriorSampleSet out;
        out.source = source;
        out.samples.reserve(m);
        Rng rng(derive_seed(seed, 0x726573616d70ULL));
        std::vector<double> probs(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) probs[i] = weight(i);
        for (std::size_t k = 0; k < m; ++k)
            out.samples.push_back(samples[rng.categorical(probs)]);
        return out;
    }
};

// Draw one (weights, noise) assignment from the NIG blocks of a fixed graph.
inline PosteriorSample draw_parameters(const Dag& g, const ExactPosterior& post, Rng& rng) {
    const int d = g.dim();
    PosteriorSample s{g, Eigen::MatrixXd::Zero(d, d), Eigen::VectorXd::Ones(d)};
    for (int i = 0; i < d; ++i) {
        const auto& blk = post.nig_local(i, g.parents(i));
        const double sigma2 = rng.inv_gamma(blk.alpha, blk.beta);
        s.noise_vars(i) = sigma2;
        const auto pa = g.parent_list(i);
        const int k = static_cast<int>(pa.size());
        if (k == 0) continue;
        Eigen::LLT<Eigen::MatrixXd> llt(blk.precision);
        Eigen::VectorXd z(k);
        for (int a = 0; a < k; ++a) z(a) = rng.normal();
        // gamma = mu' + sigma * L^-T z, covariance sigma^2 Lambda'^-1
        const Eigen::VectorXd gamma =
            blk.mean + std::sqrt(sigma2) *
                           llt.matrixL().transpose().solve(z);
        for (int a = 0; a < k; ++a) s.weights(pa[a], i) = gamma(a);
    }
    return s;
}

// G ~ categorical(weights); sigma_i^2 ~ InvGamma(alpha', beta'_i);
// gamma_i | sigma_i^2 ~ N(mu'_i, sigma_i^2 Lambda'_i^-1). One derived RNG
// stream per draw, so the set is reproducible independent of scheduling.
inline PosteriorSampleSet sample_exact(const ExactPosterior& post, std::size_t m,
                                       std::uint64_t seed) {
    if (m < 1) throw ConfigError("sample_exact: m must be >= 1");
    PosteriorSampleSet out;
    out.source = SampleSource::Exact;
    out.samples.reserve(m);
    std::vector<double> cum(post.probs().size());
    double acc = 0.0;
    for (std::size_t i = 0; i < cum.size(); ++i) {
        acc += post.probs()[i];
        cum[i] = acc;
    }
    for (std::size_t k = 0; k < m; ++k) {
        Rng rng(derive_seed(seed, 0x64726177ULL, k));
        const double u = rng.uniform() * acc;
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        const std::size_t gi = std::min(static_cast<std::size_t>(it - cum.begin()),
                                        cum.size() - 1);
        out.samples.push_back(draw_parameters(post.dags()[gi], post, rng));
    }
    return out;
}

}  // namespace bcdeval
