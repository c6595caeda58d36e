#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <numbers>

#include "bcdeval/dag.hpp"
#include "bcdeval/scm.hpp"

namespace bcdeval {

// BGe marginal likelihood with T = t * I, t = alpha_mu (alpha_w - d - 1) /
// (alpha_mu + 1), prior mean zero. Score-equivalent: every DAG in a MEC
// gets the same value.
struct BgeParams {
    double alpha_mu = 1.0;
    double alpha_w = 0.0;  // 0 = use d + 2

    double effective_alpha_w(int d) const { return alpha_w > 0 ? alpha_w : d + 2.0; }
};

inline double bge_log_score(const Dataset& data, const Dag& graph,
                            const BgeParams& params = {}) {
    if (data.intervention) throw ConfigError("bge_log_score: observational data required");
    const int d = graph.dim();
    if (data.dim() != d) throw DimensionMismatchError("bge_log_score: data dim mismatch");
    const int n = data.n();
    const double am = params.alpha_mu;
    const double aw = params.effective_alpha_w(d);
    if (!(am > 0) || !(aw > d - 1)) throw ConfigError("bge_log_score: invalid hyperparameters");
    const double t = am * (aw - d - 1.0) / (am + 1.0);
    if (!(t > 0)) throw ConfigError("bge_log_score: alpha_w must exceed d + 1");

    // R = T + S_N + (N am / (N + am)) xbar xbar^T   (prior mean 0)
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(d, d) * t;
    if (n > 0) {
        const Eigen::RowVectorXd xbar = data.samples.colwise().mean();
        Eigen::MatrixXd centered = data.samples.rowwise() - xbar;
        r += centered.transpose() * centered;
        r += (n * am / (n + am)) * xbar.transpose() * xbar;
    }

    auto logdet_sub = [&](std::uint32_t mask) {
        int k = 0;
        std::array<int, Dag::kMaxVertices> idx{};
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) idx[k++] = i;
        if (k == 0) return 0.0;
        Eigen::MatrixXd sub(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) sub(a, b) = r(idx[a], idx[b]);
        Eigen::LLT<Eigen::MatrixXd> llt(sub);
        if (llt.info() != Eigen::Success)
            throw SingularPrecisionError("bge_log_score: singular posterior matrix");
        double ld = 0.0;
        for (int i = 0; i < k; ++i) ld += 2.0 * std::log(llt.matrixL()(i, i));
        return ld;
    };

    double score = 0.0;
    for (int i = 0; i < d; ++i) {
        const std::uint32_t pa = graph.parents(i);
        const int l = std::popcount(pa);
        score += 0.5 * (std::log(am) - std::log(n + am));
        score += std::lgamma(0.5 * (n + aw - d + l + 1)) - std::lgamma(0.5 * (aw - d + l + 1));
        score += -0.5 * n * std::log(std::numbers::pi);
        score += 0.5 * (aw - d + 2.0 * l + 1.0) * std::log(t);
        score += 0.5 * (n + aw - d + l) * logdet_sub(pa);
        score -= 0.5 * (n + aw - d + l + 1) * logdet_sub(pa | (1u << i));
    }
    return score;
}

}  // namespace bcdeval
