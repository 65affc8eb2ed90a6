#include "cshatter/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "cshatter/errors.hpp"

namespace cshatter {
namespace {

constexpr double kResidualTol = 1e-8;
constexpr int kMaxSwapRounds = 30;
constexpr int kRestartRanks = 4;  // initial-atom ranks tried: 0..3

Eigen::MatrixXd make_sensing(const CsConfig& config) {
    const std::size_t m = config.measurement_count();
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    Eigen::MatrixXd a(m, config.n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < config.n; ++c) a(r, c) = gauss(rng) * scale;
    }
    return a;
}

// Real Fourier dictionary: one column for frequency 0 (constant) and n/2
// (alternating sign), a cosine/sine pair for every frequency in between.
// Mirrored spectral pairs with real time-domain output are exactly the
// span of such a pair.
struct Dictionary {
    Eigen::MatrixXd atoms;                        // n x n
    std::vector<std::vector<int>> groups;         // column indices per frequency

    explicit Dictionary(std::size_t n) {
        atoms.resize(n, n);
        groups.reserve(n / 2 + 1);
        int col = 0;
        for (std::size_t j = 0; j <= n / 2; ++j) {
            const double w = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
            if (j == 0) {
                atoms.col(col).setOnes();
                groups.push_back({col++});
            } else if (j == n / 2) {
                for (std::size_t i = 0; i < n; ++i) atoms(i, col) = (i % 2 == 0) ? 1.0 : -1.0;
                groups.push_back({col++});
            } else {
                for (std::size_t i = 0; i < n; ++i) atoms(i, col) = std::cos(w * i);
                for (std::size_t i = 0; i < n; ++i) atoms(i, col + 1) = std::sin(w * i);
                groups.push_back({col, col + 1});
                col += 2;
            }
        }
    }
};

struct Pursuit {
    const Eigen::MatrixXd& sensed;  // G = A * D
    const std::vector<std::vector<int>>& groups;
    const Eigen::VectorXd& y;
    double tol_abs;

    std::vector<int> column_set(const std::vector<int>& selection) const {
        std::vector<int> cols;
        for (int g : selection) {
            cols.insert(cols.end(), groups[g].begin(), groups[g].end());
        }
        return cols;
    }

    // Least-squares refit over the selected groups; returns coefficients
    // and overwrites the residual.
    Eigen::VectorXd refit(const std::vector<int>& selection, Eigen::VectorXd& residual) const {
        const auto cols = column_set(selection);
        Eigen::MatrixXd sub(sensed.rows(), cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) sub.col(i) = sensed.col(cols[i]);
        const Eigen::VectorXd coeff = sub.colPivHouseholderQr().solve(y);
        residual = y - sub * coeff;
        return coeff;
    }

    // Energy captured by projecting the residual onto each group's sensed
    // span; -inf for already-selected groups.
    std::vector<double> scores(const Eigen::VectorXd& residual,
                               const std::vector<int>& selected) const {
        std::vector<char> taken(groups.size(), 0);
        for (int g : selected) taken[g] = 1;
        std::vector<double> s(groups.size(), -std::numeric_limits<double>::infinity());
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (taken[g]) continue;
            if (groups[g].size() == 1) {
                const auto& col = sensed.col(groups[g][0]);
                const double nn = col.squaredNorm();
                if (nn > 0) {
                    const double d = col.dot(residual);
                    s[g] = d * d / nn;
                }
            } else {
                const auto& c0 = sensed.col(groups[g][0]);
                const auto& c1 = sensed.col(groups[g][1]);
                const double g00 = c0.squaredNorm();
                const double g11 = c1.squaredNorm();
                const double g01 = c0.dot(c1);
                const double det = g00 * g11 - g01 * g01;
                const double b0 = c0.dot(residual);
                const double b1 = c1.dot(residual);
                if (det > 1e-12 * g00 * g11) {
                    // r' B (B'B)^-1 B' r via the 2x2 inverse
                    s[g] = (g11 * b0 * b0 - 2.0 * g01 * b0 * b1 + g00 * b1 * b1) / det;
                } else if (g00 > 0) {
                    s[g] = b0 * b0 / g00;
                }
            }
        }
        return s;
    }

    static int rank_of(const std::vector<double>& s, int rank) {
        rank = std::min<int>(rank, static_cast<int>(s.size()) - 1);
        std::vector<int> order(s.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::partial_sort(order.begin(), order.begin() + rank + 1, order.end(),
                          [&](int a, int b) { return s[a] > s[b]; });
        return order[rank];
    }

    // Plain pursuit: grow the selection one group at a time, refitting all
    // coefficients after each pick. first_rank > 0 starts from a
    // lower-ranked initial atom (deterministic restart).
    bool grow(std::vector<int>& selection, Eigen::VectorXd& residual,
              std::vector<double>& history, std::size_t max_picks, std::size_t max_cols,
              int first_rank) const {
        selection.clear();
        residual = y;
        history.clear();
        std::size_t cols = 0;
        while (selection.size() < max_picks) {
            const auto s = scores(residual, selection);
            const int pick = rank_of(s, selection.empty() ? first_rank : 0);
            if (cols + groups[pick].size() > max_cols) break;
            cols += groups[pick].size();
            selection.push_back(pick);
            refit(selection, residual);
            history.push_back(residual.norm());
            if (history.back() < tol_abs) return true;
        }
        return false;
    }

    // Prune the selection to `keep` groups by coefficient energy, then swap
    // candidate groups in while the residual strictly decreases. The history
    // records committed models only, so it stays non-increasing even though
    // the prune itself may move through a worse intermediate fit.
    bool refine(std::vector<int>& selection, Eigen::VectorXd& residual,
                std::vector<double>& history, std::size_t keep) const {
        auto commit = [&history](double v) {
            if (history.empty() || v <= history.back()) history.push_back(v);
        };
        auto prune = [&](std::vector<int> candidate) {
            Eigen::VectorXd r;
            const Eigen::VectorXd coeff = refit(candidate, r);
            std::vector<std::pair<double, int>> energy;
            int offset = 0;
            for (int g : candidate) {
                double e = 0.0;
                for (std::size_t i = 0; i < groups[g].size(); ++i) {
                    e += coeff[offset + i] * coeff[offset + i];
                }
                offset += static_cast<int>(groups[g].size());
                energy.emplace_back(e, g);
            }
            std::sort(energy.begin(), energy.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            std::vector<int> kept;
            for (std::size_t i = 0; i < std::min(keep, energy.size()); ++i) {
                kept.push_back(energy[i].second);
            }
            std::sort(kept.begin(), kept.end());
            return kept;
        };

        selection = prune(selection);
        refit(selection, residual);
        double best = residual.norm();
        commit(best);
        if (best < tol_abs) return true;

        for (int round = 0; round < kMaxSwapRounds; ++round) {
            const auto s = scores(residual, selection);
            std::vector<int> candidate = selection;
            for (std::size_t i = 0; i < keep; ++i) {
                const int g = rank_of(s, static_cast<int>(i));
                if (std::isfinite(s[g])) candidate.push_back(g);
            }
            const std::vector<int> swapped = prune(candidate);
            Eigen::VectorXd r;
            refit(swapped, r);
            const double rn = r.norm();
            if (rn >= best * (1.0 - 1e-12)) break;
            selection = swapped;
            residual = r;
            best = rn;
            commit(best);
            if (best < tol_abs) return true;
        }
        return false;
    }
};

}  // namespace

std::size_t CsConfig::measurement_count() const {
    const double m = std::ceil(multiplier * static_cast<double>(m_max));
    if (!(m >= 0.0) || m > static_cast<double>(n)) {
        throw BadDimensions("CsConfig: measurement count " + std::to_string(m) +
                            " outside 0..n");
    }
    return static_cast<std::size_t>(m);
}

Eigen::VectorXd cs_encode(const Signal& x, const CsConfig& config) {
    if (x.size() != config.n) {
        throw BadDimensions("cs_encode: signal length " + std::to_string(x.size()) +
                            " != config.n = " + std::to_string(config.n));
    }
    const Eigen::MatrixXd a = make_sensing(config);
    return a * Eigen::Map<const Eigen::VectorXd>(x.data(), x.size());
}

Signal cs_decode(const Eigen::VectorXd& y, const CsConfig& config, std::size_t sparsity_budget,
                 PursuitTrace* trace) {
    const std::size_t m = config.measurement_count();
    if (y.size() != static_cast<Eigen::Index>(m)) {
        throw BadDimensions("cs_decode: measurement vector length mismatch");
    }
    if (sparsity_budget < 1 || sparsity_budget > m / 2) {
        throw std::invalid_argument("cs_decode: sparsity budget must be in 1..M/2");
    }
    if (trace) trace->residuals.clear();

    Signal out(config.n, 0.0);
    const double ynorm = y.norm();
    if (ynorm == 0.0) return out;

    const Dictionary dict(config.n);
    const Eigen::MatrixXd sensed = make_sensing(config) * dict.atoms;
    Pursuit pursuit{sensed, dict.groups, y, kResidualTol * ynorm};

    // Exploration may overshoot the budget (extra picks are pruned away
    // later) but keeps the fit overdetermined.
    const std::size_t max_cols = m - 1;
    const std::size_t max_picks = std::min(2 * sparsity_budget, max_cols / 2);

    std::vector<int> selection;
    Eigen::VectorXd residual;
    std::vector<double> history;
    bool converged = false;
    for (int rank = 0; rank < kRestartRanks && !converged; ++rank) {
        converged = pursuit.grow(selection, residual, history, max_picks, max_cols, rank);
        if (!converged) {
            converged = pursuit.refine(selection, residual, history, sparsity_budget);
        }
    }
    if (trace) trace->residuals = history;
    if (!converged) {
        throw NoConvergence("cs_decode: residual " + std::to_string(residual.norm() / ynorm) +
                            " above tolerance after exhausting the budget");
    }

    // Rebuild the time-domain signal from the active atoms.
    Eigen::VectorXd final_residual;
    const Eigen::VectorXd coeff = pursuit.refit(selection, final_residual);
    const auto cols = pursuit.column_set(selection);
    Eigen::Map<Eigen::VectorXd> mapped(out.data(), out.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        mapped += coeff[i] * dict.atoms.col(cols[i]);
    }
    return out;
}

}  // namespace cshatter
