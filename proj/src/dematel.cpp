#include "barriers/dematel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "barriers/errors.hpp"
#include "barriers/io.hpp"

namespace barriers::dematel {

const char* to_string(InfluenceGroup g) noexcept {
    return g == InfluenceGroup::Cause ? "Cause" : "Effect";
}

Normalization normalize(const InfluenceMatrix& average) {
    const int n = average.size();
    double divisor = 0.0;
    for (int i = 1; i <= n; ++i) {
        double row = 0.0, col = 0.0;
        for (int j = 1; j <= n; ++j) {
            row += average.at(i, j);
            col += average.at(j, i);
        }
        divisor = std::max({divisor, row, col});
    }
    if (divisor <= 0.0) {
        throw Error(ErrorCategory::Numeric, "dematel",
                    "degenerate input: every score is zero, nothing to normalize");
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (double v : average.values()) values.push_back(v / divisor);
    return Normalization{InfluenceMatrix(ScoreRole::Normalized, n, std::move(values)),
                         divisor};
}

namespace {

/// Largest-magnitude eigenvalue estimate for a non-negative matrix
/// (power iteration on the all-ones vector).
double spectral_radius_estimate(const std::vector<double>& m, int n) {
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    double lambda = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> y(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                y[static_cast<std::size_t>(i)] +=
                    m[static_cast<std::size_t>(i) * n + j] * x[static_cast<std::size_t>(j)];
            }
        }
        double norm = 0.0;
        for (double v : y) norm = std::max(norm, std::fabs(v));
        if (norm == 0.0) return 0.0;  // nilpotent direction; series terminates
        const double next = norm;
        for (double& v : y) v /= norm;
        x = std::move(y);
        if (std::fabs(next - lambda) < 1e-14) return next;
        lambda = next;
    }
    return lambda;
}

}  // namespace

TotalRelation total_relation(const InfluenceMatrix& normalized) {
    const int n = normalized.size();
    const std::vector<double>& d = normalized.values();

    const double rho = spectral_radius_estimate(d, n);
    if (rho >= 1.0 - 1e-12) {
        throw Error(ErrorCategory::Numeric, "dematel",
                    "spectral radius of the normalized matrix is " +
                        io::format_fixed(rho, 6) +
                        "; the influence series does not converge");
    }

    // LU factorization of A = I - D with partial pivoting.
    std::vector<double> lu(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lu[static_cast<std::size_t>(i) * n + j] =
                (i == j ? 1.0 : 0.0) - d[static_cast<std::size_t>(i) * n + j];
        }
    }
    double norm_a = 0.0;  // 1-norm of (I - D)
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::fabs(lu[static_cast<std::size_t>(i) * n + j]);
        norm_a = std::max(norm_a, col);
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::fabs(lu[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)]) * n + k]);
        for (int r = k + 1; r < n; ++r) {
            const double cand =
                std::fabs(lu[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)]) * n + k]);
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best < 1e-13) {
            throw Error(ErrorCategory::Numeric, "dematel",
                        "(I - D) is numerically singular at pivot " + std::to_string(k + 1) +
                            "; the spectral condition fails");
        }
        std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(pivot)]);
        const std::size_t pk = static_cast<std::size_t>(perm[static_cast<std::size_t>(k)]);
        for (int r = k + 1; r < n; ++r) {
            const std::size_t pr = static_cast<std::size_t>(perm[static_cast<std::size_t>(r)]);
            const double factor = lu[pr * n + k] / lu[pk * n + k];
            lu[pr * n + k] = factor;
            for (int c = k + 1; c < n; ++c) {
                lu[pr * n + c] -= factor * lu[pk * n + c];
            }
        }
    }

    // inv = (I - D)^-1, one solve per unit column.
    std::vector<double> inv(static_cast<std::size_t>(n) * n);
    std::vector<double> work(static_cast<std::size_t>(n));
    for (int col = 0; col < n; ++col) {
        for (int i = 0; i < n; ++i) {
            work[static_cast<std::size_t>(i)] =
                perm[static_cast<std::size_t>(i)] == col ? 1.0 : 0.0;
        }
        for (int i = 1; i < n; ++i) {
            const std::size_t pi = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
            for (int k = 0; k < i; ++k) {
                work[static_cast<std::size_t>(i)] -=
                    lu[pi * n + k] * work[static_cast<std::size_t>(k)];
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            const std::size_t pi = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
            for (int k = i + 1; k < n; ++k) {
                work[static_cast<std::size_t>(i)] -=
                    lu[pi * n + k] * work[static_cast<std::size_t>(k)];
            }
            work[static_cast<std::size_t>(i)] /= lu[pi * n + i];
        }
        for (int i = 0; i < n; ++i) {
            inv[static_cast<std::size_t>(i) * n + col] = work[static_cast<std::size_t>(i)];
        }
    }

    double norm_inv = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::fabs(inv[static_cast<std::size_t>(i) * n + j]);
        norm_inv = std::max(norm_inv, col);
    }

    // T = D * inv.
    std::vector<double> t(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double dik = d[static_cast<std::size_t>(i) * n + k];
            if (dik == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                t[static_cast<std::size_t>(i) * n + j] +=
                    dik * inv[static_cast<std::size_t>(k) * n + j];
            }
        }
    }
    // Clamp the tiny negative dust a solve can leave on exact zeros.
    for (double& v : t) {
        if (v < 0.0 && v > -1e-12) v = 0.0;
    }

    return TotalRelation{InfluenceMatrix(ScoreRole::TotalRelation, n, std::move(t)), rho,
                         norm_a * norm_inv};
}

CauseEffectTable cause_effect(const InfluenceMatrix& total) {
    const int n = total.size();
    CauseEffectTable table;
    table.rows.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        CauseEffectRow row;
        row.factor = i;
        for (int j = 1; j <= n; ++j) {
            row.row_total += total.at(i, j);
            row.column_total += total.at(j, i);
        }
        row.prominence = row.row_total + row.column_total;
        row.relation = row.row_total - row.column_total;
        row.zero_relation = row.relation == 0.0;
        row.group = row.relation < 0.0 ? InfluenceGroup::Effect : InfluenceGroup::Cause;
        table.rows.push_back(row);
    }
    return table;
}

double threshold(const InfluenceMatrix& total) {
    const int n = total.size();
    double sum = 0.0;
    for (double v : total.values()) sum += v;
    return sum / (static_cast<double>(n) * n);
}

InfluenceEdgeSet influence_edges(const InfluenceMatrix& total, double threshold_value) {
    const int n = total.size();
    InfluenceEdgeSet out;
    out.threshold = threshold_value;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const double w = total.at(i, j);
            if (w > threshold_value) out.edges.push_back({i, j, w});
        }
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const InfluenceEdge& a, const InfluenceEdge& b) {
                  if (a.weight != b.weight) return a.weight > b.weight;
                  if (a.from != b.from) return a.from < b.from;
                  return a.to < b.to;
              });
    return out;
}

std::vector<int> final_ranking(const CauseEffectTable& table) {
    std::vector<std::pair<double, int>> keyed;
    keyed.reserve(table.rows.size());
    for (const CauseEffectRow& row : table.rows) keyed.emplace_back(row.prominence, row.factor);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> order;
    order.reserve(keyed.size());
    for (const auto& [prominence, factor] : keyed) order.push_back(factor);
    return order;
}

std::string relation_map_dot(const CauseEffectTable& table, const InfluenceEdgeSet& edges,
                             const BarrierRegistry& registry) {
    std::string dot = "digraph dematel {\n  node [shape=box];\n";
    std::string causes, effects;
    for (const CauseEffectRow& row : table.rows) {
        const std::string id = "n" + std::to_string(row.factor);
        dot += "  " + id + " [label=\"" + registry.entry(row.factor).abbr +
               "\\nR+C=" + io::format_fixed(row.prominence, 3) +
               "\\nR-C=" + io::format_fixed(row.relation, 3) + "\"];\n";
        (row.group == InfluenceGroup::Cause ? causes : effects) += " " + id + ";";
    }
    // Causes sit above the neutral line, effects below.
    if (!causes.empty()) dot += "  { rank=min;" + causes + " }\n";
    if (!effects.empty()) dot += "  { rank=max;" + effects + " }\n";
    for (const InfluenceEdge& e : edges.edges) {
        dot += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
               " [label=\"" + io::format_fixed(e.weight, 3) + "\"];\n";
    }
    dot += "}\n";
    return dot;
}

}  // namespace barriers::dematel
