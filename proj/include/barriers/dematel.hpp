#pragma once

#include <string>
#include <vector>

#include "barriers/influence.hpp"
#include "barriers/registry.hpp"

namespace barriers::dematel {

struct Normalization {
    InfluenceMatrix matrix;  // role Normalized
    double divisor = 0.0;    // max over all row sums and column sums
};

/// D = A / s with s the largest row or column sum of A.
/// Throws Error(Numeric) when A is all zero.
Normalization normalize(const InfluenceMatrix& average);

struct TotalRelation {
    InfluenceMatrix matrix;  // role TotalRelation
    double spectral_radius = 0.0;
    double condition = 0.0;  // 1-norm condition estimate of (I - D)
};

/// T = D (I - D)^-1 via LU with partial pivoting. Refuses (Error(Numeric))
/// when the spectral radius of D reaches 1 or (I - D) is numerically
/// singular — the Neumann series would not converge.
TotalRelation total_relation(const InfluenceMatrix& normalized);

enum class InfluenceGroup : unsigned char { Cause, Effect };

const char* to_string(InfluenceGroup g) noexcept;

struct CauseEffectRow {
    int factor = 0;            // 1-based
    double row_total = 0.0;    // R_i
    double column_total = 0.0; // C_i
    double prominence = 0.0;   // R + C
    double relation = 0.0;     // R - C
    InfluenceGroup group{};
    bool zero_relation = false;  // R - C exactly zero, grouped Cause by convention
};

struct CauseEffectTable {
    std::vector<CauseEffectRow> rows;  // registry order
};

CauseEffectTable cause_effect(const InfluenceMatrix& total);

/// Mean over all n^2 entries of T.
double threshold(const InfluenceMatrix& total);

struct InfluenceEdge {
    int from = 0;  // 1-based
    int to = 0;
    double weight = 0.0;  // t_ij
};

struct InfluenceEdgeSet {
    double threshold = 0.0;
    std::vector<InfluenceEdge> edges;  // strictly above threshold, weight-descending
};

/// Off-diagonal cells with t_ij strictly above the threshold.
InfluenceEdgeSet influence_edges(const InfluenceMatrix& total, double threshold_value);

/// Factors by descending prominence; ties broken by ascending index.
std::vector<int> final_ranking(const CauseEffectTable& table);

/// DOT interrelationship map: nodes annotated with R+C / R-C, cause group
/// ranked above the effect group, one edge per supra-threshold cell.
std::string relation_map_dot(const CauseEffectTable& table, const InfluenceEdgeSet& edges,
                             const BarrierRegistry& registry);

}  // namespace barriers::dematel
