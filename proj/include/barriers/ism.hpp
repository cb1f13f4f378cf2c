#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barriers/reachability.hpp"
#include "barriers/registry.hpp"
#include "barriers/relation.hpp"

namespace barriers::ism {

/// SSIM -> binary matrix via the V/A/X/O substitution rules; diagonal One.
ReachabilityMatrix initial_reachability(const SsimMatrix& ssim);

/// Boolean transitive closure to fixpoint. Cells that were Zero and became
/// reachable are marked OneStar; original One cells stay One.
ReachabilityMatrix transitive_closure(const ReachabilityMatrix& initial);

/// Iterative level extraction: a factor is assigned the current level when
/// its reachability set equals reachability ∩ antecedent over the factors
/// still in play.
LevelPartition level_partition(const ReachabilityMatrix& final_matrix);

/// Final reachability matrix with rows/columns permuted by ascending level
/// (ascending original index within a level), annotated with powers and
/// levels along both edges.
struct ConicalMatrix {
    std::vector<int> order;  // original 1-based indices in conical order
    ReachabilityMatrix cells;
    std::vector<int> row_driving;
    std::vector<int> row_level;
    std::vector<int> col_dependence;
    std::vector<int> col_level;
};

ConicalMatrix conical_matrix(const ReachabilityMatrix& final_matrix,
                             const LevelPartition& levels);

/// ISM digraph: direct links only (stars dropped), strongly connected
/// groups collapsed to one node, transitive edges removed from the
/// condensation. Mutual direct pairs inside a group are kept for rendering.
struct IsmDigraph {
    struct Node {
        std::vector<int> members;  // 1-based factor indices, ascending
        int level = 0;
    };

    std::vector<Node> nodes;                        // ordered by (level, first member)
    std::vector<std::pair<int, int>> edges;         // 0-based node indices, reduced
    std::vector<std::pair<int, int>> mutual_pairs;  // factor pairs (i < j) within a node
};

IsmDigraph ism_digraph(const ReachabilityMatrix& final_matrix,
                       const LevelPartition& levels);

/// DOT rendering: one node per group (members joined by '+'), same-rank
/// clusters per level, level 1 on top.
std::string digraph_dot(const IsmDigraph& graph, const BarrierRegistry& registry);

}  // namespace barriers::ism
