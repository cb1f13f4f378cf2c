#include "barriers/ism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "barriers/errors.hpp"

namespace barriers::ism {

ReachabilityMatrix initial_reachability(const SsimMatrix& ssim) {
    const int n = ssim.size();
    std::vector<Reach> cells(static_cast<std::size_t>(n) * n, Reach::Zero);
    auto set = [&](int i, int j) {
        cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] = Reach::One;
    };
    for (int i = 1; i <= n; ++i) set(i, i);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            switch (ssim.at(i, j)) {
            case RelationSymbol::V: set(i, j); break;
            case RelationSymbol::A: set(j, i); break;
            case RelationSymbol::X: set(i, j); set(j, i); break;
            case RelationSymbol::O: break;
            }
        }
    }
    return ReachabilityMatrix(n, std::move(cells));
}

ReachabilityMatrix transitive_closure(const ReachabilityMatrix& initial) {
    if (initial.has_stars()) {
        throw Error(ErrorCategory::Input, "ism",
                    "closure input must be an initial matrix without derived cells");
    }
    const int n = initial.size();
    std::vector<char> reach(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            reach[static_cast<std::size_t>(i) * n + j] =
                initial.at(i + 1, j + 1) != Reach::Zero;
        }
    }
    // Warshall fixpoint over the boolean support.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (!reach[static_cast<std::size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j) {
                if (reach[static_cast<std::size_t>(k) * n + j]) {
                    reach[static_cast<std::size_t>(i) * n + j] = 1;
                }
            }
        }
    }
    std::vector<Reach> cells(static_cast<std::size_t>(n) * n, Reach::Zero);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t slot = static_cast<std::size_t>(i) * n + j;
            if (initial.at(i + 1, j + 1) != Reach::Zero) {
                cells[slot] = Reach::One;
            } else if (reach[slot]) {
                cells[slot] = Reach::OneStar;
            }
        }
    }
    return ReachabilityMatrix(n, std::move(cells));
}

LevelPartition level_partition(const ReachabilityMatrix& frm) {
    const int n = frm.size();
    std::vector<char> remaining(static_cast<std::size_t>(n) + 1, 1);
    int left = n;
    int level = 0;
    std::vector<LevelRecord> records;
    records.reserve(static_cast<std::size_t>(n));

    while (left > 0) {
        ++level;
        std::vector<LevelRecord> assigned_now;
        for (int i = 1; i <= n; ++i) {
            if (!remaining[static_cast<std::size_t>(i)]) continue;
            LevelRecord rec;
            rec.factor = i;
            rec.level = level;
            for (int j = 1; j <= n; ++j) {
                if (!remaining[static_cast<std::size_t>(j)]) continue;
                const bool fwd = frm.reaches(i, j);
                const bool rev = frm.reaches(j, i);
                if (fwd) rec.reachability_set.push_back(j);
                if (rev) rec.antecedent_set.push_back(j);
                if (fwd && rev) rec.intersection_set.push_back(j);
            }
            if (rec.reachability_set == rec.intersection_set) {
                assigned_now.push_back(std::move(rec));
            }
        }
        if (assigned_now.empty()) {
            std::string stuck;
            for (int i = 1; i <= n; ++i) {
                if (remaining[static_cast<std::size_t>(i)]) {
                    if (!stuck.empty()) stuck += ",";
                    stuck += std::to_string(i);
                }
            }
            throw Error(ErrorCategory::Numeric, "ism",
                        "level partition stalled at level " + std::to_string(level) +
                            " with factors {" + stuck + "} unassigned");
        }
        for (LevelRecord& rec : assigned_now) {
            remaining[static_cast<std::size_t>(rec.factor)] = 0;
            --left;
            records.push_back(std::move(rec));
        }
    }
    return LevelPartition(std::move(records));
}

ConicalMatrix conical_matrix(const ReachabilityMatrix& frm, const LevelPartition& levels) {
    const int n = frm.size();
    if (levels.size() != n) {
        throw Error(ErrorCategory::Input, "ism", "partition does not cover the matrix");
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    // Ascending level, ascending original index inside a level.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return levels.level_of(a) < levels.level_of(b);
    });

    std::vector<Reach> cells(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cells[static_cast<std::size_t>(r) * n + c] =
                frm.at(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(c)]);
        }
    }

    ConicalMatrix out{std::move(order), ReachabilityMatrix(n, std::move(cells)),
                      {}, {}, {}, {}};
    for (int k = 0; k < n; ++k) {
        const int factor = out.order[static_cast<std::size_t>(k)];
        out.row_driving.push_back(frm.driving_powers()[static_cast<std::size_t>(factor - 1)]);
        out.row_level.push_back(levels.level_of(factor));
        out.col_dependence.push_back(
            frm.dependence_powers()[static_cast<std::size_t>(factor - 1)]);
        out.col_level.push_back(levels.level_of(factor));
    }
    return out;
}

namespace {

/// Tarjan over the direct (One, off-diagonal) support.
class SccFinder {
public:
    SccFinder(const ReachabilityMatrix& m) : m_(m), n_(m.size()) {
        index_.assign(static_cast<std::size_t>(n_) + 1, 0);
        low_.assign(static_cast<std::size_t>(n_) + 1, 0);
        on_stack_.assign(static_cast<std::size_t>(n_) + 1, 0);
        component_.assign(static_cast<std::size_t>(n_) + 1, -1);
        for (int v = 1; v <= n_; ++v) {
            if (index_[static_cast<std::size_t>(v)] == 0) strongconnect(v);
        }
    }

    int component_of(int v) const { return component_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<int>>& components() const { return members_; }

private:
    bool direct(int i, int j) const { return i != j && m_.at(i, j) == Reach::One; }

    void strongconnect(int v) {
        index_[static_cast<std::size_t>(v)] = low_[static_cast<std::size_t>(v)] = ++counter_;
        stack_.push_back(v);
        on_stack_[static_cast<std::size_t>(v)] = 1;
        for (int w = 1; w <= n_; ++w) {
            if (!direct(v, w)) continue;
            if (index_[static_cast<std::size_t>(w)] == 0) {
                strongconnect(w);
                low_[static_cast<std::size_t>(v)] =
                    std::min(low_[static_cast<std::size_t>(v)], low_[static_cast<std::size_t>(w)]);
            } else if (on_stack_[static_cast<std::size_t>(w)]) {
                low_[static_cast<std::size_t>(v)] =
                    std::min(low_[static_cast<std::size_t>(v)],
                             index_[static_cast<std::size_t>(w)]);
            }
        }
        if (low_[static_cast<std::size_t>(v)] == index_[static_cast<std::size_t>(v)]) {
            std::vector<int> comp;
            while (true) {
                int w = stack_.back();
                stack_.pop_back();
                on_stack_[static_cast<std::size_t>(w)] = 0;
                component_[static_cast<std::size_t>(w)] = static_cast<int>(members_.size());
                comp.push_back(w);
                if (w == v) break;
            }
            std::sort(comp.begin(), comp.end());
            members_.push_back(std::move(comp));
        }
    }

    const ReachabilityMatrix& m_;
    int n_;
    int counter_ = 0;
    std::vector<int> index_, low_, component_;
    std::vector<char> on_stack_;
    std::vector<int> stack_;
    std::vector<std::vector<int>> members_;
};

}  // namespace

IsmDigraph ism_digraph(const ReachabilityMatrix& frm, const LevelPartition& levels) {
    const int n = frm.size();
    if (levels.size() != n) {
        throw Error(ErrorCategory::Input, "ism", "partition does not cover the matrix");
    }

    SccFinder scc(frm);
    const auto& comps = scc.components();
    const int c = static_cast<int>(comps.size());

    // Condensation adjacency from direct links.
    std::vector<char> adj(static_cast<std::size_t>(c) * c, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j || frm.at(i, j) != Reach::One) continue;
            const int u = scc.component_of(i);
            const int v = scc.component_of(j);
            if (u != v) adj[static_cast<std::size_t>(u) * c + v] = 1;
        }
    }

    // Closure of the DAG, for redundancy tests.
    std::vector<char> closure = adj;
    for (int k = 0; k < c; ++k) {
        for (int u = 0; u < c; ++u) {
            if (!closure[static_cast<std::size_t>(u) * c + k]) continue;
            for (int v = 0; v < c; ++v) {
                if (closure[static_cast<std::size_t>(k) * c + v]) {
                    closure[static_cast<std::size_t>(u) * c + v] = 1;
                }
            }
        }
    }

    // Transitive reduction: an edge survives when no detour through another
    // direct successor also reaches its head.
    auto redundant = [&](int u, int v) {
        for (int w = 0; w < c; ++w) {
            if (w == u || w == v) continue;
            if (adj[static_cast<std::size_t>(u) * c + w] &&
                closure[static_cast<std::size_t>(w) * c + v]) {
                return true;
            }
        }
        return false;
    };

    // Deterministic node order: by (level, first member).
    IsmDigraph out;
    std::vector<int> node_of_comp(static_cast<std::size_t>(c), -1);
    {
        std::vector<int> comp_order(static_cast<std::size_t>(c));
        std::iota(comp_order.begin(), comp_order.end(), 0);
        auto comp_level = [&](int id) { return levels.level_of(comps[static_cast<std::size_t>(id)].front()); };
        std::sort(comp_order.begin(), comp_order.end(), [&](int a, int b) {
            const int la = comp_level(a);
            const int lb = comp_level(b);
            if (la != lb) return la < lb;
            return comps[static_cast<std::size_t>(a)].front() <
                   comps[static_cast<std::size_t>(b)].front();
        });
        for (int pos = 0; pos < c; ++pos) {
            const int id = comp_order[static_cast<std::size_t>(pos)];
            node_of_comp[static_cast<std::size_t>(id)] = pos;
            IsmDigraph::Node node;
            node.members = comps[static_cast<std::size_t>(id)];
            node.level = comp_level(id);
            out.nodes.push_back(std::move(node));
        }
    }

    for (int u = 0; u < c; ++u) {
        for (int v = 0; v < c; ++v) {
            if (adj[static_cast<std::size_t>(u) * c + v] && !redundant(u, v)) {
                out.edges.emplace_back(node_of_comp[static_cast<std::size_t>(u)],
                                       node_of_comp[static_cast<std::size_t>(v)]);
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());

    for (const IsmDigraph::Node& node : out.nodes) {
        for (std::size_t a = 0; a < node.members.size(); ++a) {
            for (std::size_t b = a + 1; b < node.members.size(); ++b) {
                const int i = node.members[a];
                const int j = node.members[b];
                if (frm.at(i, j) == Reach::One && frm.at(j, i) == Reach::One) {
                    out.mutual_pairs.emplace_back(i, j);
                }
            }
        }
    }
    std::sort(out.mutual_pairs.begin(), out.mutual_pairs.end());
    return out;
}

std::string digraph_dot(const IsmDigraph& graph, const BarrierRegistry& registry) {
    auto label = [&](const IsmDigraph::Node& node) {
        std::string s;
        for (std::size_t k = 0; k < node.members.size(); ++k) {
            if (k) s += '+';
            s += registry.entry(node.members[k]).abbr;
        }
        return s;
    };

    std::string dot = "digraph ism {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        dot += "  n" + std::to_string(k) + " [label=\"" + label(graph.nodes[k]) +
               "\", level=" + std::to_string(graph.nodes[k].level) + "];\n";
    }
    int max_level = 0;
    for (const auto& node : graph.nodes) max_level = std::max(max_level, node.level);
    for (int level = 1; level <= max_level; ++level) {
        std::string members;
        for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
            if (graph.nodes[k].level == level) members += " n" + std::to_string(k) + ";";
        }
        if (!members.empty()) {
            dot += "  { rank=same;" + members + " }\n";
        }
    }
    for (const auto& [from, to] : graph.edges) {
        dot += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    }
    dot += "}\n";
    return dot;
}

}  // namespace barriers::ism
