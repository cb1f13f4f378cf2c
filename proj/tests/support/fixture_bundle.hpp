#pragma once

// Synthesizes the 12-expert response bundle behind the golden study: the
// per-pair score sums hit the published averages exactly, every response
// passes the cross-validation rules, and the judgment mode reproduces the
// published SSIM cell for cell. The construction is deterministic and
// self-checking.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "barriers/io.hpp"
#include "barriers/survey.hpp"
#include "paper_tables.hpp"

namespace fixtures {

namespace detail {

using Slots = std::array<int, kExpertCount>;

/// Distributes `sum` over as many experts as possible (1s first, then an
/// even stack); every carrier ends up >= 1.
inline Slots spread(int sum) {
    Slots out{};
    if (sum <= kExpertCount) {
        for (int e = 0; e < sum; ++e) out[static_cast<std::size_t>(e)] = 1;
        return out;
    }
    const int base = sum / kExpertCount;
    const int rem = sum % kExpertCount;
    for (int e = 0; e < kExpertCount; ++e) {
        out[static_cast<std::size_t>(e)] = base + (e < rem ? 1 : 0);
    }
    return out;
}

/// Packs `sum` into as few experts as possible, from either end.
inline Slots concentrate(int sum, bool from_back) {
    Slots out{};
    int left = sum;
    for (int k = 0; k < kExpertCount && left > 0; ++k) {
        const int e = from_back ? kExpertCount - 1 - k : k;
        const int take = left < 4 ? left : 4;
        out[static_cast<std::size_t>(e)] = take;
        left -= take;
    }
    if (left != 0) throw std::logic_error("pair sum exceeds the 0..4 scale capacity");
    return out;
}

struct PairPlan {
    Slots fwd{};
    Slots rev{};
    std::array<barriers::RelationSymbol, kExpertCount> symbol{};
};

/// Scores and per-expert judgments for one factor pair. Each expert votes
/// the target symbol whenever their own scores allow it under the
/// cross-validation rules, and the honest fallback otherwise.
inline PairPlan plan_pair(barriers::RelationSymbol target, int fwd_sum, int rev_sum) {
    using barriers::RelationSymbol;
    PairPlan plan;
    switch (target) {
    case RelationSymbol::V:
        plan.fwd = spread(fwd_sum);
        plan.rev = concentrate(rev_sum, /*from_back=*/true);
        break;
    case RelationSymbol::A:
        plan.fwd = concentrate(fwd_sum, /*from_back=*/true);
        plan.rev = spread(rev_sum);
        break;
    case RelationSymbol::X:
        plan.fwd = spread(fwd_sum);
        plan.rev = spread(rev_sum);
        break;
    case RelationSymbol::O:
        plan.fwd = concentrate(fwd_sum, /*from_back=*/false);
        plan.rev = concentrate(rev_sum, /*from_back=*/false);
        break;
    }

    for (int e = 0; e < kExpertCount; ++e) {
        const bool f = plan.fwd[static_cast<std::size_t>(e)] > 0;
        const bool r = plan.rev[static_cast<std::size_t>(e)] > 0;
        const bool allowed = (target == RelationSymbol::V && f) ||
                             (target == RelationSymbol::A && r) ||
                             (target == RelationSymbol::X && f && r) ||
                             (target == RelationSymbol::O && !f && !r);
        if (allowed) {
            plan.symbol[static_cast<std::size_t>(e)] = target;
        } else if (f && r) {
            plan.symbol[static_cast<std::size_t>(e)] = RelationSymbol::X;
        } else if (f) {
            plan.symbol[static_cast<std::size_t>(e)] = RelationSymbol::V;
        } else if (r) {
            plan.symbol[static_cast<std::size_t>(e)] = RelationSymbol::A;
        } else {
            plan.symbol[static_cast<std::size_t>(e)] = RelationSymbol::O;
        }
    }

    // The construction must reproduce the target as the modal judgment.
    std::array<int, 4> votes{};
    for (auto s : plan.symbol) ++votes[static_cast<std::size_t>(s)];
    int best = 0;
    for (int s = 1; s < 4; ++s) {
        if (votes[static_cast<std::size_t>(s)] > votes[static_cast<std::size_t>(best)]) best = s;
    }
    if (static_cast<RelationSymbol>(best) != target) {
        throw std::logic_error("fixture synthesis failed to reproduce the modal symbol");
    }
    return plan;
}

}  // namespace detail

/// The 12 synthesized responses (both sections populated).
inline std::vector<barriers::survey::ExpertResponse> make_expert_responses() {
    using barriers::RelationSymbol;
    const barriers::SsimMatrix target_ssim = make_ssim();
    const barriers::InfluenceMatrix average = make_average();

    std::vector<std::vector<double>> scores(
        kExpertCount, std::vector<double>(static_cast<std::size_t>(kN) * kN, 0.0));
    std::vector<std::vector<RelationSymbol>> judgments(
        kExpertCount, std::vector<RelationSymbol>(barriers::SsimMatrix::pair_count(kN)));

    for (int i = 1; i <= kN; ++i) {
        for (int j = i + 1; j <= kN; ++j) {
            const int fwd_sum =
                static_cast<int>(std::llround(average.at(i, j) * kExpertCount));
            const int rev_sum =
                static_cast<int>(std::llround(average.at(j, i) * kExpertCount));
            const detail::PairPlan plan =
                detail::plan_pair(target_ssim.at(i, j), fwd_sum, rev_sum);
            for (int e = 0; e < kExpertCount; ++e) {
                scores[static_cast<std::size_t>(e)][static_cast<std::size_t>(i - 1) * kN +
                                                    (j - 1)] =
                    plan.fwd[static_cast<std::size_t>(e)];
                scores[static_cast<std::size_t>(e)][static_cast<std::size_t>(j - 1) * kN +
                                                    (i - 1)] =
                    plan.rev[static_cast<std::size_t>(e)];
                judgments[static_cast<std::size_t>(e)]
                         [barriers::SsimMatrix::pair_slot(kN, i, j)] =
                             plan.symbol[static_cast<std::size_t>(e)];
            }
        }
    }

    std::vector<barriers::survey::ExpertResponse> responses;
    for (int e = 0; e < kExpertCount; ++e) {
        barriers::survey::ExpertResponse r;
        char id[16];
        std::snprintf(id, sizeof id, "expert%02d", e + 1);
        r.expert_id = id;
        r.ssim = barriers::SsimMatrix(kN, judgments[static_cast<std::size_t>(e)]);
        r.scores = barriers::InfluenceMatrix(barriers::ScoreRole::ExpertResponse, kN,
                                             scores[static_cast<std::size_t>(e)]);
        responses.push_back(std::move(r));
    }
    return responses;
}

/// Writes registry.csv plus responses/expertNN.txt under `dir`.
inline void write_bundle(const std::filesystem::path& dir) {
    const barriers::BarrierRegistry registry = make_registry();
    std::filesystem::create_directories(dir / "responses");
    barriers::io::write_file_atomic(dir / "registry.csv", registry_csv_text());
    for (const auto& response : make_expert_responses()) {
        barriers::io::write_file_atomic(
            dir / "responses" / (response.expert_id + ".txt"),
            barriers::io::expert_response_text(response, registry));
    }
}

}  // namespace fixtures
