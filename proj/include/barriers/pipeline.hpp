#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "barriers/dematel.hpp"
#include "barriers/influence.hpp"
#include "barriers/io.hpp"
#include "barriers/ism.hpp"
#include "barriers/micmac.hpp"
#include "barriers/reachability.hpp"
#include "barriers/registry.hpp"
#include "barriers/relation.hpp"
#include "barriers/survey.hpp"

namespace barriers {

struct RunConfig {
    std::filesystem::path registry_path;
    std::filesystem::path responses_dir;
    std::filesystem::path output_dir;

    /// Strict screening drops experts with any consistency violation from
    /// aggregation; otherwise they are kept and the violations reported.
    bool strict_screening = false;

    /// Expected questionnaire item count for alpha; 0 infers n(n-1) from
    /// the data, any other value must match it.
    int alpha_item_count = 0;

    std::optional<double> micmac_mid_override;

    std::set<std::string> formats{"csv", "json", "dot"};
};

/// Everything one run produces. Sections a stage did not compute stay
/// empty and carry an entry in `skipped` naming the reason.
struct AnalysisReport {
    std::optional<BarrierRegistry> registry;

    std::vector<survey::ConsistencyReport> consistency;  // one per expert, filename order
    std::vector<std::string> retained_experts;
    std::vector<std::string> excluded_experts;
    std::optional<survey::ReliabilityResult> reliability;

    std::optional<SsimMatrix> ssim;
    std::optional<ReachabilityMatrix> initial_reachability;
    std::optional<ReachabilityMatrix> final_reachability;
    std::optional<LevelPartition> levels;
    std::optional<ism::ConicalMatrix> conical;
    std::optional<ism::IsmDigraph> digraph;

    std::optional<micmac::QuadrantAssignment> quadrants;

    std::optional<InfluenceMatrix> average;
    std::optional<InfluenceMatrix> normalized;
    std::optional<double> divisor;
    std::optional<InfluenceMatrix> total;
    std::optional<dematel::CauseEffectTable> cause_effect;
    std::optional<double> threshold;
    std::optional<dematel::InfluenceEdgeSet> edges;
    std::vector<int> ranking;

    std::map<std::string, std::string> skipped;            // section -> reason
    std::map<std::string, std::string> input_fingerprints; // filename -> hash
    std::string tool_version;
};

namespace pipeline {

/// Registry plus responses, with n cross-checked. The sections parameter
/// honors stage isolation: the ISM entry point loads judgments only, the
/// DEMATEL entry point scores only.
struct SurveyInputs {
    BarrierRegistry registry;
    std::vector<survey::ExpertResponse> responses;
};

SurveyInputs load_survey(const RunConfig& config, io::ResponseSections sections);

/// Consistency reports for every expert plus the retained subset. Strict
/// screening drops experts with violations; otherwise all are retained.
/// Throws Error(Validation) when screening leaves nobody.
struct ScreeningResult {
    std::vector<survey::ConsistencyReport> reports;
    std::vector<std::string> retained_ids;
    std::vector<std::string> excluded_ids;
    std::vector<survey::ExpertResponse> kept;
};

ScreeningResult screen(const std::vector<survey::ExpertResponse>& responses, bool strict);

/// ISM chain from an aggregated SSIM.
void run_ism(AnalysisReport& report, const SsimMatrix& ssim);

/// MICMAC from a final reachability matrix.
void run_micmac(AnalysisReport& report, const ReachabilityMatrix& frm,
                std::optional<double> mid_override);

/// DEMATEL chain from an average matrix.
void run_dematel(AnalysisReport& report, const InfluenceMatrix& average);

}  // namespace pipeline

/// The full survey -> ism -> micmac -> dematel pipeline. Writes every
/// requested format under config.output_dir and returns the report.
/// Identical inputs produce byte-identical outputs.
AnalysisReport run_pipeline(const RunConfig& config);

}  // namespace barriers
