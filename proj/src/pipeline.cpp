#include "barriers/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "barriers/errors.hpp"
#include "barriers/report.hpp"
#include "barriers/version.hpp"

namespace barriers {

namespace pipeline {

SurveyInputs load_survey(const RunConfig& config, io::ResponseSections sections) {
    BarrierRegistry registry = io::read_registry(config.registry_path);
    std::vector<survey::ExpertResponse> responses =
        io::read_responses_dir(config.responses_dir, registry, sections);
    for (const survey::ExpertResponse& r : responses) {
        const int rn = r.ssim ? r.ssim->size() : r.scores->size();
        if (rn != registry.size()) {
            throw Error(ErrorCategory::Input, "survey",
                        "response '" + r.expert_id + "' has n=" + std::to_string(rn) +
                            " but the registry lists " + std::to_string(registry.size()) +
                            " factors");
        }
    }
    return SurveyInputs{std::move(registry), std::move(responses)};
}

ScreeningResult screen(const std::vector<survey::ExpertResponse>& responses, bool strict) {
    ScreeningResult result;
    for (const survey::ExpertResponse& r : responses) {
        survey::ConsistencyReport cr = survey::check_consistency(r);
        const bool keep = cr.clean() || !strict;
        result.reports.push_back(std::move(cr));
        if (keep) {
            result.retained_ids.push_back(r.expert_id);
            result.kept.push_back(r);
        } else {
            result.excluded_ids.push_back(r.expert_id);
        }
    }
    if (result.kept.empty()) {
        throw Error(ErrorCategory::Validation, "survey",
                    "strict screening excluded every expert; nothing to aggregate");
    }
    return result;
}

void run_ism(AnalysisReport& report, const SsimMatrix& ssim) {
    report.ssim = ssim;
    report.initial_reachability = ism::initial_reachability(ssim);
    report.final_reachability = ism::transitive_closure(*report.initial_reachability);
    report.levels = ism::level_partition(*report.final_reachability);
    report.conical = ism::conical_matrix(*report.final_reachability, *report.levels);
    report.digraph = ism::ism_digraph(*report.final_reachability, *report.levels);
}

void run_micmac(AnalysisReport& report, const ReachabilityMatrix& frm,
                std::optional<double> mid_override) {
    report.quadrants = micmac::classify(frm, mid_override);
}

void run_dematel(AnalysisReport& report, const InfluenceMatrix& average) {
    report.average = average;
    dematel::Normalization norm = dematel::normalize(average);
    report.divisor = norm.divisor;
    report.normalized = std::move(norm.matrix);
    dematel::TotalRelation total = dematel::total_relation(*report.normalized);
    report.total = std::move(total.matrix);
    report.cause_effect = dematel::cause_effect(*report.total);
    report.threshold = dematel::threshold(*report.total);
    report.edges = dematel::influence_edges(*report.total, *report.threshold);
    report.ranking = dematel::final_ranking(*report.cause_effect);
}

}  // namespace pipeline

AnalysisReport run_pipeline(const RunConfig& config) {
    AnalysisReport report;
    report.tool_version = kVersion;

    pipeline::SurveyInputs inputs =
        pipeline::load_survey(config, io::ResponseSections::Both);
    report.registry = inputs.registry;

    report.input_fingerprints[config.registry_path.filename().string()] =
        io::file_fingerprint(config.registry_path);
    {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(config.responses_dir)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            report.input_fingerprints[f.filename().string()] = io::file_fingerprint(f);
        }
    }

    pipeline::ScreeningResult screening =
        pipeline::screen(inputs.responses, config.strict_screening);
    report.consistency = std::move(screening.reports);
    report.retained_experts = std::move(screening.retained_ids);
    report.excluded_experts = std::move(screening.excluded_ids);

    // Reliability over the retained respondents. A degenerate table is
    // reported as a skipped section, not a pipeline failure.
    if (screening.kept.size() >= 2) {
        std::vector<std::vector<double>> table = survey::score_table(screening.kept);
        const int items = static_cast<int>(table.front().size());
        if (config.alpha_item_count != 0 && config.alpha_item_count != items) {
            throw Error(ErrorCategory::Input, "survey",
                        "configured alpha item count " +
                            std::to_string(config.alpha_item_count) + " does not match the " +
                            std::to_string(items) + " questionnaire items in the data");
        }
        try {
            report.reliability = survey::cronbach_alpha(table);
        } catch (const Error& e) {
            if (e.category() != ErrorCategory::Numeric) throw;
            report.skipped["reliability"] = e.what();
        }
    } else {
        report.skipped["reliability"] = "alpha needs at least 2 respondents";
    }

    pipeline::run_ism(report, survey::aggregate_ssim(screening.kept));
    pipeline::run_micmac(report, *report.final_reachability, config.micmac_mid_override);
    pipeline::run_dematel(report, survey::aggregate_average(screening.kept));

    if (!config.output_dir.empty()) {
        report::emit(report, config.output_dir, config.formats);
    }
    return report;
}

}  // namespace barriers
