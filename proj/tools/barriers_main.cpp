#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "barriers/errors.hpp"
#include "barriers/io.hpp"
#include "barriers/pipeline.hpp"
#include "barriers/report.hpp"
#include "barriers/version.hpp"

namespace {

using namespace barriers;

struct StageArgs {
    std::string registry;
    std::string responses;
    std::string ssim_file;
    std::string frm_file;
    std::string average_file;
    std::string bundle;
    std::string out;
    bool strict = false;
    int alpha_items = 0;
    double mid = -1.0;  // <0 means unset
    std::vector<std::string> formats{"csv", "json", "dot"};
};

std::set<std::string> format_set(const std::vector<std::string>& formats) {
    std::set<std::string> out;
    for (const std::string& f : formats) {
        if (f != "csv" && f != "json" && f != "dot") {
            throw Error(ErrorCategory::Input, "cli",
                        "unknown format '" + f + "' (want csv, json or dot)");
        }
        out.insert(f);
    }
    return out;
}

std::optional<double> mid_override(const StageArgs& args) {
    if (args.mid < 0.0) return std::nullopt;
    return args.mid;
}

void add_registry_option(CLI::App* cmd, StageArgs& args) {
    cmd->add_option("--registry", args.registry, "Barrier registry CSV (index,abbr,name)")
        ->envname("BARRIERS_REGISTRY")
        ->required();
}

void add_formats_option(CLI::App* cmd, StageArgs& args) {
    cmd->add_option("--formats", args.formats, "Output formats (csv,json,dot)")
        ->envname("BARRIERS_FORMATS")
        ->delimiter(',');
}

void add_out_option(CLI::App* cmd, StageArgs& args, bool required) {
    auto* opt = cmd->add_option("--out", args.out, "Output directory")
                    ->envname("BARRIERS_OUT");
    if (required) opt->required();
}

/// Every section the subcommand did not produce gets an explicit skip note.
void mark_unrun(AnalysisReport& report, const std::string& cmd) {
    const std::string reason = "not computed by the " + cmd + " subcommand";
    auto note = [&](const char* name, bool present) {
        if (!present && !report.skipped.contains(name)) report.skipped[name] = reason;
    };
    note("consistency", !report.consistency.empty());
    note("reliability", report.reliability.has_value());
    note("ssim", report.ssim.has_value());
    note("initial_reachability", report.initial_reachability.has_value());
    note("final_reachability", report.final_reachability.has_value());
    note("levels", report.levels.has_value());
    note("conical", report.conical.has_value());
    note("digraph", report.digraph.has_value());
    note("micmac", report.quadrants.has_value());
    note("average", report.average.has_value());
    note("normalized", report.normalized.has_value());
    note("total_relation", report.total.has_value());
    note("cause_effect", report.cause_effect.has_value());
    note("influence_edges", report.edges.has_value());
    note("ranking", !report.ranking.empty());
}

void fingerprint(AnalysisReport& report, const std::filesystem::path& path) {
    report.input_fingerprints[path.filename().string()] = io::file_fingerprint(path);
}

BarrierRegistry load_registry(AnalysisReport& report, const StageArgs& args) {
    BarrierRegistry registry = io::read_registry(args.registry);
    report.registry = registry;
    fingerprint(report, args.registry);
    return registry;
}

/// SSIM for the ism/micmac stages: aggregated from responses (judgment
/// sections only), read from a file, or resumed from a bundle.
SsimMatrix obtain_ssim(AnalysisReport& report, const BarrierRegistry& registry,
                       const StageArgs& args) {
    if (!args.responses.empty()) {
        RunConfig config;
        config.registry_path = args.registry;
        config.responses_dir = args.responses;
        auto inputs = pipeline::load_survey(config, io::ResponseSections::SsimOnly);
        for (const auto& entry : std::filesystem::directory_iterator(args.responses)) {
            if (entry.is_regular_file()) fingerprint(report, entry.path());
        }
        return survey::aggregate_ssim(inputs.responses);
    }
    if (!args.ssim_file.empty()) {
        fingerprint(report, args.ssim_file);
        return io::read_ssim_csv(args.ssim_file, registry);
    }
    const std::filesystem::path candidate = std::filesystem::path(args.bundle) / "ssim.csv";
    if (args.bundle.empty() || !std::filesystem::exists(candidate)) {
        throw Error(ErrorCategory::Input, "cli",
                    "no SSIM available: pass --responses or --ssim, or point --bundle at a "
                    "directory produced by `barriers ism` or `barriers report`");
    }
    fingerprint(report, candidate);
    return io::read_ssim_csv(candidate, registry);
}

int cmd_validate(const StageArgs& args) {
    AnalysisReport report;
    report.tool_version = kVersion;
    BarrierRegistry registry = load_registry(report, args);

    RunConfig config;
    config.registry_path = args.registry;
    config.responses_dir = args.responses;
    auto inputs = pipeline::load_survey(config, io::ResponseSections::Both);
    for (const auto& entry : std::filesystem::directory_iterator(args.responses)) {
        if (entry.is_regular_file()) fingerprint(report, entry.path());
    }

    pipeline::ScreeningResult screening = pipeline::screen(inputs.responses, args.strict);
    report.consistency = screening.reports;
    report.retained_experts = screening.retained_ids;
    report.excluded_experts = screening.excluded_ids;

    std::size_t violations = 0;
    for (const auto& cr : screening.reports) {
        for (const auto& v : cr.violations) {
            ++violations;
            std::printf("%s: pair (%d,%d) %s: %s\n", cr.expert_id.c_str(), v.i, v.j,
                        survey::to_string(v.rule), v.detail.c_str());
        }
    }

    if (screening.kept.size() >= 2) {
        auto table = survey::score_table(screening.kept);
        const int items = static_cast<int>(table.front().size());
        if (args.alpha_items != 0 && args.alpha_items != items) {
            throw Error(ErrorCategory::Input, "survey",
                        "configured alpha item count " + std::to_string(args.alpha_items) +
                            " does not match the " + std::to_string(items) +
                            " questionnaire items in the data");
        }
        report.reliability = survey::cronbach_alpha(table);
        std::printf("cronbach_alpha: %s over %d items (%s)\n",
                    io::format_fixed(report.reliability->alpha, 4).c_str(),
                    report.reliability->item_count,
                    report.reliability->acceptable ? "acceptable" : "below 0.7");
    } else {
        report.skipped["reliability"] = "alpha needs at least 2 respondents";
        std::printf("cronbach_alpha: skipped (needs at least 2 respondents)\n");
    }

    std::printf("experts: %zu checked, %zu retained, %zu violations\n",
                screening.reports.size(), screening.kept.size(), violations);

    if (!args.out.empty()) {
        mark_unrun(report, "validate");
        report::emit(report, args.out, format_set(args.formats));
    }
    return violations == 0 ? 0 : 3;
}

int cmd_ism(const StageArgs& args) {
    AnalysisReport report;
    report.tool_version = kVersion;
    BarrierRegistry registry = load_registry(report, args);
    SsimMatrix ssim = obtain_ssim(report, registry, args);
    pipeline::run_ism(report, ssim);
    mark_unrun(report, "ism");
    report::emit(report, args.out, format_set(args.formats));
    std::printf("ism: %d factors, %d levels -> %s\n", registry.size(),
                report.levels->level_count(), args.out.c_str());
    return 0;
}

int cmd_micmac(const StageArgs& args) {
    AnalysisReport report;
    report.tool_version = kVersion;
    BarrierRegistry registry = load_registry(report, args);

    std::optional<ReachabilityMatrix> frm;
    if (!args.frm_file.empty()) {
        fingerprint(report, args.frm_file);
        frm = io::read_reachability_csv(args.frm_file, registry);
        report.final_reachability = frm;
    } else if (!args.bundle.empty() &&
               std::filesystem::exists(std::filesystem::path(args.bundle) / "frm.csv")) {
        const auto path = std::filesystem::path(args.bundle) / "frm.csv";
        fingerprint(report, path);
        frm = io::read_reachability_csv(path, registry);
        report.final_reachability = frm;
    } else if (!args.responses.empty() || !args.ssim_file.empty()) {
        SsimMatrix ssim = obtain_ssim(report, registry, args);
        pipeline::run_ism(report, ssim);
        frm = report.final_reachability;
    } else {
        throw Error(ErrorCategory::Input, "cli",
                    "no reachability matrix available: pass --frm, --responses or --ssim, or "
                    "point --bundle at a directory with frm.csv (run `barriers ism` first)");
    }

    pipeline::run_micmac(report, *frm, mid_override(args));
    mark_unrun(report, "micmac");
    report::emit(report, args.out, format_set(args.formats));
    std::printf("micmac: mid=%s -> %s\n",
                io::format_fixed(report.quadrants->mid, 2).c_str(), args.out.c_str());
    return 0;
}

int cmd_dematel(const StageArgs& args) {
    AnalysisReport report;
    report.tool_version = kVersion;
    BarrierRegistry registry = load_registry(report, args);

    std::optional<InfluenceMatrix> average;
    if (!args.responses.empty()) {
        RunConfig config;
        config.registry_path = args.registry;
        config.responses_dir = args.responses;
        auto inputs = pipeline::load_survey(config, io::ResponseSections::ScoresOnly);
        for (const auto& entry : std::filesystem::directory_iterator(args.responses)) {
            if (entry.is_regular_file()) fingerprint(report, entry.path());
        }
        average = survey::aggregate_average(inputs.responses);
    } else if (!args.average_file.empty()) {
        fingerprint(report, args.average_file);
        average = io::read_influence_csv(args.average_file, registry, ScoreRole::Average);
    } else {
        const std::filesystem::path candidate =
            std::filesystem::path(args.bundle) / "average.csv";
        if (args.bundle.empty() || !std::filesystem::exists(candidate)) {
            throw Error(ErrorCategory::Input, "cli",
                        "no average matrix available: pass --responses or --average, or point "
                        "--bundle at a directory produced by `barriers dematel` or "
                        "`barriers report`");
        }
        fingerprint(report, candidate);
        average = io::read_influence_csv(candidate, registry, ScoreRole::Average);
    }

    pipeline::run_dematel(report, *average);
    mark_unrun(report, "dematel");
    report::emit(report, args.out, format_set(args.formats));
    std::printf("dematel: threshold=%s, %zu edges -> %s\n",
                io::format_fixed(*report.threshold, 3).c_str(), report.edges->edges.size(),
                args.out.c_str());
    return 0;
}

int cmd_report(const StageArgs& args) {
    RunConfig config;
    config.registry_path = args.registry;
    config.responses_dir = args.responses;
    config.output_dir = args.out;
    config.strict_screening = args.strict;
    config.alpha_item_count = args.alpha_items;
    config.micmac_mid_override = mid_override(args);
    config.formats = format_set(args.formats);
    AnalysisReport report = run_pipeline(config);
    std::fputs(report::summary_text(report).c_str(), stdout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-phase barrier analysis: ISM + MICMAC and DEMATEL over expert surveys"};
    app.set_version_flag("--version", barriers::kVersion);
    app.require_subcommand(1);

    StageArgs validate_args, ism_args, micmac_args, dematel_args, report_args;

    CLI::App* validate =
        app.add_subcommand("validate", "Cross-check responses and compute Cronbach's alpha");
    add_registry_option(validate, validate_args);
    validate->add_option("--responses", validate_args.responses, "Directory of response files")
        ->envname("BARRIERS_RESPONSES")
        ->required();
    validate->add_flag("--strict", validate_args.strict,
                       "Exclude experts with violations from aggregation");
    validate->add_option("--alpha-items", validate_args.alpha_items,
                         "Expected questionnaire item count")
        ->envname("BARRIERS_ALPHA_ITEMS");
    add_out_option(validate, validate_args, /*required=*/false);
    add_formats_option(validate, validate_args);

    CLI::App* ism = app.add_subcommand("ism", "SSIM -> reachability, levels, conical, digraph");
    add_registry_option(ism, ism_args);
    ism->add_option("--responses", ism_args.responses,
                    "Directory of response files (judgment sections only)")
        ->envname("BARRIERS_RESPONSES");
    ism->add_option("--ssim", ism_args.ssim_file, "Aggregated SSIM CSV")
        ->envname("BARRIERS_SSIM");
    ism->add_option("--bundle", ism_args.bundle, "Resume from a previous output directory")
        ->envname("BARRIERS_BUNDLE");
    add_out_option(ism, ism_args, /*required=*/true);
    add_formats_option(ism, ism_args);

    CLI::App* micmac = app.add_subcommand("micmac", "Driving/dependence quadrant classification");
    add_registry_option(micmac, micmac_args);
    micmac->add_option("--responses", micmac_args.responses, "Directory of response files")
        ->envname("BARRIERS_RESPONSES");
    micmac->add_option("--ssim", micmac_args.ssim_file, "Aggregated SSIM CSV")
        ->envname("BARRIERS_SSIM");
    micmac->add_option("--frm", micmac_args.frm_file, "Final reachability CSV")
        ->envname("BARRIERS_FRM");
    micmac->add_option("--bundle", micmac_args.bundle, "Resume from a previous output directory")
        ->envname("BARRIERS_BUNDLE");
    micmac->add_option("--mid", micmac_args.mid, "Quadrant midpoint override (default n/2)")
        ->envname("BARRIERS_MID");
    add_out_option(micmac, micmac_args, /*required=*/true);
    add_formats_option(micmac, micmac_args);

    CLI::App* dematel =
        app.add_subcommand("dematel", "Average -> normalized -> total relation -> ranking");
    add_registry_option(dematel, dematel_args);
    dematel->add_option("--responses", dematel_args.responses,
                        "Directory of response files (score sections only)")
        ->envname("BARRIERS_RESPONSES");
    dematel->add_option("--average", dematel_args.average_file, "Average matrix CSV")
        ->envname("BARRIERS_AVERAGE");
    dematel->add_option("--bundle", dematel_args.bundle,
                        "Resume from a previous output directory")
        ->envname("BARRIERS_BUNDLE");
    add_out_option(dematel, dematel_args, /*required=*/true);
    add_formats_option(dematel, dematel_args);

    CLI::App* report = app.add_subcommand("report", "Full pipeline: survey -> ism -> micmac -> dematel");
    add_registry_option(report, report_args);
    report->add_option("--responses", report_args.responses, "Directory of response files")
        ->envname("BARRIERS_RESPONSES")
        ->required();
    report->add_flag("--strict", report_args.strict,
                     "Exclude experts with violations from aggregation");
    report->add_option("--alpha-items", report_args.alpha_items,
                       "Expected questionnaire item count")
        ->envname("BARRIERS_ALPHA_ITEMS");
    report->add_option("--mid", report_args.mid, "Quadrant midpoint override (default n/2)")
        ->envname("BARRIERS_MID");
    add_out_option(report, report_args, /*required=*/true);
    add_formats_option(report, report_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(validate_args);
        if (ism->parsed()) return cmd_ism(ism_args);
        if (micmac->parsed()) return cmd_micmac(micmac_args);
        if (dematel->parsed()) return cmd_dematel(dematel_args);
        if (report->parsed()) return cmd_report(report_args);
    } catch (const barriers::Error& e) {
        const char* category = e.category() == barriers::ErrorCategory::Input ? "input"
                               : e.category() == barriers::ErrorCategory::Validation
                                   ? "validation"
                                   : "numeric";
        nlohmann::json err{{"error",
                            {{"stage", e.stage()}, {"category", category},
                             {"message", e.what()}}}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return e.exit_code();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "{\"error\":{\"stage\":\"cli\",\"category\":\"internal\",\"message\":\"%s\"}}\n",
                     e.what());
        return 1;
    }
    return 0;
}
