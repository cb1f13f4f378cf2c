#include "barriers/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "barriers/errors.hpp"
#include "barriers/io.hpp"

namespace barriers::report {

using nlohmann::json;

namespace {

std::string join_set(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(xs[k]);
    }
    return out;
}

const BarrierRegistry& need_registry(const AnalysisReport& report) {
    if (!report.registry) {
        throw Error(ErrorCategory::Input, "report", "report carries no registry");
    }
    return *report.registry;
}

json matrix_json(const InfluenceMatrix& m, const BarrierRegistry& registry) {
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    json abbrs = json::array();
    for (const auto& e : registry.entries()) abbrs.push_back(e.abbr);
    return json{{"role", to_string(m.role())}, {"n", m.size()}, {"abbrs", abbrs},
                {"rows", rows}};
}

json reachability_json(const ReachabilityMatrix& m) {
    json rows = json::array();
    for (int i = 1; i <= m.size(); ++i) {
        json row = json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(std::string(reach_literal(m.at(i, j))));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.size()},
                {"rows", rows},
                {"driving", m.driving_powers()},
                {"dependence", m.dependence_powers()}};
}

json levels_json(const LevelPartition& levels, const BarrierRegistry& registry) {
    json out = json::array();
    for (const LevelRecord& r : levels.records()) {
        out.push_back(json{{"factor", r.factor},
                           {"abbr", registry.entry(r.factor).abbr},
                           {"level", r.level},
                           {"reachability", r.reachability_set},
                           {"antecedent", r.antecedent_set},
                           {"intersection", r.intersection_set}});
    }
    return out;
}

json digraph_json(const ism::IsmDigraph& graph, const BarrierRegistry& registry) {
    json nodes = json::array();
    for (const auto& node : graph.nodes) {
        json members = json::array();
        for (int m : node.members) members.push_back(registry.entry(m).abbr);
        nodes.push_back(json{{"members", members}, {"level", node.level}});
    }
    json edges = json::array();
    for (const auto& [from, to] : graph.edges) edges.push_back(json::array({from, to}));
    json mutual = json::array();
    for (const auto& [i, j] : graph.mutual_pairs) {
        mutual.push_back(json::array({registry.entry(i).abbr, registry.entry(j).abbr}));
    }
    return json{{"nodes", nodes}, {"edges", edges}, {"mutual", mutual}};
}

json micmac_json(const micmac::QuadrantAssignment& q, const BarrierRegistry& registry) {
    json points = json::array();
    for (const auto& e : q.entries) {
        points.push_back(json{{"abbr", registry.entry(e.factor).abbr},
                              {"driving", e.driving},
                              {"dependence", e.dependence},
                              {"quadrant", micmac::to_string(e.quadrant)}});
    }
    return json{{"mid", q.mid}, {"points", points}};
}

json cause_effect_json(const dematel::CauseEffectTable& table,
                       const BarrierRegistry& registry) {
    json rows = json::array();
    for (const auto& r : table.rows) {
        rows.push_back(json{{"abbr", registry.entry(r.factor).abbr},
                            {"row_total", r.row_total},
                            {"column_total", r.column_total},
                            {"prominence", r.prominence},
                            {"relation", r.relation},
                            {"group", dematel::to_string(r.group)},
                            {"zero_relation", r.zero_relation}});
    }
    return rows;
}

json edges_json(const dematel::InfluenceEdgeSet& edges, const BarrierRegistry& registry) {
    json out = json::array();
    for (const auto& e : edges.edges) {
        out.push_back(json{{"from", registry.entry(e.from).abbr},
                           {"to", registry.entry(e.to).abbr},
                           {"weight", e.weight}});
    }
    return json{{"threshold", edges.threshold}, {"edges", out}};
}

std::string levels_csv(const LevelPartition& levels, const BarrierRegistry& registry) {
    std::string out = "index,abbr,level,reachability_set,antecedent_set,intersection_set\n";
    for (const LevelRecord& r : levels.records()) {
        out += std::to_string(r.factor) + ',' + registry.entry(r.factor).abbr + ',' +
               std::to_string(r.level) + ',' + join_set(r.reachability_set) + ',' +
               join_set(r.antecedent_set) + ',' + join_set(r.intersection_set) + '\n';
    }
    return out;
}

std::string conical_csv(const ism::ConicalMatrix& conical, const BarrierRegistry& registry) {
    const int n = conical.cells.size();
    std::string out;
    for (int k = 0; k < n; ++k) {
        out += ',';
        out += registry.entry(conical.order[static_cast<std::size_t>(k)]).abbr;
    }
    out += ",driving_power,level\n";
    for (int r = 0; r < n; ++r) {
        out += registry.entry(conical.order[static_cast<std::size_t>(r)]).abbr;
        for (int c = 0; c < n; ++c) {
            out += ',';
            out += reach_literal(conical.cells.at(r + 1, c + 1));
        }
        out += ',' + std::to_string(conical.row_driving[static_cast<std::size_t>(r)]);
        out += ',' + std::to_string(conical.row_level[static_cast<std::size_t>(r)]);
        out += '\n';
    }
    out += "dependence_power";
    for (int c = 0; c < n; ++c) {
        out += ',' + std::to_string(conical.col_dependence[static_cast<std::size_t>(c)]);
    }
    out += ",,\nlevel";
    for (int c = 0; c < n; ++c) {
        out += ',' + std::to_string(conical.col_level[static_cast<std::size_t>(c)]);
    }
    out += ",,\n";
    return out;
}

std::string micmac_csv(const micmac::QuadrantAssignment& q, const BarrierRegistry& registry) {
    std::string out = "abbr,driving,dependence,quadrant\n";
    for (const auto& e : q.entries) {
        out += registry.entry(e.factor).abbr + ',' + std::to_string(e.driving) + ',' +
               std::to_string(e.dependence) + ',' + micmac::to_string(e.quadrant) + '\n';
    }
    return out;
}

std::string cause_effect_csv(const dematel::CauseEffectTable& table,
                             const BarrierRegistry& registry) {
    std::string out = "abbr,row_total,column_total,prominence,relation,group\n";
    for (const auto& r : table.rows) {
        out += registry.entry(r.factor).abbr + ',' + io::format_fixed(r.row_total, 3) + ',' +
               io::format_fixed(r.column_total, 3) + ',' + io::format_fixed(r.prominence, 3) +
               ',' + io::format_fixed(r.relation, 3) + ',' + dematel::to_string(r.group) +
               '\n';
    }
    return out;
}

std::string edges_csv(const dematel::InfluenceEdgeSet& edges,
                      const BarrierRegistry& registry) {
    std::string out = "from,to,weight\n";
    for (const auto& e : edges.edges) {
        out += registry.entry(e.from).abbr + ',' + registry.entry(e.to).abbr + ',' +
               io::format_fixed(e.weight, 3) + '\n';
    }
    return out;
}

std::string ranking_csv(const AnalysisReport& report, const BarrierRegistry& registry) {
    std::string out = "rank,abbr,prominence\n";
    for (std::size_t k = 0; k < report.ranking.size(); ++k) {
        const int factor = report.ranking[k];
        double prominence = 0.0;
        for (const auto& r : report.cause_effect->rows) {
            if (r.factor == factor) prominence = r.prominence;
        }
        out += std::to_string(k + 1) + ',' + registry.entry(factor).abbr + ',' +
               io::format_fixed(prominence, 3) + '\n';
    }
    return out;
}

}  // namespace

std::string report_json(const AnalysisReport& report) {
    const BarrierRegistry& registry = need_registry(report);
    json j;

    json reg = json::array();
    for (const auto& e : registry.entries()) {
        reg.push_back(json{{"index", e.index}, {"abbr", e.abbr}, {"name", e.name}});
    }
    j["registry"] = reg;

    json consistency = json::array();
    for (const auto& cr : report.consistency) {
        json violations = json::array();
        for (const auto& v : cr.violations) {
            violations.push_back(json{{"i", v.i},
                                      {"j", v.j},
                                      {"rule", survey::to_string(v.rule)},
                                      {"detail", v.detail}});
        }
        consistency.push_back(json{{"expert", cr.expert_id}, {"violations", violations}});
    }
    j["consistency"] = consistency;
    j["retained_experts"] = report.retained_experts;
    j["excluded_experts"] = report.excluded_experts;

    if (report.reliability) {
        const auto& r = *report.reliability;
        j["reliability"] = json{{"item_count", r.item_count},
                                {"item_variances", r.item_variances},
                                {"total_variance", r.total_variance},
                                {"alpha", r.alpha},
                                {"acceptable", r.acceptable}};
    }

    if (report.ssim) {
        json cells = json::array();
        for (int i = 1; i <= report.ssim->size(); ++i) {
            for (int jj = i + 1; jj <= report.ssim->size(); ++jj) {
                cells.push_back(json{
                    {"i", i}, {"j", jj},
                    {"symbol", std::string(1, to_char(report.ssim->at(i, jj)))}});
            }
        }
        j["ssim"] = json{{"n", report.ssim->size()}, {"cells", cells}};
    }
    if (report.initial_reachability) {
        j["initial_reachability"] = reachability_json(*report.initial_reachability);
    }
    if (report.final_reachability) {
        j["final_reachability"] = reachability_json(*report.final_reachability);
    }
    if (report.levels) j["levels"] = levels_json(*report.levels, registry);
    if (report.conical) {
        json order = json::array();
        for (int f : report.conical->order) order.push_back(registry.entry(f).abbr);
        j["conical"] = json{{"order", order},
                            {"matrix", reachability_json(report.conical->cells)},
                            {"row_driving", report.conical->row_driving},
                            {"row_level", report.conical->row_level},
                            {"col_dependence", report.conical->col_dependence},
                            {"col_level", report.conical->col_level}};
    }
    if (report.digraph) j["digraph"] = digraph_json(*report.digraph, registry);
    if (report.quadrants) j["micmac"] = micmac_json(*report.quadrants, registry);

    if (report.average) j["average"] = matrix_json(*report.average, registry);
    if (report.normalized) j["normalized"] = matrix_json(*report.normalized, registry);
    if (report.divisor) j["divisor"] = *report.divisor;
    if (report.total) j["total_relation"] = matrix_json(*report.total, registry);
    if (report.cause_effect) j["cause_effect"] = cause_effect_json(*report.cause_effect, registry);
    if (report.threshold) j["threshold"] = *report.threshold;
    if (report.edges) j["influence_edges"] = edges_json(*report.edges, registry);
    if (!report.ranking.empty()) {
        json ranking = json::array();
        for (int f : report.ranking) ranking.push_back(registry.entry(f).abbr);
        j["ranking"] = ranking;
    }

    if (!report.skipped.empty()) j["skipped"] = report.skipped;
    j["provenance"] = json{{"inputs", report.input_fingerprints},
                           {"tool_version", report.tool_version}};

    return j.dump(2) + "\n";
}

std::string summary_text(const AnalysisReport& report) {
    const BarrierRegistry& registry = need_registry(report);
    std::string out = "Barrier analysis summary\n========================\n";
    out += "Factors: " + std::to_string(registry.size()) + "\n";
    if (!report.retained_experts.empty() || !report.excluded_experts.empty()) {
        out += "Experts retained: " + std::to_string(report.retained_experts.size()) + "/" +
               std::to_string(report.retained_experts.size() +
                              report.excluded_experts.size()) +
               "\n";
    }
    std::size_t violation_count = 0;
    for (const auto& cr : report.consistency) violation_count += cr.violations.size();
    if (!report.consistency.empty()) {
        out += "Consistency violations: " + std::to_string(violation_count) + "\n";
    }
    if (report.reliability) {
        out += "Cronbach's alpha: " + io::format_fixed(report.reliability->alpha, 4) +
               (report.reliability->acceptable ? " (acceptable, >= 0.7)\n"
                                               : " (below the 0.7 bar)\n");
    } else if (auto it = report.skipped.find("reliability"); it != report.skipped.end()) {
        out += "Cronbach's alpha: skipped — " + it->second + "\n";
    }

    if (report.levels) {
        out += "\nISM levels (level 1 = most dependent):\n";
        for (int level = 1; level <= report.levels->level_count(); ++level) {
            out += "  Level " + std::to_string(level) + ":";
            bool first = true;
            for (int f : report.levels->factors_at(level)) {
                out += first ? " " : ", ";
                out += registry.entry(f).abbr;
                first = false;
            }
            out += "\n";
        }
    }

    if (report.quadrants) {
        out += "\nMICMAC quadrants (mid = " + io::format_fixed(report.quadrants->mid, 1) +
               "):\n";
        for (micmac::Quadrant q :
             {micmac::Quadrant::Independent, micmac::Quadrant::Linkage,
              micmac::Quadrant::Dependent, micmac::Quadrant::Autonomous}) {
            std::string members;
            for (const auto& e : report.quadrants->entries) {
                if (e.quadrant != q) continue;
                if (!members.empty()) members += ", ";
                members += registry.entry(e.factor).abbr;
            }
            out += std::string("  ") + micmac::to_string(q) + ": " +
                   (members.empty() ? "(none)" : members) + "\n";
        }
    }

    if (report.cause_effect) {
        out += "\nDEMATEL cause/effect (by R-C):\n";
        std::vector<const dematel::CauseEffectRow*> rows;
        for (const auto& r : report.cause_effect->rows) rows.push_back(&r);
        std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
            if (a->relation != b->relation) return a->relation > b->relation;
            return a->factor < b->factor;
        });
        for (const auto* r : rows) {
            out += "  " + std::string(dematel::to_string(r->group)) + "  " +
                   registry.entry(r->factor).abbr + "  R-C=" +
                   io::format_fixed(r->relation, 3) + "  R+C=" +
                   io::format_fixed(r->prominence, 3) + "\n";
        }
        const dematel::CauseEffectRow* top1 = rows.empty() ? nullptr : rows[0];
        const dematel::CauseEffectRow* top2 = rows.size() > 1 ? rows[1] : nullptr;
        if (top1 && top1->group == dematel::InfluenceGroup::Cause) {
            out += "Top causes: " + registry.entry(top1->factor).name;
            if (top2 && top2->group == dematel::InfluenceGroup::Cause) {
                out += ", " + registry.entry(top2->factor).name;
            }
            out += "\n";
        }
    }
    if (report.threshold) {
        out += "Influence threshold: " + io::format_fixed(*report.threshold, 3) + "\n";
    }
    if (!report.ranking.empty()) {
        out += "Ranking (by prominence): ";
        for (std::size_t k = 0; k < report.ranking.size(); ++k) {
            if (k) out += " > ";
            out += registry.entry(report.ranking[k]).abbr;
        }
        out += "\n";
    }
    return out;
}

void emit(const AnalysisReport& report, const std::filesystem::path& out_dir,
          const std::set<std::string>& formats) {
    const BarrierRegistry& registry = need_registry(report);
    std::filesystem::create_directories(out_dir);
    const bool csv = formats.contains("csv");
    const bool dot = formats.contains("dot");
    const bool js = formats.contains("json");

    auto put = [&](const char* name, const std::string& content) {
        io::write_file_atomic(out_dir / name, content);
    };

    if (csv) {
        put("registry.csv", io::registry_csv(registry));
        if (report.ssim) put("ssim.csv", io::ssim_csv(*report.ssim, registry));
        if (report.initial_reachability) {
            put("irm.csv", io::reachability_csv(*report.initial_reachability, registry));
        }
        if (report.final_reachability) {
            put("frm.csv", io::reachability_csv(*report.final_reachability, registry));
        }
        if (report.levels) put("levels.csv", levels_csv(*report.levels, registry));
        if (report.conical) put("conical.csv", conical_csv(*report.conical, registry));
        if (report.quadrants) put("micmac.csv", micmac_csv(*report.quadrants, registry));
        if (report.average) put("average.csv", io::influence_csv(*report.average, registry));
        if (report.normalized) {
            put("normalized.csv", io::influence_csv(*report.normalized, registry));
        }
        if (report.total) put("total.csv", io::influence_csv(*report.total, registry));
        if (report.cause_effect) {
            put("cause_effect.csv", cause_effect_csv(*report.cause_effect, registry));
        }
        if (report.edges) put("edges.csv", edges_csv(*report.edges, registry));
        if (!report.ranking.empty() && report.cause_effect) {
            put("ranking.csv", ranking_csv(report, registry));
        }
    }
    if (dot) {
        if (report.digraph) put("digraph.dot", ism::digraph_dot(*report.digraph, registry));
        if (report.cause_effect && report.edges) {
            put("map.dot", dematel::relation_map_dot(*report.cause_effect, *report.edges,
                                                     registry));
        }
    }
    if (js) {
        if (report.digraph) {
            put("digraph.json", digraph_json(*report.digraph, registry).dump(2) + "\n");
        }
        if (report.quadrants) {
            put("micmac.json", micmac_json(*report.quadrants, registry).dump(2) + "\n");
        }
        if (report.edges) {
            put("map.json", edges_json(*report.edges, registry).dump(2) + "\n");
        }
        put("report.json", report_json(report));
    }
    put("summary.txt", summary_text(report));
}

}  // namespace barriers::report
