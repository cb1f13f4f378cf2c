#include "barriers/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "barriers/errors.hpp"

namespace barriers::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::string_view origin, std::size_t line_no, const std::string& what) {
    throw Error(ErrorCategory::Input, "io",
                std::string(origin) + ":" + std::to_string(line_no) + ": " + what);
}

int parse_int(std::string_view text, std::string_view origin, std::size_t line_no) {
    int value = 0;
    bool any = false;
    for (char c : text) {
        if (c < '0' || c > '9') fail(origin, line_no, "not an integer: '" + std::string(text) + "'");
        if (value > 100000000) fail(origin, line_no, "integer too large");
        value = value * 10 + (c - '0');
        any = true;
    }
    if (!any) fail(origin, line_no, "empty integer field");
    return value;
}

/// Shared check for the "first row and first column are abbreviations"
/// matrix layout. Returns the data lines (one per factor).
std::vector<std::string_view> check_matrix_grid(std::string_view text,
                                                const BarrierRegistry& registry,
                                                std::string_view origin) {
    const int n = registry.size();
    auto lines = split_lines(text);
    if (static_cast<int>(lines.size()) != n + 1) {
        fail(origin, lines.size(), "expected header plus " + std::to_string(n) +
                                       " rows, got " + std::to_string(lines.size()) + " lines");
    }
    auto header = split_fields(lines[0]);
    if (static_cast<int>(header.size()) != n + 1) {
        fail(origin, 1, "header must have " + std::to_string(n + 1) + " fields");
    }
    for (int j = 1; j <= n; ++j) {
        if (trim(header[static_cast<std::size_t>(j)]) != registry.entry(j).abbr) {
            fail(origin, 1, "column " + std::to_string(j) + " must be '" +
                                registry.entry(j).abbr + "' (registry order), got '" +
                                std::string(header[static_cast<std::size_t>(j)]) + "'");
        }
    }
    std::vector<std::string_view> rows(lines.begin() + 1, lines.end());
    for (int i = 1; i <= n; ++i) {
        auto fields = split_fields(rows[static_cast<std::size_t>(i - 1)]);
        if (static_cast<int>(fields.size()) != n + 1) {
            fail(origin, static_cast<std::size_t>(i) + 1,
                 "row must have " + std::to_string(n + 1) + " fields");
        }
        if (trim(fields[0]) != registry.entry(i).abbr) {
            fail(origin, static_cast<std::size_t>(i) + 1,
                 "row " + std::to_string(i) + " must be '" + registry.entry(i).abbr +
                     "' (registry order)");
        }
    }
    return rows;
}

}  // namespace

// ---- registry ---------------------------------------------------------------

BarrierRegistry parse_registry(std::string_view text, std::string_view origin) {
    auto lines = split_lines(text);
    if (lines.empty()) fail(origin, 1, "empty registry file");
    if (trim(lines[0]) != "index,abbr,name") {
        fail(origin, 1, "registry header must be 'index,abbr,name'");
    }
    if (lines.size() == 1) fail(origin, 1, "registry lists no factors");
    std::vector<BarrierEntry> entries;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::string_view line = lines[k];
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos) {
            fail(origin, k + 1, "registry row needs index,abbr,name");
        }
        BarrierEntry e;
        e.index = parse_int(trim(line.substr(0, c1)), origin, k + 1);
        e.abbr = std::string(trim(line.substr(c1 + 1, c2 - c1 - 1)));
        e.name = std::string(trim(line.substr(c2 + 1)));
        entries.push_back(std::move(e));
    }
    try {
        return BarrierRegistry(std::move(entries));
    } catch (const Error& e) {
        throw Error(e.category(), e.stage(), std::string(origin) + ": " + e.what());
    }
}

BarrierRegistry read_registry(const std::filesystem::path& path) {
    return parse_registry(read_file(path), path.string());
}

std::string registry_csv(const BarrierRegistry& registry) {
    std::string out = "index,abbr,name\n";
    for (const BarrierEntry& e : registry.entries()) {
        out += std::to_string(e.index);
        out += ',';
        out += e.abbr;
        out += ',';
        out += e.name;
        out += '\n';
    }
    return out;
}

// ---- score matrices ---------------------------------------------------------

InfluenceMatrix parse_influence_csv(std::string_view text, const BarrierRegistry& registry,
                                    ScoreRole role, std::string_view origin) {
    const int n = registry.size();
    auto rows = check_matrix_grid(text, registry, origin);
    std::vector<double> values(static_cast<std::size_t>(n) * n);
    std::vector<Decimal> source(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        auto fields = split_fields(rows[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= n; ++j) {
            Decimal d;
            std::string_view cell = trim(fields[static_cast<std::size_t>(j)]);
            if (!Decimal::try_parse(cell, d)) {
                fail(origin, static_cast<std::size_t>(i) + 1,
                     "cell (" + registry.entry(i).abbr + "," + registry.entry(j).abbr +
                         ") is not a number: '" + std::string(cell) + "'");
            }
            const std::size_t slot = static_cast<std::size_t>(i - 1) * n + (j - 1);
            values[slot] = d.to_double();
            source[slot] = d;
        }
    }
    try {
        return InfluenceMatrix(role, n, std::move(values), std::move(source));
    } catch (const Error& e) {
        throw Error(e.category(), e.stage(), std::string(origin) + ": " + e.what());
    }
}

InfluenceMatrix read_influence_csv(const std::filesystem::path& path,
                                   const BarrierRegistry& registry, ScoreRole role) {
    return parse_influence_csv(read_file(path), registry, role, path.string());
}

std::string influence_csv(const InfluenceMatrix& m, const BarrierRegistry& registry,
                          int places) {
    const int n = m.size();
    std::string out;
    for (int j = 1; j <= n; ++j) {
        out += ',';
        out += registry.entry(j).abbr;
    }
    out += '\n';
    for (int i = 1; i <= n; ++i) {
        out += registry.entry(i).abbr;
        for (int j = 1; j <= n; ++j) {
            out += ',';
            if (const Decimal* d = m.source_at(i, j)) {
                out += d->to_string();
            } else {
                out += format_fixed(m.at(i, j), places);
            }
        }
        out += '\n';
    }
    return out;
}

// ---- reachability matrices ----------------------------------------------------

ReachabilityMatrix parse_reachability_csv(std::string_view text,
                                          const BarrierRegistry& registry,
                                          std::string_view origin) {
    const int n = registry.size();
    auto rows = check_matrix_grid(text, registry, origin);
    std::vector<Reach> cells(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        auto fields = split_fields(rows[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= n; ++j) {
            std::string_view cell = trim(fields[static_cast<std::size_t>(j)]);
            Reach r;
            if (cell == "0") {
                r = Reach::Zero;
            } else if (cell == "1") {
                r = Reach::One;
            } else if (cell == "1*") {
                r = Reach::OneStar;
            } else {
                fail(origin, static_cast<std::size_t>(i) + 1,
                     "cell must be 0, 1 or 1*, got '" + std::string(cell) + "'");
            }
            cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] = r;
        }
    }
    try {
        return ReachabilityMatrix(n, std::move(cells));
    } catch (const Error& e) {
        throw Error(e.category(), e.stage(), std::string(origin) + ": " + e.what());
    }
}

ReachabilityMatrix read_reachability_csv(const std::filesystem::path& path,
                                         const BarrierRegistry& registry) {
    return parse_reachability_csv(read_file(path), registry, path.string());
}

std::string reachability_csv(const ReachabilityMatrix& m, const BarrierRegistry& registry) {
    const int n = m.size();
    std::string out;
    for (int j = 1; j <= n; ++j) {
        out += ',';
        out += registry.entry(j).abbr;
    }
    out += '\n';
    for (int i = 1; i <= n; ++i) {
        out += registry.entry(i).abbr;
        for (int j = 1; j <= n; ++j) {
            out += ',';
            out += reach_literal(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

// ---- SSIM ---------------------------------------------------------------------

SsimMatrix parse_ssim_csv(std::string_view text, const BarrierRegistry& registry,
                          std::string_view origin) {
    const int n = registry.size();
    auto rows = check_matrix_grid(text, registry, origin);
    std::vector<RelationSymbol> upper(SsimMatrix::pair_count(n));
    for (int i = 1; i <= n; ++i) {
        auto fields = split_fields(rows[static_cast<std::size_t>(i - 1)]);
        for (int j = 1; j <= n; ++j) {
            std::string_view cell = trim(fields[static_cast<std::size_t>(j)]);
            if (j <= i) {
                if (!cell.empty()) {
                    fail(origin, static_cast<std::size_t>(i) + 1,
                         "diagonal and lower-triangle cells must be empty, got '" +
                             std::string(cell) + "'");
                }
                continue;
            }
            if (cell.empty()) {
                fail(origin, static_cast<std::size_t>(i) + 1,
                     "missing judgment for pair (" + registry.entry(i).abbr + "," +
                         registry.entry(j).abbr + ")");
            }
            upper[SsimMatrix::pair_slot(n, i, j)] = parse_relation_symbol(cell);
        }
    }
    return SsimMatrix(n, std::move(upper));
}

SsimMatrix read_ssim_csv(const std::filesystem::path& path, const BarrierRegistry& registry) {
    return parse_ssim_csv(read_file(path), registry, path.string());
}

std::string ssim_csv(const SsimMatrix& ssim, const BarrierRegistry& registry) {
    const int n = ssim.size();
    std::string out;
    for (int j = 1; j <= n; ++j) {
        out += ',';
        out += registry.entry(j).abbr;
    }
    out += '\n';
    for (int i = 1; i <= n; ++i) {
        out += registry.entry(i).abbr;
        for (int j = 1; j <= n; ++j) {
            out += ',';
            if (j > i) out += to_char(ssim.at(i, j));
        }
        out += '\n';
    }
    return out;
}

// ---- expert responses -----------------------------------------------------------

survey::ExpertResponse parse_expert_response(std::string_view text, std::string_view expert_id,
                                             const BarrierRegistry& registry,
                                             ResponseSections sections,
                                             std::string_view origin) {
    const int n = registry.size();
    auto lines = split_lines(text);

    std::size_t ssim_start = 0, scores_start = 0;
    bool have_ssim = false, have_scores = false;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        std::string_view line = trim(lines[k]);
        if (line == "[SSIM]") {
            if (have_ssim) fail(origin, k + 1, "duplicate [SSIM] section");
            have_ssim = true;
            ssim_start = k + 1;
        } else if (line == "[SCORES]") {
            if (have_scores) fail(origin, k + 1, "duplicate [SCORES] section");
            have_scores = true;
            scores_start = k + 1;
        }
    }

    survey::ExpertResponse response;
    response.expert_id = std::string(expert_id);

    const bool want_ssim = sections != ResponseSections::ScoresOnly;
    const bool want_scores = sections != ResponseSections::SsimOnly;

    if (want_ssim) {
        if (!have_ssim) fail(origin, 1, "missing [SSIM] section");
        std::vector<RelationSymbol> upper(SsimMatrix::pair_count(n));
        std::vector<char> seen(upper.size(), 0);
        for (std::size_t k = ssim_start; k < lines.size(); ++k) {
            std::string_view line = trim(lines[k]);
            if (line.empty()) continue;
            if (line.front() == '[') break;
            auto fields = split_fields(line);
            if (fields.size() != 3) fail(origin, k + 1, "SSIM row needs i,j,SYMBOL");
            int i = parse_int(trim(fields[0]), origin, k + 1);
            int j = parse_int(trim(fields[1]), origin, k + 1);
            if (i < 1 || j <= i || j > n) {
                fail(origin, k + 1,
                     "pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not in the upper triangle");
            }
            std::size_t slot = SsimMatrix::pair_slot(n, i, j);
            if (seen[slot]) {
                fail(origin, k + 1,
                     "duplicate judgment for pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
            }
            seen[slot] = 1;
            upper[slot] = parse_relation_symbol(trim(fields[2]));
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                if (!seen[SsimMatrix::pair_slot(n, i, j)]) {
                    fail(origin, lines.size(),
                         "missing judgment for pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
                }
            }
        }
        response.ssim = SsimMatrix(n, std::move(upper));
    }

    if (want_scores) {
        if (!have_scores) fail(origin, 1, "missing [SCORES] section");
        std::string block;
        for (std::size_t k = scores_start; k < lines.size(); ++k) {
            std::string_view line = lines[k];
            if (!trim(line).empty() && trim(line).front() == '[') break;
            block += std::string(line);
            block += '\n';
        }
        response.scores = parse_influence_csv(block, registry, ScoreRole::ExpertResponse,
                                              std::string(origin) + "#scores");
    }

    return response;
}

survey::ExpertResponse read_expert_response(const std::filesystem::path& path,
                                            const BarrierRegistry& registry,
                                            ResponseSections sections) {
    return parse_expert_response(read_file(path), path.stem().string(), registry, sections,
                                 path.string());
}

std::vector<survey::ExpertResponse> read_responses_dir(const std::filesystem::path& dir,
                                                       const BarrierRegistry& registry,
                                                       ResponseSections sections) {
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorCategory::Input, "survey",
                    "responses directory does not exist: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().filename().string().front() != '.') {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw Error(ErrorCategory::Input, "survey",
                    "no response files in " + dir.string());
    }
    std::vector<survey::ExpertResponse> responses;
    responses.reserve(files.size());
    for (const auto& f : files) {
        responses.push_back(read_expert_response(f, registry, sections));
    }
    return responses;
}

std::string expert_response_text(const survey::ExpertResponse& response,
                                 const BarrierRegistry& registry) {
    std::string out;
    if (response.ssim) {
        const int n = response.ssim->size();
        out += "[SSIM]\n";
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                out += std::to_string(i);
                out += ',';
                out += std::to_string(j);
                out += ',';
                out += to_char(response.ssim->at(i, j));
                out += '\n';
            }
        }
    }
    if (response.scores) {
        out += "[SCORES]\n";
        out += influence_csv(*response.scores, registry, 0);
    }
    return out;
}

// ---- plumbing ---------------------------------------------------------------------

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCategory::Input, "io", "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCategory::Input, "io", "cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            throw Error(ErrorCategory::Input, "io", "short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string format_fixed(double value, int places) {
    double scale = 1.0;
    for (int p = 0; p < places; ++p) scale *= 10.0;
    const double scaled = value * scale;
    if (!std::isfinite(scaled) || std::fabs(scaled) >= 9.2e18) {
        // Out of integer range; defer to printf (never hit by report values).
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", places, value);
        return buf;
    }
    long long units = std::llround(scaled);  // ties away from zero
    std::string digits = std::to_string(units < 0 ? -units : units);
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    std::string out;
    if (units < 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string file_fingerprint(const std::filesystem::path& path) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(read_file(path)));
    return std::string("fnv1a64:") + buf;
}

}  // namespace barriers::io
