#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "barriers/influence.hpp"
#include "barriers/reachability.hpp"
#include "barriers/registry.hpp"
#include "barriers/relation.hpp"
#include "barriers/survey.hpp"

namespace barriers::io {

// ---- registry -------------------------------------------------------------
// CSV, header "index,abbr,name"; the name field runs to end of line so it
// may contain commas.

BarrierRegistry parse_registry(std::string_view text, std::string_view origin = "registry");
BarrierRegistry read_registry(const std::filesystem::path& path);
std::string registry_csv(const BarrierRegistry& registry);

// ---- score matrices ---------------------------------------------------------
// CSV, first row and first column carry the registry abbreviations in
// registry order.

InfluenceMatrix parse_influence_csv(std::string_view text, const BarrierRegistry& registry,
                                    ScoreRole role, std::string_view origin = "matrix");
InfluenceMatrix read_influence_csv(const std::filesystem::path& path,
                                   const BarrierRegistry& registry, ScoreRole role);

/// Parsed matrices re-emit their exact source cells; computed ones are
/// rounded half-away-from-zero to `places` decimals.
std::string influence_csv(const InfluenceMatrix& m, const BarrierRegistry& registry,
                          int places = 3);

// ---- reachability matrices --------------------------------------------------
// Same layout, cell literals exactly "1", "1*", "0".

ReachabilityMatrix parse_reachability_csv(std::string_view text,
                                          const BarrierRegistry& registry,
                                          std::string_view origin = "matrix");
ReachabilityMatrix read_reachability_csv(const std::filesystem::path& path,
                                         const BarrierRegistry& registry);
std::string reachability_csv(const ReachabilityMatrix& m, const BarrierRegistry& registry);

// ---- SSIM -------------------------------------------------------------------
// Same header layout; upper-triangle cells hold V/A/X/O, diagonal and
// lower triangle stay empty.

SsimMatrix parse_ssim_csv(std::string_view text, const BarrierRegistry& registry,
                          std::string_view origin = "ssim");
SsimMatrix read_ssim_csv(const std::filesystem::path& path, const BarrierRegistry& registry);
std::string ssim_csv(const SsimMatrix& ssim, const BarrierRegistry& registry);

// ---- expert responses -------------------------------------------------------
// One file per expert: a "[SSIM]" section of "i,j,SYMBOL" rows covering the
// whole upper triangle, then a "[SCORES]" section holding the full score
// matrix CSV. The expert id is the filename stem.

/// Which sections to load; stages that need only one side skip the other.
enum class ResponseSections : unsigned char { Both, SsimOnly, ScoresOnly };

survey::ExpertResponse parse_expert_response(std::string_view text, std::string_view expert_id,
                                             const BarrierRegistry& registry,
                                             ResponseSections sections = ResponseSections::Both,
                                             std::string_view origin = "response");
survey::ExpertResponse read_expert_response(const std::filesystem::path& path,
                                            const BarrierRegistry& registry,
                                            ResponseSections sections = ResponseSections::Both);

/// All regular files in the directory, sorted by filename.
std::vector<survey::ExpertResponse> read_responses_dir(const std::filesystem::path& dir,
                                                       const BarrierRegistry& registry,
                                                       ResponseSections sections =
                                                           ResponseSections::Both);

std::string expert_response_text(const survey::ExpertResponse& response,
                                 const BarrierRegistry& registry);

// ---- plumbing ---------------------------------------------------------------

std::string read_file(const std::filesystem::path& path);

/// Write-temp-then-rename; the destination is never observed half-written.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Fixed-point rendering, ties away from zero ("-0.0005" at 3 -> "-0.001").
std::string format_fixed(double value, int places);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// "fnv1a64:<16 hex digits>" over the file's bytes.
std::string file_fingerprint(const std::filesystem::path& path);

}  // namespace barriers::io
