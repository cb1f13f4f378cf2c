#pragma once

// Golden study fixtures: a 13-factor survey with 12 retained experts.
// Inputs are the published SSIM, binary, and average matrices; the closure,
// partition, conical, quadrant, and DEMATEL tables are the frozen expected
// outputs the suites check against.

#include <array>
#include <string>
#include <vector>

#include "barriers/influence.hpp"
#include "barriers/io.hpp"
#include "barriers/reachability.hpp"
#include "barriers/registry.hpp"
#include "barriers/relation.hpp"

namespace fixtures {

inline constexpr int kN = 13;

inline constexpr std::array<const char*, 13> kAbbr = {
    "RC", "HIC", "LSW", "DSP", "TI", "SC", "CEC", "AA", "DIM", "RI", "ROI", "EE", "CCN"};

inline constexpr std::array<const char*, 13> kName = {
    "Regulatory Compliance",
    "High implementation cost",
    "Lack of skilled workforce",
    "Data security and privacy",
    "Technological infrastructure",
    "Scalability challenges",
    "Cultural and ethical consideration",
    "Acceptance and adoption",
    "Data integration and management issue",
    "Reliability issue",
    "ROI uncertainty",
    "Extreme environment issue",
    "Cold chain network"};

// Upper-triangle judgments, row i holding pairs (i, i+1)..(i, 13).
inline constexpr std::array<const char*, 12> kSsimRows = {
    "VVVVVVVVVVVV",  // 1
    "AAAAOVAVXAA",   // 2
    "AAVXVXVVOA",    // 3
    "XXXVXVVOA",     // 4
    "XOVXVVXA",      // 5
    "OVXVVXA",       // 6
    "VOVOOA",        // 7
    "AXAAA",         // 8
    "VVXA",          // 9
    "AAA",           // 10
    "AA",            // 11
    "A",             // 12
};

// Initial reachability, one char per cell.
inline constexpr std::array<const char*, 13> kIrm = {
    "1111111111111",  // RC
    "0100000101100",  // HIC
    "0110011111100",  // LSW
    "0111111111100",  // DSP
    "0111110111110",  // TI
    "0101110111110",  // SC
    "0011001101000",  // CEC
    "0000000101000",  // AA
    "0111110111110",  // DIM
    "0000000101000",  // RI
    "0100000101100",  // ROI
    "0100110111110",  // EE
    "0111111111111",  // CCN
};

// Final reachability with transitivity marks.
inline constexpr std::array<const char*, 13> kFrm = {
    "1,1,1,1,1,1,1,1,1,1,1,1,1",
    "0,1,0,0,0,0,0,1,0,1,1,0,0",
    "0,1,1,1*,1*,1,1,1,1,1,1,1*,0",
    "0,1,1,1,1,1,1,1,1,1,1,1*,0",
    "0,1,1,1,1,1,1*,1,1,1,1,1,0",
    "0,1,1*,1,1,1,1*,1,1,1,1,1,0",
    "0,1*,1,1,1*,1*,1,1,1*,1,1*,1*,0",
    "0,0,0,0,0,0,0,1,0,1,0,0,0",
    "0,1,1,1,1,1,1*,1,1,1,1,1,0",
    "0,0,0,0,0,0,0,1,0,1,0,0,0",
    "0,1,0,0,0,0,0,1,0,1,1,0,0",
    "0,1,1*,1*,1,1,1*,1,1,1,1,1,0",
    "0,1,1,1,1,1,1,1,1,1,1,1,1",
};

inline constexpr std::array<int, 13> kDrivingPower = {13, 4, 11, 11, 11, 11, 11,
                                                      2,  11, 2,  4,  11, 12};
inline constexpr std::array<int, 13> kDependencePower = {1,  11, 9, 9,  9, 9, 9,
                                                         13, 9,  13, 11, 9, 2};

inline constexpr std::array<int, 13> kLevel = {5, 2, 3, 3, 3, 3, 3, 1, 3, 1, 2, 3, 4};

struct LevelSets {
    int factor;
    std::vector<int> reachability;
    std::vector<int> antecedent;
    std::vector<int> intersection;
};

inline const std::vector<LevelSets>& level_sets() {
    static const std::vector<LevelSets> sets = {
        {1, {1}, {1}, {1}},
        {2, {2, 11}, {1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 13}, {2, 11}},
        {8, {8, 10}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}, {8, 10}},
        {13, {13}, {1, 13}, {13}},
    };
    return sets;
}

inline constexpr std::array<int, 13> kConicalOrder = {8, 10, 2, 11, 3, 4, 5,
                                                      6, 7,  9, 12, 13, 1};
inline constexpr std::array<int, 13> kConicalRowDriving = {2,  2,  4,  4,  11, 11, 11,
                                                           11, 11, 11, 11, 12, 13};
inline constexpr std::array<int, 13> kConicalColDependence = {13, 13, 11, 11, 9, 9, 9,
                                                              9,  9,  9,  9,  2, 1};
inline constexpr std::array<int, 13> kConicalLevel = {1, 1, 2, 2, 3, 3, 3,
                                                      3, 3, 3, 3, 4, 5};

// MICMAC with mid = 6.5: quadrant letter per factor (I/D/L/A).
inline constexpr std::array<char, 13> kQuadrant = {'I', 'D', 'L', 'L', 'L', 'L', 'L',
                                                   'D', 'L', 'D', 'D', 'L', 'I'};

// Average score matrix (exact published decimals).
inline constexpr std::array<const char*, 13> kAverage = {
    "0.000,2.250,2.417,3.750,2.583,1.750,1.583,3.417,2.000,2.750,3.583,2.500,1.750",
    "0.167,0.000,0.750,0.750,0.333,0.250,0.333,2.417,0.417,3.500,3.583,0.333,1.000",
    "0.167,2.333,0.000,0.167,0.833,3.500,1.750,2.833,3.500,3.500,1.833,1.083,1.167",
    "0.167,3.500,1.917,0.000,3.000,1.833,3.583,2.083,2.000,2.583,0.583,0.167,1.750",
    "0.167,2.000,1.250,2.833,0.000,1.833,0.417,1.750,3.667,3.000,2.000,3.083,0.917",
    "0.167,2.917,1.083,1.333,1.833,0.000,1.000,3.083,3.167,3.250,2.000,1.667,0.667",
    "1.000,0.417,2.917,3.333,0.250,1.000,0.000,3.750,0.083,2.833,0.917,0.250,0.250",
    "0.333,0.750,1.167,1.250,0.417,0.417,2.250,0.000,0.083,2.000,1.167,0.167,0.083",
    "0.250,3.000,2.333,3.167,3.583,3.250,0.000,1.750,0.000,2.833,2.083,1.000,1.500",
    "0.000,0.333,0.333,0.250,0.333,0.500,1.000,2.167,0.250,0.000,0.333,1.083,0.250",
    "0.000,3.333,1.250,0.083,0.667,1.167,1.000,3.000,0.167,2.167,0.000,2.000,0.750",
    "0.000,3.083,0.667,0.250,2.917,2.000,0.083,2.500,0.750,1.917,2.167,0.000,0.333",
    "0.083,3.250,1.917,2.083,3.083,3.000,2.583,1.750,2.833,2.000,2.917,2.917,0.000",
};

inline constexpr double kDivisor = 32.333;

// Normalized direct-relation matrix as published.
inline constexpr std::array<const char*, 13> kNormalized = {
    "0.000,0.070,0.075,0.116,0.080,0.054,0.049,0.106,0.062,0.085,0.111,0.077,0.054",
    "0.005,0.000,0.023,0.023,0.010,0.008,0.010,0.075,0.013,0.108,0.111,0.010,0.031",
    "0.005,0.072,0.000,0.005,0.026,0.108,0.054,0.088,0.108,0.108,0.057,0.034,0.036",
    "0.005,0.108,0.059,0.000,0.093,0.057,0.111,0.064,0.062,0.080,0.018,0.005,0.054",
    "0.005,0.062,0.039,0.088,0.000,0.057,0.013,0.054,0.113,0.093,0.062,0.095,0.028",
    "0.005,0.090,0.034,0.041,0.057,0.000,0.031,0.095,0.098,0.101,0.062,0.052,0.021",
    "0.031,0.013,0.090,0.103,0.008,0.031,0.000,0.116,0.003,0.088,0.028,0.008,0.008",
    "0.010,0.023,0.036,0.039,0.013,0.013,0.070,0.000,0.003,0.062,0.036,0.005,0.003",
    "0.008,0.093,0.072,0.098,0.111,0.101,0.000,0.054,0.000,0.088,0.064,0.031,0.046",
    "0.000,0.010,0.010,0.008,0.010,0.015,0.031,0.067,0.008,0.000,0.010,0.034,0.008",
    "0.000,0.103,0.039,0.003,0.021,0.036,0.031,0.093,0.005,0.067,0.000,0.062,0.023",
    "0.000,0.095,0.021,0.008,0.090,0.062,0.003,0.077,0.023,0.059,0.067,0.000,0.010",
    "0.003,0.101,0.059,0.064,0.095,0.093,0.080,0.054,0.088,0.062,0.090,0.090,0.000",
};

// Total relation matrix as published.
inline constexpr std::array<const char*, 13> kTotal = {
    "0.012,0.193,0.152,0.189,0.162,0.143,0.126,0.243,0.142,0.235,0.207,0.145,0.100",
    "0.009,0.048,0.053,0.049,0.039,0.041,0.044,0.130,0.039,0.162,0.143,0.040,0.047",
    "0.014,0.155,0.058,0.065,0.085,0.166,0.102,0.187,0.158,0.214,0.129,0.083,0.067",
    "0.016,0.190,0.121,0.068,0.147,0.122,0.162,0.172,0.123,0.197,0.098,0.060,0.087",
    "0.013,0.157,0.097,0.141,0.070,0.125,0.068,0.158,0.168,0.204,0.137,0.143,0.065",
    "0.014,0.169,0.087,0.095,0.112,0.061,0.080,0.188,0.145,0.203,0.131,0.097,0.053",
    "0.037,0.077,0.130,0.139,0.051,0.078,0.052,0.188,0.048,0.167,0.078,0.042,0.034",
    "0.015,0.058,0.062,0.063,0.035,0.040,0.093,0.050,0.026,0.109,0.064,0.026,0.017",
    "0.017,0.193,0.132,0.156,0.175,0.170,0.065,0.169,0.077,0.214,0.148,0.093,0.085",
    "0.003,0.034,0.028,0.025,0.026,0.033,0.047,0.095,0.022,0.032,0.031,0.045,0.016",
    "0.006,0.149,0.071,0.035,0.053,0.071,0.063,0.155,0.038,0.136,0.050,0.089,0.041",
    "0.006,0.153,0.058,0.047,0.124,0.101,0.039,0.147,0.065,0.139,0.120,0.039,0.034",
    "0.015,0.214,0.132,0.138,0.170,0.173,0.142,0.188,0.161,0.207,0.184,0.153,0.045",
};

struct DegreeRow {
    const char* abbr;
    double row_total;
    double column_total;
    double prominence;
    double relation;
    char group;  // 'C' or 'E'
};

inline constexpr std::array<DegreeRow, 13> kDegree = {{
    {"RC", 2.050, 0.178, 2.228, 1.872, 'C'},
    {"HIC", 0.843, 1.790, 2.633, -0.947, 'E'},
    {"LSW", 1.485, 1.180, 2.665, 0.304, 'C'},
    {"DSP", 1.565, 1.212, 2.776, 0.353, 'C'},
    {"TI", 1.546, 1.249, 2.795, 0.297, 'C'},
    {"SC", 1.436, 1.325, 2.761, 0.110, 'C'},
    {"CEC", 1.121, 1.082, 2.203, 0.039, 'C'},
    {"AA", 0.660, 2.071, 2.731, -1.412, 'E'},
    {"DIM", 1.694, 1.211, 2.905, 0.482, 'C'},
    {"RI", 0.438, 2.219, 2.657, -1.781, 'E'},
    {"ROI", 0.959, 1.522, 2.481, -0.563, 'E'},
    {"EE", 1.070, 1.055, 2.125, 0.015, 'C'},
    {"CCN", 1.922, 0.691, 2.613, 1.231, 'C'},
}};

inline constexpr double kThreshold = 0.099;

inline constexpr std::array<const char*, 13> kRanking = {
    "DIM", "TI", "DSP", "SC", "AA", "LSW", "RI", "HIC", "CCN", "ROI", "RC", "CEC", "EE"};

// Reliability study components.
inline constexpr int kAlphaItems = 156;
inline constexpr double kSumItemVariances = 67.88;
inline constexpr double kTotalVariance = 270.52;
inline constexpr double kAlphaLow = 0.7515;
inline constexpr double kAlphaHigh = 0.7555;

inline constexpr int kExpertCount = 12;

// ---- builders ---------------------------------------------------------------

inline barriers::BarrierRegistry make_registry() {
    std::vector<barriers::BarrierEntry> entries;
    for (int i = 0; i < kN; ++i) {
        entries.push_back({i + 1, kAbbr[static_cast<std::size_t>(i)],
                           kName[static_cast<std::size_t>(i)]});
    }
    return barriers::BarrierRegistry(std::move(entries));
}

inline std::string registry_csv_text() {
    std::string out = "index,abbr,name\n";
    for (int i = 0; i < kN; ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += kAbbr[static_cast<std::size_t>(i)];
        out += ',';
        out += kName[static_cast<std::size_t>(i)];
        out += '\n';
    }
    return out;
}

inline barriers::SsimMatrix make_ssim() {
    std::vector<barriers::RelationSymbol> upper;
    for (const char* row : kSsimRows) {
        for (const char* c = row; *c; ++c) {
            upper.push_back(barriers::parse_relation_symbol(std::string_view(c, 1)));
        }
    }
    return barriers::SsimMatrix(kN, std::move(upper));
}

inline barriers::ReachabilityMatrix make_irm() {
    std::vector<barriers::Reach> cells;
    for (const char* row : kIrm) {
        for (const char* c = row; *c; ++c) {
            cells.push_back(*c == '1' ? barriers::Reach::One : barriers::Reach::Zero);
        }
    }
    return barriers::ReachabilityMatrix(kN, std::move(cells));
}

inline barriers::ReachabilityMatrix make_frm() {
    std::vector<barriers::Reach> cells;
    for (const char* row : kFrm) {
        std::string token;
        for (const char* c = row;; ++c) {
            if (*c == ',' || *c == '\0') {
                if (token == "0") {
                    cells.push_back(barriers::Reach::Zero);
                } else if (token == "1") {
                    cells.push_back(barriers::Reach::One);
                } else {
                    cells.push_back(barriers::Reach::OneStar);
                }
                token.clear();
                if (*c == '\0') break;
            } else {
                token += *c;
            }
        }
    }
    return barriers::ReachabilityMatrix(kN, std::move(cells));
}

inline std::string matrix_csv_text(const std::array<const char*, 13>& rows) {
    std::string out;
    for (int j = 0; j < kN; ++j) {
        out += ',';
        out += kAbbr[static_cast<std::size_t>(j)];
    }
    out += '\n';
    for (int i = 0; i < kN; ++i) {
        out += kAbbr[static_cast<std::size_t>(i)];
        out += ',';
        out += rows[static_cast<std::size_t>(i)];
        out += '\n';
    }
    return out;
}

inline barriers::InfluenceMatrix make_average() {
    return barriers::io::parse_influence_csv(matrix_csv_text(kAverage), make_registry(),
                                             barriers::ScoreRole::Average, "table-average");
}

inline barriers::InfluenceMatrix make_normalized() {
    return barriers::io::parse_influence_csv(matrix_csv_text(kNormalized), make_registry(),
                                             barriers::ScoreRole::Normalized,
                                             "table-normalized");
}

inline barriers::InfluenceMatrix make_total() {
    return barriers::io::parse_influence_csv(matrix_csv_text(kTotal), make_registry(),
                                             barriers::ScoreRole::TotalRelation,
                                             "table-total");
}

}  // namespace fixtures
