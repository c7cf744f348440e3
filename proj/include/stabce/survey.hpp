#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stabce/dyadic.hpp"
#include "stabce/graph.hpp"

namespace stabce {

/// Largest n the isomorph-free enumeration accepts.
inline constexpr std::size_t kSurveyBound = 8;
/// Largest n enumerated without the stretch opt-in.
inline constexpr std::size_t kSurveyDefaultBound = 6;

struct SurveyRecord {
    std::string graph6;
    std::size_t n = 0;
    DyadicRational ce;
    std::size_t distinct_purities = 0;
    bool achieves_min = false;
    bool achieves_max = false;
};

struct SurveyResult {
    std::size_t n = 0;
    std::vector<SurveyRecord> records;  // sorted by (ce, graph6)
    std::size_t distinct_ce_values = 0;
};

/// One canonical representative per isomorphism class of simple graphs
/// (connected or not) on n vertices, sorted by graph6.
std::vector<Graph> enumerate_all(std::size_t n, std::size_t bound = kSurveyBound);

/// Connected subset of enumerate_all.
std::vector<Graph> enumerate_connected(std::size_t n, std::size_t bound = kSurveyBound);

SurveyRecord survey_record(const Graph& g);

SurveyResult ce_survey(std::size_t n, std::size_t bound = kSurveyBound);

/// Representatives whose every bipartition is maximally entangled.
std::vector<Graph> max_achievers(std::size_t n, std::size_t bound = kSurveyBound);

struct FamilyRecord {
    Family kind = Family::linear;
    std::size_t size = 0;  // family parameter; snowflake(size) has 2*size qubits
    SurveyRecord full;
    // Snowflake only: CE over the core set, the pendant set, and 1 - (3/4)^size.
    std::optional<DyadicRational> core_ce;
    std::optional<DyadicRational> pendant_ce;
    std::optional<DyadicRational> closed_form;
};

std::vector<FamilyRecord> family_sweep(Family kind, std::size_t from, std::size_t to);

/// Header `graph6,n,ce_num,ce_log2_den,achieves_min,achieves_max,distinct_purities`,
/// one row per record in the given order.
void write_survey_csv(std::ostream& out, const std::vector<SurveyRecord>& records);
void write_survey_jsonl(std::ostream& out, const std::vector<SurveyRecord>& records);

/// Header `family,size,graph6,n,ce_num,ce_log2_den,achieves_min,achieves_max,distinct_purities,core_ce,pendant_ce,closed_form`.
void write_family_csv(std::ostream& out, const std::vector<FamilyRecord>& records);
void write_family_jsonl(std::ostream& out, const std::vector<FamilyRecord>& records);

}  // namespace stabce
