#pragma once

// Sweeps over the gap size k: class counts, the divisor-count conjecture,
// and the smallest-k-per-class-count table.

#include "gapbal/classes.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gapbal {

struct SurveyRecord {
    std::int64_t k = 0;
    std::size_t class_count = 0;
    std::uint64_t divisor_count = 0;  // of |2k^2 - 1|
    bool ambiguous = false;
    std::vector<Seed> seeds;  // empty for k = 0

    bool conjecture_holds() const { return class_count == divisor_count; }
};

struct SweepOptions {
    /// Worker threads; 0 means one per hardware thread.
    unsigned jobs = 1;
    /// Keep the seed lists (the table and conjecture paths only need counts).
    bool keep_seeds = false;
};

SurveyRecord survey_one(std::int64_t k, bool keep_seeds = true);

/// One record per k in [k_min, k_max], in ascending k regardless of `jobs`.
std::vector<SurveyRecord> sweep(std::int64_t k_min, std::int64_t k_max, const SweepOptions& opts = {});

/// Records whose class count differs from d(|2k^2 - 1|). Empty means the
/// conjecture holds on the whole range.
std::vector<SurveyRecord> check_conjecture(std::int64_t k_min, std::int64_t k_max, const SweepOptions& opts = {});
std::vector<SurveyRecord> conjecture_mismatches(const std::vector<SurveyRecord>& records);

/// Smallest k in [0, k_max] attaining each observed class count n.
std::map<std::size_t, std::int64_t> table1(std::int64_t k_max, const SweepOptions& opts = {});
std::map<std::size_t, std::int64_t> smallest_k_by_count(const std::vector<SurveyRecord>& records);

/// k in [1, k_max] with 2k^2 - 1 a perfect square, ascending.
std::vector<std::int64_t> ambiguous_k_values(std::int64_t k_max);

/// "k,class_count,divisor_count,ambiguous" header plus one line per record.
std::string records_to_csv(const std::vector<SurveyRecord>& records);

}  // namespace gapbal
