#include "gapbal/survey.hpp"

#include "gapbal/errors.hpp"
#include "gapbal/kernels/square_scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace gapbal {

SurveyRecord survey_one(std::int64_t k, bool keep_seeds) {
    const GapContext ctx(k);
    SurveyRecord rec;
    rec.k = k;
    rec.divisor_count = count_divisors(abs(ctx.pell_constant()));
    rec.ambiguous = is_perfect_square(ctx.pell_constant());
    if (k == 0) {
        rec.class_count = 1;
        return rec;
    }
    std::vector<Seed> seeds = enumerate_seeds(ctx);
    rec.class_count = seeds.size();
    if (keep_seeds) rec.seeds = std::move(seeds);
    return rec;
}

std::vector<SurveyRecord> sweep(std::int64_t k_min, std::int64_t k_max, const SweepOptions& opts) {
    if (k_min < 0 || k_max < k_min) {
        throw DomainError("sweep needs 0 <= k_min <= k_max, got [" + std::to_string(k_min) + ", " +
                          std::to_string(k_max) + "]");
    }
    const auto total = static_cast<std::size_t>(k_max - k_min + 1);
    std::vector<SurveyRecord> records(total);

    unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, total));

    // Large k cost more, so hand out small chunks from a shared counter.
    constexpr std::size_t kChunk = 16;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            while (true) {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= total) return;
                const std::size_t end = std::min(total, begin + kChunk);
                for (std::size_t i = begin; i < end; ++i) {
                    records[i] = survey_one(k_min + static_cast<std::int64_t>(i), opts.keep_seeds);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<SurveyRecord> conjecture_mismatches(const std::vector<SurveyRecord>& records) {
    std::vector<SurveyRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [](const SurveyRecord& r) { return !r.conjecture_holds(); });
    return out;
}

std::vector<SurveyRecord> check_conjecture(std::int64_t k_min, std::int64_t k_max, const SweepOptions& opts) {
    return conjecture_mismatches(sweep(k_min, k_max, opts));
}

std::map<std::size_t, std::int64_t> smallest_k_by_count(const std::vector<SurveyRecord>& records) {
    std::map<std::size_t, std::int64_t> table;
    for (const SurveyRecord& r : records) {
        auto [it, inserted] = table.emplace(r.class_count, r.k);
        if (!inserted && r.k < it->second) it->second = r.k;
    }
    return table;
}

std::map<std::size_t, std::int64_t> table1(std::int64_t k_max, const SweepOptions& opts) {
    if (k_max < 0) throw DomainError("table1 needs k_max >= 0");
    SweepOptions counts_only = opts;
    counts_only.keep_seeds = false;
    return smallest_k_by_count(sweep(0, k_max, counts_only));
}

std::vector<std::int64_t> ambiguous_k_values(std::int64_t k_max) {
    if (k_max < 1) throw DomainError("ambiguous_k_values needs k_max >= 1");
    std::vector<std::int64_t> out;
    const kernels::Quadratic q{2, 0, -1};
    const auto count = static_cast<std::size_t>(k_max);
    if (kernels::fits_int64(q, 1, count)) {
        kernels::square_hits(q, 1, count, out);
        return out;
    }
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const BigInt kk(k);
        if (is_perfect_square(2 * kk * kk - 1)) out.push_back(k);
    }
    return out;
}

std::string records_to_csv(const std::vector<SurveyRecord>& records) {
    std::string out = "k,class_count,divisor_count,ambiguous\n";
    for (const SurveyRecord& r : records) {
        out += std::to_string(r.k) + "," + std::to_string(r.class_count) + "," + std::to_string(r.divisor_count) +
               "," + (r.ambiguous ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace gapbal
