#pragma once

// OEIS b-file fixtures and cross-checks of generated sequences against them.

#include "gapbal/classes.hpp"

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gapbal::oeis {

struct BFileEntry {
    std::int64_t index = 0;
    BigInt value;
    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
    std::string id;
    std::vector<std::string> comments;  // '#' lines, verbatim
    std::vector<BFileEntry> entries;
    friend bool operator==(const BFile&, const BFile&) = default;
};

/// "A" followed by exactly six digits.
bool is_valid_id(std::string_view id);

/// Two-column "index value" lines; '#' lines and blank lines are skipped.
/// Throws ParseError (with the 1-based line number) on malformed lines or
/// indices that do not strictly increase.
BFile parse_bfile(std::string_view text, std::string id = {});

/// Comments first, then one "index value" line per entry.
std::string serialize_bfile(const BFile& bf);

std::filesystem::path fixture_path(const std::filesystem::path& dir, const std::string& id);
BFile load_fixture(const std::filesystem::path& dir, const std::string& id);

struct MatchReport {
    bool matched = false;
    /// generated[j] corresponds to fixture.entries[j + offset].
    std::int64_t offset = 0;
    std::size_t matched_terms = 0;
    /// b-file index of the fixture term aligned with generated[0].
    std::optional<std::int64_t> first_bfile_index;
    std::string detail;
};

/// Searches offsets in [-window, window] for one where every overlapping term
/// agrees and at least `min_overlap` terms overlap; the largest overlap wins,
/// then the smallest |offset|. Mismatch is reported, never thrown.
MatchReport cross_check(const std::vector<BigInt>& generated, const BFile& fixture, int window = 5,
                        std::size_t min_overlap = 3);

enum class Field { B, C, m, r, r_hat };

Field parse_field(std::string_view name);
std::string_view field_name(Field f);

/// Ascending merge of `count` values of a field across every class of k.
std::vector<BigInt> merged_sequence(const GapContext& ctx, Field field, std::size_t count);

/// Which generated sequence a fixture corresponds to, and where it aligns.
struct Alignment {
    std::string id;
    std::int64_t k = 0;
    Field field = Field::B;
    std::int64_t offset = 0;
    std::string description;
};

/// Reads alignments.json from the fixture directory.
std::map<std::string, Alignment> load_alignments(const std::filesystem::path& dir);

struct FixtureCheck {
    Alignment alignment;
    MatchReport match;
    bool offset_is_pinned = false;
    bool passed(std::size_t min_terms) const {
        return match.matched && offset_is_pinned && match.matched_terms >= min_terms;
    }
};

/// Generates the aligned sequence with `terms` values and cross-checks it.
FixtureCheck check_fixture(const std::filesystem::path& dir, const Alignment& alignment, std::size_t terms,
                           int window = 5);

// Network refresh. Never called implicitly.

struct FetchOptions {
    /// "{id}" expands to e.g. A001109 and "{num}" to 001109.
    std::string url_template = "https://oeis.org/{id}/b{num}.txt";
    std::chrono::seconds timeout{20};
};

std::string expand_url(const std::string& url_template, const std::string& id);

struct RefreshResult {
    bool fetched = false;  // false: kept the existing fixture
    std::string message;
    std::optional<BFile> bfile;
};

/// Downloads, parses and writes the b-file for `id`. Any failure leaves the
/// fixture untouched and falls back to it. Concurrent calls for one id are
/// serialized.
RefreshResult refresh_fixture(const std::filesystem::path& dir, const std::string& id, const FetchOptions& opts);

}  // namespace gapbal::oeis
