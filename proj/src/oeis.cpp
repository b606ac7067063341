#include "gapbal/oeis.hpp"

#include "gapbal/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gapbal::oeis {

bool is_valid_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    return std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

namespace {

bool is_integer_token(std::string_view tok) {
    std::size_t pos = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (pos == tok.size()) return false;
    return std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(pos), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string id) {
    BFile bf;
    bf.id = std::move(id);
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '#') {
            bf.comments.emplace_back(body);
            continue;
        }
        std::istringstream in{std::string(body)};
        std::string index_tok, value_tok, extra;
        in >> index_tok >> value_tok;
        if (value_tok.empty()) throw ParseError(line_no, "expected 'index value', got '" + std::string(body) + "'");
        if (in >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
        if (!is_integer_token(index_tok)) throw ParseError(line_no, "index '" + index_tok + "' is not an integer");
        if (!is_integer_token(value_tok)) throw ParseError(line_no, "value '" + value_tok + "' is not an integer");

        BFileEntry entry;
        try {
            entry.index = std::stoll(index_tok);
        } catch (const std::exception&) {
            throw ParseError(line_no, "index '" + index_tok + "' out of range");
        }
        entry.value = parse_bigint(value_tok);
        if (!bf.entries.empty() && entry.index <= bf.entries.back().index) {
            throw ParseError(line_no, "index " + index_tok + " does not increase (previous " +
                                          std::to_string(bf.entries.back().index) + ")");
        }
        bf.entries.push_back(std::move(entry));
    }
    return bf;
}

std::string serialize_bfile(const BFile& bf) {
    std::string out;
    for (const auto& c : bf.comments) out += c + "\n";
    for (const auto& e : bf.entries) out += std::to_string(e.index) + " " + e.value.str() + "\n";
    return out;
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, const std::string& id) {
    return dir / (id + ".txt");
}

BFile load_fixture(const std::filesystem::path& dir, const std::string& id) {
    if (!is_valid_id(id)) throw DomainError("not an OEIS id: '" + id + "'");
    const auto path = fixture_path(dir, id);
    std::ifstream in(path);
    if (!in) throw DomainError("no fixture for " + id + " at " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str(), id);
}

MatchReport cross_check(const std::vector<BigInt>& generated, const BFile& fixture, int window,
                        std::size_t min_overlap) {
    MatchReport best;
    if (generated.empty()) {
        best.detail = "nothing generated";
        return best;
    }
    const auto n = static_cast<std::int64_t>(generated.size());
    const auto len = static_cast<std::int64_t>(fixture.entries.size());
    for (std::int64_t offset = -window; offset <= window; ++offset) {
        const std::int64_t j_begin = std::max<std::int64_t>(0, -offset);
        const std::int64_t j_end = std::min<std::int64_t>(n, len - offset);
        if (j_end - j_begin < static_cast<std::int64_t>(min_overlap)) continue;
        bool agrees = true;
        for (std::int64_t j = j_begin; j < j_end && agrees; ++j) {
            agrees = generated[static_cast<std::size_t>(j)] == fixture.entries[static_cast<std::size_t>(j + offset)].value;
        }
        if (!agrees) continue;
        const auto overlap = static_cast<std::size_t>(j_end - j_begin);
        const bool better = !best.matched || overlap > best.matched_terms ||
                            (overlap == best.matched_terms && std::abs(offset) < std::abs(best.offset));
        if (better) {
            best.matched = true;
            best.offset = offset;
            best.matched_terms = overlap;
        }
    }
    if (best.matched) {
        if (best.offset >= 0) best.first_bfile_index = fixture.entries[static_cast<std::size_t>(best.offset)].index;
        best.detail = std::to_string(best.matched_terms) + " terms agree at offset " + std::to_string(best.offset);
    } else {
        best.detail = "no offset in [-" + std::to_string(window) + ", " + std::to_string(window) + "] matches";
    }
    return best;
}

Field parse_field(std::string_view name) {
    if (name == "B") return Field::B;
    if (name == "C") return Field::C;
    if (name == "m") return Field::m;
    if (name == "r") return Field::r;
    if (name == "rhat" || name == "r_hat") return Field::r_hat;
    throw DomainError("unknown field '" + std::string(name) + "' (expected B, C, m, r, rhat)");
}

std::string_view field_name(Field f) {
    switch (f) {
        case Field::B: return "B";
        case Field::C: return "C";
        case Field::m: return "m";
        case Field::r: return "r";
        case Field::r_hat: return "rhat";
    }
    return "?";
}

namespace {

BigInt field_value(const GapContext& ctx, const BalancingPair& p, Field f) {
    switch (f) {
        case Field::B: return p.B;
        case Field::C: return p.C;
        case Field::m: return counterbalancer_of(p);
        case Field::r: return balancer_of(ctx, p).r;
        case Field::r_hat: return balancer_of(ctx, p).r_hat;
    }
    throw InvariantError("unhandled field");
}

}  // namespace

std::vector<BigInt> merged_sequence(const GapContext& ctx, Field field, std::size_t count) {
    std::vector<BalancingClass> classes = classes_for(ctx);
    const std::size_t per_class = count / classes.size() + 1;
    std::vector<BigInt> values;
    values.reserve(per_class * classes.size());
    for (BalancingClass& cls : classes) {
        for (const BalancingPair& p : cls.terms(per_class)) values.push_back(field_value(ctx, p, field));
    }
    std::sort(values.begin(), values.end());
    values.resize(count);
    return values;
}

std::map<std::string, Alignment> load_alignments(const std::filesystem::path& dir) {
    const auto path = dir / "alignments.json";
    std::ifstream in(path);
    if (!in) throw DomainError("missing alignment manifest " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("bad alignment manifest " + path.string() + ": " + e.what());
    }
    std::map<std::string, Alignment> out;
    for (const auto& [id, spec] : doc.at("sequences").items()) {
        Alignment a;
        a.id = id;
        a.k = spec.at("k").get<std::int64_t>();
        a.field = parse_field(spec.at("field").get<std::string>());
        a.offset = spec.at("offset").get<std::int64_t>();
        a.description = spec.value("description", "");
        out.emplace(id, std::move(a));
    }
    return out;
}

FixtureCheck check_fixture(const std::filesystem::path& dir, const Alignment& alignment, std::size_t terms,
                           int window) {
    FixtureCheck check;
    check.alignment = alignment;
    const BFile fixture = load_fixture(dir, alignment.id);
    const auto generated = merged_sequence(GapContext(alignment.k), alignment.field, terms);
    check.match = cross_check(generated, fixture, window);
    check.offset_is_pinned = check.match.matched && check.match.offset == alignment.offset;
    return check;
}

}  // namespace gapbal::oeis
