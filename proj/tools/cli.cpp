#include "cli.hpp"

#include "gapbal/errors.hpp"
#include "gapbal/identities.hpp"
#include "gapbal/kernels/square_scan.hpp"
#include "gapbal/oeis.hpp"
#include "gapbal/series.hpp"
#include "gapbal/survey.hpp"
#include "gapbal/transitions.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gapbal::cli {
namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct Settings {
    std::string format = "text";
    std::string fixtures;
    std::string url_template;
    unsigned jobs = 1;
    unsigned precision = kDefaultLimitDigits;
    int timeout_seconds = 20;
};

std::string env_or(const char* name, std::string fallback) {
    if (const char* v = std::getenv(name); v != nullptr && *v != '\0') return v;
    return fallback;
}

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    return Format::text;
}

json envelope(const std::string& command, json context, json payload) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"context", std::move(context)},
                {"payload", std::move(payload)}};
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string s(const BigInt& v) { return v.str(); }

std::string pair_str(const BigInt& a, const BigInt& b) { return "(" + a.str() + ", " + b.str() + ")"; }

// Right-aligned text table.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) text += "  ";
            text += std::string(width[c] - cells[c].size(), ' ') + cells[c];
        }
        out << text << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
        out << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
}

char class_letter(std::size_t i) { return i < 26 ? static_cast<char>('a' + i) : '?'; }

// seeds ---------------------------------------------------------------------

int cmd_seeds(std::int64_t k, Format fmt, std::ostream& out) {
    const GapContext ctx(k);
    std::vector<BalancingClass> classes = classes_for(ctx);
    const ClassCount count = class_count(ctx);
    const auto divisors = count_divisors(abs(ctx.pell_constant()));

    const std::vector<std::string> header{"class", "seed_x", "seed_y", "conjugate", "ambiguous", "B0", "C0"};
    std::vector<std::vector<std::string>> rows;
    json payload_rows = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        const std::size_t conj = conjugate_class_index(classes, i);
        const bool amb = cls.seed() ? is_ambiguous(ctx, *cls.seed()) : false;
        rows.push_back({std::to_string(i), cls.seed() ? s(cls.seed()->x) : "-", cls.seed() ? s(cls.seed()->y) : "-",
                        std::to_string(conj), amb ? "yes" : "no", s(cls.initial().B), s(cls.initial().C)});
        json row{{"class", i},
                 {"conjugate", conj},
                 {"ambiguous", amb},
                 {"initial_pair", {s(cls.initial().B), s(cls.initial().C)}}};
        row["seed"] = cls.seed() ? json{s(cls.seed()->x), s(cls.seed()->y)} : json(nullptr);
        payload_rows.push_back(std::move(row));
    }

    switch (fmt) {
        case Format::json:
            emit_json(out, envelope("seeds", {{"k", std::to_string(k)}},
                                    {{"class_count", count.count},
                                     {"ambiguous_class", count.ambiguous},
                                     {"divisor_count", divisors},
                                     {"classes", payload_rows}}));
            break;
        case Format::csv:
            print_csv(out, header, rows);
            break;
        case Format::text:
            out << "k = " << k << ": " << count.count << " class" << (count.count == 1 ? "" : "es")
                << ", d(|2k^2-1|) = " << divisors << (count.ambiguous ? ", ambiguous class present" : "") << "\n";
            if (k == 0) out << "k = 0 has no seed window; the single class starts at (0, 1)\n";
            print_table(out, header, rows);
            break;
    }
    return kOk;
}

// class ---------------------------------------------------------------------

std::vector<oeis::Field> parse_fields(const std::string& list) {
    std::vector<oeis::Field> fields;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) fields.push_back(oeis::parse_field(item));
    }
    if (fields.empty()) throw DomainError("--fields needs at least one of B, C, m, r, rhat");
    return fields;
}

BigInt field_of(const GapContext& ctx, const BalancingPair& p, oeis::Field f) {
    switch (f) {
        case oeis::Field::B: return p.B;
        case oeis::Field::C: return p.C;
        case oeis::Field::m: return counterbalancer_of(p);
        case oeis::Field::r: return balancer_of(ctx, p).r;
        case oeis::Field::r_hat: return balancer_of(ctx, p).r_hat;
    }
    return 0;
}

int cmd_class(std::int64_t k, std::size_t index, std::size_t terms, const std::string& field_list, Format fmt,
              std::ostream& out) {
    const GapContext ctx(k);
    const auto fields = parse_fields(field_list);
    std::vector<BalancingClass> classes = classes_for(ctx);
    if (index >= classes.size()) {
        throw DomainError("class index " + std::to_string(index) + " out of range; k = " + std::to_string(k) +
                          " has " + std::to_string(classes.size()) + " classes");
    }
    BalancingClass& cls = classes[index];

    std::vector<std::string> header{"i"};
    for (auto f : fields) header.emplace_back(oeis::field_name(f));
    std::vector<std::vector<std::string>> rows;
    json columns = json::object();
    for (auto f : fields) columns[std::string(oeis::field_name(f))] = json::array();
    for (std::size_t i = 0; i < terms; ++i) {
        const BalancingPair& p = cls.term(static_cast<std::int64_t>(i));
        std::vector<std::string> row{std::to_string(i)};
        for (auto f : fields) {
            row.push_back(s(field_of(ctx, p, f)));
            columns[std::string(oeis::field_name(f))].push_back(row.back());
        }
        rows.push_back(std::move(row));
    }

    switch (fmt) {
        case Format::json:
            emit_json(out, envelope("class",
                                    {{"k", std::to_string(k)}, {"class", index}, {"terms", terms}},
                                    {{"columns", columns}}));
            break;
        case Format::csv: print_csv(out, header, rows); break;
        case Format::text:
            out << "k = " << k << ", class " << index << " (initial pair "
                << pair_str(cls.initial().B, cls.initial().C) << ")\n";
            print_table(out, header, rows);
            break;
    }
    return kOk;
}

// table2 --------------------------------------------------------------------

struct TransitionRow {
    std::string label;
    TransitionMap map;
};

// Maps class j -> class j+1, the last one onto class 0 advanced by one term,
// so applying them in turn lists the balancing numbers in ascending order.
// Rows whose coefficients repeat an earlier row are dropped.
std::vector<TransitionRow> sorting_transitions(std::vector<BalancingClass>& classes) {
    std::vector<TransitionRow> rows;
    const std::size_t n = classes.size();
    for (std::size_t j = 0; j < n; ++j) {
        const bool wrap = j + 1 == n;
        TransitionMap map = derive_transition(classes[j], classes[wrap ? 0 : j + 1], wrap ? 1 : 0);
        const bool repeat = std::any_of(rows.begin(), rows.end(),
                                        [&](const TransitionRow& r) { return r.map.same_coefficients(map); });
        if (!repeat) rows.push_back({"t" + std::to_string(j + 1), std::move(map)});
    }
    return rows;
}

int cmd_table2(std::int64_t k, std::size_t terms, Format fmt, std::ostream& out) {
    const GapContext ctx(k);
    std::vector<BalancingClass> classes = classes_for(ctx);
    const auto transitions = sorting_transitions(classes);

    std::vector<std::string> header{"i"};
    std::vector<BalancingPair> columns;
    for (std::size_t i = 0; i < terms; ++i) {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            header.push_back(std::to_string(i) + "_" + class_letter(c));
            columns.push_back(classes[c].term(static_cast<std::int64_t>(i)));
        }
    }

    std::vector<std::vector<std::string>> rows;
    auto add_row = [&](const std::string& label, auto&& cell) {
        std::vector<std::string> row{label};
        for (const auto& p : columns) row.push_back(cell(p));
        rows.push_back(std::move(row));
    };
    add_row("B", [](const BalancingPair& p) { return s(p.B); });
    add_row("C", [](const BalancingPair& p) { return s(p.C); });
    add_row("m", [](const BalancingPair& p) { return s(counterbalancer_of(p)); });
    add_row("r", [&](const BalancingPair& p) { return s(balancer_of(ctx, p).r); });
    add_row("rhat", [&](const BalancingPair& p) { return s(balancer_of(ctx, p).r_hat); });
    for (const auto& t : transitions) {
        add_row(t.label, [&](const BalancingPair& p) {
            const MapImage img = apply(t.map, p.B, p.C);
            return img.first.is_integer() ? s(img.first.num()) : std::string("*");
        });
    }
    add_row("f" + std::to_string(k), [&](const BalancingPair& p) { return s(step_balancing(ctx, p).B); });

    switch (fmt) {
        case Format::json: {
            json jrows = json::object();
            for (const auto& row : rows) {
                json cells = json::array();
                for (std::size_t c = 1; c < row.size(); ++c) {
                    if (row[c] == "*") {
                        cells.push_back({{"value", nullptr}, {"reason", "non-integral"}});
                    } else {
                        cells.push_back(row[c]);
                    }
                }
                jrows[row[0]] = std::move(cells);
            }
            json maps = json::object();
            for (const auto& t : transitions) {
                maps[t.label] = {{"source_class", t.map.source_class},
                                 {"target_class", t.map.target_class},
                                 {"target_shift", t.map.target_shift},
                                 {"t", format_first_row(t.map)},
                                 {"t_hat", format_second_row(t.map)}};
            }
            std::vector<std::string> cols(header.begin() + 1, header.end());
            emit_json(out, envelope("table2", {{"k", std::to_string(k)}, {"terms", terms}},
                                    {{"columns", cols}, {"rows", jrows}, {"transitions", maps}}));
            break;
        }
        case Format::csv: print_csv(out, header, rows); break;
        case Format::text: print_table(out, header, rows); break;
    }
    return kOk;
}

// verify --------------------------------------------------------------------

json report_json(const IdentityReport& r) {
    json j{{"name", r.name},
           {"class", r.class_index},
           {"first_index", r.first_index},
           {"last_index", r.last_index},
           {"passed", r.passed}};
    if (r.failing_index) j["failing_index"] = *r.failing_index;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.limit) {
        j["limit"] = {{"value", r.limit->limit},
                      {"first_index", r.limit->first_index},
                      {"errors", r.limit->errors},
                      {"strictly_decreasing", r.limit->strictly_decreasing},
                      {"below_1e-8_once_B_above_1e8", r.limit->below_threshold}};
        if (r.limit->threshold_index) j["limit"]["threshold_index"] = *r.limit->threshold_index;
    }
    return j;
}

int cmd_verify(std::int64_t k, std::size_t terms, unsigned precision, Format fmt, std::ostream& out) {
    if (terms < 2) throw DomainError("verify needs --terms >= 2");
    if (precision < 50) throw DomainError("--precision must be at least 50 digits");
    const GapContext ctx(k);
    std::vector<BalancingClass> classes = classes_for(ctx);
    std::vector<IdentityReport> reports;
    std::vector<std::string> notes;

    for (BalancingClass& cls : classes) {
        auto append = [&reports](std::vector<IdentityReport> more) {
            reports.insert(reports.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
        };
        append(check_pair_identities(cls, terms));
        append(check_recurrences(cls, terms));
        append(check_cassini(cls, terms));
        try {
            append(check_ratio_limits(cls, terms, precision));
            append(check_mixed_limits(cls, terms, precision));
        } catch (const DomainError& e) {
            notes.push_back("class " + std::to_string(cls.index()) + ": limits skipped (" + e.what() + ")");
        }
    }

    // Every transition map must carry its whole source class, not just the three
    // terms it was derived from.
    std::vector<BalancerClass> balancers;
    for (const auto& cls : classes) balancers.push_back(tandem_balancer_class(cls));
    for (std::size_t p = 0; p < classes.size(); ++p) {
        for (std::size_t q = 0; q < classes.size(); ++q) {
            const TransitionMap t = derive_transition(classes[p], classes[q]);
            const TransitionMap bt = derive_balancer_transition(balancers[p], balancers[q]);
            IdentityReport rep;
            rep.name = "transition class " + std::to_string(p) + " -> " + std::to_string(q);
            rep.class_index = p;
            rep.first_index = 0;
            rep.last_index = terms;
            rep.passed = true;
            for (std::size_t i = 0; i <= terms && rep.passed; ++i) {
                const auto src = classes[p].term(static_cast<std::int64_t>(i));
                const auto dst = classes[q].term(static_cast<std::int64_t>(i));
                const auto bsrc = balancers[p].term(i);
                const auto bdst = balancers[q].term(i);
                const auto img = evaluate(t, src.B, src.C);
                const auto bimg = evaluate(bt, bsrc.r, bsrc.r_hat);
                if (!img || img->first != dst.B || img->second != dst.C || !bimg || bimg->first != bdst.r ||
                    bimg->second != bdst.r_hat) {
                    rep.passed = false;
                    rep.failing_index = i;
                }
            }
            reports.push_back(std::move(rep));
        }
    }
    const SymmetryReport sym = check_conjugate_symmetry(ctx);
    {
        IdentityReport rep;
        rep.name = "conjugate symmetry of transition maps";
        rep.passed = sym.all_equal();
        rep.detail = std::to_string(sym.entries.size()) + " map pairs compared";
        reports.push_back(std::move(rep));
    }

    const bool all_passed =
        std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });

    switch (fmt) {
        case Format::json: {
            json items = json::array();
            for (const auto& r : reports) items.push_back(report_json(r));
            emit_json(out, envelope("verify", {{"k", std::to_string(k)}, {"terms", terms}, {"precision", precision}},
                                    {{"passed", all_passed}, {"reports", items}, {"notes", notes}}));
            break;
        }
        case Format::csv: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : reports) {
                rows.push_back({std::to_string(r.class_index), "\"" + r.name + "\"", std::to_string(r.first_index),
                                std::to_string(r.last_index), r.passed ? "pass" : "fail"});
            }
            print_csv(out, {"class", "identity", "first_index", "last_index", "status"}, rows);
            break;
        }
        case Format::text:
            out << "k = " << k << ", " << classes.size() << " class" << (classes.size() == 1 ? "" : "es")
                << ", terms 0.." << terms << "\n";
            for (const auto& r : reports) {
                out << (r.passed ? "PASS " : "FAIL ") << "class " << r.class_index << "  " << r.name;
                if (r.limit) {
                    out << "  [errors " << r.limit->errors.front() << " -> " << r.limit->errors.back()
                        << (r.limit->strictly_decreasing ? ", strictly decreasing" : ", NOT decreasing")
                        << "; <1e-8 once B>1e8: " << (r.limit->below_threshold ? "yes" : "no") << "]";
                }
                if (r.failing_index) out << "  (index " << *r.failing_index << ")";
                out << "\n";
            }
            for (const auto& n : notes) out << "note: " << n << "\n";
            out << (all_passed ? "all identities hold\n" : "FAILURES present\n");
            break;
    }
    return all_passed ? kOk : kDataMismatch;
}

// transition ----------------------------------------------------------------

json map_json(const TransitionMap& m) {
    return {{"a", m.a.str()},
            {"b", m.b.str()},
            {"c", m.c.str()},
            {"d", m.d.str()},
            {"first_row", format_first_row(m)},
            {"second_row", format_second_row(m)}};
}

int cmd_transition(std::int64_t k, std::size_t from, std::size_t to, std::size_t shift, Format fmt,
                   std::ostream& out) {
    const GapContext ctx(k);
    std::vector<BalancingClass> classes = classes_for(ctx);
    if (from >= classes.size() || to >= classes.size()) {
        throw DomainError("class index out of range; k = " + std::to_string(k) + " has " +
                          std::to_string(classes.size()) + " classes");
    }
    BalancerClass bsrc = tandem_balancer_class(classes[from]);
    BalancerClass bdst = tandem_balancer_class(classes[to]);
    const TransitionMap t = derive_transition(classes[from], classes[to], shift);
    const TransitionMap T = derive_balancer_transition(bsrc, bdst, shift);

    switch (fmt) {
        case Format::json:
            emit_json(out, envelope("transition",
                                    {{"k", std::to_string(k)}, {"from", from}, {"to", to}, {"shift", shift}},
                                    {{"balancing", map_json(t)}, {"balancer", map_json(T)}}));
            break;
        case Format::csv:
            print_csv(out, {"map", "a", "b", "c", "d"},
                      {{"balancing", t.a.str(), t.b.str(), t.c.str(), t.d.str()},
                       {"balancer", T.a.str(), T.b.str(), T.c.str(), T.d.str()}});
            break;
        case Format::text:
            out << "k = " << k << ", class " << from << " -> class " << to;
            if (shift != 0) out << " (target advanced by " << shift << ")";
            out << "\n";
            out << "t(x)     = " << format_first_row(t) << "\n";
            out << "t_hat(x) = " << format_second_row(t) << "\n";
            out << "T(x)     = " << format_first_row(T) << "\n";
            out << "T_hat(x) = " << format_second_row(T) << "\n";
            break;
    }
    return kOk;
}

// genfun --------------------------------------------------------------------

int cmd_genfun(std::int64_t k, std::optional<std::size_t> class_index, std::size_t terms, Format fmt,
               std::ostream& out) {
    const GapContext ctx(k);
    std::vector<BalancingClass> classes = classes_for(ctx);
    RationalFunction rf;
    std::string label;
    if (class_index) {
        if (*class_index >= classes.size()) throw DomainError("class index out of range");
        rf = class_genfun(classes[*class_index]);
        label = "G_" + std::to_string(*class_index + 1);
    } else {
        rf = interleaved_genfun(classes);
        label = "G";
    }
    const auto series = expand(rf, terms);

    switch (fmt) {
        case Format::json: {
            auto coeffs = [](const Polynomial& p) {
                std::vector<std::string> v;
                for (const auto& c : p.coeffs()) v.push_back(c.str());
                return v;
            };
            json ctxj{{"k", std::to_string(k)}, {"terms", terms}};
            ctxj["class"] = class_index ? json(*class_index) : json(nullptr);
            std::vector<std::string> ser;
            for (const auto& v : series) ser.push_back(v.str());
            emit_json(out, envelope("genfun", ctxj,
                                    {{"numerator", coeffs(rf.numerator)},
                                     {"denominator", coeffs(rf.denominator)},
                                     {"numerator_text", rf.numerator.str()},
                                     {"denominator_text", rf.denominator.str()},
                                     {"series", ser}}));
            break;
        }
        case Format::csv: {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < series.size(); ++i) rows.push_back({std::to_string(i), series[i].str()});
            print_csv(out, {"n", "coefficient"}, rows);
            break;
        }
        case Format::text:
            out << label << "(s) = (" << rf.numerator.str() << ")/(" << rf.denominator.str() << ")\n";
            out << "series:";
            for (const auto& v : series) out << " " << v.str();
            out << "\n";
            break;
    }
    return kOk;
}

// conjecture / table1 -------------------------------------------------------

int cmd_conjecture(std::int64_t k_min, std::int64_t k_max, unsigned jobs, Format fmt, std::ostream& out) {
    const auto records = sweep(k_min, k_max, {jobs, false});
    const auto mismatches = conjecture_mismatches(records);

    switch (fmt) {
        case Format::json: {
            auto rec_json = [](const SurveyRecord& r) {
                return json{{"k", std::to_string(r.k)},
                            {"class_count", r.class_count},
                            {"divisor_count", r.divisor_count},
                            {"ambiguous", r.ambiguous}};
            };
            json recs = json::array();
            json bad = json::array();
            for (const auto& r : records) recs.push_back(rec_json(r));
            for (const auto& r : mismatches) bad.push_back(rec_json(r));
            emit_json(out, envelope("conjecture", {{"k_min", std::to_string(k_min)}, {"k_max", std::to_string(k_max)}},
                                    {{"mismatch_count", mismatches.size()}, {"mismatches", bad}, {"records", recs}}));
            break;
        }
        case Format::csv: out << records_to_csv(records); break;
        case Format::text:
            out << "k in [" << k_min << ", " << k_max << "]: " << records.size() << " values checked, "
                << mismatches.size() << " mismatches\n";
            for (const auto& r : mismatches) {
                out << "  k = " << r.k << ": " << r.class_count << " classes, d(|2k^2-1|) = " << r.divisor_count
                    << "\n";
            }
            break;
    }
    return mismatches.empty() ? kOk : kDataMismatch;
}

int cmd_table1(std::int64_t k_max, unsigned jobs, Format fmt, std::ostream& out) {
    const auto table = table1(k_max, {jobs, false});
    std::vector<std::vector<std::string>> rows;
    for (const auto& [n, k] : table) rows.push_back({std::to_string(n), std::to_string(k)});

    switch (fmt) {
        case Format::json: {
            json entries = json::array();
            std::vector<std::size_t> observed;
            for (const auto& [n, k] : table) {
                entries.push_back({{"n", n}, {"k", std::to_string(k)}});
                observed.push_back(n);
            }
            emit_json(out, envelope("table1", {{"k_max", std::to_string(k_max)}},
                                    {{"smallest_k", entries}, {"observed_counts", observed}}));
            break;
        }
        case Format::csv: print_csv(out, {"n", "k"}, rows); break;
        case Format::text: {
            out << "smallest k <= " << k_max << " with n classes\n";
            print_table(out, {"n", "k"}, rows);
            out << "observed n:";
            for (const auto& [n, k] : table) out << " " << n;
            out << "\n";
            break;
        }
    }
    return kOk;
}

// oeis ----------------------------------------------------------------------

int cmd_oeis_check(const std::string& id, std::size_t terms, const std::string& dir, Format fmt, std::ostream& out) {
    const auto alignments = oeis::load_alignments(dir);
    std::vector<oeis::Alignment> todo;
    if (id.empty() || id == "all") {
        for (const auto& [_, a] : alignments) todo.push_back(a);
    } else {
        auto it = alignments.find(id);
        if (it == alignments.end()) throw DomainError("no alignment recorded for " + id + " in " + dir);
        todo.push_back(it->second);
    }

    bool all_ok = true;
    std::vector<std::vector<std::string>> rows;
    json items = json::array();
    for (const auto& a : todo) {
        const auto check = oeis::check_fixture(dir, a, terms);
        const bool ok = check.passed(terms);
        all_ok = all_ok && ok;
        rows.push_back({a.id, std::to_string(a.k), std::string(oeis::field_name(a.field)),
                        check.match.matched ? std::to_string(check.match.offset) : "-", std::to_string(a.offset),
                        std::to_string(check.match.matched_terms), ok ? "PASS" : "FAIL"});
        items.push_back({{"id", a.id},
                         {"k", std::to_string(a.k)},
                         {"field", oeis::field_name(a.field)},
                         {"matched", check.match.matched},
                         {"offset", check.match.offset},
                         {"pinned_offset", a.offset},
                         {"matched_terms", check.match.matched_terms},
                         {"passed", ok}});
    }
    const std::vector<std::string> header{"id", "k", "field", "offset", "pinned", "terms", "status"};
    switch (fmt) {
        case Format::json:
            emit_json(out, envelope("oeis-check", {{"fixtures", dir}, {"terms", terms}},
                                    {{"passed", all_ok}, {"checks", items}}));
            break;
        case Format::csv: print_csv(out, header, rows); break;
        case Format::text: print_table(out, header, rows); break;
    }
    return all_ok ? kOk : kDataMismatch;
}

int cmd_oeis_refresh(const std::string& id, const Settings& settings, Format fmt, std::ostream& out,
                     std::ostream& err) {
    oeis::FetchOptions opts;
    if (!settings.url_template.empty()) opts.url_template = settings.url_template;
    opts.timeout = std::chrono::seconds(settings.timeout_seconds);
    const auto res = oeis::refresh_fixture(settings.fixtures, id, opts);
    if (!res.fetched) err << "warning: " << res.message << "\n";
    switch (fmt) {
        case Format::json:
            emit_json(out, envelope("oeis-refresh", {{"id", id}, {"url", oeis::expand_url(opts.url_template, id)}},
                                    {{"fetched", res.fetched},
                                     {"message", res.message},
                                     {"terms", res.bfile ? res.bfile->entries.size() : 0}}));
            break;
        case Format::csv:
            print_csv(out, {"id", "fetched", "terms"},
                      {{id, res.fetched ? "true" : "false",
                        std::to_string(res.bfile ? res.bfile->entries.size() : 0)}});
            break;
        case Format::text: out << res.message << "\n"; break;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Upper k-gap balancing numbers: seeds, classes, transitions, identities", "gapbal"};
    app.require_subcommand(1);

    Settings settings;
    settings.fixtures = env_or("GAPBAL_FIXTURES", GAPBAL_DEFAULT_FIXTURE_DIR);
    settings.url_template = env_or("GAPBAL_OEIS_URL", "");
    try {
        settings.jobs = static_cast<unsigned>(std::stoul(env_or("GAPBAL_JOBS", "1")));
        settings.precision = static_cast<unsigned>(std::stoul(env_or("GAPBAL_PRECISION", "60")));
        settings.timeout_seconds = std::stoi(env_or("GAPBAL_OEIS_TIMEOUT", "20"));
    } catch (const std::exception&) {
        err << "error: GAPBAL_JOBS, GAPBAL_PRECISION and GAPBAL_OEIS_TIMEOUT must be integers\n";
        return kUsage;
    }

    app.add_option("--format", settings.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    std::int64_t k = 0;
    std::int64_t k_min = 0;
    std::int64_t k_max = 0;
    std::size_t index = 0;
    std::size_t terms = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t shift = 0;
    std::string fields = "B,C,m,r,rhat";
    std::string id;
    std::optional<std::size_t> genfun_class;

    auto add_k = [&k](CLI::App* sub, bool required, std::int64_t def = 0) {
        k = def;
        auto* opt = sub->add_option("--k", k, "Gap size k >= 0")->check(CLI::NonNegativeNumber);
        if (required) opt->required();
    };
    auto add_jobs = [&settings](CLI::App* sub) {
        sub->add_option("--jobs", settings.jobs, "Worker threads for the sweep (0 = all cores; env GAPBAL_JOBS)");
    };

    auto* seeds = app.add_subcommand("seeds", "Seeds, conjugates and initial pairs of every class");
    add_k(seeds, true);

    auto* cls = app.add_subcommand("class", "Terms of one class");
    cls->add_option("--k", k, "Gap size k >= 0")->required()->check(CLI::NonNegativeNumber);
    cls->add_option("--index", index, "Class index (ascending initial term)")->required();
    cls->add_option("--terms", terms, "Number of terms")->required();
    cls->add_option("--fields", fields, "Comma list of B,C,m,r,rhat")->capture_default_str();

    auto* table2 = app.add_subcommand("table2", "Terms, transition rows and next-term row for every class");
    std::int64_t table2_k = 9;
    std::size_t table2_terms = 3;
    table2->add_option("--k", table2_k, "Gap size")->capture_default_str()->check(CLI::NonNegativeNumber);
    table2->add_option("--terms", table2_terms, "Terms per class")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the identity suite over every class of k");
    std::size_t verify_terms = 30;
    verify->add_option("--k", k, "Gap size k >= 0")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--terms", verify_terms, "Highest index checked")->capture_default_str();
    verify->add_option("--precision", settings.precision, "Decimal digits for limit checks (>= 50; env GAPBAL_PRECISION)");

    auto* transition = app.add_subcommand("transition", "Transition maps between two classes");
    transition->add_option("--k", k, "Gap size k >= 0")->required()->check(CLI::NonNegativeNumber);
    transition->add_option("--from", from, "Source class index")->required();
    transition->add_option("--to", to, "Target class index")->required();
    transition->add_option("--shift", shift, "Advance the target class by this many terms")->capture_default_str();

    auto* genfun = app.add_subcommand("genfun", "Generating function of one class or of all classes");
    std::size_t genfun_terms = 12;
    genfun->add_option("--k", k, "Gap size k >= 0")->required()->check(CLI::NonNegativeNumber);
    genfun->add_option("--class", genfun_class, "Class index; omit for the interleaved function");
    genfun->add_option("--terms", genfun_terms, "Series terms to print")->capture_default_str();

    auto* conjecture = app.add_subcommand("conjecture", "Compare class counts with d(|2k^2-1|) over a k range");
    conjecture->add_option("--k-min", k_min, "Smallest k")->capture_default_str()->check(CLI::NonNegativeNumber);
    conjecture->add_option("--k-max", k_max, "Largest k")->required()->check(CLI::NonNegativeNumber);
    add_jobs(conjecture);

    auto* t1 = app.add_subcommand("table1", "Smallest k with n classes, for every observed n");
    t1->add_option("--k-max", k_max, "Largest k")->required()->check(CLI::NonNegativeNumber);
    add_jobs(t1);

    auto* ocheck = app.add_subcommand("oeis-check", "Cross-check generated sequences against b-file fixtures");
    std::size_t oeis_terms = 20;
    ocheck->add_option("--id", id, "Sequence id (default: every aligned fixture)");
    ocheck->add_option("--terms", oeis_terms, "Generated terms to compare")->capture_default_str();
    ocheck->add_option("--fixtures", settings.fixtures, "Fixture directory (env GAPBAL_FIXTURES)");

    auto* orefresh = app.add_subcommand("oeis-refresh", "Download a b-file into the fixture directory");
    orefresh->add_option("--id", id, "Sequence id")->required();
    orefresh->add_option("--fixtures", settings.fixtures, "Fixture directory (env GAPBAL_FIXTURES)");
    orefresh->add_option("--url-template", settings.url_template,
                         "URL with {id}/{num} placeholders (env GAPBAL_OEIS_URL)");
    orefresh->add_option("--timeout", settings.timeout_seconds, "Seconds (env GAPBAL_OEIS_TIMEOUT)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Format fmt = parse_format(settings.format);
    try {
        if (*seeds) return cmd_seeds(k, fmt, out);
        if (*cls) return cmd_class(k, index, terms, fields, fmt, out);
        if (*table2) return cmd_table2(table2_k, table2_terms, fmt, out);
        if (*verify) return cmd_verify(k, verify_terms, settings.precision, fmt, out);
        if (*transition) return cmd_transition(k, from, to, shift, fmt, out);
        if (*genfun) return cmd_genfun(k, genfun_class, genfun_terms, fmt, out);
        if (*conjecture) return cmd_conjecture(k_min, k_max, settings.jobs, fmt, out);
        if (*t1) return cmd_table1(k_max, settings.jobs, fmt, out);
        if (*ocheck) return cmd_oeis_check(id, oeis_terms, settings.fixtures, fmt, out);
        if (*orefresh) return cmd_oeis_refresh(id, settings, fmt, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDataMismatch;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace gapbal::cli
