#include "stabce/survey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "stabce/metrics.hpp"

namespace stabce {

namespace {

void check_bound(std::size_t n, std::size_t bound) {
    if (n == 0) throw std::invalid_argument("survey: n must be at least 1");
    if (n > bound || bound > kSurveyBound) {
        throw std::invalid_argument("survey: n = " + std::to_string(n) + " exceeds the enumeration bound of " +
                                    std::to_string(std::min(bound, kSurveyBound)));
    }
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

std::string optional_text(const std::optional<DyadicRational>& v) { return v ? v->to_string() : std::string(); }

nlohmann::ordered_json record_json(const SurveyRecord& r) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    if (r.ce.numerator() <= ~std::uint64_t{0}) {
        j["ce_num"] = static_cast<std::uint64_t>(r.ce.numerator());
    } else {
        j["ce_num"] = to_decimal(r.ce.numerator());
    }
    j["ce_log2_den"] = r.ce.log2_denominator();
    j["achieves_min"] = r.achieves_min;
    j["achieves_max"] = r.achieves_max;
    j["distinct_purities"] = r.distinct_purities;
    return j;
}

}  // namespace

std::vector<Graph> enumerate_all(std::size_t n, std::size_t bound) {
    check_bound(n, bound);
    if (n == 1) return {Graph(1)};

    // Every graph on n vertices is some (n-1)-vertex graph plus one vertex.
    std::set<std::string> keys;
    for (const auto& base : enumerate_all(n - 1, bound)) {
        for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
            Graph g(n);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (std::size_t u = 0; u + 1 < n; ++u)
                if ((nbrs >> u) & 1U) g.add_edge(u, n - 1);
            keys.insert(canonical_form(g, bound));
        }
    }
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(parse_graph6(k));
    return out;
}

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t bound) {
    auto all = enumerate_all(n, bound);
    std::erase_if(all, [](const Graph& g) { return !g.is_connected(); });
    return all;
}

SurveyRecord survey_record(const Graph& g) {
    const auto report = ce_report(g, QubitSet::full(g.size()));
    return SurveyRecord{write_graph6(g), g.size(), report.ce, report.spectrum.distinct_purities(),
                        report.achieves_min, report.achieves_max};
}

SurveyResult ce_survey(std::size_t n, std::size_t bound) {
    SurveyResult result;
    result.n = n;
    for (const auto& g : enumerate_connected(n, bound)) result.records.push_back(survey_record(g));
    std::sort(result.records.begin(), result.records.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
        if (a.ce != b.ce) return a.ce < b.ce;
        return a.graph6 < b.graph6;
    });
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        if (i == 0 || result.records[i].ce != result.records[i - 1].ce) ++result.distinct_ce_values;
    }
    return result;
}

std::vector<Graph> max_achievers(std::size_t n, std::size_t bound) {
    std::vector<Graph> out;
    for (auto& g : enumerate_connected(n, bound))
        if (maximally_entangled_everywhere(purity_spectrum(g))) out.push_back(std::move(g));
    return out;
}

std::vector<FamilyRecord> family_sweep(Family kind, std::size_t from, std::size_t to) {
    if (from > to) throw std::invalid_argument("family sweep: empty size range");
    std::vector<FamilyRecord> out;
    for (std::size_t size = from; size <= to; ++size) {
        const Graph g = Graph::family(kind, size);
        FamilyRecord rec;
        rec.kind = kind;
        rec.size = size;
        rec.full = survey_record(g);
        if (kind == Family::snowflake) {
            const auto core = QubitSet(g.size(), (std::uint64_t{1} << size) - 1);
            rec.core_ce = concentratable_entanglement(g, core);
            rec.pendant_ce = concentratable_entanglement(g, core.complement());
            rec.closed_form = snowflake_subset_ce(size);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRecord>& records) {
    out << "graph6,n,ce_num,ce_log2_den,achieves_min,achieves_max,distinct_purities\n";
    for (const auto& r : records) {
        out << r.graph6 << ',' << r.n << ',' << to_decimal(r.ce.numerator()) << ',' << r.ce.log2_denominator() << ','
            << bool_text(r.achieves_min) << ',' << bool_text(r.achieves_max) << ',' << r.distinct_purities << '\n';
    }
}

void write_survey_jsonl(std::ostream& out, const std::vector<SurveyRecord>& records) {
    for (const auto& r : records) out << record_json(r).dump() << '\n';
}

void write_family_csv(std::ostream& out, const std::vector<FamilyRecord>& records) {
    out << "family,size,graph6,n,ce_num,ce_log2_den,achieves_min,achieves_max,distinct_purities,core_ce,pendant_ce,"
           "closed_form\n";
    for (const auto& rec : records) {
        const auto& r = rec.full;
        out << family_name(rec.kind) << ',' << rec.size << ',' << r.graph6 << ',' << r.n << ','
            << to_decimal(r.ce.numerator()) << ',' << r.ce.log2_denominator() << ',' << bool_text(r.achieves_min)
            << ',' << bool_text(r.achieves_max) << ',' << r.distinct_purities << ',' << optional_text(rec.core_ce)
            << ',' << optional_text(rec.pendant_ce) << ',' << optional_text(rec.closed_form) << '\n';
    }
}

void write_family_jsonl(std::ostream& out, const std::vector<FamilyRecord>& records) {
    for (const auto& rec : records) {
        nlohmann::ordered_json j;
        j["family"] = family_name(rec.kind);
        j["size"] = rec.size;
        for (auto& [key, value] : record_json(rec.full).items()) j[key] = value;
        if (rec.core_ce) j["core_ce"] = rec.core_ce->to_string();
        if (rec.pendant_ce) j["pendant_ce"] = rec.pendant_ce->to_string();
        if (rec.closed_form) j["closed_form"] = rec.closed_form->to_string();
        out << j.dump() << '\n';
    }
}

}  // namespace stabce
