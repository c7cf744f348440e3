#include "stabce/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stabce/metrics.hpp"
#include "stabce/stabilizer.hpp"
#include "stabce/survey.hpp"
#include "stabce/verify.hpp"

namespace stabce::cli {

namespace {

/// Bad input from the command line; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { table, csv, jsonl };

struct GraphSource {
    std::string graph6;
    std::string edges_path;
    std::string family;
    std::size_t size = 0;
};

struct Common {
    GraphSource source;
    std::string subset;
    std::string cut;
    Format format = Format::table;
    bool decimal = false;
};

void add_source(CLI::App* cmd, GraphSource& src) {
    auto* g6 = cmd->add_option("--graph6", src.graph6, "Graph in graph6 format");
    auto* edges = cmd->add_option("--edges", src.edges_path, "Edge-list file (first line n, then 1-indexed 'u v')");
    auto* family = cmd->add_option("--family", src.family, "Family: linear, ring, star, complete, snowflake");
    cmd->add_option("--size", src.size, "Family size (snowflake: core size)");
    g6->excludes(edges)->excludes(family);
    edges->excludes(family);
}

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"table", Format::table}, {"csv", Format::csv}, {"json-lines", Format::jsonl}},
            CLI::ignore_case));
    cmd->add_flag("--decimal", c.decimal, "Print values as decimals instead of exact fractions");
}

Graph load_graph(const GraphSource& src, std::ostream& err) {
    const int given = !src.graph6.empty() + !src.edges_path.empty() + !src.family.empty();
    if (given != 1) throw UsageError("exactly one graph source is required: --graph6, --edges or --family");

    Graph g;
    if (!src.graph6.empty()) {
        try {
            g = parse_graph6(src.graph6);
        } catch (const Graph6Error& e) {
            throw UsageError(std::string("invalid --graph6 value: ") + e.what());
        }
    } else if (!src.edges_path.empty()) {
        std::ifstream in(src.edges_path);
        if (!in) throw UsageError("cannot open edge list '" + src.edges_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        std::vector<std::string> warnings;
        try {
            g = parse_edge_list(buf.str(), &warnings);
        } catch (const std::exception& e) {
            throw UsageError("invalid edge list '" + src.edges_path + "': " + e.what());
        }
        for (const auto& w : warnings) err << "warning: " << w << '\n';
    } else {
        if (src.size == 0) throw UsageError("--family requires --size");
        try {
            g = Graph::family(parse_family(src.family), src.size);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (g.size() == 0) throw UsageError("graph has no vertices");
    if (!g.is_connected()) err << "warning: graph is disconnected; closed-form results assume connectivity\n";
    return g;
}

QubitSet parse_set(std::size_t n, const std::string& text, const char* flag) {
    try {
        return QubitSet::parse_labels(n, text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid ") + flag + ": " + e.what());
    }
}

// Returns the B side of "A|B", checking it is a bipartition.
QubitSet parse_cut(std::size_t n, const std::string& text) {
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw UsageError("invalid --cut: expected 'A|B'");
    const auto a = parse_set(n, text.substr(0, bar), "--cut");
    const auto b = parse_set(n, text.substr(bar + 1), "--cut");
    if (!a.disjoint(b) || (a.mask() | b.mask()) != QubitSet::full(n).mask()) {
        throw UsageError("invalid --cut: the two sides must partition qubits 1.." + std::to_string(n));
    }
    return b;
}

std::string value_text(const DyadicRational& v, bool decimal) { return decimal ? v.to_decimal_string() : v.to_string(); }

std::string spaced_labels(const QubitSet& s) {
    std::string out;
    for (auto l : s.labels()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l);
    }
    return out;
}

nlohmann::ordered_json value_json(const DyadicRational& v) {
    nlohmann::ordered_json j;
    j["value"] = v.to_string();
    j["num"] = to_decimal(v.numerator());
    j["log2_den"] = v.log2_denominator();
    return j;
}

int cmd_ce(const Common& c, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(c.source, err);
    const QubitSet s = c.subset.empty() ? QubitSet::full(g.size()) : parse_set(g.size(), c.subset, "--subset");
    if (s.empty()) throw UsageError("--subset must name at least one qubit");
    const auto rep = ce_report(g, s, write_graph6(g));
    switch (c.format) {
        case Format::table:
            out << value_text(rep.ce, c.decimal) << '\n';
            break;
        case Format::csv:
            out << "graph6,subset,ce,ce_num,ce_log2_den,connected,achieves_min,achieves_max\n";
            out << rep.graph_id << ',' << spaced_labels(s) << ',' << value_text(rep.ce, c.decimal) << ','
                << to_decimal(rep.ce.numerator()) << ',' << rep.ce.log2_denominator() << ','
                << (rep.connected ? "true" : "false") << ',' << (rep.achieves_min ? "true" : "false") << ','
                << (rep.achieves_max ? "true" : "false") << '\n';
            break;
        case Format::jsonl: {
            nlohmann::ordered_json j;
            j["graph6"] = rep.graph_id;
            j["subset"] = s.labels();
            j["ce"] = value_json(rep.ce);
            j["bounds"] = {{"min", rep.bounds.min.to_string()}, {"max", rep.bounds.max.to_string()}};
            j["connected"] = rep.connected;
            j["achieves_min"] = rep.achieves_min;
            j["achieves_max"] = rep.achieves_max;
            out << j.dump() << '\n';
            break;
        }
    }
    return kExitOk;
}

int cmd_purity(const Common& c, bool show_sets, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(c.source, err);
    if (c.subset.empty() == c.cut.empty()) throw UsageError("purity needs exactly one of --subset or --cut");
    const QubitSet kept = c.subset.empty() ? parse_cut(g.size(), c.cut) : parse_set(g.size(), c.subset, "--subset");
    const auto p = purity(g, kept);
    const auto r = schmidt_rank(g, kept);
    switch (c.format) {
        case Format::table:
            out << value_text(p, c.decimal) << '\n';
            if (show_sets) {
                const QubitSet traced = kept.complement();
                const auto sets = distinct_sets(g, traced);
                out << sets.size() << " distinct generator sets tracing out {" << traced.to_label_string() << "}\n";
                for (const auto& s : sets) {
                    out << "\noutcome";
                    const auto members = traced.members();
                    for (std::size_t i = 0; i < members.size(); ++i) {
                        out << ' ' << (s.first_outcome.bits.get(i) ? "-" : "") << "Z_" << members[i] + 1;
                    }
                    out << " (multiplicity " << s.multiplicity << ")\n" << s.generators.to_string();
                }
            }
            break;
        case Format::csv:
            out << "subset,purity,purity_num,purity_log2_den,schmidt_rank\n";
            out << spaced_labels(kept) << ',' << value_text(p, c.decimal) << ',' << to_decimal(p.numerator()) << ','
                << p.log2_denominator() << ',' << r << '\n';
            break;
        case Format::jsonl: {
            nlohmann::ordered_json j;
            j["subset"] = kept.labels();
            j["purity"] = value_json(p);
            j["schmidt_rank"] = r;
            out << j.dump() << '\n';
            break;
        }
    }
    return kExitOk;
}

int cmd_rank_index(const Common& c, std::optional<std::size_t> level, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(c.source, err);
    const auto spectrum = purity_spectrum(g);
    std::vector<std::size_t> levels;
    if (level) {
        if (*level < 1 || *level > g.size() / 2) {
            throw UsageError("--m must lie in 1.." + std::to_string(g.size() / 2));
        }
        levels.push_back(*level);
    } else {
        for (std::size_t m = 1; m <= g.size() / 2; ++m) levels.push_back(m);
    }
    if (c.format == Format::csv) out << "m,schmidt_rank,count\n";
    for (auto m : levels) {
        const auto ri = rank_index(spectrum, m);
        switch (c.format) {
            case Format::table: {
                out << "RI_" << m << " = (";
                for (std::size_t i = 0; i < ri.counts.size(); ++i) out << (i ? "," : "") << ri.counts[i];
                out << ")\n";
                break;
            }
            case Format::csv:
                for (std::size_t i = 0; i < ri.counts.size(); ++i) out << m << ',' << m - i << ',' << ri.counts[i] << '\n';
                break;
            case Format::jsonl: {
                nlohmann::ordered_json j;
                j["m"] = m;
                j["counts"] = ri.counts;
                out << j.dump() << '\n';
                break;
            }
        }
    }
    return kExitOk;
}

int cmd_spectrum(const Common& c, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(c.source, err);
    const auto spectrum = purity_spectrum(g);
    if (c.format == Format::csv) out << "m,purity,count\n";
    for (std::size_t m = 1; m < spectrum.rank_counts.size(); ++m) {
        auto tally = spectrum.tally(m);
        std::reverse(tally.begin(), tally.end());
        switch (c.format) {
            case Format::table: {
                out << "m=" << m << ':';
                for (std::size_t i = 0; i < tally.size(); ++i) {
                    out << (i ? ", " : " ") << value_text(tally[i].first, c.decimal) << " x" << tally[i].second;
                }
                out << '\n';
                break;
            }
            case Format::csv:
                for (const auto& [v, count] : tally) out << m << ',' << value_text(v, c.decimal) << ',' << count << '\n';
                break;
            case Format::jsonl: {
                nlohmann::ordered_json j;
                j["m"] = m;
                j["purities"] = nlohmann::ordered_json::array();
                for (const auto& [v, count] : tally) j["purities"].push_back({{"purity", v.to_string()}, {"count", count}});
                out << j.dump() << '\n';
                break;
            }
        }
    }
    if (c.format == Format::table) {
        out << "CE = " << value_text(DyadicRational::one() - spectrum.power_set_sum().halved(static_cast<unsigned>(g.size())), c.decimal)
            << '\n';
    }
    return kExitOk;
}

int cmd_survey(const Common& c, std::size_t n, bool stretch, bool achievers_only, std::ostream& out) {
    const std::size_t bound = stretch ? kSurveyBound : kSurveyDefaultBound;
    if (n < 1 || n > bound) {
        throw UsageError("--n must lie in 1.." + std::to_string(bound) +
                         (stretch ? std::string() : std::string(" (pass --stretch for up to ") +
                                                         std::to_string(kSurveyBound) + ")"));
    }
    auto result = ce_survey(n, bound);
    if (achievers_only) std::erase_if(result.records, [](const SurveyRecord& r) { return !r.achieves_max; });
    switch (c.format) {
        case Format::table: {
            const auto bounds = ce_bounds(n);
            out << "n=" << n << " classes=" << result.records.size() << " distinct_ce=" << result.distinct_ce_values
                << " min=" << value_text(bounds.min, c.decimal) << " max=" << value_text(bounds.max, c.decimal) << '\n';
            for (const auto& r : result.records) {
                out << r.graph6 << '\t' << value_text(r.ce, c.decimal) << (r.achieves_min ? "\tmin" : "")
                    << (r.achieves_max ? "\tmax" : "") << '\n';
            }
            break;
        }
        case Format::csv:
            write_survey_csv(out, result.records);
            break;
        case Format::jsonl:
            write_survey_jsonl(out, result.records);
            break;
    }
    return kExitOk;
}

int cmd_family(const Common& c, const std::string& kind, std::size_t from, std::size_t to, std::ostream& out) {
    std::vector<FamilyRecord> records;
    try {
        records = family_sweep(parse_family(kind), from, to);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    switch (c.format) {
        case Format::table:
            for (const auto& r : records) {
                out << family_name(r.kind) << '(' << r.size << ")\t" << value_text(r.full.ce, c.decimal);
                if (r.core_ce) {
                    out << "\tcore " << value_text(*r.core_ce, c.decimal) << "\tpendant "
                        << value_text(*r.pendant_ce, c.decimal) << "\t1-(3/4)^n " << value_text(*r.closed_form, c.decimal);
                }
                out << '\n';
            }
            break;
        case Format::csv:
            write_family_csv(out, records);
            break;
        case Format::jsonl:
            write_family_jsonl(out, records);
            break;
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
    out << "seed " << options.seed << '\n';
    bool ok = true;
    for (const auto& check : run_verification(options)) {
        out << (check.passed() ? "PASS " : "FAIL ") << check.name << " (" << check.cases << " cases";
        if (!check.passed()) out << ", " << check.failures << " failed; first: " << check.first_failure;
        out << ")\n";
        ok = ok && check.passed();
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Purities and Concentratable Entanglement of graph states from stabilizer generators", "stabce"};
    app.require_subcommand(1);

    Common ce_opts, purity_opts, ri_opts, spec_opts, survey_opts, family_opts;

    auto* ce = app.add_subcommand("ce", "Concentratable Entanglement of a qubit subset (default: all qubits)");
    add_source(ce, ce_opts.source);
    ce->add_option("--subset", ce_opts.subset, "1-indexed qubits, e.g. 1,3,5");
    add_format(ce, ce_opts);

    bool show_sets = false;
    auto* pur = app.add_subcommand("purity", "Purity of a reduced state");
    add_source(pur, purity_opts.source);
    pur->add_option("--subset", purity_opts.subset, "Kept qubits, 1-indexed");
    pur->add_option("--cut", purity_opts.cut, "Bipartition 'A|B'; reports the purity of B");
    pur->add_flag("--show-sets", show_sets, "List the distinct generator sets of the traced-out side");
    add_format(pur, purity_opts);

    std::optional<std::size_t> level;
    auto* ri = app.add_subcommand("rank-index", "Rank indices RI_m");
    add_source(ri, ri_opts.source);
    ri->add_option("--m", level, "Smaller-side size (default: every level)");
    add_format(ri, ri_opts);

    auto* spec = app.add_subcommand("spectrum", "Purity tallies per smaller-side size");
    add_source(spec, spec_opts.source);
    add_format(spec, spec_opts);

    std::size_t survey_n = 0;
    bool stretch = false;
    bool achievers_only = false;
    auto* survey = app.add_subcommand("survey", "CE of every connected graph on n vertices, up to isomorphism");
    survey->add_option("--n", survey_n, "Vertex count")->required();
    survey->add_flag("--stretch", stretch, "Allow n = 7 and 8 (slow)");
    survey->add_flag("--achievers", achievers_only, "Only list graphs attaining the maximum CE");
    add_format(survey, survey_opts);

    std::string kind;
    std::size_t from = 0;
    std::size_t to = 0;
    auto* family = app.add_subcommand("family", "CE across a graph family");
    family->add_option("--kind", kind, "linear, ring, star, complete, snowflake")->required();
    family->add_option("--from", from, "First size")->required();
    family->add_option("--to", to, "Last size")->required();
    add_format(family, family_opts);

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Cross-check the stabilizer engine against the dense oracle");
    verify->add_option("--seed", vopts.seed, "Random seed");
    verify->add_option("--cases", vopts.purity_cases, "Random purity cases");
    verify->add_option("--measurements", vopts.measurement_cases, "Random measurement-rule cases");
    verify->add_option("--lemma-cases", vopts.lemma_cases, "Random lemma cases");
    verify->add_option("--max-qubits", vopts.max_qubits, "Largest random graph")->check(CLI::Range(2, 12));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ce) return cmd_ce(ce_opts, out, err);
        if (*pur) return cmd_purity(purity_opts, show_sets, out, err);
        if (*ri) return cmd_rank_index(ri_opts, level, out, err);
        if (*spec) return cmd_spectrum(spec_opts, out, err);
        if (*survey) return cmd_survey(survey_opts, survey_n, stretch, achievers_only, out);
        if (*family) return cmd_family(family_opts, kind, from, to, out);
        if (*verify) return cmd_verify(vopts, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

}  // namespace stabce::cli
