#include "pdb/serialize.hpp"

#include "pdb/errors.hpp"

#include <cstdio>
#include <sstream>

namespace pdb {

namespace {

json header()
{
    return json{{"schema", schema_version}};
}

void check_schema(const json &j)
{
    if (!j.is_object() || j.value("schema", 0) != schema_version)
        throw InvalidInput("expected a JSON object with \"schema\": " +
                           std::to_string(schema_version));
}

json pv_list(const std::vector<ParikhVector> &ps)
{
    json out = json::array();
    for (const auto &p : ps)
        out.push_back(pv_to_json(p));
    return out;
}

std::vector<ParikhVector> pv_list_from(const json &j)
{
    std::vector<ParikhVector> out;
    for (const auto &e : j)
        out.push_back(pv_from_json(e));
    return out;
}

template <class T>
json optional_to_json(const std::optional<T> &v)
{
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json &j, const char *key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

} // namespace

json pv_to_json(const ParikhVector &p)
{
    json out = json::array();
    for (auto c : p.counts())
        out.push_back(c);
    return out;
}

ParikhVector pv_from_json(const json &j)
{
    if (!j.is_array())
        throw InvalidInput("a Parikh vector must be a JSON array of integers");
    return ParikhVector(j.get<std::vector<Count>>());
}

std::string word_to_string(std::span<const Letter> word, std::size_t sigma)
{
    return Alphabet(sigma).render(word);
}

Word word_from_string(const std::string &text, std::size_t sigma)
{
    return Alphabet(sigma).parse(text);
}

json to_json(const CoverReport &r)
{
    json j = header();
    j["k"] = r.k;
    j["sigma"] = r.sigma;
    j["word"] = word_to_string(r.word, r.sigma);
    j["length"] = r.word.size();
    j["is_covering"] = r.is_covering;
    j["is_pdb"] = r.is_pdb;
    j["excess"] = optional_to_json(r.excess);
    j["missing"] = pv_list(r.missing);
    json dup = json::array();
    for (const auto &[p, m] : r.duplicated)
        dup.push_back({{"vector", pv_to_json(p)}, {"count", m}});
    j["duplicated"] = dup;
    return j;
}

CoverReport cover_report_from_json(const json &j)
{
    check_schema(j);
    CoverReport r;
    r.k = j.at("k").get<std::uint64_t>();
    r.sigma = j.at("sigma").get<std::size_t>();
    r.word = word_from_string(j.at("word").get<std::string>(), r.sigma);
    r.is_covering = j.at("is_covering").get<bool>();
    r.is_pdb = j.at("is_pdb").get<bool>();
    r.excess = optional_from<std::int64_t>(j, "excess");
    r.missing = pv_list_from(j.at("missing"));
    for (const auto &e : j.at("duplicated"))
        r.duplicated.emplace_back(pv_from_json(e.at("vector")), e.at("count").get<std::uint64_t>());
    return r;
}

json to_json(const BoundsReport &r)
{
    json j = header();
    j["k"] = r.k;
    j["sigma"] = r.sigma;
    j["pdb_length"] = r.pdb_length;
    j["counting_bound"] = r.counting_bound;
    j["shortest_lower_bound"] = r.shortest_lower_bound;
    j["pdb_possible_by_bounds"] = r.pdb_possible_by_bounds;
    j["uc_divisibility"] = r.uc_divisibility;
    j["known_verdict"] = to_string(r.known_verdict);
    j["verdict_source"] = r.verdict_source;
    return j;
}

namespace {

Verdict parse_verdict(const std::string &s)
{
    for (auto v : {Verdict::Exists, Verdict::Impossible, Verdict::Unknown})
        if (s == to_string(v))
            return v;
    throw InvalidInput("unknown verdict '" + s + "'");
}

SearchStatus parse_status(const std::string &s)
{
    for (auto v : {SearchStatus::Found, SearchStatus::RefutedUpTo, SearchStatus::BudgetExhausted})
        if (s == to_string(v))
            return v;
    throw InvalidInput("unknown search status '" + s + "'");
}

} // namespace

BoundsReport bounds_report_from_json(const json &j)
{
    check_schema(j);
    BoundsReport r;
    r.k = j.at("k").get<std::uint64_t>();
    r.sigma = j.at("sigma").get<std::size_t>();
    r.pdb_length = j.at("pdb_length").get<std::uint64_t>();
    r.counting_bound = j.at("counting_bound").get<std::uint64_t>();
    r.shortest_lower_bound = j.at("shortest_lower_bound").get<std::uint64_t>();
    r.pdb_possible_by_bounds = j.at("pdb_possible_by_bounds").get<bool>();
    r.uc_divisibility = j.at("uc_divisibility").get<bool>();
    r.known_verdict = parse_verdict(j.at("known_verdict").get<std::string>());
    r.verdict_source = j.at("verdict_source").get<std::string>();
    return r;
}

json to_json(const SearchOutcome &r)
{
    json j = header();
    j["k"] = r.k;
    j["sigma"] = r.sigma;
    j["status"] = to_string(r.status);
    j["refuted_up_to"] = optional_to_json(r.refuted_up_to);
    if (r.witness) {
        j["witness"] = word_to_string(*r.witness, r.sigma);
        j["length"] = r.witness->size();
    } else {
        j["witness"] = nullptr;
        j["length"] = nullptr;
    }
    j["minimal"] = r.minimal;
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"elapsed_ms", r.stats.elapsed_ms},
                  {"max_depth", r.stats.max_depth}};
    return j;
}

SearchOutcome search_outcome_from_json(const json &j)
{
    check_schema(j);
    SearchOutcome r;
    r.k = j.at("k").get<std::uint64_t>();
    r.sigma = j.at("sigma").get<std::size_t>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.refuted_up_to = optional_from<std::uint64_t>(j, "refuted_up_to");
    if (auto w = optional_from<std::string>(j, "witness"))
        r.witness = word_from_string(*w, r.sigma);
    r.minimal = j.at("minimal").get<bool>();
    const auto &s = j.at("stats");
    r.stats.nodes = s.at("nodes").get<std::uint64_t>();
    r.stats.elapsed_ms = s.at("elapsed_ms").get<double>();
    r.stats.max_depth = s.at("max_depth").get<std::uint64_t>();
    return r;
}

json to_json(const RealizabilityResult &r, std::uint64_t k, std::size_t sigma)
{
    json j = header();
    j["k"] = k;
    j["sigma"] = sigma;
    j["realizable"] = r.realizable;
    j["witness"] = r.witness ? json(word_to_string(*r.witness, sigma)) : json(nullptr);
    if (r.refutation)
        j["refutation"] = {{"component_a", pv_list(r.refutation->first)},
                           {"component_b", pv_list(r.refutation->second)}};
    else
        j["refutation"] = nullptr;
    return j;
}

RealizabilityResult realizability_from_json(const json &j)
{
    check_schema(j);
    RealizabilityResult r;
    const auto sigma = j.at("sigma").get<std::size_t>();
    r.realizable = j.at("realizable").get<bool>();
    if (auto w = optional_from<std::string>(j, "witness"))
        r.witness = word_from_string(*w, sigma);
    if (!j.at("refutation").is_null()) {
        const auto &ref = j.at("refutation");
        r.refutation = std::make_pair(pv_list_from(ref.at("component_a")),
                                      pv_list_from(ref.at("component_b")));
    }
    return r;
}

json to_json(const Walk &w)
{
    json j = header();
    j["k"] = w.k;
    j["sigma"] = w.sigma();
    j["vertices"] = pv_list(w.vertices);
    if (w.labels) {
        Alphabet alpha(w.sigma());
        json labels = json::array();
        for (const auto &l : *w.labels)
            labels.push_back({{"out", alpha.render(l.out)}, {"in", alpha.render(l.in)}});
        j["labels"] = labels;
    } else {
        j["labels"] = nullptr;
    }
    return j;
}

Walk walk_from_json(const json &j)
{
    check_schema(j);
    Walk w;
    w.k = j.at("k").get<std::uint64_t>();
    w.vertices = pv_list_from(j.at("vertices"));
    if (!j.at("labels").is_null()) {
        Alphabet alpha(j.at("sigma").get<std::size_t>());
        std::vector<EdgeLabel> labels;
        for (const auto &l : j.at("labels"))
            labels.push_back({alpha.parse_letter(l.at("out").get<std::string>()),
                              alpha.parse_letter(l.at("in").get<std::string>())});
        w.labels = std::move(labels);
    }
    return w;
}

json to_json(const WalkRealization &r, const Walk &walk)
{
    json j = to_json(walk);
    const auto sigma = walk.sigma();
    j["realizable"] = r.realizable;
    j["word"] = r.word ? json(word_to_string(*r.word, sigma)) : json(nullptr);
    const char *defect = "none";
    if (r.defect == WalkDefect::NotAWalk)
        defect = "not_a_walk";
    else if (r.defect == WalkDefect::Inconsistent)
        defect = "inconsistent";
    j["defect"] = defect;
    if (!r.realizable) {
        j["failing_step"] = r.failing_step;
        j["constraint"] = r.constraint;
    }
    j["itinerary"] = pv_list(itinerary(walk.vertices));
    return j;
}

json covset_to_json(std::span<const Letter> word, std::size_t sigma,
                    const std::set<std::uint64_t> &ks)
{
    json j = header();
    j["sigma"] = sigma;
    j["word"] = word_to_string(word, sigma);
    j["covset"] = ks;
    return j;
}

json to_json(const MincovEstimate &m)
{
    json j = header();
    j["k"] = m.k;
    j["sigma"] = m.sigma;
    j["numerator"] = m.numerator;
    j["denominator"] = m.denominator;
    j["value"] = m.value();
    j["witness"] = word_to_string(m.witness, m.sigma);
    j["words_examined"] = m.words_examined;
    j["enumerated_up_to"] = m.enumerated_up_to;
    j["estimate_only"] = m.estimate_only;
    j["budget_exhausted"] = m.budget_exhausted;
    return j;
}

json pdb_classes_to_json(std::uint64_t k, std::size_t sigma, const std::vector<Word> &words)
{
    json j = header();
    j["k"] = k;
    j["sigma"] = sigma;
    json list = json::array();
    for (const auto &w : words)
        list.push_back(word_to_string(w, sigma));
    j["classes"] = list;
    j["count"] = words.size();
    return j;
}

json progress_to_json(const Progress &p)
{
    return {{"length", p.length}, {"nodes", p.nodes}, {"max_depth", p.max_depth}};
}

namespace {

void check_export(const Grid &g)
{
    if (g.vertex_count() > max_export_vertices)
        throw CapacityError("grid has " + std::to_string(g.vertex_count()) +
                            " vertices; export is limited to " +
                            std::to_string(max_export_vertices));
}

} // namespace

json grid_to_json(const Grid &g)
{
    check_export(g);
    Alphabet alpha(g.sigma());
    json j = header();
    j["k"] = g.k();
    j["sigma"] = g.sigma();
    json vertices = json::array();
    json bows = json::array();
    for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
        auto p = g.vertex(r);
        json v = {{"rank", r}, {"vector", pv_to_json(p)}};
        if (g.sigma() == 3) {
            auto pt = layout_2d(p);
            v["x"] = pt.x;
            v["y"] = pt.y;
        }
        vertices.push_back(v);
        for (auto letter : g.bows(p))
            bows.push_back({{"vertex", r}, {"letter", alpha.render(letter)}});
    }
    json edges = json::array();
    for (const auto &[a, b] : g.edge_list())
        edges.push_back({a, b});
    json arcs = json::array();
    for (const auto &arc : g.arc_list())
        arcs.push_back({{"from", arc.from},
                        {"to", arc.to},
                        {"out", alpha.render(arc.label.out)},
                        {"in", alpha.render(arc.label.in)}});
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = g.undirected_edge_count();
    j["bow_count"] = g.bow_count();
    j["vertices"] = vertices;
    j["edges"] = edges;
    j["bows"] = bows;
    j["arcs"] = arcs;
    return j;
}

std::string grid_to_dot(const Grid &g)
{
    check_export(g);
    Alphabet alpha(g.sigma());
    std::ostringstream out;
    out << "graph \"H(" << g.k() << "," << g.sigma() << ")\" {\n";
    out << "  node [shape=plaintext];\n";
    for (std::uint64_t r = 0; r < g.vertex_count(); ++r) {
        auto p = g.vertex(r);
        out << "  v" << r << " [label=\"" << p.to_string() << "\"";
        if (g.sigma() == 3) {
            auto pt = layout_2d(p);
            out << ", pos=\"" << format_double(pt.x) << "," << format_double(pt.y) << "!\"";
        }
        out << "];\n";
    }
    for (const auto &[a, b] : g.edge_list())
        out << "  v" << a << " -- v" << b << ";\n";
    for (std::uint64_t r = 0; r < g.vertex_count(); ++r)
        for (auto letter : g.bows(g.vertex(r)))
            out << "  v" << r << " -- v" << r << " [label=\"" << alpha.render(letter) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string table_header()
{
    return "sigma\tk\tword\tlength\tpdb\texcess";
}

std::string table_row(const CoverReport &r)
{
    std::ostringstream out;
    out << r.sigma << '\t' << r.k << '\t' << word_to_string(r.word, r.sigma) << '\t'
        << r.word.size() << '\t' << (r.is_pdb ? "yes" : "no") << '\t';
    if (r.excess)
        out << *r.excess;
    else
        out << '-';
    return out.str();
}

} // namespace pdb
