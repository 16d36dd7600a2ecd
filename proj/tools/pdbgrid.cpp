// pdbgrid -- command-line front end for the Parikh-de-Bruijn library.
//
// Exit codes: 0 positive verdict (covering, realizable, found), 1 negative
// verdict, 2 usage, input or capacity error, 3 internal error.

#include "pdb/pdb.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

struct Options
{
    std::optional<std::uint64_t> k;
    std::optional<std::size_t> sigma;
    std::string format = "json";
    std::string output;
    unsigned threads = 1;
};

unsigned default_threads()
{
    if (const char *env = std::getenv("PDB_THREADS")) {
        char *end = nullptr;
        auto n = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && n > 0)
            return static_cast<unsigned>(n);
    }
    return 1;
}

pdb_format format_of(const std::string &name)
{
    if (name == "dot")
        return PDB_FORMAT_DOT;
    if (name == "table")
        return PDB_FORMAT_TABLE;
    return PDB_FORMAT_JSON;
}

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::uint64_t need_k(const Options &o)
{
    if (!o.k)
        throw UsageError("--k is required for this command");
    return *o.k;
}

std::size_t need_sigma(const Options &o)
{
    if (!o.sigma)
        throw UsageError("--sigma is required for this command");
    return *o.sigma;
}

int exit_code(pdb_status s)
{
    switch (s) {
    case PDB_OK: return 0;
    case PDB_ERR_NOT_REALIZABLE: return 1;
    case PDB_ERR_INTERNAL: return 3;
    default: return 2;
    }
}

// Prints the result (or the error) and maps it to an exit code.
int finish(const Options &o, pdb_status status, pdb_result *result)
{
    if (status != PDB_OK) {
        std::cerr << "error (" << pdb_status_name(status) << "): " << pdb_last_error() << "\n";
        return exit_code(status);
    }
    const char *text = pdb_result_text(result);
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.output);
        if (!file) {
            std::cerr << "error: cannot write " << o.output << "\n";
            pdb_result_free(result);
            return 2;
        }
        file << text;
    }
    int code = pdb_result_positive(result) ? 0 : 1;
    pdb_result_free(result);
    return code;
}

void print_progress(const char *line, void *)
{
    std::fprintf(stderr, "%s\n", line);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Parikh vectors, PdB grids, covering words and their search"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    o.threads = default_threads();
    app.add_option("--k", o.k, "Window length / Parikh vector order")->check(CLI::PositiveNumber);
    app.add_option("--sigma", o.sigma, "Alphabet size")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "table"}));
    app.add_option("--output", o.output, "Write the result to this file instead of stdout");
    app.add_option("--threads", o.threads, "Worker threads (default: $PDB_THREADS or 1)")
        ->check(CLI::PositiveNumber);

    std::function<int()> run;

    auto *grid = app.add_subcommand("grid", "Render the grid H(k, sigma)");
    grid->callback([&] {
        run = [&] {
            pdb_grid *g = nullptr;
            auto s = pdb_grid_create(need_k(o), need_sigma(o), &g);
            if (s != PDB_OK)
                return finish(o, s, nullptr);
            pdb_result *r = nullptr;
            s = pdb_grid_render(g, format_of(o.format), &r);
            pdb_grid_free(g);
            return finish(o, s, r);
        };
    });

    std::string word;
    auto *verify = app.add_subcommand("verify", "Check whether a word is k-covering / PdB");
    verify->add_option("word", word, "The word")->required();
    verify->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_verify(word.c_str(), need_k(o), need_sigma(o), format_of(o.format), &r);
            return finish(o, s, r);
        };
    });

    std::string vertices;
    bool spell = false;
    auto *walk = app.add_subcommand("walk", "Walk of a word, or realizability of a vertex sequence");
    auto *walk_word = walk->add_option("word", word, "Word whose walk is printed");
    walk->add_option("--vertices", vertices, "Vertex sequence, e.g. \"(3,0,0),(2,1,0)\"")
        ->excludes(walk_word);
    walk->add_flag("--spell", spell, "Print only the spelled word (with --vertices)");
    walk->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            pdb_status s;
            if (!vertices.empty())
                s = spell ? pdb_spell(vertices.c_str(), &r)
                          : pdb_walk_of_vertices(vertices.c_str(), &r);
            else if (!word.empty())
                s = pdb_walk_of_word(word.c_str(), need_k(o), need_sigma(o), &r);
            else
                throw UsageError("walk needs a word or --vertices");
            return finish(o, s, r);
        };
    });

    std::string vectors;
    auto *realize = app.add_subcommand("realize", "Decide whether a vector set is some Pi_k(w)");
    realize->add_option("vectors", vectors, "Vector list, e.g. \"(3,0,0),(0,3,0)\"")->required();
    realize->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_realize(vectors.c_str(), need_k(o), need_sigma(o), &r);
            return finish(o, s, r);
        };
    });

    std::string target = "shortest";
    std::optional<std::uint64_t> length, max_len, budget, split_depth;
    std::vector<std::string> no_prune;
    bool progress = false;
    std::uint64_t interval = 0;
    auto *search = app.add_subcommand("search", "Search for shortest covering or PdB words");
    search->add_option("--target", target, "shortest, pdb or length")
        ->check(CLI::IsMember({"shortest", "pdb", "length"}));
    search->add_option("--length", length, "Target length for --target length");
    search->add_option("--max-len", max_len, "Give up above this length");
    search->add_option("--budget", budget, "Node budget (0 = unlimited, default 1e8)");
    search->add_option("--split-depth", split_depth, "Prefix length of parallel tasks")
        ->check(CLI::PositiveNumber);
    search->add_option("--no-prune", no_prune, "Disable a prune rule")
        ->check(CLI::IsMember({"duplicate_window", "unreachable_vectors", "letter_budget",
                               "distance"}));
    search->add_flag("--progress", progress, "Write progress JSON lines to stderr");
    search->add_option("--progress-interval", interval, "Nodes between progress lines");
    search->callback([&] {
        run = [&] {
            pdb_search_config *cfg = nullptr;
            auto s = pdb_search_config_create(need_k(o), need_sigma(o), &cfg);
            if (s != PDB_OK)
                return finish(o, s, nullptr);
            auto check = [&](pdb_status st) {
                if (st != PDB_OK && s == PDB_OK)
                    s = st;
            };
            if (target == "pdb")
                check(pdb_search_set_target(cfg, PDB_TARGET_PDB_ONLY));
            else if (target == "length") {
                if (!length)
                    throw UsageError("--target length needs --length");
                check(pdb_search_set_target(cfg, PDB_TARGET_EXISTENCE_AT_LENGTH));
            }
            if (length)
                check(pdb_search_set_length(cfg, *length));
            if (max_len)
                check(pdb_search_set_max_len(cfg, *max_len));
            if (budget)
                check(pdb_search_set_node_budget(cfg, *budget));
            if (split_depth)
                check(pdb_search_set_split_depth(cfg, *split_depth));
            check(pdb_search_set_threads(cfg, o.threads));
            static const std::map<std::string, pdb_prune> rules{
                {"duplicate_window", PDB_PRUNE_DUPLICATE_WINDOW},
                {"unreachable_vectors", PDB_PRUNE_UNREACHABLE_VECTORS},
                {"letter_budget", PDB_PRUNE_LETTER_BUDGET},
                {"distance", PDB_PRUNE_DISTANCE}};
            for (const auto &name : no_prune)
                check(pdb_search_set_prune(cfg, rules.at(name), 0));
            if (progress)
                check(pdb_search_set_progress(cfg, print_progress, nullptr, interval));
            pdb_result *r = nullptr;
            if (s == PDB_OK)
                s = pdb_search_run(cfg, format_of(o.format), &r);
            pdb_search_config_free(cfg);
            return finish(o, s, r);
        };
    });

    auto *bounds = app.add_subcommand("bounds", "Length bounds and known existence verdict");
    bounds->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_bounds(need_k(o), need_sigma(o), &r);
            return finish(o, s, r);
        };
    });

    auto *covset = app.add_subcommand("covset", "Every k for which a word is k-covering");
    covset->add_option("word", word, "The word")->required();
    covset->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_covset(word.c_str(), need_sigma(o), &r);
            return finish(o, s, r);
        };
    });

    std::string family;
    auto *construct = app.add_subcommand("construct", "Build a word from a known family");
    construct->add_option("family", family, "binary_pdb, k2_eulerian or kcover_not_k1")
        ->required()
        ->check(CLI::IsMember({"binary_pdb", "k2_eulerian", "kcover_not_k1"}));
    construct->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_construct(family.c_str(), need_k(o), need_sigma(o), format_of(o.format),
                                   &r);
            return finish(o, s, r);
        };
    });

    bool force = false;
    auto *enumerate = app.add_subcommand("enumerate-pdb",
                                         "All PdB words up to reversal and relabeling");
    enumerate->add_flag("--force", force, "Ignore the size gate");
    enumerate->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_enumerate_pdb(need_k(o), need_sigma(o), force ? 1 : 0, o.threads, &r);
            return finish(o, s, r);
        };
    });

    std::uint64_t mincov_len = 0;
    std::uint64_t mincov_budget = 0;
    auto *mincov = app.add_subcommand("mincov",
                                      "Smallest fraction of (k-1)-vectors in k-covering words");
    mincov->add_option("--max-len", mincov_len, "Longest word length enumerated")->required();
    mincov->add_option("--budget", mincov_budget, "Node budget (0 = unlimited)");
    mincov->callback([&] {
        run = [&] {
            pdb_result *r = nullptr;
            auto s = pdb_mincov(need_k(o), need_sigma(o), mincov_len, o.threads, mincov_budget, &r);
            return finish(o, s, r);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (o.format == "dot" && !grid->parsed()) {
        std::cerr << "error: --format dot is only available for grid\n";
        return 2;
    }
    try {
        return run();
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
