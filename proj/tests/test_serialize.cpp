#include "helpers.hpp"
#include "known_words.hpp"

#include "pdb/errors.hpp"
#include "pdb/serialize.hpp"

#include <doctest.h>

#include <regex>

using namespace pdb;
using testing::P;
using testing::W;

TEST_SUITE("cli_export")
{
    TEST_CASE("cover reports round-trip")
    {
        std::mt19937 rng(11);
        std::vector<CoverReport> reports;
        for (const auto &row : testing::table_rows())
            reports.push_back(verify(W(row.word), row.k, row.sigma));
        for (int i = 0; i < 50; ++i) {
            std::size_t sigma = 1 + rng() % 4;
            reports.push_back(verify(testing::random_word(rng, rng() % 15, sigma), 1 + rng() % 3, sigma));
        }
        Alphabet big(30);
        reports.push_back(verify(big.parse("0,29,3,3"), 1, 30));
        for (const auto &r : reports) {
            auto j = to_json(r);
            CHECK(j["schema"] == 1);
            auto back = cover_report_from_json(json::parse(j.dump()));
            CHECK(back == r);
        }
        auto j = to_json(verify(W("abbbcccaaabc"), 3, 3));
        CHECK(j["is_pdb"] == true);
        CHECK(j["excess"] == 0);
        CHECK(j["word"] == "abbbcccaaabc");
        CHECK(to_json(verify(W("ab"), 2, 2))["excess"].is_null());
    }

    TEST_CASE("bounds reports round-trip")
    {
        for (std::uint64_t k = 1; k <= 6; ++k)
            for (std::size_t sigma = 1; sigma <= 6; ++sigma) {
                auto b = bounds(k, sigma);
                auto back = bounds_report_from_json(json::parse(to_json(b).dump()));
                CHECK(back == b);
            }
        CHECK(to_json(bounds(4, 3))["known_verdict"] == "impossible");
    }

    TEST_CASE("search outcomes round-trip")
    {
        SearchConfig cfg;
        cfg.k = 2;
        cfg.sigma = 3;
        auto found = search(cfg);
        CHECK(search_outcome_from_json(json::parse(to_json(found).dump())) == found);
        auto refuted = search_pdb_existence(4, 3);
        CHECK(search_outcome_from_json(json::parse(to_json(refuted).dump())) == refuted);
        cfg.sigma = 6;
        cfg.node_budget = 100;
        auto exhausted = search(cfg);
        CHECK(search_outcome_from_json(json::parse(to_json(exhausted).dump())) == exhausted);
        auto j = to_json(found);
        CHECK(j["minimal"] == true);
        CHECK(j["status"] == "found");
        CHECK(j["witness"] == "aabbcca");
        CHECK(j["length"] == 7);
    }

    TEST_CASE("realizability results and walks round-trip")
    {
        std::vector<std::vector<ParikhVector>> sets{
            {P({3, 0, 0}), P({0, 3, 0})}, {P({2, 1, 0}), P({1, 2, 0})}, {P({1, 2, 0})}};
        for (const auto &s : sets) {
            auto r = is_realizable_set(s);
            auto back = realizability_from_json(json::parse(to_json(r, 3, 3).dump()));
            CHECK(back == r);
        }
        auto w = walk_of(W("aabacabb"), 4, 3);
        CHECK(walk_from_json(json::parse(to_json(w).dump())) == w);
        Walk bare;
        bare.k = 3;
        bare.vertices = {P({3, 0, 0}), P({2, 1, 0})};
        CHECK(walk_from_json(json::parse(to_json(bare).dump())) == bare);
    }

    TEST_CASE("malformed JSON is rejected")
    {
        CHECK_THROWS_AS(cover_report_from_json(json{{"schema", 2}}), InvalidInput);
        CHECK_THROWS_AS(bounds_report_from_json(json::array()), InvalidInput);
        CHECK_THROWS(search_outcome_from_json(json{{"schema", 1}}));
        auto j = to_json(bounds(2, 3));
        j["known_verdict"] = "maybe";
        CHECK_THROWS_AS(bounds_report_from_json(j), InvalidInput);
    }

    TEST_CASE("grid JSON")
    {
        auto j = grid_to_json(Grid(4, 3));
        CHECK(j["vertices"].size() == 15);
        CHECK(j["edges"].size() == 30);
        CHECK(j["bows"].size() == 30);
        CHECK(j["arcs"].size() == 90);
        CHECK(j["vertex_count"] == 15);
        CHECK(j["vertices"][0].contains("x"));
        CHECK(!grid_to_json(Grid(2, 4))["vertices"][0].contains("x"));
        for (const auto &v : j["vertices"]) {
            auto p = pv_from_json(v["vector"]);
            CHECK(v["rank"] == rank(p));
        }
    }

    TEST_CASE("DOT output passes the grammar checker for k, sigma <= 5")
    {
        for (std::uint64_t k = 1; k <= 5; ++k)
            for (std::size_t sigma = 1; sigma <= 5; ++sigma) {
                Grid g(k, sigma);
                auto dot = grid_to_dot(g);
                CAPTURE(k);
                CAPTURE(sigma);
                CHECK(oracle::check_dot(dot) == "");
                std::size_t loops = 0, edges = 0;
                std::regex edge_re(R"(v(\d+) -- v(\d+))");
                for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge_re);
                     it != std::sregex_iterator(); ++it) {
                    if ((*it)[1] == (*it)[2])
                        ++loops;
                    else
                        ++edges;
                }
                CHECK(edges == g.undirected_edge_count());
                CHECK(loops == g.bow_count());
            }
    }

    TEST_CASE("DOT grammar checker rejects broken input")
    {
        CHECK(oracle::check_dot("graph { a -- b; }") == "");
        CHECK(oracle::check_dot("digraph G { a -> b [label=\"x\"]; }") == "");
        CHECK(oracle::check_dot("graph { a -> b; }") != "");
        CHECK(oracle::check_dot("graph { a -- ; }") != "");
        CHECK(oracle::check_dot("graph { a [label=] }") != "");
        CHECK(oracle::check_dot("graph { a -- b") != "");
        CHECK(oracle::check_dot("graf { }") != "");
    }

    TEST_CASE("DOT positions follow the triangular layout")
    {
        auto dot = grid_to_dot(Grid(4, 3));
        CHECK(dot.find("label=\"(4,0,0)\", pos=\"0.0000,0.0000!\"") != std::string::npos);
        CHECK(dot.find("label=\"(0,4,0)\", pos=\"4.0000,0.0000!\"") != std::string::npos);
        CHECK(dot.find("label=\"(0,0,4)\", pos=\"2.0000,3.4641!\"") != std::string::npos);
        CHECK(grid_to_dot(Grid(2, 4)).find("pos=") == std::string::npos);
    }

    TEST_CASE("grid export has a size limit")
    {
        CHECK_THROWS_AS(grid_to_json(Grid(30, 8)), CapacityError);
        CHECK_THROWS_AS(grid_to_dot(Grid(30, 8)), CapacityError);
    }

    TEST_CASE("table rows")
    {
        CHECK(table_header() == "sigma\tk\tword\tlength\tpdb\texcess");
        CHECK(table_row(verify(W("aaaabbbbccccaacabcb"), 4, 3)) ==
              "3\t4\taaaabbbbccccaacabcb\t19\tno\t1");
        CHECK(table_row(verify(W("aabbcca"), 2, 3)) == "3\t2\taabbcca\t7\tyes\t0");
        CHECK(table_row(verify(W("ab"), 2, 2)) == "2\t2\tab\t2\tno\t-");
    }

    TEST_CASE("other reports carry the schema field")
    {
        CHECK(covset_to_json(W("aabbcca"), 3, {1, 2})["covset"] == json::array({1, 2}));
        CHECK(pdb_classes_to_json(3, 3, enumerate_all_pdb(3, 3))["count"] == 1);
        auto m = mincov_explore(3, 2, 7);
        CHECK(to_json(m)["schema"] == 1);
        CHECK(to_json(m)["value"] == 1.0);
        CHECK(progress_to_json({7, 100, 5})["nodes"] == 100);
    }
}
