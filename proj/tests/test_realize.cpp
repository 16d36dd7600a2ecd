#include "helpers.hpp"

#include "pdb/errors.hpp"
#include "pdb/realize.hpp"

#include <doctest.h>

using namespace pdb;
using testing::P;
using testing::W;

namespace {

std::vector<std::vector<ParikhVector>> subsets_up_to(const std::vector<ParikhVector> &all,
                                                     std::size_t max_size)
{
    std::vector<std::vector<ParikhVector>> out;
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
        if (std::size_t(__builtin_popcount(mask)) > max_size)
            continue;
        std::vector<ParikhVector> s;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1)
                s.push_back(all[i]);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_SUITE("realizability")
{
    TEST_CASE("examples")
    {
        std::vector<ParikhVector> single{P({1, 2, 0})};
        auto r1 = is_realizable_set(single);
        CHECK(r1.realizable);
        CHECK(*r1.witness == W("abb"));

        std::vector<ParikhVector> apart{P({3, 0, 0}), P({0, 3, 0})};
        auto r2 = is_realizable_set(apart);
        CHECK(!r2.realizable);
        CHECK(!r2.witness.has_value());
        REQUIRE(r2.refutation.has_value());
        CHECK(r2.refutation->first == std::vector<ParikhVector>{P({3, 0, 0})});
        CHECK(r2.refutation->second == std::vector<ParikhVector>{P({0, 3, 0})});

        std::vector<ParikhVector> pair{P({2, 1, 0}), P({1, 2, 0})};
        auto r3 = is_realizable_set(pair);
        CHECK(r3.realizable);
        CHECK(oracle::windows(testing::to_str(*r3.witness), 3, 3) == testing::to_set(pair));
    }

    TEST_CASE("invalid sets")
    {
        CHECK_THROWS_AS(is_realizable_set(std::vector<ParikhVector>{}), InvalidInput);
        std::vector<ParikhVector> mixed{P({1, 2, 0}), P({1, 1, 0})};
        CHECK_THROWS_AS(is_realizable_set(mixed), InvalidInput);
        std::vector<ParikhVector> sigmas{P({1, 2, 0}), P({1, 2})};
        CHECK_THROWS_AS(is_realizable_set(sigmas), InvalidInput);
    }

    TEST_CASE("pair witnesses")
    {
        auto w1 = realizable_pair_witness(P({2, 1, 0}), P({1, 2, 0}));
        CHECK(w1 == W("aabb"));
        CHECK(oracle::windows(testing::to_str(w1), 3, 3) ==
              std::set<oracle::Vec>{{2, 1, 0}, {1, 2, 0}});
        for (Count k = 1; k <= 6; ++k) {
            auto w = realizable_pair_witness(P({k, 0, 0}), P({k - 1, 1, 0}));
            Word expect(k, 0);
            expect.push_back(1);
            CHECK(w == expect);
        }
        auto w3 = realizable_pair_witness(P({1, 1, 1}), P({0, 2, 1}));
        CHECK(w3 == W("abcb"));
        CHECK(oracle::windows(testing::to_str(w3), 3, 3) ==
              std::set<oracle::Vec>{{1, 1, 1}, {0, 2, 1}});
        CHECK_THROWS_AS(realizable_pair_witness(P({3, 0, 0}), P({0, 3, 0})), InvalidInput);
    }

    TEST_CASE("components")
    {
        std::vector<ParikhVector> set{P({3, 0, 0}), P({2, 1, 0}), P({0, 3, 0}), P({0, 2, 1})};
        auto comps = induced_components(set);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == std::vector<ParikhVector>{P({3, 0, 0}), P({2, 1, 0})});
        CHECK(comps[1] == std::vector<ParikhVector>{P({0, 3, 0}), P({0, 2, 1})});
    }

    TEST_CASE("covering itinerary visits every member and is bowfree")
    {
        auto all = enumerate_pv(3, 3);
        for (const auto &s : subsets_up_to(all, 10)) {
            if (induced_components(s).size() != 1)
                continue;
            auto it = covering_itinerary(s);
            CHECK(it.size() <= 2 * s.size() - 1);
            CHECK(testing::to_set(it) == testing::to_set(s));
            for (std::size_t i = 1; i < it.size(); ++i)
                CHECK(are_neighbors(it[i - 1], it[i]));
        }
    }

    TEST_CASE("agrees with literal word enumeration for |Pi| <= 4 (k = sigma = 3)")
    {
        // Witness length bound: k + |Pi| * k.
        auto reachable = oracle::small_parikh_sets(3, 3, 3 + 4 * 3, 4);
        auto all = enumerate_pv(3, 3);
        std::size_t yes = 0, no = 0;
        for (const auto &s : subsets_up_to(all, 4)) {
            auto r = is_realizable_set(s);
            bool expected = reachable.count(testing::to_set(s)) > 0;
            CHECK(r.realizable == expected);
            if (r.realizable) {
                ++yes;
                CHECK(oracle::windows(testing::to_str(*r.witness), 3, 3) == testing::to_set(s));
                CHECK(r.witness->size() <= 3 + 2 * s.size() * 3);
            } else {
                ++no;
                REQUIRE(r.refutation.has_value());
                CHECK(!r.refutation->first.empty());
                CHECK(!r.refutation->second.empty());
            }
        }
        CHECK(yes > 0);
        CHECK(no > 0);
    }

    TEST_CASE("adding a neighbor keeps a set realizable")
    {
        std::mt19937 rng(31337);
        for (auto [k, sigma] : {std::pair<std::uint64_t, std::size_t>{3, 3}, {2, 4}, {4, 3}}) {
            auto all = enumerate_pv(k, sigma);
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<ParikhVector> s;
                for (const auto &p : all)
                    if (rng() % 3 == 0)
                        s.push_back(p);
                if (s.empty() || !is_realizable_set(s).realizable)
                    continue;
                auto base = s[rng() % s.size()];
                auto nb = neighbors(base);
                if (nb.empty())
                    continue;
                s.push_back(nb[rng() % nb.size()]);
                auto r = is_realizable_set(s);
                CHECK(r.realizable);
                CHECK(oracle::windows(testing::to_str(*r.witness), k, sigma) ==
                      testing::to_set(s));
            }
        }
    }
}
