// helpers.hpp -- conversions between library types and the oracle types.

#pragma once

#include "oracles.hpp"
#include "pdb/parikh.hpp"

#include <initializer_list>
#include <random>
#include <string_view>

namespace testing {

inline pdb::Word W(std::string_view text, std::size_t sigma = 26)
{
    return pdb::Alphabet(sigma).parse(text);
}

inline pdb::ParikhVector P(std::initializer_list<pdb::Count> counts)
{
    return pdb::ParikhVector(std::vector<pdb::Count>(counts));
}

inline oracle::Vec to_vec(const pdb::ParikhVector &p)
{
    return {p.counts().begin(), p.counts().end()};
}

inline pdb::ParikhVector from_vec(const oracle::Vec &v)
{
    return pdb::ParikhVector(std::vector<pdb::Count>(v.begin(), v.end()));
}

inline oracle::Str to_str(const pdb::Word &w)
{
    return {w.begin(), w.end()};
}

inline pdb::Word from_str(const oracle::Str &s)
{
    return {s.begin(), s.end()};
}

inline std::set<oracle::Vec> to_set(const std::vector<pdb::ParikhVector> &ps)
{
    std::set<oracle::Vec> out;
    for (const auto &p : ps)
        out.insert(to_vec(p));
    return out;
}

inline pdb::Word random_word(std::mt19937 &rng, std::size_t len, std::size_t sigma)
{
    std::uniform_int_distribution<int> letter(0, int(sigma) - 1);
    pdb::Word w(len);
    for (auto &c : w)
        c = static_cast<pdb::Letter>(letter(rng));
    return w;
}

} // namespace testing
