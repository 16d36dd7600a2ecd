// known_words.hpp -- shortest covering words for small (sigma, k), with their
// length and PdB status / excess as published.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace testing {

struct TableRow
{
    std::size_t sigma;
    std::uint64_t k;
    std::string word;
    std::size_t length;
    bool pdb;
    std::int64_t excess;
};

inline const std::vector<TableRow> &table_rows()
{
    static const std::vector<TableRow> rows{
        {3, 2, "aabbcca", 7, true, 0},
        {3, 3, "abbbcccaaabc", 12, true, 0},
        {3, 4, "aaaabbbbccccaacabcb", 19, false, 1},
        {3, 5, "aaaaabbbacccccbbbbbaacaaccb", 27, false, 2},
        {3, 6, "aaaabccccccaaaaaabbbbbbcccbbcabbaca", 35, false, 2},
        {3, 7, "aabbbccbbcccabacaaabcbbbbbbbaaaaaaacccccccba", 44, false, 2},
        {4, 2, "aabbcadbccdd", 12, false, 1},
        {4, 3, "aaabbbcaadbdbccadddccc", 22, true, 0},
        {4, 4, "aabbbbcaacadbddbccacddddaaaabdbbccccdd", 38, true, 0},
        {4, 5, "aaaaabbbbbcaaaadbbbcccccdddddaaaccdbcbaccaccddbddbadacddbbbb", 60, true, 0},
        {5, 2, "aabbcadbeccddeea", 16, true, 0},
        {5, 3, "aaabbbcaadbbeaccbdddcccebededadceeeaa", 37, true, 0},
        {5, 4, "aaaabbbbcaaadbbbeaaccbbddaaeaebcccadbeeeadddcccceeeeddddbebecbdcdeceacdad", 73,
         true, 0},
    };
    return rows;
}

/// The 60-letter (5,4)-PdB word that is not 4-covering.
inline const std::string w54 = "aaaaabbbbbcaaaadbbbcccccdddddaaaccdbcbaccaccddbddbadacddbbbb";

} // namespace testing
