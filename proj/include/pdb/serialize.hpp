// serialize.hpp -- JSON, DOT and plain-table renderings of the library's
// reports.
//
// Every JSON report carries "schema": 1. Vectors are integer arrays, words
// are strings in the alphabet's rendering (letters for sigma <= 26, comma
// separated indices above), enums are snake_case strings.

#pragma once

#include "pdb/covering.hpp"
#include "pdb/grid.hpp"
#include "pdb/realize.hpp"
#include "pdb/search.hpp"
#include "pdb/walks.hpp"

#include <json.hpp>

#include <set>
#include <string>

namespace pdb {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

/// Largest grid rendered by grid_to_json / grid_to_dot.
inline constexpr std::uint64_t max_export_vertices = std::uint64_t(1) << 20;

json pv_to_json(const ParikhVector &p);
ParikhVector pv_from_json(const json &j);

std::string word_to_string(std::span<const Letter> word, std::size_t sigma);
Word word_from_string(const std::string &text, std::size_t sigma);

json to_json(const CoverReport &r);
CoverReport cover_report_from_json(const json &j);

json to_json(const BoundsReport &r);
BoundsReport bounds_report_from_json(const json &j);

json to_json(const SearchOutcome &r);
SearchOutcome search_outcome_from_json(const json &j);

/// The result does not record k and sigma; they are passed alongside.
json to_json(const RealizabilityResult &r, std::uint64_t k, std::size_t sigma);
RealizabilityResult realizability_from_json(const json &j);

json to_json(const Walk &w);
Walk walk_from_json(const json &j);

json to_json(const WalkRealization &r, const Walk &walk);

json covset_to_json(std::span<const Letter> word, std::size_t sigma,
                    const std::set<std::uint64_t> &ks);

json to_json(const MincovEstimate &m);

json pdb_classes_to_json(std::uint64_t k, std::size_t sigma, const std::vector<Word> &words);

json progress_to_json(const Progress &p);

/// Vertices (rank, vector, and x/y when sigma = 3), undirected edges by rank,
/// bows and the labeled arcs of the directed grid.
json grid_to_json(const Grid &g);

/// Undirected graph: one node per vertex labeled with its vector (pinned at
/// its triangular position when sigma = 3), each edge once, and one
/// self-loop per bow labeled with its letter.
std::string grid_to_dot(const Grid &g);

/// Columns: sigma, k, word, length, pdb, excess.
std::string table_header();
std::string table_row(const CoverReport &r);

} // namespace pdb
