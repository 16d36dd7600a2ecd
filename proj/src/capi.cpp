#include "pdb/pdb.h"

#include "pdb/errors.hpp"
#include "pdb/serialize.hpp"

#include <new>
#include <string>

struct pdb_result
{
    std::string text;
    bool positive = false;
};

struct pdb_grid
{
    pdb::Grid grid;
};

struct pdb_search_config
{
    pdb::SearchConfig cfg;
    pdb_progress_fn progress = nullptr;
    void *user = nullptr;
};

namespace {

thread_local std::string last_error;

template <class F>
pdb_status guard(F &&f) noexcept
{
    try {
        last_error.clear();
        return f();
    } catch (const pdb::InvalidInput &e) {
        last_error = e.what();
        return PDB_ERR_INVALID_INPUT;
    } catch (const pdb::CapacityError &e) {
        last_error = e.what();
        return PDB_ERR_CAPACITY;
    } catch (const pdb::UnsupportedError &e) {
        last_error = e.what();
        return PDB_ERR_UNSUPPORTED;
    } catch (const pdb::RealizabilityError &e) {
        last_error = e.what();
        return PDB_ERR_NOT_REALIZABLE;
    } catch (const pdb::json::exception &e) {
        last_error = e.what();
        return PDB_ERR_INVALID_INPUT;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return PDB_ERR_CAPACITY;
    } catch (const std::exception &e) {
        last_error = e.what();
        return PDB_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PDB_ERR_INTERNAL;
    }
}

pdb_status invalid(const char *what)
{
    last_error = what;
    return PDB_ERR_INVALID_INPUT;
}

pdb_status emit(pdb_result **out, std::string text, bool positive)
{
    *out = new pdb_result{std::move(text), positive};
    return PDB_OK;
}

pdb_status emit(pdb_result **out, const pdb::json &j, bool positive)
{
    return emit(out, j.dump(2) + "\n", positive);
}

std::string table_of(const pdb::CoverReport &r)
{
    return pdb::table_header() + "\n" + pdb::table_row(r) + "\n";
}

void require_json_or_table(pdb_format format)
{
    if (format == PDB_FORMAT_DOT)
        throw pdb::UnsupportedError("DOT output is only available for grids");
}

pdb::Word parse_word(const char *word, std::size_t sigma)
{
    if (sigma == 0)
        throw pdb::InvalidInput("sigma must be at least 1");
    return pdb::Alphabet(sigma).parse(word);
}

} // namespace

extern "C" {

const char *pdb_version(void)
{
    return "1.0.0";
}

const char *pdb_last_error(void)
{
    return last_error.c_str();
}

const char *pdb_status_name(pdb_status status)
{
    switch (status) {
    case PDB_OK: return "ok";
    case PDB_ERR_INVALID_INPUT: return "invalid_input";
    case PDB_ERR_CAPACITY: return "capacity";
    case PDB_ERR_UNSUPPORTED: return "unsupported";
    case PDB_ERR_NOT_REALIZABLE: return "not_realizable";
    case PDB_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char *pdb_result_text(const pdb_result *result)
{
    return result ? result->text.c_str() : "";
}

int pdb_result_positive(const pdb_result *result)
{
    return result && result->positive ? 1 : 0;
}

void pdb_result_free(pdb_result *result)
{
    delete result;
}

pdb_status pdb_verify(const char *word, uint64_t k, size_t sigma, pdb_format format,
                      pdb_result **out)
{
    if (!word || !out)
        return invalid("null argument");
    return guard([&] {
        require_json_or_table(format);
        auto report = pdb::verify(parse_word(word, sigma), k, sigma);
        if (format == PDB_FORMAT_TABLE)
            return emit(out, table_of(report), report.is_covering);
        return emit(out, pdb::to_json(report), report.is_covering);
    });
}

pdb_status pdb_walk_of_word(const char *word, uint64_t k, size_t sigma, pdb_result **out)
{
    if (!word || !out)
        return invalid("null argument");
    return guard([&] {
        auto w = parse_word(word, sigma);
        auto walk = pdb::walk_of(w, k, sigma);
        auto j = pdb::to_json(walk);
        j["word"] = pdb::word_to_string(w, sigma);
        pdb::json inc = pdb::json::array();
        for (const auto &s : pdb::step_incidences(walk))
            inc.push_back({{"upper", pdb::pv_to_json(s.upper)}, {"lower", pdb::pv_to_json(s.lower)}});
        j["incidences"] = inc;
        j["itinerary"] = pdb::json::array();
        for (const auto &p : pdb::itinerary(walk.vertices))
            j["itinerary"].push_back(pdb::pv_to_json(p));
        return emit(out, j, true);
    });
}

pdb_status pdb_walk_of_vertices(const char *vertices, pdb_result **out)
{
    if (!vertices || !out)
        return invalid("null argument");
    return guard([&] {
        pdb::Walk walk;
        walk.vertices = pdb::parse_pv_list(vertices);
        if (walk.vertices.empty())
            throw pdb::InvalidInput("a walk needs at least one vertex");
        walk.k = walk.vertices.front().order();
        auto r = pdb::is_realizable_walk(walk);
        return emit(out, pdb::to_json(r, walk), r.realizable);
    });
}

pdb_status pdb_spell(const char *vertices, pdb_result **out)
{
    if (!vertices || !out)
        return invalid("null argument");
    return guard([&] {
        pdb::Walk walk;
        walk.vertices = pdb::parse_pv_list(vertices);
        if (walk.vertices.empty())
            throw pdb::InvalidInput("a walk needs at least one vertex");
        walk.k = walk.vertices.front().order();
        auto w = pdb::spell(walk);
        return emit(out, pdb::word_to_string(w, walk.sigma()) + "\n", true);
    });
}

pdb_status pdb_realize(const char *vectors, uint64_t k, size_t sigma, pdb_result **out)
{
    if (!vectors || !out)
        return invalid("null argument");
    return guard([&] {
        auto set = pdb::parse_pv_list(vectors);
        for (const auto &p : set)
            if (p.order() != k || p.sigma() != sigma)
                throw pdb::InvalidInput(p.to_string() + " is not an order-" + std::to_string(k) +
                                        " vector over " + std::to_string(sigma) + " letters");
        auto r = pdb::is_realizable_set(set);
        return emit(out, pdb::to_json(r, k, sigma), r.realizable);
    });
}

pdb_status pdb_bounds(uint64_t k, size_t sigma, pdb_result **out)
{
    if (!out)
        return invalid("null argument");
    return guard([&] {
        auto b = pdb::bounds(k, sigma);
        return emit(out, pdb::to_json(b), b.known_verdict != pdb::Verdict::Impossible);
    });
}

pdb_status pdb_covset(const char *word, size_t sigma, pdb_result **out)
{
    if (!word || !out)
        return invalid("null argument");
    return guard([&] {
        auto w = parse_word(word, sigma);
        auto ks = pdb::covset(w, sigma);
        return emit(out, pdb::covset_to_json(w, sigma, ks), !ks.empty());
    });
}

pdb_status pdb_construct(const char *family, uint64_t k, size_t sigma, pdb_format format,
                         pdb_result **out)
{
    if (!family || !out)
        return invalid("null argument");
    return guard([&] {
        require_json_or_table(format);
        auto f = pdb::parse_family(family);
        auto w = pdb::construct_family(f, k, sigma);
        auto report = pdb::verify(w, k, sigma);
        if (format == PDB_FORMAT_TABLE)
            return emit(out, table_of(report), true);
        auto j = pdb::to_json(report);
        j["family"] = pdb::to_string(f);
        if (f == pdb::Family::KCoverNotK1) {
            auto avoided = pdb::avoided_vector(k, sigma);
            j["avoided"] = pdb::pv_to_json(avoided);
            j["avoided_absent"] = !pdb::parikh_set(w, k - 1, sigma).contains(avoided);
        }
        return emit(out, j, true);
    });
}

pdb_status pdb_enumerate_pdb(uint64_t k, size_t sigma, int force, unsigned threads,
                             pdb_result **out)
{
    if (!out)
        return invalid("null argument");
    return guard([&] {
        auto classes = pdb::enumerate_all_pdb(k, sigma, force != 0, threads ? threads : 1);
        return emit(out, pdb::pdb_classes_to_json(k, sigma, classes), !classes.empty());
    });
}

pdb_status pdb_mincov(uint64_t k, size_t sigma, uint64_t max_len, unsigned threads,
                      uint64_t node_budget, pdb_result **out)
{
    if (!out)
        return invalid("null argument");
    return guard([&] {
        std::optional<std::uint64_t> budget;
        if (node_budget)
            budget = node_budget;
        auto m = pdb::mincov_explore(k, sigma, max_len, threads ? threads : 1, budget);
        return emit(out, pdb::to_json(m), true);
    });
}

pdb_status pdb_grid_create(uint64_t k, size_t sigma, pdb_grid **out)
{
    if (!out)
        return invalid("null argument");
    return guard([&] {
        *out = new pdb_grid{pdb::Grid(k, sigma)};
        return PDB_OK;
    });
}

void pdb_grid_free(pdb_grid *grid)
{
    delete grid;
}

uint64_t pdb_grid_vertex_count(const pdb_grid *grid)
{
    return grid ? grid->grid.vertex_count() : 0;
}

uint64_t pdb_grid_edge_count(const pdb_grid *grid)
{
    return grid ? grid->grid.undirected_edge_count() : 0;
}

uint64_t pdb_grid_bow_count(const pdb_grid *grid)
{
    return grid ? grid->grid.bow_count() : 0;
}

pdb_status pdb_grid_render(const pdb_grid *grid, pdb_format format, pdb_result **out)
{
    if (!grid || !out)
        return invalid("null argument");
    return guard([&] {
        if (format == PDB_FORMAT_DOT)
            return emit(out, pdb::grid_to_dot(grid->grid), true);
        if (format == PDB_FORMAT_TABLE)
            throw pdb::UnsupportedError("grids render as JSON or DOT");
        return emit(out, pdb::grid_to_json(grid->grid), true);
    });
}

pdb_status pdb_search_config_create(uint64_t k, size_t sigma, pdb_search_config **out)
{
    if (!out)
        return invalid("null argument");
    return guard([&] {
        if (k == 0 || sigma == 0)
            throw pdb::InvalidInput("k and sigma must be at least 1");
        auto *c = new pdb_search_config;
        c->cfg.k = k;
        c->cfg.sigma = sigma;
        *out = c;
        return PDB_OK;
    });
}

void pdb_search_config_free(pdb_search_config *cfg)
{
    delete cfg;
}

pdb_status pdb_search_set_target(pdb_search_config *cfg, pdb_target target)
{
    if (!cfg)
        return invalid("null argument");
    switch (target) {
    case PDB_TARGET_SHORTEST_COVERING: cfg->cfg.target = pdb::Target::ShortestCovering; break;
    case PDB_TARGET_PDB_ONLY: cfg->cfg.target = pdb::Target::PdbOnly; break;
    case PDB_TARGET_EXISTENCE_AT_LENGTH: cfg->cfg.target = pdb::Target::ExistenceAtLength; break;
    default: return invalid("unknown search target");
    }
    return PDB_OK;
}

pdb_status pdb_search_set_length(pdb_search_config *cfg, uint64_t length)
{
    if (!cfg)
        return invalid("null argument");
    cfg->cfg.length = length;
    return PDB_OK;
}

pdb_status pdb_search_set_max_len(pdb_search_config *cfg, uint64_t max_len)
{
    if (!cfg)
        return invalid("null argument");
    if (max_len < cfg->cfg.k)
        return invalid("max_len must be at least k");
    cfg->cfg.max_len = max_len;
    return PDB_OK;
}

pdb_status pdb_search_set_threads(pdb_search_config *cfg, unsigned threads)
{
    if (!cfg)
        return invalid("null argument");
    if (threads == 0)
        return invalid("thread count must be at least 1");
    cfg->cfg.workers = threads;
    return PDB_OK;
}

pdb_status pdb_search_set_node_budget(pdb_search_config *cfg, uint64_t budget)
{
    if (!cfg)
        return invalid("null argument");
    if (budget)
        cfg->cfg.node_budget = budget;
    else
        cfg->cfg.node_budget.reset();
    return PDB_OK;
}

pdb_status pdb_search_set_split_depth(pdb_search_config *cfg, size_t depth)
{
    if (!cfg)
        return invalid("null argument");
    if (depth == 0)
        return invalid("split depth must be at least 1");
    cfg->cfg.split_depth = depth;
    return PDB_OK;
}

pdb_status pdb_search_set_prune(pdb_search_config *cfg, pdb_prune rule, int enabled)
{
    if (!cfg)
        return invalid("null argument");
    auto &p = cfg->cfg.prunes;
    switch (rule) {
    case PDB_PRUNE_DUPLICATE_WINDOW: p.duplicate_window = enabled != 0; break;
    case PDB_PRUNE_UNREACHABLE_VECTORS: p.unreachable_vectors = enabled != 0; break;
    case PDB_PRUNE_LETTER_BUDGET: p.letter_budget = enabled != 0; break;
    case PDB_PRUNE_DISTANCE: p.distance = enabled != 0; break;
    default: return invalid("unknown prune rule");
    }
    return PDB_OK;
}

pdb_status pdb_search_set_progress(pdb_search_config *cfg, pdb_progress_fn fn, void *user,
                                   uint64_t interval)
{
    if (!cfg)
        return invalid("null argument");
    cfg->progress = fn;
    cfg->user = user;
    if (interval)
        cfg->cfg.checkpoint_interval = interval;
    return PDB_OK;
}

pdb_status pdb_search_run(const pdb_search_config *cfg, pdb_format format, pdb_result **out)
{
    if (!cfg || !out)
        return invalid("null argument");
    return guard([&] {
        require_json_or_table(format);
        auto run_cfg = cfg->cfg;
        if (cfg->progress) {
            auto fn = cfg->progress;
            auto user = cfg->user;
            run_cfg.on_progress = [fn, user](const pdb::Progress &p) {
                auto line = pdb::progress_to_json(p).dump();
                fn(line.c_str(), user);
            };
        }
        auto r = pdb::search(run_cfg);
        bool found = r.status == pdb::SearchStatus::Found;
        if (format == PDB_FORMAT_TABLE) {
            if (found)
                return emit(out, table_of(pdb::verify(*r.witness, r.k, r.sigma)), true);
            return emit(out,
                        pdb::table_header() + "\n" + std::to_string(r.sigma) + "\t" +
                            std::to_string(r.k) + "\t-\t-\t-\t-\n",
                        false);
        }
        return emit(out, pdb::to_json(r), found);
    });
}

} // extern "C"
