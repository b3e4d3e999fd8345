#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "asym/asym.h"

namespace {

std::string take(char* s)
{
    std::string out = s ? s : "";
    asym_string_free(s);
    return out;
}

} // namespace

TEST_CASE("hypergraph handles")
{
    asym_hypergraph* h = nullptr;
    REQUIRE(asym_hypergraph_parse("4 2 2\n0 1\n2 3\n", &h) == ASYM_OK);
    CHECK(asym_hypergraph_order(h) == 4);
    CHECK(asym_hypergraph_edge_count(h) == 2);
    char* text = nullptr;
    REQUIRE(asym_hypergraph_to_hgf(h, &text) == ASYM_OK);
    CHECK(take(text) == "4 2 2\n0 1\n2 3\n");
    std::vector<int> deg(4);
    REQUIRE(asym_hypergraph_degrees(h, deg.data()) == ASYM_OK);
    CHECK(deg == std::vector<int>{1, 1, 1, 1});
    REQUIRE(asym_hypergraph_labels(h, &text) == ASYM_OK);
    CHECK(take(text) == "0 0\n1 1\n2 2\n3 3\n");
    asym_hypergraph_free(h);
    asym_hypergraph_free(nullptr);

    const int edges[] = {0, 1, 2, 1, 2, 3};
    const size_t offsets[] = {0, 3, 6};
    REQUIRE(asym_hypergraph_create(4, 0, edges, offsets, 2, &h) == ASYM_OK);
    asym_hypergraph* c = nullptr;
    REQUIRE(asym_complement(h, &c) == ASYM_OK);
    REQUIRE(asym_hypergraph_to_hgf(c, &text) == ASYM_OK);
    CHECK(take(text) == "4 2 1\n0\n3\n");
    asym_hypergraph_free(c);
    asym_hypergraph_free(h);
}

TEST_CASE("error reporting")
{
    asym_hypergraph* h = nullptr;
    CHECK(asym_hypergraph_parse("3 1 2\n0 5\n", &h) == ASYM_ERR_PARSE);
    CHECK(h == nullptr);
    CHECK(std::strstr(asym_last_error(), "line 2") != nullptr);
    CHECK(asym_generate("gkt", 4, 1, 0, 0, &h) == ASYM_ERR_INVALID_ARGUMENT);
    CHECK(std::strstr(asym_last_error(), "t >= k-2") != nullptr);
    CHECK(asym_generate("nope", 3, 1, 0, 0, &h) == ASYM_ERR_INVALID_ARGUMENT);
    CHECK(asym_hypergraph_parse(nullptr, &h) == ASYM_ERR_INVALID_ARGUMENT);
    CHECK(asym_family_is_relational("r3t") == 1);
    CHECK(asym_family_is_relational("gks") == 0);
    CHECK(asym_family_is_relational("zzz") == -1);
    CHECK(std::string(asym_version()).size() > 0);
}

TEST_CASE("groups through the C interface")
{
    asym_hypergraph* h = nullptr;
    REQUIRE(asym_generate("gk", 4, 0, 0, 0, &h) == ASYM_OK);
    asym_group* g = nullptr;
    REQUIRE(asym_automorphisms(h, nullptr, 0, &g) == ASYM_OK);
    char* order = nullptr;
    REQUIRE(asym_group_order(g, &order) == ASYM_OK);
    CHECK(take(order) == "2");
    CHECK(asym_group_degree(g) == 7);
    REQUIRE(asym_group_generator_count(g) == 1);
    std::vector<int> img(7);
    REQUIRE(asym_group_generator(g, 0, img.data()) == ASYM_OK);
    CHECK(img == std::vector<int>{6, 5, 4, 3, 2, 1, 0});
    CHECK(asym_group_has_involution(g) == 1);
    CHECK(asym_group_generator(g, 3, img.data()) == ASYM_ERR_INVALID_ARGUMENT);
    asym_group_free(g);

    const int tail[] = {5, 6};
    REQUIRE(asym_automorphisms_brute_force(h, tail, 2, &g) == ASYM_OK);
    REQUIRE(asym_group_order(g, &order) == ASYM_OK);
    CHECK(take(order) == "1");
    CHECK(asym_group_has_involution(g) == 0);
    asym_group_free(g);
    asym_hypergraph_free(h);
}

TEST_CASE("verification through the C interface")
{
    asym_hypergraph* h = nullptr;
    REQUIRE(asym_generate("figure2", 0, 0, 0, 0, &h) == ASYM_OK);
    asym_verify_options opt;
    asym_verify_options_init(&opt);
    asym_report* r = nullptr;
    REQUIRE(asym_verify(h, ASYM_PROP_MINIMAL_ASYMMETRIC, &opt, &r) == ASYM_OK);
    CHECK(asym_report_holds(r) == 1);
    char* text = nullptr;
    REQUIRE(asym_report_to_text(r, &text) == ASYM_OK);
    CHECK(take(text).find("minimal-asymmetric true exhaustive") != std::string::npos);
    asym_report_free(r);
    asym_hypergraph_free(h);

    REQUIRE(asym_generate("gks", 6, 0, 0, 0, &h) == ASYM_OK);
    CHECK(asym_verify(h, ASYM_PROP_MINIMAL_INVOLUTION_FREE, &opt, &r) == ASYM_ERR_GUARD);
    opt.mode = ASYM_MODE_SAMPLED;
    opt.has_seed = 1;
    opt.seed = 5;
    opt.samples = 100;
    REQUIRE(asym_verify(h, ASYM_PROP_MINIMAL_INVOLUTION_FREE, &opt, &r) == ASYM_OK);
    CHECK(asym_report_holds(r) == 1);
    asym_report_free(r);
    asym_hypergraph_free(h);
}

TEST_CASE("relations through the C interface")
{
    asym_relation* r = nullptr;
    REQUIRE(asym_generate_relation("r3t", 0, 1, &r) == ASYM_OK);
    CHECK(asym_relation_order(r) == 7);
    CHECK(asym_relation_tuple_count(r) == 8);
    int m = 0;
    REQUIRE(asym_relation_multiplicity(r, &m) == ASYM_OK);
    CHECK(m == 2);
    int critical = 0, witness = 0;
    CHECK(asym_relation_critical(r, &critical, &witness) == ASYM_ERR_INVALID_ARGUMENT);
    asym_relation_free(r);

    REQUIRE(asym_relation_parse("2 1 2\n0 1\n", &r) == ASYM_OK);
    REQUIRE(asym_relation_critical(r, &critical, &witness) == ASYM_OK);
    CHECK(critical == 1);
    CHECK(witness == -1);
    asym_group* g = nullptr;
    REQUIRE(asym_relation_automorphisms(r, &g) == ASYM_OK);
    CHECK(asym_group_generator_count(g) == 0);
    asym_group_free(g);
    char* text = nullptr;
    REQUIRE(asym_relation_to_rel(r, &text) == ASYM_OK);
    CHECK(take(text) == "2 1 2\n0 1\n");
    asym_relation_free(r);
}

TEST_CASE("searches through the C interface")
{
    int order = 0;
    asym_hypergraph* w = nullptr;
    REQUIRE(asym_search_min_order(3, 7, 1, &order, &w) == ASYM_OK);
    CHECK(order == 6);
    REQUIRE(w != nullptr);
    CHECK(asym_hypergraph_order(w) == 6);
    asym_hypergraph_free(w);

    int all = 0;
    uint64_t scanned = 0, swaps = 0, complete = 0;
    asym_hypergraph* ce = nullptr;
    REQUIRE(asym_search_all_symmetric(4, 5, 1, nullptr, &all, &scanned, &swaps, &complete, &ce) == ASYM_OK);
    CHECK(all == 1);
    CHECK(scanned == 32);
    CHECK(swaps + complete == 32);
    CHECK(ce == nullptr);

    asym_outcome* o = nullptr;
    REQUIRE(asym_search_enumerate(2, 6, ASYM_STRATEGY_AUGMENT, 0, 1, &o) == ASYM_OK);
    uint64_t total = 0, iso = 0, asym = 0;
    asym_outcome_counts(o, &total, &iso, &asym);
    CHECK(total == 32768);
    CHECK(iso == 156);
    CHECK(asym == 8);
    CHECK(asym_outcome_witness_count(o) == 8);
    char* text = nullptr;
    REQUIRE(asym_outcome_witnesses(o, &text) == ASYM_OK);
    auto s = take(text);
    std::size_t seps = 0;
    for (std::size_t p = s.find("---\n"); p != std::string::npos; p = s.find("---\n", p + 1))
        ++seps;
    CHECK(seps == 7);
    asym_outcome_free(o);

    CHECK(asym_search_enumerate(3, 8, ASYM_STRATEGY_LABELED, 0, 1, &o) == ASYM_ERR_GUARD);
}
