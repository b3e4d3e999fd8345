#include "asym/asym.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "asym/autom.hpp"
#include "asym/canon.hpp"
#include "asym/constructions.hpp"
#include "asym/error.hpp"
#include "asym/io.hpp"
#include "asym/search.hpp"
#include "asym/verify.hpp"

struct asym_hypergraph {
    asym::Hypergraph graph;
    std::vector<std::string> labels;
};

struct asym_relation {
    asym::RelationalStructure rel;
};

struct asym_group {
    int degree = 0;
    asym::AutomResult result;
};

struct asym_report {
    asym::VerificationReport report;
    std::string text;
};

struct asym_outcome {
    asym::SearchOutcome outcome;
};

namespace {

thread_local std::string lastError;

template <class F>
asym_status guarded(F&& f)
{
    try {
        lastError.clear();
        f();
        return ASYM_OK;
    } catch (const asym::Error& e) {
        lastError = e.what();
        switch (e.code()) {
        case asym::ErrorCode::InvalidArgument:
            return ASYM_ERR_INVALID_ARGUMENT;
        case asym::ErrorCode::Parse:
            return ASYM_ERR_PARSE;
        case asym::ErrorCode::Guard:
            return ASYM_ERR_GUARD;
        case asym::ErrorCode::Internal:
            return ASYM_ERR_INTERNAL;
        }
        return ASYM_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        lastError = "out of memory";
        return ASYM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        lastError = e.what();
        return ASYM_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw asym::InvalidArgument(what);
}

char* dup(const std::string& s)
{
    auto* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::vector<int> span(const int* data, size_t count)
{
    require(count == 0 || data, "null vertex array");
    return {data, data + count};
}

asym::VerifyOptions convert(const asym_verify_options* opt)
{
    asym::VerifyOptions o;
    if (!opt)
        return o;
    if (opt->mode == ASYM_MODE_EXHAUSTIVE)
        o.mode = asym::Mode::Exhaustive;
    else if (opt->mode == ASYM_MODE_SAMPLED)
        o.mode = asym::Mode::Sampled;
    o.samples = opt->samples;
    if (opt->has_seed)
        o.seed = opt->seed;
    o.stratified = opt->stratified != 0;
    o.workers = opt->workers;
    return o;
}

asym_hypergraph* wrap(asym::Hypergraph g, std::vector<std::string> labels = {})
{
    return new asym_hypergraph{std::move(g), std::move(labels)};
}

void copyImages(const asym::Permutation& p, int* images)
{
    require(images, "null image buffer");
    auto im = p.images();
    std::copy(im.begin(), im.end(), images);
}

} // namespace

extern "C" {

const char* asym_version(void) { return ASYM_VERSION; }

const char* asym_last_error(void) { return lastError.c_str(); }

void asym_string_free(char* s) { std::free(s); }

void asym_verify_options_init(asym_verify_options* opt)
{
    if (!opt)
        return;
    *opt = asym_verify_options{ASYM_MODE_AUTO, 10000, 0, 0, 0, 0};
}

asym_status asym_hypergraph_parse(const char* hgf, asym_hypergraph** out)
{
    return guarded([&] {
        require(hgf && out, "null argument");
        *out = wrap(asym::parseHgf(hgf));
    });
}

asym_status asym_hypergraph_create(int n, int k, const int* edges, const size_t* offsets, size_t m,
                                   asym_hypergraph** out)
{
    return guarded([&] {
        require(out && (m == 0 || (edges && offsets)), "null argument");
        std::vector<asym::Edge> es;
        for (size_t i = 0; i < m; ++i) {
            require(offsets[i] <= offsets[i + 1], "edge offsets must not decrease");
            es.emplace_back(edges + offsets[i], edges + offsets[i + 1]);
        }
        *out = wrap(asym::Hypergraph(n, std::move(es), k > 0 ? std::optional<int>(k) : std::nullopt));
    });
}

void asym_hypergraph_free(asym_hypergraph* h) { delete h; }

int asym_hypergraph_order(const asym_hypergraph* h) { return h ? h->graph.n() : 0; }

size_t asym_hypergraph_edge_count(const asym_hypergraph* h) { return h ? h->graph.edgeCount() : 0; }

asym_status asym_hypergraph_to_hgf(const asym_hypergraph* h, char** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        *out = dup(asym::toHgf(h->graph));
    });
}

asym_status asym_hypergraph_labels(const asym_hypergraph* h, char** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        auto labels = h->labels.empty() ? asym::unlabeled(h->graph).labels : h->labels;
        *out = dup(asym::toLabelTable(labels));
    });
}

asym_status asym_hypergraph_degrees(const asym_hypergraph* h, int* out)
{
    return guarded([&] {
        require(h && out, "null argument");
        auto d = asym::degrees(h->graph).perVertex;
        std::copy(d.begin(), d.end(), out);
    });
}

asym_status asym_complement(const asym_hypergraph* h, asym_hypergraph** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        *out = wrap(asym::setComplement(h->graph), h->labels);
    });
}

asym_status asym_canonical_form(const asym_hypergraph* h, asym_hypergraph** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        *out = wrap(asym::canonicalForm(h->graph).graph);
    });
}

int asym_family_is_relational(const char* family)
{
    if (!family)
        return -1;
    auto f = asym::parseFamily(family);
    if (!f)
        return -1;
    return asym::isRelationalFamily(*f) ? 1 : 0;
}

asym_status asym_generate(const char* family, int k, int t, int s, int n, asym_hypergraph** out)
{
    return guarded([&] {
        require(family && out, "null argument");
        auto f = asym::parseFamily(family);
        if (!f)
            throw asym::InvalidArgument(std::string("unknown family ") + family);
        auto g = asym::generate({*f, k, t, s, n});
        *out = wrap(std::move(g.graph), std::move(g.labels));
    });
}

asym_status asym_generate_relation(const char* family, int k, int t, asym_relation** out)
{
    return guarded([&] {
        require(family && out, "null argument");
        auto f = asym::parseFamily(family);
        if (!f)
            throw asym::InvalidArgument(std::string("unknown family ") + family);
        *out = new asym_relation{asym::generateRelation({*f, k, t, 0, 0})};
    });
}

asym_status asym_automorphisms(const asym_hypergraph* h, const int* stabilize, size_t count, asym_group** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        auto s = span(stabilize, count);
        *out = new asym_group{h->graph.n(), asym::automorphismsStabilizing(h->graph, s)};
    });
}

asym_status asym_automorphisms_brute_force(const asym_hypergraph* h, const int* stabilize, size_t count,
                                           asym_group** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        auto s = span(stabilize, count);
        *out = new asym_group{h->graph.n(), asym::bruteForceAutomorphisms(h->graph, s)};
    });
}

void asym_group_free(asym_group* g) { delete g; }

int asym_group_degree(const asym_group* g) { return g ? g->degree : 0; }

asym_status asym_group_order(const asym_group* g, char** out)
{
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup(g->result.groupOrder.str());
    });
}

size_t asym_group_generator_count(const asym_group* g) { return g ? g->result.generators.size() : 0; }

asym_status asym_group_generator(const asym_group* g, size_t i, int* images)
{
    return guarded([&] {
        require(g, "null argument");
        require(i < g->result.generators.size(), "generator index out of range");
        copyImages(g->result.generators[i], images);
    });
}

int asym_group_has_involution(const asym_group* g) { return g && g->result.hasInvolution ? 1 : 0; }

asym_status asym_group_involution(const asym_group* g, int* images)
{
    return guarded([&] {
        require(g, "null argument");
        require(g->result.involutionWitness.has_value(), "group has no involution");
        copyImages(*g->result.involutionWitness, images);
    });
}

asym_status asym_verify(const asym_hypergraph* h, asym_property p, const asym_verify_options* opt, asym_report** out)
{
    return guarded([&] {
        require(h && out, "null argument");
        require(p >= ASYM_PROP_ASYMMETRIC && p <= ASYM_PROP_MINIMAL_INVOLUTION_FREE, "unknown property");
        auto r = asym::verify(h->graph, static_cast<asym::Property>(p), convert(opt));
        auto text = asym::toReport(r, h->graph);
        *out = new asym_report{std::move(r), std::move(text)};
    });
}

void asym_report_free(asym_report* r) { delete r; }

int asym_report_holds(const asym_report* r) { return r && r->report.holds ? 1 : 0; }

asym_status asym_report_to_text(const asym_report* r, char** out)
{
    return guarded([&] {
        require(r && out, "null argument");
        *out = dup(r->text);
    });
}

asym_status asym_relation_parse(const char* rel, asym_relation** out)
{
    return guarded([&] {
        require(rel && out, "null argument");
        *out = new asym_relation{asym::parseRel(rel)};
    });
}

void asym_relation_free(asym_relation* r) { delete r; }

int asym_relation_order(const asym_relation* r) { return r ? r->rel.n() : 0; }

size_t asym_relation_tuple_count(const asym_relation* r) { return r ? r->rel.tupleCount() : 0; }

asym_status asym_relation_to_rel(const asym_relation* r, char** out)
{
    return guarded([&] {
        require(r && out, "null argument");
        *out = dup(asym::toRel(r->rel));
    });
}

asym_status asym_relation_automorphisms(const asym_relation* r, asym_group** out)
{
    return guarded([&] {
        require(r && out, "null argument");
        *out = new asym_group{r->rel.n(), asym::automorphismsRel(r->rel)};
    });
}

asym_status asym_relation_multiplicity(const asym_relation* r, int* out)
{
    return guarded([&] {
        require(r && out, "null argument");
        *out = asym::multiplicity(r->rel).maxPerSet;
    });
}

asym_status asym_relation_verify_minimal(const asym_relation* r, const asym_verify_options* opt, asym_report** out)
{
    return guarded([&] {
        require(r && out, "null argument");
        auto rep = asym::verifyMinimalAsymmetricRel(r->rel, convert(opt));
        auto text = asym::toReport(rep, r->rel);
        *out = new asym_report{std::move(rep), std::move(text)};
    });
}

asym_status asym_relation_critical(const asym_relation* r, int* critical, int* witness)
{
    return guarded([&] {
        require(r && critical && witness, "null argument");
        auto c = asym::isCriticalAsymmetric(r->rel);
        *critical = c.critical ? 1 : 0;
        *witness = c.witness.value_or(-1);
    });
}

asym_status asym_search_min_order(int k, int n_max, int workers, int* order, asym_hypergraph** witness)
{
    return guarded([&] {
        require(order && witness, "null argument");
        auto r = asym::minAsymmetricOrder(k, n_max, workers);
        *order = r.order.value_or(0);
        *witness = r.witness ? wrap(std::move(*r.witness)) : nullptr;
    });
}

asym_status asym_search_all_symmetric(int k, int n, int workers, const char* checkpoint, int* all_symmetric,
                                      uint64_t* scanned, uint64_t* swap_settled, uint64_t* complete,
                                      asym_hypergraph** counterexample)
{
    return guarded([&] {
        require(all_symmetric && scanned && swap_settled && complete && counterexample, "null argument");
        asym::ScanCheckpoint ck;
        if (checkpoint)
            ck.path = checkpoint;
        auto r = asym::verifyLemmaAllSymmetric(k, n, workers, ck);
        *all_symmetric = r.allSymmetric ? 1 : 0;
        *scanned = r.scanned;
        *swap_settled = r.swapSettled;
        *complete = r.complete;
        *counterexample = r.counterexample ? wrap(std::move(*r.counterexample)) : nullptr;
    });
}

asym_status asym_search_enumerate(int k, int n, asym_strategy strategy, int keep_all, int workers, asym_outcome** out)
{
    return guarded([&] {
        require(out, "null argument");
        asym::SearchOptions opt;
        opt.strategy = strategy == ASYM_STRATEGY_AUGMENT ? asym::Enumeration::CanonicalAugmentation
                                                         : asym::Enumeration::LabeledScan;
        opt.keepAll = keep_all != 0;
        opt.workers = workers;
        *out = new asym_outcome{asym::enumerateKGraphs(k, n, opt)};
    });
}

asym_status asym_search_minimal(int k, int n, int workers, asym_outcome** out)
{
    return guarded([&] {
        require(out, "null argument");
        asym::SearchOutcome o;
        o.k = k;
        o.n = n;
        o.witnesses = asym::findMinimalAsymmetric(k, n, workers);
        *out = new asym_outcome{std::move(o)};
    });
}

asym_status asym_search_minimal_not_strong(int k, int n, int workers, asym_outcome** out)
{
    return guarded([&] {
        require(out, "null argument");
        asym::SearchOutcome o;
        o.k = k;
        o.n = n;
        o.witnesses = asym::findMinimalNotStronglyMinimal(k, n, workers);
        *out = new asym_outcome{std::move(o)};
    });
}

void asym_outcome_free(asym_outcome* o) { delete o; }

void asym_outcome_counts(const asym_outcome* o, uint64_t* total_labeled, uint64_t* iso_classes,
                         uint64_t* asymmetric_classes)
{
    if (!o)
        return;
    if (total_labeled)
        *total_labeled = o->outcome.totalLabeled;
    if (iso_classes)
        *iso_classes = o->outcome.isoClasses;
    if (asymmetric_classes)
        *asymmetric_classes = o->outcome.asymmetricClasses;
}

size_t asym_outcome_witness_count(const asym_outcome* o) { return o ? o->outcome.witnesses.size() : 0; }

asym_status asym_outcome_witnesses(const asym_outcome* o, char** out)
{
    return guarded([&] {
        require(o && out, "null argument");
        *out = dup(asym::toHgfStream(o->outcome.witnesses));
    });
}

} // extern "C"
