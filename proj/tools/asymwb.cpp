// asymwb: command-line front end over the C interface.
//
// Exit codes: 0 holds / success, 1 property fails, 2 usage or parse error,
// 3 resource guard, 4 internal failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asym/asym.h"

namespace {

enum Exit { kHolds = 0, kFails = 1, kUsage = 2, kGuard = 3, kInternal = 4 };

struct Failure {
    int code;
    std::string message;
};

int exitFor(asym_status s)
{
    switch (s) {
    case ASYM_OK:
        return kHolds;
    case ASYM_ERR_INVALID_ARGUMENT:
    case ASYM_ERR_PARSE:
        return kUsage;
    case ASYM_ERR_GUARD:
        return kGuard;
    default:
        return kInternal;
    }
}

void check(asym_status s)
{
    if (s != ASYM_OK)
        throw Failure{exitFor(s), asym_last_error()};
}

struct CString {
    char* p = nullptr;
    ~CString() { asym_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
    ~Handle() { Free(p); }
    T* get() const { return p; }
};

using Graph = Handle<asym_hypergraph, asym_hypergraph_free>;
using Relation = Handle<asym_relation, asym_relation_free>;
using Group = Handle<asym_group, asym_group_free>;
using Report = Handle<asym_report, asym_report_free>;
using Outcome = Handle<asym_outcome, asym_outcome_free>;

std::string readInput(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kUsage, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Single writer for all command output: stdout, or the -o file.
class Output {
public:
    explicit Output(const std::string& path) : path_(path) {}
    std::ostream& stream() { return buf_; }
    void flush()
    {
        if (path_.empty()) {
            std::cout << buf_.str() << std::flush;
            return;
        }
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Failure{kUsage, "cannot write " + path_};
        out << buf_.str();
    }

private:
    std::string path_;
    std::ostringstream buf_;
};

void writeFile(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Failure{kUsage, "cannot write " + path};
    out << text;
}

int defaultWorkers()
{
    if (const char* env = std::getenv("ASYM_WORKERS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw Failure{kUsage, std::string("ASYM_WORKERS is not a number: ") + env};
        }
    }
    return 0;
}

struct Source {
    std::string input;
    std::string family;
    int k = 0, t = 0, s = 0, n = 0;

    void attach(CLI::App* cmd, bool withInput = true)
    {
        if (withInput)
            cmd->add_option("input", input, "Input file (- for stdin)");
        cmd->add_option("--family", family, "Generate the input instead of reading it");
        cmd->add_option("--k", k, "Uniformity");
        cmd->add_option("--t", t, "Ring length parameter");
        cmd->add_option("--s", s, "Layer parameter");
        cmd->add_option("--n", n, "Order");
    }

    bool relational() const { return !family.empty() && asym_family_is_relational(family.c_str()) == 1; }

    Graph graph() const
    {
        Graph g;
        if (!family.empty()) {
            check(asym_generate(family.c_str(), k, t, s, n, &g.p));
        } else {
            if (input.empty())
                throw Failure{kUsage, "an input file or --family is required"};
            check(asym_hypergraph_parse(readInput(input).c_str(), &g.p));
        }
        return g;
    }

    Relation relation() const
    {
        Relation r;
        if (!family.empty()) {
            check(asym_generate_relation(family.c_str(), k, t, &r.p));
        } else {
            if (input.empty())
                throw Failure{kUsage, "an input file or --family is required"};
            check(asym_relation_parse(readInput(input).c_str(), &r.p));
        }
        return r;
    }
};

std::string header() { return std::string("# asymwb ") + asym_version() + "\n"; }

std::string imagesLine(const char* tag, const std::vector<int>& images)
{
    std::string s = tag;
    for (int v : images)
        s += " " + std::to_string(v);
    return s + "\n";
}

void printGroup(std::ostream& os, const asym_group* g)
{
    CString order;
    check(asym_group_order(g, &order.p));
    const auto n = static_cast<std::size_t>(asym_group_degree(g));
    os << "order " << order.str() << "\n";
    os << "asymmetric " << (order.str() == "1" ? "true" : "false") << "\n";
    std::vector<int> img(n);
    for (std::size_t i = 0; i < asym_group_generator_count(g); ++i) {
        check(asym_group_generator(g, i, img.data()));
        os << imagesLine("generator", img);
    }
    if (asym_group_has_involution(g)) {
        check(asym_group_involution(g, img.data()));
        os << imagesLine("involution", img);
    } else {
        os << "involution none\n";
    }
}

asym_verify_options verifyOptions(const std::string& mode, std::uint64_t samples, std::optional<std::uint64_t> seed,
                                  bool stratified, int workers)
{
    asym_verify_options o;
    asym_verify_options_init(&o);
    if (mode == "exhaustive")
        o.mode = ASYM_MODE_EXHAUSTIVE;
    else if (mode == "sampled")
        o.mode = ASYM_MODE_SAMPLED;
    o.samples = samples;
    o.has_seed = seed.has_value();
    o.seed = seed.value_or(0);
    o.stratified = stratified ? 1 : 0;
    o.workers = workers;
    if (o.mode == ASYM_MODE_SAMPLED && !o.has_seed)
        throw Failure{kUsage, "--seed is required with --mode sampled"};
    return o;
}

asym_property propertyFor(const std::string& name)
{
    if (name == "asymmetric")
        return ASYM_PROP_ASYMMETRIC;
    if (name == "minimal-asymmetric")
        return ASYM_PROP_MINIMAL_ASYMMETRIC;
    if (name == "strong-minimal")
        return ASYM_PROP_STRONGLY_MINIMAL;
    if (name == "minimal-involution-free")
        return ASYM_PROP_MINIMAL_INVOLUTION_FREE;
    throw Failure{kUsage, "unknown property " + name};
}

void tableRow(std::ostream& os, int k, int n, const asym_outcome* o, bool withHeader)
{
    std::uint64_t total = 0, iso = 0, asym = 0;
    asym_outcome_counts(o, &total, &iso, &asym);
    if (withHeader)
        os << "k n totalLabeled isoClasses asymmetricClasses\n";
    os << k << ' ' << n << ' ' << total << ' ' << iso << ' ' << asym << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Asymmetric hypergraph workbench"};
    app.set_version_flag("--version", std::string("asymwb ") + asym_version());
    app.require_subcommand(1);

    std::string outPath;
    int workers = -1;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a family member (HGF, or REL for relational families)");
    Source genSrc;
    std::string labelsPath;
    genSrc.attach(gen, false);
    gen->get_option("--family")->required();
    gen->add_option("-o,--output", outPath, "Output file");
    gen->add_option("--labels", labelsPath, "Label table file (default: <output>.labels)");

    // aut
    auto* aut = app.add_subcommand("aut", "Automorphism group");
    Source autSrc;
    std::vector<int> stabilize;
    bool brute = false;
    autSrc.attach(aut);
    aut->add_option("--stabilize", stabilize, "Setwise-stabilized vertices")->delimiter(',');
    aut->add_flag("--brute-force", brute, "Use the n! oracle");
    aut->add_option("-o,--output", outPath, "Output file");

    // verify
    auto* ver = app.add_subcommand("verify", "Check a property and emit a report");
    Source verSrc;
    std::string property, mode = "auto";
    std::uint64_t samples = 10000;
    std::optional<std::uint64_t> seed;
    bool stratified = false;
    verSrc.attach(ver);
    ver->add_option("--property", property, "asymmetric | minimal-asymmetric | strong-minimal | minimal-involution-free")
        ->required();
    ver->add_option("--mode", mode, "auto | exhaustive | sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    ver->add_option("--samples", samples, "Sample count for sampled mode");
    ver->add_option("--seed", seed, "Seed for sampled mode");
    ver->add_flag("--stratified", stratified, "Draw the subset size uniformly first");
    ver->add_option("--workers", workers, "Worker threads (default: ASYM_WORKERS or all cores)");
    ver->add_option("-o,--output", outPath, "Report file");

    // search
    auto* search = app.add_subcommand("search", "Exhaustive searches over small k-graphs");
    std::string task, strategy = "labeled", checkpoint;
    int sk = 0, sn = 0, nMax = 0;
    bool witnesses = false, keepAll = false, table = false;
    search->add_option("task", task, "min-order | all-symmetric | enumerate | minimal | minimal-not-strong")
        ->required()
        ->check(CLI::IsMember({"min-order", "all-symmetric", "enumerate", "minimal", "minimal-not-strong"}));
    search->add_option("--k", sk, "Uniformity")->required();
    search->add_option("--n", sn, "Order");
    search->add_option("--n-max", nMax, "Largest order for min-order");
    search->add_option("--strategy", strategy, "labeled | augment")->check(CLI::IsMember({"labeled", "augment"}));
    search->add_option("--checkpoint", checkpoint, "Checkpoint file for all-symmetric scans");
    search->add_flag("--witnesses", witnesses, "Stream witnesses as HGF documents");
    search->add_flag("--all", keepAll, "With enumerate --witnesses: every class, not only asymmetric ones");
    search->add_flag("--table", table, "Emit the summary table row");
    search->add_option("--workers", workers, "Worker threads (default: ASYM_WORKERS or all cores)");
    search->add_option("-o,--output", outPath, "Output file");

    // complement
    auto* comp = app.add_subcommand("complement", "Set-complement of a uniform hypergraph");
    Source compSrc;
    compSrc.attach(comp);
    comp->add_option("-o,--output", outPath, "Output file");

    // rel
    auto* rel = app.add_subcommand("rel", "Relational structures");
    Source relSrc;
    std::string relCheck = "asymmetric";
    relSrc.attach(rel);
    rel->add_option("--check", relCheck, "asymmetric | minimal-asymmetric | critical | multiplicity | aut")
        ->check(CLI::IsMember({"asymmetric", "minimal-asymmetric", "critical", "multiplicity", "aut"}));
    rel->add_option("--workers", workers, "Worker threads");
    rel->add_option("-o,--output", outPath, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (workers < 0)
            workers = defaultWorkers();
        Output out(outPath);
        auto& os = out.stream();
        int code = kHolds;

        if (gen->parsed()) {
            if (genSrc.relational()) {
                auto r = genSrc.relation();
                CString text;
                check(asym_relation_to_rel(r.get(), &text.p));
                os << text.str();
            } else {
                auto g = genSrc.graph();
                CString text, labels;
                check(asym_hypergraph_to_hgf(g.get(), &text.p));
                check(asym_hypergraph_labels(g.get(), &labels.p));
                os << text.str();
                if (labelsPath.empty() && !outPath.empty())
                    labelsPath = outPath + ".labels";
                if (!labelsPath.empty())
                    writeFile(labelsPath, labels.str());
            }
        } else if (aut->parsed()) {
            auto g = autSrc.graph();
            Group grp;
            if (brute)
                check(asym_automorphisms_brute_force(g.get(), stabilize.data(), stabilize.size(), &grp.p));
            else
                check(asym_automorphisms(g.get(), stabilize.data(), stabilize.size(), &grp.p));
            os << header();
            printGroup(os, grp.get());
        } else if (ver->parsed()) {
            auto g = verSrc.graph();
            auto opt = verifyOptions(mode, samples, seed, stratified, workers);
            Report rep;
            check(asym_verify(g.get(), propertyFor(property), &opt, &rep.p));
            CString text;
            check(asym_report_to_text(rep.get(), &text.p));
            os << text.str();
            code = asym_report_holds(rep.get()) ? kHolds : kFails;
        } else if (search->parsed()) {
            if (task == "min-order") {
                if (nMax < 2)
                    throw Failure{kUsage, "--n-max >= 2 required"};
                int order = 0;
                Graph w;
                check(asym_search_min_order(sk, nMax, workers, &order, &w.p));
                os << header();
                if (order) {
                    os << "n(" << sk << ") = " << order << "\n";
                    if (witnesses) {
                        CString text;
                        check(asym_hypergraph_to_hgf(w.get(), &text.p));
                        os << text.str();
                    }
                } else {
                    os << "n(" << sk << ") > " << nMax << ": none up to " << nMax << "\n";
                    code = kFails;
                }
            } else if (task == "all-symmetric") {
                int all = 0;
                std::uint64_t scanned = 0, swaps = 0, complete = 0;
                Graph ce;
                check(asym_search_all_symmetric(sk, sn, workers, checkpoint.empty() ? nullptr : checkpoint.c_str(),
                                                &all, &scanned, &swaps, &complete, &ce.p));
                os << header();
                os << "all-symmetric " << (all ? "true" : "false") << " k " << sk << " n " << sn << " scanned "
                   << scanned << " swap-settled " << swaps << " complete " << complete << "\n";
                if (ce.get()) {
                    CString text;
                    check(asym_hypergraph_to_hgf(ce.get(), &text.p));
                    os << text.str();
                }
                code = all ? kHolds : kFails;
            } else {
                Outcome o;
                if (task == "enumerate")
                    check(asym_search_enumerate(sk, sn, strategy == "augment" ? ASYM_STRATEGY_AUGMENT
                                                                               : ASYM_STRATEGY_LABELED,
                                                keepAll ? 1 : 0, workers, &o.p));
                else if (task == "minimal")
                    check(asym_search_minimal(sk, sn, workers, &o.p));
                else
                    check(asym_search_minimal_not_strong(sk, sn, workers, &o.p));
                if (task == "enumerate") {
                    if (table || !witnesses)
                        tableRow(os, sk, sn, o.get(), true);
                } else {
                    os << header() << task << " k " << sk << " n " << sn << " count "
                       << asym_outcome_witness_count(o.get()) << "\n";
                }
                if (witnesses || task != "enumerate") {
                    CString text;
                    check(asym_outcome_witnesses(o.get(), &text.p));
                    if (asym_outcome_witness_count(o.get()) && (table || task != "enumerate"))
                        os << "---\n";
                    os << text.str();
                }
            }
        } else if (comp->parsed()) {
            auto g = compSrc.graph();
            Graph c;
            check(asym_complement(g.get(), &c.p));
            CString text;
            check(asym_hypergraph_to_hgf(c.get(), &text.p));
            os << text.str();
        } else if (rel->parsed()) {
            auto r = relSrc.relation();
            if (relCheck == "minimal-asymmetric") {
                asym_verify_options opt;
                asym_verify_options_init(&opt);
                opt.workers = workers;
                Report rep;
                check(asym_relation_verify_minimal(r.get(), &opt, &rep.p));
                CString text;
                check(asym_report_to_text(rep.get(), &text.p));
                os << text.str();
                code = asym_report_holds(rep.get()) ? kHolds : kFails;
            } else if (relCheck == "critical") {
                int critical = 0, witness = -1;
                check(asym_relation_critical(r.get(), &critical, &witness));
                os << header() << "critical " << (critical ? "true" : "false");
                if (!critical)
                    os << " witness " << witness;
                os << "\n";
                code = critical ? kHolds : kFails;
            } else if (relCheck == "multiplicity") {
                int m = 0;
                check(asym_relation_multiplicity(r.get(), &m));
                os << header() << "multiplicity " << m << "\n";
            } else {
                Group grp;
                check(asym_relation_automorphisms(r.get(), &grp.p));
                os << header();
                printGroup(os, grp.get());
                if (relCheck == "asymmetric" && asym_group_generator_count(grp.get()) > 0)
                    code = kFails;
            }
        }
        out.flush();
        return code;
    } catch (const Failure& f) {
        std::cerr << "asymwb: " << f.message << "\n";
        return f.code;
    }
}
