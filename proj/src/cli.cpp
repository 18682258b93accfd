#include "ratrel/cli.hpp"

#include "ratrel/catalog.hpp"
#include "ratrel/decompose.hpp"
#include "ratrel/parser.hpp"
#include "ratrel/poset.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace ratrel {
namespace {

struct DecomposeOptions {
    std::string expr;
    bool chains = false;
};

struct RelateOptions {
    std::string catalog;
    std::string from;
    std::string to;
    long max_degree = 8;
    long terms = 0; // 0: derived from the attempted degree
};

struct PosetOptions {
    std::string catalog;
    std::string out_path;
    std::string format = "json";
    long max_degree = 8;
    long terms = 0;
};

struct SeriesOptions {
    std::string catalog;
    std::string name;
    long terms = 0;
};

void run_decompose(const DecomposeOptions& opt, std::ostream& out) {
    const RationalFunction f = parse_ratfunc(opt.expr);
    DecomposeEngine engine;
    out << "f = " << f.to_string() << "\n";
    const auto classes = engine.decompose_all(f);
    out << "decomposition classes: " << classes.size() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out << "[" << (i + 1) << "] g = " << classes[i].left.to_string() << "\n";
        out << "    h = " << classes[i].right.to_string() << "\n";
    }
    if (opt.chains) {
        const auto chains = engine.refine_chains(f);
        out << "refined chains: " << chains.size() << "\n";
        for (const auto& chain : chains) {
            out << "chain length " << chain.components.size() << ":";
            for (std::size_t i = 0; i < chain.components.size(); ++i)
                out << (i == 0 ? " deg " : " ∘ deg ") << chain.components[i].degree();
            out << "\n";
            for (const auto& c : chain.components) out << "  " << c.to_string() << "\n";
        }
    }
}

long default_terms(long max_degree) { return 2 * max_degree + 16; }

void run_relate(const RelateOptions& opt, std::ostream& out) {
    const Catalog cat = load_catalog(opt.catalog);
    const CatalogFunction& from = cat.find(opt.from);
    const CatalogFunction& to = cat.find(opt.to);

    std::vector<long> degrees;
    if (from.region && to.region) {
        auto d = relation_degree_bound(region_area(*from.region), region_area(*to.region));
        if (d && *d <= opt.max_degree) degrees.push_back(*d);
    } else {
        for (long d = 1; d <= opt.max_degree; ++d) degrees.push_back(d);
    }
    const long max_attempted = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    const long terms = opt.terms > 0 ? opt.terms : default_terms(std::max(max_attempted, 1L));

    std::vector<RationalRelation> found;
    if (!degrees.empty()) {
        const LaurentSeries s1 = from.expand(terms);
        const LaurentSeries s2 = to.expand(terms);
        for (long d : degrees) {
            for (auto& rel : find_relations(s1, s2, d)) {
                if (opt.from == opt.to && rel.k == 1 && rel.f == RationalFunction::identity())
                    continue;
                rel.source = opt.from;
                rel.target = opt.to;
                found.push_back(std::move(rel));
            }
        }
    }
    out << "relations: " << found.size() << "\n";
    for (const auto& rel : found) {
        out << rel.source << "(q^" << rel.k << ") = f(" << rel.target << "(q)), deg f = "
            << rel.f.degree() << "\n";
        out << "f = " << rel.f.to_string() << "\n";
    }
}

std::string spell_count(std::size_t n) {
    static const char* small[] = {"",        "One",     "Two",      "Three",  "Four",
                                  "Five",    "Six",     "Seven",    "Eight",  "Nine",
                                  "Ten",     "Eleven",  "Twelve",   "Thirteen", "Fourteen",
                                  "Fifteen", "Sixteen"};
    if (n >= 1 && n <= 16) return small[n];
    return std::to_string(n);
}

void run_poset(const PosetOptions& opt, std::ostream& out) {
    if (opt.format != "json" && opt.format != "dot")
        throw CLI::ValidationError("--format", "must be json or dot");
    const Catalog cat = load_catalog(opt.catalog);
    const long terms = opt.terms > 0 ? opt.terms : default_terms(opt.max_degree);

    std::vector<CatalogEntry> entries;
    entries.reserve(cat.functions.size());
    for (const auto& f : cat.functions) entries.push_back(f.entry(terms));

    RelationGraph graph = refine_graph(build_graph(entries, opt.max_degree));
    const std::string payload =
        opt.format == "json" ? export_graph_json(graph) : export_graph_dot(graph);
    std::ofstream sink(opt.out_path, std::ios::binary);
    if (!sink) raise("ParseError", "cannot write to '" + opt.out_path + "'");
    sink << payload;

    out << "vertices: " << graph.vertices.size() << ", edges: " << graph.edges.size() << "\n";
    const auto components = connected_components(graph);
    out << "connected components: " << components.size() << "\n";
    // Appendix-style census: grouped by size, largest first, singletons last.
    std::size_t i = 0;
    std::vector<std::string> isolated;
    while (i < components.size()) {
        const std::size_t size = components[i].size();
        std::size_t jend = i;
        while (jend < components.size() && components[jend].size() == size) ++jend;
        if (size == 1) {
            for (std::size_t k = i; k < jend; ++k) isolated.push_back(components[k].front());
        } else {
            out << spell_count(jend - i) << " with " << size << ": ";
            for (std::size_t k = i; k < jend; ++k) {
                if (k > i) out << ", ";
                out << "{";
                for (std::size_t m = 0; m < components[k].size(); ++m) {
                    if (m > 0) out << ", ";
                    out << components[k][m];
                }
                out << "}";
            }
            out << "\n";
        }
        i = jend;
    }
    if (!isolated.empty()) {
        out << isolated.size() << " isolated: ";
        for (std::size_t k = 0; k < isolated.size(); ++k) {
            if (k > 0) out << ", ";
            out << isolated[k];
        }
        out << "\n";
    }
    for (const auto& d : graph.diagnostics) out << "note: " << d << "\n";
}

void run_series(const SeriesOptions& opt, std::ostream& out) {
    const Catalog cat = load_catalog(opt.catalog);
    const CatalogFunction& f = cat.find(opt.name);
    const LaurentSeries s = f.expand(opt.terms);
    for (long e = -1; e < s.precision(); ++e)
        out << "a[" << e << "] = " << to_string(s.coefficient(e)) << "\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rational-function decomposition and q-series relation tool"};
    app.require_subcommand(1);

    DecomposeOptions dopt;
    auto* dec = app.add_subcommand("decompose", "decompose a rational function in t");
    dec->add_option("--expr", dopt.expr, "expression, e.g. \"t^3*(t^3+216)^3/(t^3-27)^3\"")
        ->required();
    dec->add_flag("--chains", dopt.chains, "also print all refined chains");

    RelateOptions ropt;
    auto* rel = app.add_subcommand("relate", "find rational relations between two catalog series");
    rel->add_option("--catalog", ropt.catalog, "catalog JSON file")->required();
    rel->add_option("--from", ropt.from, "source function name")->required();
    rel->add_option("--to", ropt.to, "target function name")->required();
    rel->add_option("--max-degree", ropt.max_degree, "largest relation degree to attempt");
    rel->add_option("--terms", ropt.terms, "series coefficients to use");

    PosetOptions popt;
    auto* pos = app.add_subcommand("poset", "build and refine the relation graph");
    pos->add_option("--catalog", popt.catalog, "catalog JSON file")->required();
    pos->add_option("--out", popt.out_path, "output file for the graph export")->required();
    pos->add_option("--format", popt.format, "json or dot");
    pos->add_option("--max-degree", popt.max_degree, "largest relation degree to attempt");
    pos->add_option("--terms", popt.terms, "series coefficients to use");

    SeriesOptions sopt;
    auto* ser = app.add_subcommand("series", "print catalog series coefficients");
    ser->add_option("--catalog", sopt.catalog, "catalog JSON file")->required();
    ser->add_option("--name", sopt.name, "function name")->required();
    ser->add_option("--terms", sopt.terms, "coefficients to print (from a[-1])")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (dec->parsed()) run_decompose(dopt, out);
        else if (rel->parsed()) run_relate(ropt, out);
        else if (pos->parsed()) run_poset(popt, out);
        else if (ser->parsed()) run_series(sopt, out);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ratrel
