#ifndef RATREL_POSET_HPP
#define RATREL_POSET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratrel/bivar.hpp"
#include "ratrel/geometry.hpp"
#include "ratrel/qseries.hpp"

namespace ratrel {

// A catalog function with its expanded q-series (leading exponent -1,
// leading coefficient 1) and, optionally, fundamental-region generators.
struct CatalogEntry {
    std::string name;
    LaurentSeries series;
    std::optional<FundamentalRegion> region;
    long declared_coefficient_count = 0;
};

// Labelled edge source -> target carrying source(q^k) = f(target(q)).
struct RelationEdge {
    std::string source;
    std::string target;
    RationalFunction f;
    long degree = 0; // = degree(f)
    long k = 0;      // = deg num(f) - deg den(f)
    bool indecomposable = false;
    long verified_to = 0;
};

// Directed multigraph over catalog names; parallel edges are distinct.
// Synthesized vertices introduced by refinement carry their computed
// series in the `series` map alongside the catalog entries.
struct RelationGraph {
    std::vector<std::string> vertices; // catalog order, then synthesized
    std::vector<RelationEdge> edges;   // canonical order
    std::map<std::string, LaurentSeries> series;
    std::vector<std::string> synthesized; // subset of vertices, creation order
    std::vector<std::string> diagnostics;
};

// Step A/B of the refinement pipeline: one relation search per ordered
// pair. With region data on both entries the degree is pinned by the area
// ratio; otherwise every degree up to max_degree is attempted. Identity
// self-relations (f = t, k = 1) are dropped.
RelationGraph build_graph(const std::vector<CatalogEntry>& catalog, long max_degree);

// Steps C/D: decomposable edges are replaced by two-edge paths through the
// intermediate series s3(q^j) = h(s2(q)) until every remaining relation is
// indecomposable. Intermediates are matched against known vertices up to
// an additive constant; unmatched ones are synthesized as
// "<source>/<target>#<ordinal>" with constant term normalized to zero.
RelationGraph refine_graph(const RelationGraph& graph);

// Undirected connected components: members sorted by name, components by
// decreasing size then name.
std::vector<std::vector<std::string>> connected_components(const RelationGraph& graph);

// Resultant elimination of the shared catalog variable from two relations
// with the same endpoints and distinct k: P(X, Y) with
// P(source(q^k1), source(q^k2)) = 0. Throws SameK when k1 == k2.
BivarPoly modular_polynomial(const RelationEdge& r1, const RelationEdge& r2);

std::string export_graph_json(const RelationGraph& graph);
std::string export_graph_dot(const RelationGraph& graph);

} // namespace ratrel

#endif
