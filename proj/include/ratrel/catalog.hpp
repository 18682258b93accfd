#ifndef RATREL_CATALOG_HPP
#define RATREL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "ratrel/poset.hpp"
#include "ratrel/qseries.hpp"

namespace ratrel {

// One function as stored on disk: either an explicit coefficient list
// (a_{-1} = 1 and a_0 = 0 implied, a_0 overridable) or an eta quotient
// expandable to any precision, plus optional fundamental-region data.
struct CatalogFunction {
    std::string name;
    std::optional<EtaQuotientSpec> eta;
    std::vector<Rational> coefficients; // a_1, a_2, ... when no eta spec
    Rational a0 = Rational(0);
    bool integral = false; // when set, expanded coefficients must be integers
    std::optional<FundamentalRegion> region;

    // Available tracked coefficients counted from q^-1 (unbounded for eta).
    long available_terms() const;
    LaurentSeries expand(long n_terms) const;
    CatalogEntry entry(long n_terms) const;
};

struct Catalog {
    std::vector<CatalogFunction> functions;
    std::string source_path;

    const CatalogFunction& find(const std::string& name) const;
};

// Parses the JSON catalog format; see README for the schema.
// Errors: ParseError, DuplicateName, NonIntegralEtaExponent, BadMatrix.
Catalog load_catalog(const std::string& path);
Catalog parse_catalog_text(const std::string& text, const std::string& origin);

} // namespace ratrel

#endif
