#include "ratrel/catalog.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ratrel {

using nlohmann::json;

long CatalogFunction::available_terms() const {
    if (eta) return -1; // expandable to any requested precision
    return 2 + static_cast<long>(coefficients.size()); // a_{-1}, a_0, a_1..a_m
}

LaurentSeries CatalogFunction::expand(long n_terms) const {
    if (n_terms < 1) raise("InsufficientPrecision", "need at least one coefficient");
    LaurentSeries s;
    if (eta) {
        s = eta_quotient_series(*eta, n_terms);
    } else {
        if (n_terms > available_terms())
            raise("InsufficientPrecision", name + " declares " + std::to_string(available_terms()) +
                                               " coefficients, " + std::to_string(n_terms) +
                                               " requested");
        std::vector<Rational> v(static_cast<std::size_t>(n_terms));
        v[0] = 1;
        if (n_terms > 1) v[1] = a0;
        for (long i = 2; i < n_terms; ++i) v[static_cast<std::size_t>(i)] = coefficients[static_cast<std::size_t>(i - 2)];
        s = LaurentSeries(-1, std::move(v));
    }
    if (s.is_zero() || s.leading_exponent() != -1 || s.coefficient(-1) != 1)
        raise("ParseError", name + ": series must start with q^-1 with coefficient 1");
    if (integral)
        for (long e = s.leading_exponent(); e < s.precision(); ++e)
            if (!is_integer(s.coefficient(e)))
                raise("ParseError", name + ": coefficient of q^" + std::to_string(e) +
                                        " is not an integer");
    return s;
}

CatalogEntry CatalogFunction::entry(long n_terms) const {
    CatalogEntry e;
    e.name = name;
    e.series = expand(n_terms);
    e.region = region;
    e.declared_coefficient_count = available_terms();
    return e;
}

const CatalogFunction& Catalog::find(const std::string& name) const {
    for (const auto& f : functions)
        if (f.name == name) return f;
    raise("ParseError", "no catalog entry named '" + name + "' in " + source_path);
}

namespace {

Rational json_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    raise("ParseError", where + ": expected an integer or a \"p/q\" string");
}

long json_long(const json& v, const std::string& where) {
    if (!v.is_number_integer()) raise("ParseError", where + ": expected an integer");
    return static_cast<long>(v.get<std::int64_t>());
}

} // namespace

Catalog parse_catalog_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        raise("ParseError", origin + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("functions") || !doc["functions"].is_array())
        raise("ParseError", origin + ": expected {\"functions\": [...]}");

    Catalog cat;
    cat.source_path = origin;
    std::set<std::string> names;
    for (const auto& jf : doc["functions"]) {
        if (!jf.is_object() || !jf.contains("name") || !jf["name"].is_string())
            raise("ParseError", origin + ": every function needs a \"name\"");
        CatalogFunction f;
        f.name = jf["name"].get<std::string>();
        if (!names.insert(f.name).second)
            raise("DuplicateName", "catalog entry '" + f.name + "' appears twice");

        const bool has_eta = jf.contains("eta");
        const bool has_coeffs = jf.contains("coefficients");
        if (has_eta == has_coeffs)
            raise("ParseError", f.name + ": exactly one of \"eta\" or \"coefficients\" is required");
        if (has_eta) {
            const auto& je = jf["eta"];
            if (!je.is_object() || !je.contains("factors") || !je["factors"].is_array())
                raise("ParseError", f.name + ": \"eta\" needs a \"factors\" array");
            EtaQuotientSpec spec;
            for (const auto& jp : je["factors"]) {
                if (!jp.is_array() || jp.size() != 2)
                    raise("ParseError", f.name + ": eta factors are [scale, exponent] pairs");
                const long d = json_long(jp[0], f.name + " eta scale");
                const long e = json_long(jp[1], f.name + " eta exponent");
                if (d < 1) raise("ParseError", f.name + ": eta scale must be positive");
                spec.factors.emplace_back(d, e);
            }
            if (je.contains("constant")) spec.add_constant = json_rational(je["constant"], f.name);
            if (spec.exponent_sum() % 24 != 0)
                raise("NonIntegralEtaExponent", f.name + ": eta exponent sum " +
                                                    std::to_string(spec.exponent_sum()) +
                                                    " is not divisible by 24");
            f.eta = std::move(spec);
        } else {
            if (!jf["coefficients"].is_array())
                raise("ParseError", f.name + ": \"coefficients\" must be an array");
            for (const auto& jc : jf["coefficients"])
                f.coefficients.push_back(json_rational(jc, f.name + " coefficients"));
            if (jf.contains("a0")) f.a0 = json_rational(jf["a0"], f.name + " a0");
        }
        if (jf.contains("integral")) {
            if (!jf["integral"].is_boolean()) raise("ParseError", f.name + ": \"integral\" must be a bool");
            f.integral = jf["integral"].get<bool>();
        }
        if (jf.contains("generators")) {
            if (!jf["generators"].is_array())
                raise("ParseError", f.name + ": \"generators\" must be an array of 2x2 matrices");
            FundamentalRegion region;
            for (const auto& jm : jf["generators"]) {
                if (!jm.is_array() || jm.size() != 2 || !jm[0].is_array() || jm[0].size() != 2 ||
                    !jm[1].is_array() || jm[1].size() != 2)
                    raise("ParseError", f.name + ": generators are [[a,b],[c,d]] matrices");
                const Rational a = json_rational(jm[0][0], f.name + " generator");
                const Rational b = json_rational(jm[0][1], f.name + " generator");
                const Rational c = json_rational(jm[1][0], f.name + " generator");
                const Rational d = json_rational(jm[1][1], f.name + " generator");
                if (a * d - b * c <= 0)
                    raise("BadMatrix", f.name + ": generator determinant must be positive");
                region.generators.emplace_back(a, b, c, d);
            }
            f.region = std::move(region);
        }
        cat.functions.push_back(std::move(f));
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise("ParseError", "cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog_text(buf.str(), path);
}

} // namespace ratrel
