#include "ratrel/poset.hpp"

#include "ratrel/decompose.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ratrel {
namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string edge_sort_key(const RelationEdge& e) {
    std::ostringstream os;
    os << e.source << '\x1f' << e.target << '\x1f' << e.degree << '\x1f' << e.k << '\x1f'
       << e.f.to_string();
    return os.str();
}

void sort_edges(std::vector<RelationEdge>& edges) {
    std::sort(edges.begin(), edges.end(), [](const RelationEdge& a, const RelationEdge& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.target != b.target) return a.target < b.target;
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.k != b.k) return a.k < b.k;
        return a.f.to_string() < b.f.to_string();
    });
}

void dedup_edges(std::vector<RelationEdge>& edges) {
    sort_edges(edges);
    std::vector<RelationEdge> out;
    std::map<std::string, std::size_t> seen;
    for (auto& e : edges) {
        auto [it, fresh] = seen.emplace(edge_sort_key(e), out.size());
        if (fresh) {
            out.push_back(std::move(e));
        } else {
            // Parallel copies of the same relation merge; verification depth
            // and the indecomposability verdict carry over.
            RelationEdge& kept = out[it->second];
            kept.indecomposable = kept.indecomposable || e.indecomposable;
            kept.verified_to = std::max(kept.verified_to, e.verified_to);
        }
    }
    edges = std::move(out);
}

// Coefficient comparison up to an additive constant (the residual unit
// freedom of a series with leading term q^-1): returns the constant c with
// candidate == known + c when the overlap matches, nullopt otherwise.
std::optional<Rational> match_up_to_constant(const LaurentSeries& candidate,
                                             const LaurentSeries& known) {
    if (candidate.is_zero() || known.is_zero()) return std::nullopt;
    if (candidate.leading_exponent() != known.leading_exponent()) return std::nullopt;
    const long prec = std::min(candidate.precision(), known.precision());
    if (prec <= 0) return std::nullopt; // cannot pin the constant term
    const Rational c = candidate.coefficient(0) - known.coefficient(0);
    for (long e = candidate.leading_exponent(); e < prec; ++e) {
        if (e == 0) continue;
        if (candidate.coefficient(e) != known.coefficient(e)) return std::nullopt;
    }
    return c;
}

// Extracts s3 from s3(q^j): keeps every j-th coefficient. Requires the
// support to lie on multiples of j.
std::optional<LaurentSeries> extract_q_root(const LaurentSeries& s, long j) {
    if (j == 1) return s;
    if (s.is_zero()) return LaurentSeries::zero_to(floor_div(s.precision() - 1, j) + 1);
    const long lead = s.leading_exponent();
    if (lead % j != 0) return std::nullopt;
    const long out_prec = floor_div(s.precision() - 1, j) + 1;
    std::vector<Rational> v(static_cast<std::size_t>(out_prec - lead / j), Rational(0));
    for (long e = lead; e < s.precision(); ++e) {
        if (s.coefficient(e) == 0) continue;
        if (e % j != 0) return std::nullopt;
        v[static_cast<std::size_t>(e / j - lead / j)] = s.coefficient(e);
    }
    return LaurentSeries(lead / j, std::move(v));
}

RationalFunction plus_constant(const RationalFunction& f, const Rational& c) {
    if (c == 0) return f;
    return RationalFunction(f.num() + Polynomial(c) * f.den(), f.den());
}

} // namespace

RelationGraph build_graph(const std::vector<CatalogEntry>& catalog, long max_degree) {
    RelationGraph g;
    std::map<std::string, std::optional<ExactArea>> areas;
    for (const auto& entry : catalog) {
        g.vertices.push_back(entry.name);
        g.series.emplace(entry.name, entry.series);
        areas[entry.name] = entry.region ? std::optional<ExactArea>(region_area(*entry.region))
                                         : std::nullopt;
    }

    for (const auto& src : catalog) {
        for (const auto& tgt : catalog) {
            std::vector<long> degrees;
            const auto& a1 = areas[src.name];
            const auto& a2 = areas[tgt.name];
            if (a1 && a2) {
                // Step B branch: the area ratio pins the relation degree.
                auto d = relation_degree_bound(*a1, *a2);
                if (!d) continue;
                if (*d > max_degree) {
                    g.diagnostics.push_back(src.name + " -> " + tgt.name + ": area ratio " +
                                            std::to_string(*d) + " exceeds max degree");
                    continue;
                }
                degrees.push_back(*d);
            } else {
                for (long d = 1; d <= max_degree; ++d) degrees.push_back(d);
            }
            for (long d : degrees) {
                std::vector<RationalRelation> rels;
                try {
                    rels = find_relations(src.series, tgt.series, d);
                } catch (const Error& e) {
                    if (e.kind() == "InsufficientPrecision") {
                        g.diagnostics.push_back(src.name + " -> " + tgt.name + ": " + e.what());
                        continue;
                    }
                    throw;
                }
                for (auto& rel : rels) {
                    if (src.name == tgt.name && rel.k == 1 && rel.f == RationalFunction::identity())
                        continue; // trivial self-identity
                    RelationEdge edge;
                    edge.source = src.name;
                    edge.target = tgt.name;
                    edge.f = rel.f;
                    edge.degree = static_cast<long>(rel.f.degree());
                    edge.k = rel.k;
                    edge.verified_to = rel.verified_to;
                    g.edges.push_back(std::move(edge));
                }
            }
        }
    }
    dedup_edges(g.edges);
    return g;
}

RelationGraph refine_graph(const RelationGraph& graph) {
    RelationGraph g = graph;
    DecomposeEngine engine;
    std::set<std::string> blocked; // edges whose every split was rejected

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<RelationEdge> next_edges;
        for (const RelationEdge& edge : g.edges) {
            if (edge.indecomposable || blocked.count(edge_sort_key(edge))) {
                next_edges.push_back(edge);
                continue;
            }
            if (edge.degree <= 1 || engine.is_indecomposable(edge.f)) {
                RelationEdge kept = edge;
                kept.indecomposable = edge.degree > 1;
                if (kept.indecomposable != edge.indecomposable) changed = true;
                next_edges.push_back(std::move(kept));
                continue;
            }

            const LaurentSeries& s2 = g.series.at(edge.target);
            std::vector<RelationEdge> replacements;
            bool any_split = false;
            for (const Decomposition& dec : engine.decompose_all(edge.f)) {
                // s3(q^j) := h(s2(q)); j is the pole order of the image.
                const LaurentSeries s3_in_qj = compose_rational_with_series(dec.right, s2);
                if (s3_in_qj.is_zero() || s3_in_qj.leading_exponent() >= 0) {
                    g.diagnostics.push_back("IntermediateNotIdentifiable: " + edge.source + " -> " +
                                            edge.target + ": intermediate series has no pole");
                    continue;
                }
                const long j = -s3_in_qj.leading_exponent();
                if (edge.k % j != 0) {
                    g.diagnostics.push_back("IntermediateNotIdentifiable: " + edge.source + " -> " +
                                            edge.target + ": k/j = " + std::to_string(edge.k) + "/" +
                                            std::to_string(j) + " is not integral");
                    continue;
                }
                auto s3 = extract_q_root(s3_in_qj, j);
                if (!s3) {
                    g.diagnostics.push_back("IntermediateNotIdentifiable: " + edge.source + " -> " +
                                            edge.target +
                                            ": intermediate support not on multiples of " +
                                            std::to_string(j));
                    continue;
                }

                // Identify s3 with a known vertex up to the additive-shift
                // unit, or synthesize a new vertex with zero constant term.
                RationalFunction left = dec.left;
                RationalFunction right = dec.right;
                std::string mid_name;
                for (const std::string& name : g.vertices) {
                    auto c = match_up_to_constant(*s3, g.series.at(name));
                    if (c) {
                        mid_name = name;
                        if (*c != 0) {
                            // s3 = known + c: rewrite both labels through t + c.
                            right = plus_constant(right, -*c);
                            left = compose(left, MobiusUnit::translation(*c));
                        }
                        break;
                    }
                }
                if (mid_name.empty()) {
                    const Rational c0 = s3->precision() > 0 ? s3->coefficient(0) : Rational(0);
                    LaurentSeries normalized = s3->plus_constant(-c0);
                    long ordinal = 1;
                    const std::string prefix = edge.source + "/" + edge.target + "#";
                    for (const std::string& name : g.synthesized)
                        if (name.rfind(prefix, 0) == 0) ++ordinal;
                    mid_name = prefix + std::to_string(ordinal);
                    g.vertices.push_back(mid_name);
                    g.synthesized.push_back(mid_name);
                    g.series.emplace(mid_name, std::move(normalized));
                    if (c0 != 0) {
                        right = plus_constant(right, -c0);
                        left = compose(left, MobiusUnit::translation(c0));
                    }
                }

                const LaurentSeries& mid_series = g.series.at(mid_name);
                RelationEdge first, second;
                first.source = edge.source;
                first.target = mid_name;
                first.f = left;
                first.degree = static_cast<long>(left.degree());
                first.k = edge.k / j;
                second.source = mid_name;
                second.target = edge.target;
                second.f = right;
                second.degree = static_cast<long>(right.degree());
                second.k = j;

                // Both labels must verify on the series before replacing.
                const LaurentSeries lhs1 = substitute_q_power(g.series.at(edge.source), first.k);
                const LaurentSeries rhs1 = compose_rational_with_series(first.f, mid_series);
                const LaurentSeries lhs2 = substitute_q_power(mid_series, second.k);
                const LaurentSeries rhs2 = compose_rational_with_series(second.f, s2);
                if (!agree_on_overlap(lhs1, rhs1) || !agree_on_overlap(lhs2, rhs2)) {
                    g.diagnostics.push_back("IntermediateNotIdentifiable: " + edge.source + " -> " +
                                            edge.target + ": replacement labels failed verification");
                    continue;
                }
                auto overlap = [](const LaurentSeries& x, const LaurentSeries& y) {
                    if (x.is_zero() || y.is_zero()) return 0L;
                    return std::min(x.precision(), y.precision()) -
                           std::min(x.leading_exponent(), y.leading_exponent());
                };
                first.verified_to = overlap(lhs1, rhs1);
                second.verified_to = overlap(lhs2, rhs2);
                replacements.push_back(std::move(first));
                replacements.push_back(std::move(second));
                any_split = true;
            }
            if (any_split) {
                changed = true;
                for (auto& e : replacements) next_edges.push_back(std::move(e));
            } else {
                blocked.insert(edge_sort_key(edge));
                next_edges.push_back(edge);
            }
        }
        g.edges = std::move(next_edges);
        dedup_edges(g.edges);
    }
    return g;
}

std::vector<std::vector<std::string>> connected_components(const RelationGraph& graph) {
    std::map<std::string, std::string> parent;
    for (const auto& v : graph.vertices) parent[v] = v;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        std::string root = x;
        while (parent[root] != root) root = parent[root];
        std::string cur = x;
        while (parent[cur] != root) {
            std::string next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        return root;
    };
    for (const auto& e : graph.edges) parent[find(e.source)] = find(e.target);

    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& v : graph.vertices) groups[find(v)].push_back(v);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return out;
}

BivarPoly modular_polynomial(const RelationEdge& r1, const RelationEdge& r2) {
    if (r1.source != r2.source || r1.target != r2.target)
        raise("MismatchedEndpoints", "modular polynomial needs relations with shared endpoints");
    if (r1.k == r2.k) raise("SameK", "relations must have distinct q-powers");

    // Res_t(f1N(t) - X f1D(t), f2N(t) - Y f2D(t)).
    auto lift = [](const RationalFunction& f, bool use_y) {
        const BivarPoly var = use_y ? BivarPoly::y() : BivarPoly::x();
        const std::size_t n = f.degree();
        std::vector<BivarPoly> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            BivarPoly cell(f.num().coefficient(i));
            if (f.den().coefficient(i) != 0) cell = cell - var * BivarPoly(f.den().coefficient(i));
            out[i] = cell;
        }
        return out;
    };
    BivarPoly res = resultant_t(lift(r1.f, false), lift(r2.f, true));
    return res.content_normalized();
}

std::string export_graph_json(const RelationGraph& graph) {
    nlohmann::ordered_json doc;
    std::vector<std::string> names = graph.vertices;
    std::sort(names.begin(), names.end());
    doc["vertices"] = names;
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : graph.edges) {
        nlohmann::ordered_json je;
        je["source"] = e.source;
        je["target"] = e.target;
        je["degree"] = e.degree;
        je["k"] = e.k;
        auto coeffs = [](const Polynomial& p) {
            std::vector<std::string> v;
            const std::size_t d = p.is_zero() ? 0 : (p.is_constant() ? 0 : p.degree());
            for (std::size_t i = 0; i <= d; ++i) v.push_back(to_string(p.coefficient(i)));
            return v;
        };
        je["num"] = coeffs(e.f.num());
        je["den"] = coeffs(e.f.den());
        doc["edges"].push_back(std::move(je));
    }
    if (!graph.synthesized.empty()) {
        nlohmann::ordered_json synth;
        for (const auto& name : graph.synthesized) {
            const LaurentSeries& s = graph.series.at(name);
            nlohmann::ordered_json js;
            js["leading_exponent"] = s.is_zero() ? s.precision() : s.leading_exponent();
            std::vector<std::string> coeffs;
            if (!s.is_zero())
                for (long e = s.leading_exponent(); e < s.precision(); ++e)
                    coeffs.push_back(to_string(s.coefficient(e)));
            js["coefficients"] = coeffs;
            synth[name] = std::move(js);
        }
        doc["synthesized"] = std::move(synth);
    }
    return doc.dump(2) + "\n";
}

std::string export_graph_dot(const RelationGraph& graph) {
    std::ostringstream os;
    os << "digraph relations {\n";
    std::vector<std::string> names = graph.vertices;
    std::sort(names.begin(), names.end());
    for (const auto& v : names) os << "  \"" << v << "\";\n";
    for (const auto& e : graph.edges)
        os << "  \"" << e.source << "\" -> \"" << e.target << "\" [label=\"" << e.degree << ","
           << e.k << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace ratrel
