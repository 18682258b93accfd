#ifndef RATREL_DECOMPOSE_HPP
#define RATREL_DECOMPOSE_HPP

#include <map>
#include <optional>
#include <vector>

#include "ratrel/factor.hpp"
#include "ratrel/ratfunc.hpp"

namespace ratrel {

// A nontrivial split f = left o right with both factors of degree >= 2.
struct Decomposition {
    RationalFunction left;
    RationalFunction right;
};

// f = components[0] o components[1] o ... with every component
// indecomposable and of degree >= 2.
struct DecompositionChain {
    std::vector<RationalFunction> components;

    RationalFunction compose_all() const;
    std::vector<std::size_t> degree_sequence() const;
};

// Candidate right components of a function in monic normal form: h = A/B
// with A, B monic divisors of the numerator and denominator, t | A,
// deg A > deg B, deg A a proper divisor of deg f with deg A >= 2.
// Throws NotNormalForm.
std::vector<RationalFunction> candidate_right_components(const RationalFunction& f);

// Looks for g with f = g o h by equating the cleared-denominator
// composition identity coefficientwise; the resulting system is linear.
// Throws DegreeNotDivisible when deg h does not divide deg f.
std::optional<RationalFunction> solve_left_component(const RationalFunction& f,
                                                     const RationalFunction& h);

// One representative per equivalence class of nontrivial decompositions;
// empty means f is indecomposable. Throws IsUnit when deg f = 1.
std::vector<Decomposition> decompose_all(const RationalFunction& f);

bool is_indecomposable(const RationalFunction& f);

// Every maximal chain of indecomposables composing to f, one per
// equivalence class; chains of different lengths are all reported.
std::vector<DecompositionChain> refine_chains(const RationalFunction& f);

// Shared memo for repeated decomposition queries (components recur across
// chains). All entries are immutable once inserted.
class DecomposeEngine {
public:
    std::vector<Decomposition> decompose_all(const RationalFunction& f);
    std::vector<DecompositionChain> refine_chains(const RationalFunction& f);
    bool is_indecomposable(const RationalFunction& f);

private:
    struct NormalSplit {
        RationalFunction right; // canonical candidate, monic normal form
        RationalFunction left;  // exact cofactor: normal = left o right
    };
    const std::vector<NormalSplit>& splits_of_normal(const RationalFunction& normal);
    bool indecomposable_normal(const RationalFunction& normal);
    std::vector<DecompositionChain> chains_impl(const RationalFunction& f);

    std::map<std::string, std::vector<NormalSplit>> split_memo_;
    std::map<std::string, bool> verdict_memo_;
    std::map<std::string, std::vector<DecompositionChain>> chain_memo_;
};

} // namespace ratrel

#endif
