#ifndef RATREL_LINALG_HPP
#define RATREL_LINALG_HPP

#include <optional>
#include <vector>

#include "ratrel/rational.hpp"

namespace ratrel {

using Matrix = std::vector<std::vector<Rational>>;

// Solves A*x = b exactly by fraction-free (Bareiss) elimination.
// Returns the particular solution with all free variables set to zero,
// or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear_system(const Matrix& a,
                                                         const std::vector<Rational>& b);

// Basis of the right nullspace of A (one vector per free column).
std::vector<std::vector<Rational>> nullspace(const Matrix& a);

} // namespace ratrel

#endif
