#pragma once

#include <cstddef>
#include <vector>

namespace cam {

// Symmetric tridiagonal matrix: diag holds n entries, offdiag n-1.
struct TridiagMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }
};

// All eigenvalues in ascending order, multiplicity-correct.  Bisection on
// Sturm sign counts to 1e-14 * spectral radius, then a bracket-safeguarded
// Newton polish on the characteristic recurrence.  No eigenvectors.
std::vector<double> eigenvalues(const TridiagMatrix& m);

// Number of eigenvalues strictly below threshold, from a single Sturm pass.
std::size_t count_below(const TridiagMatrix& m, double threshold);

} // namespace cam
