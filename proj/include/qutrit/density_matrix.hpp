#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qutrit/complex_matrix.hpp"
#include "qutrit/hermitian_eig.hpp"

namespace qutrit {

/// Bipartite factorization dims: the state lives on C^a (x) C^b, row-major
/// composite index k = i_a * b + i_b.
struct Split {
    int a = 0;
    int b = 0;
};

enum class Subsystem { A, B };

struct ValidationTolerances {
    double hermitian_rel = 1e-12;  // relative to the max-abs entry
    double trace = 1e-9;
    double psd = kPsdClamp;  // eigenvalues must be >= -psd
};

struct ValidationReport {
    double hermitian_deviation = 0.0;
    double hermitian_bound = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool psd_ok = false;
    ValidationTolerances tolerances;

    bool ok() const { return hermitian_ok && trace_ok && psd_ok; }
};

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
/// Construct through validate(); the optional split records a bipartite
/// factorization for partial trace / partial transpose.
class DensityMatrix {
public:
    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return mat_.dim(); }
    const std::optional<Split>& split() const { return split_; }

    DensityMatrix with_split(int a, int b) const;

    const Complex& operator()(int i, int j) const { return mat_(i, j); }

    friend DensityMatrix validate(const ComplexMatrix&, const ValidationTolerances&);

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}

    ComplexMatrix mat_;
    std::optional<Split> split_;
};

/// Non-throwing validation: measures every property and reports deviations.
ValidationReport check_state(const ComplexMatrix& m, const ValidationTolerances& tol = {});

/// Throwing validation; the exception names the violated property and its
/// measured magnitude. Accepts dims 2..8.
DensityMatrix validate(const ComplexMatrix& m, const ValidationTolerances& tol = {});

/// Zero-padding embedding: the original state plus the padded even-dimensional
/// matrix with the row placement recorded. Padding preserves the spectrum up
/// to extra exact zeros.
struct PaddedState {
    DensityMatrix original;
    DensityMatrix padded;        // carries the canonical split: (2,2) or (2,3)
    std::vector<int> placement;  // original row i sits at padded row placement[i]
};

/// 3x3 -> 4x4, corner placement: state in the top-left block, fourth
/// row/column zero. The padded state carries a (2,2) split.
PaddedState pad_qutrit_to_4(const DensityMatrix& q);

/// 4x4 -> 6x6, center placement: state in rows/columns 1..4 (0-based), first
/// and last row/column zero. The padded state carries a (2,3) split.
PaddedState pad_4_to_6(const DensityMatrix& m);

DensityMatrix partial_trace(const DensityMatrix& m, Subsystem keep);

/// Transpose the indices of one factor only. Hermiticity and trace survive;
/// positivity generally does not (that is the point). The raw overload skips
/// state validation so the indefinite results can be transposed back.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Split split, Subsystem side);
ComplexMatrix partial_transpose(const DensityMatrix& m, Subsystem side);

/// The two 2x2 reductions of a corner-padded qutrit:
/// first  [[r11 + r22, r13], [r31, r33]]
/// second [[r11 + r33, r12], [r21, r22]]
/// Computed from these index sums directly; agrees with the generic (2,2)
/// partial trace of the padded matrix.
std::pair<DensityMatrix, DensityMatrix> artificial_qubit_reductions(const PaddedState& p);

/// Ginibre construction G G† / tr(G G†) with seeded standard-normal entries;
/// identical output for identical (dim, seed).
DensityMatrix random_density(int dim, std::uint64_t seed);

/// Frozen map between linear indices 0..3 and spin-projection pairs, in
/// half-quanta: 0 <-> (+1,+1), 1 <-> (+1,-1), 2 <-> (-1,+1), 3 <-> (-1,-1).
struct SpinPair {
    int first;   // +1 stands for +1/2, -1 for -1/2
    int second;
};
const std::array<SpinPair, 4>& two_qubit_index_map();
int spin_pair_to_index(SpinPair p);

}  // namespace qutrit
