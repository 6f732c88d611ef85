#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieinv/linalg.hpp"
#include "lieinv/reps.hpp"

namespace lieinv {

/// Matrices of the raising-operator actions on the weight-zero space of one
/// degree: one block per raising operator (rows = Hall words of the target
/// weight, columns = weight-zero Hall words), plus their vertical stack.
struct ActionMatrixBundle {
    int degree = 0;
    std::vector<SparseIntMatrix> per_op;
    SparseIntMatrix stacked;
    std::vector<WordId> columns;
};

ActionMatrixBundle action_matrix(const RepSpec& rep, int degree);
ActionMatrixBundle action_matrix(ActionCache& cache, int degree);

enum class Backend { rational, modular, hnf_lll };
std::string backend_name(Backend b);

struct ComputeOptions {
    Backend backend = Backend::rational;
    std::vector<uint32_t> primes = {101, 32003};  // modular: first is the working prime,
                                                  // the rest confirm the rank
    Rat delta = Rat(3, 4);                        // hnf-lll reduction parameter
    bool want_basis = true;                       // modular: extract the mod-p kernel
    bool check_surjectivity = true;               // assert rank([X_r]) == rows([X_r])
};

/// Thrown when two primes disagree on the rank (CLI exit code 3).
struct BackendDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantBasis {
    std::string rep_name;
    int degree = 0;
    Backend backend = Backend::rational;
    std::vector<uint32_t> primes;  // primes used (modular backend)
    bool modular = false;          // coefficients are mod-p representatives
    int dim = 0;
    std::vector<WordId> columns;      // weight-zero basis labels
    std::vector<IntVec> vectors;      // coefficient rows over columns
    std::vector<LiePoly> elements;    // the same vectors as Lie polynomials
    std::vector<Int> sq_norms;        // squared norms (exact backends)
    std::vector<int> row_dims;        // rows of each [X_r] block
    int stacked_rank = 0;
};

InvariantBasis compute_invariants(const RepSpec& rep, int degree, const ComputeOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    /// Nonzero residuals act(g, p) per generator name.
    std::vector<std::pair<std::string, LiePoly>> residuals;
};

/// Exact check that every generator of the rep annihilates p.
/// Throws std::invalid_argument on inhomogeneous input.
VerifyResult verify_invariant(const RepSpec& rep, const LiePoly& p);

/// Basis of the subspace of degree `degree` generated by brackets of
/// lower-degree invariants. `lower` must contain the invariant bases of all
/// degrees < degree that have one (exact backends). Computed by enumerating
/// Hall words over a graded alphabet of lower-degree primitive invariants
/// and evaluating them.
std::vector<LiePoly> nonprimitive_basis(const RepSpec& rep, int degree,
                                        const std::map<int, InvariantBasis>& lower);

struct PrimitiveSplit {
    int degree = 0;
    std::vector<LiePoly> nonprimitive;
    std::vector<int> primitive_selection;  // indices into the invariant basis
};

/// Greedy selection (in basis order) of invariant-basis elements extending
/// the non-primitive span to the whole invariant space.
PrimitiveSplit primitive_split(const RepSpec& rep, int degree, const InvariantBasis& invariants,
                               std::vector<LiePoly> nonprimitive);

}  // namespace lieinv
