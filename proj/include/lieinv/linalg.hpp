#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lieinv/arith.hpp"
#include "lieinv/hall.hpp"

namespace lieinv {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // dense rows
using RatMat = std::vector<std::vector<Rat>>;

/// Sparse integer matrix with optional Hall-word row/column labels.
/// Entries are kept row-major sorted with no explicit zeros.
struct SparseIntMatrix {
    int nrows = 0, ncols = 0;
    struct Entry {
        int32_t row, col;
        Int value;
    };
    std::vector<Entry> entries;
    std::vector<WordId> row_labels, col_labels;  // empty when unlabeled

    void set(int row, int col, Int value);  // appends; call sort_entries() when done
    void sort_entries();

    static SparseIntMatrix vstack(std::span<const SparseIntMatrix> blocks);
    SparseIntMatrix transposed() const;
    IntVec apply(const IntVec& x) const;  // A*x
    IntMat dense_rows() const;
    RatMat dense_rat() const;

    /// Interchange format: "rows cols" header, then "i j value" triples (0-based).
    void write_triples(std::ostream& os) const;
    static SparseIntMatrix read_triples(std::istream& is);
};

// --- row canonical form over Q -------------------------------------------

struct RcfResult {
    RatMat rcf;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form; deterministic first-nonzero pivoting in column
/// order, exact arithmetic.
RcfResult rcf_rational(RatMat rows);

/// Canonical nullspace basis read off the RCF: one vector per free column in
/// column order, scaled to relatively prime integers with the first nonzero
/// entry positive, sorted by (squared norm, entries).
std::vector<IntVec> nullspace_canonical(const SparseIntMatrix& a);
std::vector<IntVec> nullspace_canonical(const RatMat& rows);

int rank_rational(const SparseIntMatrix& a);

// --- row reduction over F_p ------------------------------------------------

struct ModularRcfResult {
    uint32_t p = 0;
    int rank = 0;
    std::vector<int> pivot_cols;
    /// Canonical F_p kernel basis (entries in [0,p)), one row per free column
    /// in column order; empty when want_kernel was false.
    std::vector<std::vector<uint32_t>> kernel;
};

/// Gaussian elimination entirely in F_p with deterministic pivoting.
/// Throws std::invalid_argument if p is not prime.
ModularRcfResult rcf_modular(const SparseIntMatrix& a, uint32_t p, bool want_kernel = true);

// --- Hermite normal form ----------------------------------------------------

struct HnfResult {
    IntMat h;  // HNF of the input
    IntMat u;  // unimodular, u*a = h
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Row-style HNF by extended-gcd elimination: pivots positive, zeros left of
/// pivots, entries above a pivot reduced into [0, pivot), zero rows last.
HnfResult hnf(IntMat rows);
HnfResult hnf(const SparseIntMatrix& a);

/// Lattice basis of the integer nullspace of A: the last n-r rows of U from
/// the HNF of the transpose.
IntMat integer_nullspace(const SparseIntMatrix& a);

// --- lattice reduction -------------------------------------------------------

/// LLL with exact rational Gram-Schmidt; delta in (1/4, 1].
/// Throws std::invalid_argument on dependent input rows.
IntMat lll_reduce(IntMat basis, const Rat& delta = Rat(3, 4));

/// Do two row sets generate the same lattice? (HNF equality.)
bool same_lattice(const IntMat& a, const IntMat& b);

/// Is v in the lattice generated by the rows of basis?
bool in_lattice(const IntMat& basis, const IntVec& v);

}  // namespace lieinv
