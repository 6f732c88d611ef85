#include "lieinv/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace lieinv {

void SparseIntMatrix::set(int row, int col, Int value) {
    if (row < 0 || row >= nrows || col < 0 || col >= ncols)
        throw std::out_of_range("matrix entry out of range");
    if (value == 0) return;
    entries.push_back(Entry{row, col, std::move(value)});
}

void SparseIntMatrix::sort_entries() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
}

SparseIntMatrix SparseIntMatrix::vstack(std::span<const SparseIntMatrix> blocks) {
    SparseIntMatrix out;
    if (blocks.empty()) return out;
    out.ncols = blocks[0].ncols;
    out.col_labels = blocks[0].col_labels;
    for (const SparseIntMatrix& b : blocks) {
        if (b.ncols != out.ncols) throw std::invalid_argument("vstack: column mismatch");
        for (const Entry& e : b.entries)
            out.entries.push_back(Entry{e.row + out.nrows, e.col, e.value});
        out.row_labels.insert(out.row_labels.end(), b.row_labels.begin(), b.row_labels.end());
        out.nrows += b.nrows;
    }
    out.sort_entries();
    return out;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix out;
    out.nrows = ncols;
    out.ncols = nrows;
    out.row_labels = col_labels;
    out.col_labels = row_labels;
    for (const Entry& e : entries) out.entries.push_back(Entry{e.col, e.row, e.value});
    out.sort_entries();
    return out;
}

IntVec SparseIntMatrix::apply(const IntVec& x) const {
    if (static_cast<int>(x.size()) != ncols) throw std::invalid_argument("apply: size mismatch");
    IntVec y(nrows, Int(0));
    for (const Entry& e : entries) y[e.row] += e.value * x[e.col];
    return y;
}

IntMat SparseIntMatrix::dense_rows() const {
    IntMat rows(nrows, IntVec(ncols, Int(0)));
    for (const Entry& e : entries) rows[e.row][e.col] += e.value;
    return rows;
}

RatMat SparseIntMatrix::dense_rat() const {
    RatMat rows(nrows, std::vector<Rat>(ncols, Rat(0)));
    for (const Entry& e : entries) rows[e.row][e.col] += Rat(e.value);
    return rows;
}

void SparseIntMatrix::write_triples(std::ostream& os) const {
    os << nrows << " " << ncols << "\n";
    for (const Entry& e : entries) os << e.row << " " << e.col << " " << e.value << "\n";
}

SparseIntMatrix SparseIntMatrix::read_triples(std::istream& is) {
    SparseIntMatrix out;
    if (!(is >> out.nrows >> out.ncols)) throw std::invalid_argument("bad matrix header");
    int r, c;
    std::string v;
    while (is >> r >> c >> v) out.set(r, c, Int(v));
    out.sort_entries();
    return out;
}

// --- rational RCF -----------------------------------------------------------

RcfResult rcf_rational(RatMat rows) {
    RcfResult res;
    int nrows = static_cast<int>(rows.size());
    int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Rat inv = 1 / rows[r][col];
        for (int j = col; j < ncols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (int j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        res.pivot_cols.push_back(col);
        ++r;
    }
    res.rank = r;
    res.rcf = std::move(rows);
    return res;
}

namespace {

std::vector<IntVec> kernel_from_rcf(const RcfResult& res, int ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (int c : res.pivot_cols) is_pivot[c] = true;
    std::vector<IntVec> kernel;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        // rational kernel vector: 1 at the free column, -rcf[i][f] at pivots
        std::vector<Rat> v(ncols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < res.rank; ++i) v[res.pivot_cols[i]] = -res.rcf[i][f];
        Int lcm = 1;
        for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        IntVec iv(ncols);
        for (int j = 0; j < ncols; ++j) {
            Rat scaled = v[j] * Rat(lcm);
            iv[j] = scaled.get_num();
        }
        make_primitive(iv);
        kernel.push_back(std::move(iv));
    }
    std::sort(kernel.begin(), kernel.end(), [](const IntVec& a, const IntVec& b) {
        Int na = norm_sq(a), nb = norm_sq(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    return kernel;
}

}  // namespace

std::vector<IntVec> nullspace_canonical(const RatMat& rows) {
    int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    return kernel_from_rcf(rcf_rational(rows), ncols);
}

std::vector<IntVec> nullspace_canonical(const SparseIntMatrix& a) {
    return kernel_from_rcf(rcf_rational(a.dense_rat()), a.ncols);
}

int rank_rational(const SparseIntMatrix& a) { return rcf_rational(a.dense_rat()).rank; }

// --- modular RCF --------------------------------------------------------------

namespace {

// Row-reduction kernel; P as a template constant lets the compiler strength-
// reduce and vectorize the reductions.
template <uint32_t P>
void eliminate_mod(std::vector<std::vector<uint32_t>>& m, std::vector<int>& pivot_cols,
                   bool reduced) {
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (m[i][col] % P != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        uint32_t inv = mod_inverse(m[r][col] % P, P);
        uint32_t* prow = m[r].data();
        for (int j = col; j < ncols; ++j)
            prow[j] = static_cast<uint32_t>((static_cast<uint64_t>(prow[j]) * inv) % P);
        int begin = reduced ? 0 : r + 1;
        for (int i = begin; i < nrows; ++i) {
            if (i == r) continue;
            uint32_t f = m[i][col] % P;
            if (f == 0) continue;
            uint32_t neg = P - f;
            uint32_t* row = m[i].data();
            for (int j = col; j < ncols; ++j)
                row[j] = static_cast<uint32_t>((row[j] + static_cast<uint64_t>(neg) * prow[j]) % P);
        }
        pivot_cols.push_back(col);
        ++r;
    }
}

void eliminate_mod_runtime(uint32_t p, std::vector<std::vector<uint32_t>>& m,
                           std::vector<int>& pivot_cols, bool reduced) {
    int nrows = static_cast<int>(m.size());
    int ncols = nrows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (m[i][col] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        uint32_t inv = mod_inverse(m[r][col] % p, p);
        uint32_t* prow = m[r].data();
        for (int j = col; j < ncols; ++j)
            prow[j] = static_cast<uint32_t>((static_cast<uint64_t>(prow[j]) * inv) % p);
        int begin = reduced ? 0 : r + 1;
        for (int i = begin; i < nrows; ++i) {
            if (i == r) continue;
            uint32_t f = m[i][col] % p;
            if (f == 0) continue;
            uint32_t neg = p - f;
            uint32_t* row = m[i].data();
            for (int j = col; j < ncols; ++j)
                row[j] = static_cast<uint32_t>((row[j] + static_cast<uint64_t>(neg) * prow[j]) % p);
        }
        pivot_cols.push_back(col);
        ++r;
    }
}

}  // namespace

ModularRcfResult rcf_modular(const SparseIntMatrix& a, uint32_t p, bool want_kernel) {
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime");
    ModularRcfResult res;
    res.p = p;
    std::vector<std::vector<uint32_t>> m(a.nrows, std::vector<uint32_t>(a.ncols, 0));
    for (const auto& e : a.entries) {
        Int v = e.value % static_cast<long>(p);
        if (v < 0) v += static_cast<long>(p);
        m[e.row][e.col] = static_cast<uint32_t>(v.get_ui());
    }
    switch (p) {
        case 101:
            eliminate_mod<101>(m, res.pivot_cols, want_kernel);
            break;
        case 32003:
            eliminate_mod<32003>(m, res.pivot_cols, want_kernel);
            break;
        default:
            eliminate_mod_runtime(p, m, res.pivot_cols, want_kernel);
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    if (want_kernel) {
        std::vector<bool> is_pivot(a.ncols, false);
        for (int c : res.pivot_cols) is_pivot[c] = true;
        for (int f = 0; f < a.ncols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<uint32_t> v(a.ncols, 0);
            v[f] = 1;
            for (int i = 0; i < res.rank; ++i) {
                uint32_t x = m[i][f] % p;
                v[res.pivot_cols[i]] = x ? p - x : 0;
            }
            res.kernel.push_back(std::move(v));
        }
    }
    return res;
}

// --- Hermite normal form --------------------------------------------------------

HnfResult hnf(IntMat rows) {
    HnfResult res;
    int nrows = static_cast<int>(rows.size());
    int ncols = nrows ? static_cast<int>(rows[0].size()) : 0;
    res.u.assign(nrows, IntVec(nrows, Int(0)));
    for (int i = 0; i < nrows; ++i) res.u[i][i] = 1;

    auto row_axpy = [&](int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int j = 0; j < ncols; ++j) rows[dst][j] -= f * rows[src][j];
        for (int j = 0; j < nrows; ++j) res.u[dst][j] -= f * res.u[src][j];
    };
    auto row_negate = [&](int i) {
        for (Int& x : rows[i]) x = -x;
        for (Int& x : res.u[i]) x = -x;
    };

    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        // Euclid across rows r..end until at most one nonzero remains in col
        for (;;) {
            int best = -1;
            for (int i = r; i < nrows; ++i) {
                if (rows[i][col] == 0) continue;
                if (best < 0) {
                    best = i;
                    continue;
                }
                Int ai, ab;
                mpz_abs(ai.get_mpz_t(), rows[i][col].get_mpz_t());
                mpz_abs(ab.get_mpz_t(), rows[best][col].get_mpz_t());
                if (ai < ab) best = i;
            }
            if (best < 0) break;  // column is zero below r
            bool others = false;
            for (int i = r; i < nrows; ++i) {
                if (i == best || rows[i][col] == 0) continue;
                Int q;
                // round-to-nearest quotient keeps the remainders small
                Rat ratio(rows[i][col], rows[best][col]);
                ratio.canonicalize();
                q = round_nearest(ratio);
                row_axpy(i, best, q);
                if (rows[i][col] != 0) others = true;
            }
            if (!others) {
                std::swap(rows[r], rows[best]);
                std::swap(res.u[r], res.u[best]);
                break;
            }
        }
        if (rows[r][col] == 0) {
            // no pivot in this column; rows[r] unchanged for the next column
            bool any = false;
            for (int i = r; i < nrows; ++i)
                if (rows[i][col] != 0) any = true;
            if (any) throw std::logic_error("hnf: elimination left a nonzero column");
            continue;
        }
        if (rows[r][col] < 0) row_negate(r);
        // reduce entries above the pivot into [0, pivot)
        for (int k = 0; k < r; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][col].get_mpz_t(), rows[r][col].get_mpz_t());
            row_axpy(k, r, q);
        }
        res.pivot_cols.push_back(col);
        ++r;
    }
    res.rank = r;
    res.h = std::move(rows);
    return res;
}

HnfResult hnf(const SparseIntMatrix& a) { return hnf(a.dense_rows()); }

IntMat integer_nullspace(const SparseIntMatrix& a) {
    HnfResult res = hnf(a.transposed().dense_rows());
    IntMat basis(res.u.begin() + res.rank, res.u.end());
    return basis;
}

// --- LLL ---------------------------------------------------------------------

IntMat lll_reduce(IntMat basis, const Rat& delta) {
    if (delta <= Rat(1, 4) || delta > 1) throw std::invalid_argument("delta outside (1/4, 1]");
    int n = static_cast<int>(basis.size());
    if (n == 0) return basis;
    int dim = static_cast<int>(basis[0].size());

    // exact Gram-Schmidt data: mu[i][j] (j < i) and squared norms of b*_i
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> norm2(n, Rat(0));
    std::vector<std::vector<Rat>> gso(n, std::vector<Rat>(dim, Rat(0)));

    auto update_gso = [&](int i) {
        for (int j = 0; j < dim; ++j) gso[i][j] = Rat(basis[i][j]);
        for (int k = 0; k < i; ++k) {
            if (norm2[k] == 0) throw std::invalid_argument("lll: dependent input rows");
            Rat proj(0);
            for (int j = 0; j < dim; ++j) proj += Rat(basis[i][j]) * gso[k][j];
            mu[i][k] = proj / norm2[k];
            for (int j = 0; j < dim; ++j) gso[i][j] -= mu[i][k] * gso[k][j];
        }
        norm2[i] = Rat(0);
        for (int j = 0; j < dim; ++j) norm2[i] += gso[i][j] * gso[i][j];
        if (norm2[i] == 0) throw std::invalid_argument("lll: dependent input rows");
    };
    for (int i = 0; i < n; ++i) update_gso(i);

    auto size_reduce = [&](int k, int j) {
        Int q = round_nearest(mu[k][j]);
        if (q == 0) return;
        for (int t = 0; t < dim; ++t) basis[k][t] -= q * basis[j][t];
        for (int t = 0; t < j; ++t) mu[k][t] -= Rat(q) * mu[j][t];
        mu[k][j] -= Rat(q);
    };

    int k = 1;
    while (k < n) {
        size_reduce(k, k - 1);
        if (norm2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
            for (int j = k - 2; j >= 0; --j) size_reduce(k, j);
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            // recompute the two affected GS rows and the mus referencing them
            update_gso(k - 1);
            update_gso(k);
            for (int i = k + 1; i < n; ++i) update_gso(i);
            k = std::max(k - 1, 1);
        }
    }
    return basis;
}

bool same_lattice(const IntMat& a, const IntMat& b) {
    auto normal = [](IntMat m) {
        HnfResult r = hnf(std::move(m));
        r.h.resize(r.rank);  // drop zero rows
        return r.h;
    };
    return normal(a) == normal(b);
}

bool in_lattice(const IntMat& basis, const IntVec& v) {
    HnfResult res = hnf(basis);
    IntVec x = v;
    int ncols = static_cast<int>(x.size());
    for (int i = 0; i < res.rank; ++i) {
        int col = res.pivot_cols[i];
        if (x[col] == 0) continue;
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x[col].get_mpz_t(), res.h[i][col].get_mpz_t());
        if (rem != 0) return false;
        for (int j = 0; j < ncols; ++j) x[j] -= q * res.h[i][j];
    }
    for (const Int& y : x)
        if (y != 0) return false;
    return true;
}

}  // namespace lieinv
