#include "lieinv/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieinv/witt.hpp"

namespace lieinv {

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::rational: return "rational";
        case Backend::modular: return "modular";
        case Backend::hnf_lll: return "hnf-lll";
    }
    return "?";
}

ActionMatrixBundle action_matrix(ActionCache& cache, int degree) {
    const RepSpec& rep = cache.rep();
    ActionMatrixBundle bundle;
    bundle.degree = degree;
    bundle.columns = weight_basis(rep, degree, std::vector<int>(rep.rank, 0));

    std::unordered_map<WordId, int> col_index;
    for (size_t j = 0; j < bundle.columns.size(); ++j)
        col_index[bundle.columns[j]] = static_cast<int>(j);

    for (size_t r = 0; r < rep.raising.size(); ++r) {
        std::vector<WordId> rows = weight_basis(rep, degree, rep.raising_weights[r]);
        std::unordered_map<WordId, int> row_index;
        for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

        SparseIntMatrix m;
        m.nrows = static_cast<int>(rows.size());
        m.ncols = static_cast<int>(bundle.columns.size());
        m.row_labels = rows;
        m.col_labels = bundle.columns;
        for (size_t j = 0; j < bundle.columns.size(); ++j) {
            const LiePoly& image = cache.act_word(rep.raising[r], bundle.columns[j]);
            for (const auto& [w, c] : image.terms()) {
                auto it = row_index.find(w);
                if (it == row_index.end())
                    throw std::logic_error("action image outside the target weight space");
                if (c.get_den() != 1)
                    throw std::logic_error("action matrix entry is not an integer");
                m.set(it->second, static_cast<int>(j), c.get_num());
            }
        }
        m.sort_entries();
        bundle.per_op.push_back(std::move(m));
    }
    bundle.stacked = SparseIntMatrix::vstack(bundle.per_op);
    return bundle;
}

ActionMatrixBundle action_matrix(const RepSpec& rep, int degree) {
    ActionCache cache(rep);
    return action_matrix(cache, degree);
}

namespace {

LiePoly poly_from_vector(const std::vector<WordId>& columns, const IntVec& v) {
    LiePoly p;
    for (size_t j = 0; j < columns.size(); ++j)
        if (v[j] != 0) p.add_term(columns[j], Rat(v[j]));
    return p;
}

void sort_by_norm(std::vector<IntVec>& vectors) {
    std::sort(vectors.begin(), vectors.end(), [](const IntVec& a, const IntVec& b) {
        Int na = norm_sq(a), nb = norm_sq(b);
        if (na != nb) return na < nb;
        return a < b;
    });
}

}  // namespace

InvariantBasis compute_invariants(const RepSpec& rep, int degree, const ComputeOptions& opts) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    ActionCache cache(rep);
    ActionMatrixBundle bundle = action_matrix(cache, degree);

    InvariantBasis basis;
    basis.rep_name = rep.name;
    basis.degree = degree;
    basis.backend = opts.backend;
    basis.columns = bundle.columns;
    for (const SparseIntMatrix& m : bundle.per_op) basis.row_dims.push_back(m.nrows);

    int ncols = static_cast<int>(bundle.columns.size());

    switch (opts.backend) {
        case Backend::rational: {
            basis.vectors = nullspace_canonical(bundle.stacked);
            basis.stacked_rank = ncols - static_cast<int>(basis.vectors.size());
            break;
        }
        case Backend::modular: {
            if (opts.primes.empty()) throw std::invalid_argument("modular backend needs a prime");
            ModularRcfResult first = rcf_modular(bundle.stacked, opts.primes[0], opts.want_basis);
            for (size_t i = 1; i < opts.primes.size(); ++i) {
                ModularRcfResult other = rcf_modular(bundle.stacked, opts.primes[i], false);
                if (other.rank != first.rank)
                    throw BackendDisagreement(
                        "rank mismatch between primes " + std::to_string(opts.primes[0]) + " and " +
                        std::to_string(opts.primes[i]));
            }
            basis.stacked_rank = first.rank;
            basis.modular = true;
            basis.primes = opts.primes;
            basis.dim = ncols - first.rank;
            for (const auto& kv : first.kernel) {
                IntVec v(ncols);
                for (int j = 0; j < ncols; ++j) v[j] = Int(static_cast<long>(kv[j]));
                basis.vectors.push_back(std::move(v));
            }
            break;
        }
        case Backend::hnf_lll: {
            IntMat lattice = integer_nullspace(bundle.stacked);
            basis.stacked_rank = ncols - static_cast<int>(lattice.size());
            if (!lattice.empty()) {
                lattice = lll_reduce(std::move(lattice), opts.delta);
                for (IntVec& v : lattice) make_primitive(v);
                sort_by_norm(lattice);
            }
            basis.vectors = std::move(lattice);
            break;
        }
    }

    if (opts.backend != Backend::modular) basis.dim = static_cast<int>(basis.vectors.size());

    for (const IntVec& v : basis.vectors) {
        basis.elements.push_back(poly_from_vector(basis.columns, v));
        if (!basis.modular) basis.sq_norms.push_back(norm_sq(v));
    }

    if (opts.check_surjectivity) {
        // rank of each single-operator block equals its row count
        for (const SparseIntMatrix& m : bundle.per_op) {
            int r;
            if (bundle.per_op.size() == 1) {
                r = basis.stacked_rank;  // one block: the stack is the block
            } else if (opts.backend == Backend::modular) {
                r = rcf_modular(m, opts.primes[0], false).rank;
            } else {
                r = rank_rational(m);
            }
            if (r != m.nrows)
                throw std::logic_error("raising-operator matrix is not surjective at degree " +
                                       std::to_string(degree));
        }
    }

    if (!basis.modular) {
        // exact checks: A*v = 0 and every raising operator annihilates the element
        for (size_t i = 0; i < basis.vectors.size(); ++i) {
            IntVec residual = bundle.stacked.apply(basis.vectors[i]);
            for (const Int& x : residual)
                if (x != 0) throw std::logic_error("kernel vector fails A*v = 0");
            for (int r : rep.raising)
                if (!cache.act(r, basis.elements[i]).zero())
                    throw std::logic_error("invariant not annihilated by a raising operator");
        }
    }
    return basis;
}

VerifyResult verify_invariant(const RepSpec& rep, const LiePoly& p) {
    if (!p.homogeneous()) throw std::invalid_argument("inhomogeneous input");
    VerifyResult res;
    res.ok = true;
    ActionCache cache(rep);
    for (size_t g = 0; g < rep.generators.size(); ++g) {
        LiePoly image = cache.act(static_cast<int>(g), p);
        if (!image.zero()) {
            res.ok = false;
            res.residuals.emplace_back(rep.generators[g].name, std::move(image));
        }
    }
    return res;
}

std::vector<LiePoly> nonprimitive_basis(const RepSpec& rep, int degree,
                                        const std::map<int, InvariantBasis>& lower) {
    for (int d = 1; d < degree; ++d)
        if (!lower.count(d))
            throw std::invalid_argument("missing lower-degree data at degree " + std::to_string(d));

    int min_deg = 0;
    for (const auto& [d, inv] : lower)
        if (d < degree && inv.dim > 0) {
            min_deg = d;
            break;
        }
    if (min_deg == 0) return {};
    // invariants of degree > degree - min_deg cannot appear in a bracket of
    // total degree `degree`; only the degrees up to there need exact bases
    int max_useful = degree - min_deg;

    // primitive invariants per contributing degree, in basis order
    std::map<int, std::vector<LiePoly>> primitives;
    for (int d = min_deg; d <= max_useful; ++d) {
        const InvariantBasis& inv = lower.at(d);
        if (inv.dim == 0) continue;
        if (inv.modular)
            throw std::invalid_argument("nonprimitive_basis needs exact lower-degree bases");
        std::map<int, InvariantBasis> sub(lower.begin(), lower.find(d));
        std::vector<LiePoly> np = nonprimitive_basis(rep, d, sub);
        PrimitiveSplit split = primitive_split(rep, d, inv, std::move(np));
        std::vector<LiePoly> prim;
        for (int idx : split.primitive_selection) prim.push_back(inv.elements[idx]);
        primitives[d] = std::move(prim);
    }

    // graded alphabet: one letter per primitive, ordered by (degree, index)
    std::vector<LiePoly> letter_value;
    std::vector<int> letter_degree;
    for (const auto& [d, polys] : primitives)
        for (const LiePoly& p : polys) {
            letter_value.push_back(p);
            letter_degree.push_back(d);
        }
    if (letter_value.empty()) return {};

    std::vector<WordId> words =
        hall_words(static_cast<int>(letter_value.size()), degree, letter_degree);

    // evaluate Hall words over the primitive alphabet in the free Lie algebra
    Magma& m = Magma::get();
    std::unordered_map<WordId, LiePoly> eval;
    auto evaluate = [&](auto&& self, WordId w) -> const LiePoly& {
        auto it = eval.find(w);
        if (it != eval.end()) return it->second;
        LiePoly value = m.is_leaf(w) ? letter_value[m.letter(w)]
                                     : bracket(self(self, m.left(w)), self(self, m.right(w)));
        return eval.emplace(w, std::move(value)).first->second;
    };

    std::vector<LiePoly> out;
    for (WordId w : words) out.push_back(evaluate(evaluate, w));

    // the evaluations of distinct Hall words over free generators are
    // independent; check rank anyway and compare with the Witt prediction
    std::map<int, int> prim_counts;
    for (const auto& [d, polys] : primitives) prim_counts[d] = static_cast<int>(polys.size());
    Int predicted = nonprimitive_dims(prim_counts, degree)[degree];
    if (predicted != static_cast<long>(out.size()))
        throw std::logic_error("nonprimitive basis size disagrees with the Witt prediction");
    return out;
}

namespace {

// incremental exact rank tracker over Q
class RowSpan {
  public:
    explicit RowSpan(int ncols) : ncols_(ncols) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduce v against the span; if independent, absorb it and return true.
    bool add(std::vector<Rat> v) {
        reduce(v);
        int lead = leading(v);
        if (lead < 0) return false;
        Rat inv = 1 / v[lead];
        for (Rat& x : v) x *= inv;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool contains(std::vector<Rat> v) {
        reduce(v);
        return leading(v) < 0;
    }

  private:
    void reduce(std::vector<Rat>& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rat& f = v[leads_[i]];
            if (f == 0) continue;
            Rat c = f;
            for (int j = 0; j < ncols_; ++j) v[j] -= c * rows_[i][j];
        }
    }
    int leading(const std::vector<Rat>& v) const {
        for (int j = 0; j < ncols_; ++j)
            if (v[j] != 0) return j;
        return -1;
    }
    int ncols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> leads_;
};

}  // namespace

PrimitiveSplit primitive_split(const RepSpec& rep, int degree, const InvariantBasis& invariants,
                               std::vector<LiePoly> nonprimitive) {
    (void)rep;
    if (invariants.degree != degree)
        throw std::invalid_argument("primitive_split: degree mismatch");
    PrimitiveSplit split;
    split.degree = degree;

    const std::vector<WordId>& columns = invariants.columns;
    std::unordered_map<WordId, int> col_index;
    for (size_t j = 0; j < columns.size(); ++j) col_index[columns[j]] = static_cast<int>(j);
    auto to_vec = [&](const LiePoly& p) {
        std::vector<Rat> v(columns.size(), Rat(0));
        for (const auto& [w, c] : p.terms()) {
            auto it = col_index.find(w);
            if (it == col_index.end())
                throw std::invalid_argument("primitive_split: element outside the weight-zero space");
            v[it->second] = c;
        }
        return v;
    };

    // the invariant span must contain every non-primitive vector
    RowSpan inv_span(static_cast<int>(columns.size()));
    for (const LiePoly& e : invariants.elements) inv_span.add(to_vec(e));
    for (const LiePoly& p : nonprimitive)
        if (!inv_span.contains(to_vec(p)))
            throw std::invalid_argument("non-primitive vector outside the invariant span");

    RowSpan span(static_cast<int>(columns.size()));
    for (const LiePoly& p : nonprimitive) {
        if (!span.add(to_vec(p)))
            throw std::invalid_argument("dependent non-primitive basis");
    }
    for (size_t i = 0; i < invariants.elements.size(); ++i)
        if (span.add(to_vec(invariants.elements[i]))) split.primitive_selection.push_back(static_cast<int>(i));
    if (span.rank() != invariants.dim)
        throw std::logic_error("primitive_split: selection does not span the invariant space");
    split.nonprimitive = std::move(nonprimitive);
    return split;
}

}  // namespace lieinv
