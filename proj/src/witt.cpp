#include "lieinv/witt.hpp"

#include <stdexcept>

#include "lieinv/reps.hpp"

namespace lieinv {

namespace {

// truncated multivariate series: multidegree -> coefficient, total degree <= bound
using Series = std::map<MultiDeg, Int>;

// s *= (1 - t^tau)^d, truncated at total degree <= bound
void multiply_factor(Series& s, const MultiDeg& tau, const Int& d, int bound) {
    if (d == 0) return;
    int step = tau[0];
    int max_j = bound / step;
    // binomials C(d, j) * (-1)^j for j = 0..max_j
    std::vector<Int> coeff(max_j + 1);
    coeff[0] = 1;
    for (int j = 1; j <= max_j; ++j) {
        coeff[j] = coeff[j - 1] * (d - (j - 1));
        coeff[j] /= j;
    }
    Series out;
    for (const auto& [sigma, c] : s) {
        if (c == 0) continue;
        MultiDeg idx = sigma;
        for (int j = 0; j <= max_j && sigma[0] + j * step <= bound; ++j) {
            if (j > 0)
                for (size_t k = 0; k < idx.size(); ++k) idx[k] += tau[k];
            Int term = c * coeff[j];
            if (j & 1) term = -term;
            if (term != 0) out[idx] += term;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    s = std::move(out);
}

}  // namespace

std::map<MultiDeg, Int> free_lie_dims(const GeneratorSpec& gens, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    for (const auto& [tau, count] : gens.gens) {
        if (static_cast<int>(tau.size()) != gens.rank)
            throw std::invalid_argument("multidegree rank mismatch");
        if (tau[0] < 1) throw std::invalid_argument("total degree must be positive");
        if (count < 0) throw std::invalid_argument("negative generator count");
    }

    // target series 1 - sum_gens t^deg(gen); constant term handled implicitly
    std::map<MultiDeg, int> gen_counts;
    for (const auto& [tau, count] : gens.gens)
        if (count > 0 && tau[0] <= bound) gen_counts[tau] += count;

    Series product;  // running product over all factors of total degree < n
    product[MultiDeg(gens.rank, 0)] = 1;

    std::map<MultiDeg, Int> dims;
    for (int n = 1; n <= bound; ++n) {
        // coefficient at tau must become -g_tau, and the new factor
        // (1 - t^tau)^d changes it by -d: d = P_tau + g_tau
        std::map<MultiDeg, Int> level;
        for (const auto& [tau, c] : product)
            if (tau[0] == n && c != 0) level[tau] = c;
        for (const auto& [tau, g] : gen_counts)
            if (tau[0] == n) level[tau] += g;
        for (const auto& [tau, d] : level) {
            if (d == 0) continue;
            if (d < 0) throw std::logic_error("negative dimension in Witt recursion");
            dims[tau] = d;
            multiply_factor(product, tau, d, bound);
        }
    }
    return dims;
}

std::map<int, Int> free_lie_dims_graded(const std::map<int, int>& gens, int bound) {
    GeneratorSpec spec;
    spec.rank = 1;
    for (const auto& [deg, count] : gens) spec.gens[{deg}] = count;
    std::map<int, Int> out;
    for (const auto& [tau, d] : free_lie_dims(spec, bound)) out[tau[0]] = d;
    return out;
}

std::map<int, Int> nonprimitive_dims(const std::map<int, int>& primitive_counts, int bound) {
    std::map<int, Int> dims = free_lie_dims_graded(primitive_counts, bound);
    std::map<int, Int> out;
    for (int n = 1; n <= bound; ++n) {
        Int d = dims.count(n) ? dims[n] : Int(0);
        auto it = primitive_counts.find(n);
        if (it != primitive_counts.end()) d -= it->second;
        out[n] = d;
    }
    return out;
}

WeightCountRecord weight_count_check(const RepSpec& rep, int degree) {
    GeneratorSpec gens;
    gens.rank = 1 + rep.rank;
    for (size_t i = 0; i < rep.alphabet.size(); ++i) {
        MultiDeg tau(gens.rank);
        tau[0] = 1;
        for (int k = 0; k < rep.rank; ++k) tau[1 + k] = rep.letter_weights[i][k];
        gens.gens[tau] += 1;
    }
    std::map<MultiDeg, Int> dims = free_lie_dims(gens, degree);

    auto predicted_at = [&](const std::vector<int>& w) -> Int {
        MultiDeg tau(gens.rank);
        tau[0] = degree;
        for (int k = 0; k < rep.rank; ++k) tau[1 + k] = w[k];
        auto it = dims.find(tau);
        return it == dims.end() ? Int(0) : it->second;
    };

    WeightCountRecord rec;
    rec.degree = degree;
    std::vector<std::vector<int>> weights;
    weights.push_back(std::vector<int>(rep.rank, 0));
    for (const auto& rw : rep.raising_weights) weights.push_back(rw);
    for (const auto& w : weights) {
        WeightCount wc;
        wc.weight = w;
        wc.predicted = predicted_at(w);
        wc.enumerated = Int(weight_basis(rep, degree, w).size());
        rec.counts.push_back(std::move(wc));
    }
    rec.pass = true;
    for (const auto& wc : rec.counts)
        if (wc.predicted != wc.enumerated) rec.pass = false;
    return rec;
}

}  // namespace lieinv
