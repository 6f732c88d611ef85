#pragma once

#include <map>
#include <vector>

#include "lieinv/arith.hpp"

namespace lieinv {

struct RepSpec;

/// A multidegree is an integer vector whose coordinate 0 is the total degree
/// (always positive); the remaining coordinates are weights and may be
/// negative.
using MultiDeg = std::vector<int>;

/// Multiset of generator multidegrees of common rank.
struct GeneratorSpec {
    int rank = 1;  // length of each multidegree
    std::map<MultiDeg, int> gens;
};

/// Dimensions of the multigraded components of the free Lie algebra on the
/// given generators, up to the total-degree bound. Solved iteratively from
/// the denominator identity
///   prod_tau (1 - t^tau)^{dim L_tau} = 1 - sum_gens t^{deg(gen)} .
std::map<MultiDeg, Int> free_lie_dims(const GeneratorSpec& gens, int bound);

/// Graded convenience: generators given as degree -> count.
std::map<int, Int> free_lie_dims_graded(const std::map<int, int>& gens, int bound);

/// Dimension, per degree n <= bound, of the degree-n component of the
/// subalgebra generated by elements of degree < n, for a free Lie algebra
/// with the given free-generator counts per degree.
std::map<int, Int> nonprimitive_dims(const std::map<int, int>& primitive_counts, int bound);

/// Comparison of the Witt prediction against direct Hall-word enumeration
/// for the weight spaces of a representation at one degree.
struct WeightCount {
    std::vector<int> weight;
    Int predicted;
    Int enumerated;
};
struct WeightCountRecord {
    int degree;
    std::vector<WeightCount> counts;  // weight zero first, then raising targets
    bool pass;
};
WeightCountRecord weight_count_check(const RepSpec& rep, int degree);

}  // namespace lieinv
