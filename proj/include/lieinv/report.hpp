#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lieinv/invariants.hpp"

namespace lieinv {

/// Per-degree summary row: weight-space dimensions (zero first, then the
/// raising targets), invariant dimension, and the non-primitive/primitive
/// split of the invariant space.
struct DimReport {
    int degree = 0;
    std::vector<Int> weight_dims;
    int invariant_dim = 0;
    int nonprimitive_dim = 0;
    int primitive_dim = 0;
    bool nonprimitive_predicted = false;  // split from the Witt formula, no basis check
};

/// Render rows in the aligned layout "degree, weight dims..., invariants,
/// primitive".
std::string render_dim_table(const RepSpec& rep, const std::vector<DimReport>& rows);
nlohmann::json dim_table_json(const RepSpec& rep, const std::vector<DimReport>& rows);

nlohmann::json poly_json(const LiePoly& p, const std::vector<std::string>& letters);
LiePoly poly_from_json(const nlohmann::json& j, const std::vector<std::string>& letters);

nlohmann::json invariant_basis_json(const RepSpec& rep, const InvariantBasis& basis);
InvariantBasis invariant_basis_from_json(const RepSpec& rep, const nlohmann::json& j);

/// Multi-line aligned LaTeX form of an invariant, for diffing against
/// published tables.
std::string poly_latex(const LiePoly& p, const std::vector<std::string>& letters,
                       const std::string& lhs = {}, int terms_per_line = 3);

/// Parse a file of named polynomials: entries separated by blank lines or
/// '#' comments, "name = terms..." with the name optional; an entry may span
/// lines.
std::vector<std::pair<std::string, LiePoly>> read_poly_file(std::istream& is,
                                                            const std::vector<std::string>& letters);

// --- cache ------------------------------------------------------------------

struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = false;
};

/// cache/<rep>/<degree>.json keyed by the RepSpec content hash and the
/// backend signature; mismatches are misses.
std::optional<InvariantBasis> cache_load(const CacheConfig& cfg, const RepSpec& rep, int degree,
                                         const ComputeOptions& opts);
void cache_store(const CacheConfig& cfg, const RepSpec& rep, const InvariantBasis& basis,
                 const ComputeOptions& opts);
void cache_clear(const CacheConfig& cfg);

}  // namespace lieinv
