#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lieinv/hall.hpp"

namespace lieinv {

/// A representation of a simple Lie algebra on the degree-1 subspace of the
/// free Lie algebra: ordered alphabet, per-generator action tables (letter ->
/// degree-1 polynomial), integer weight vector per letter, and the raising
/// operators whose joint kernel on weight zero defines the invariants.
struct RepSpec {
    std::string name;
    std::vector<std::string> alphabet;
    int rank = 1;
    std::vector<std::vector<int>> letter_weights;  // [letter][coordinate]

    struct Generator {
        std::string name;
        std::vector<LiePoly> action;  // action[letter]; each of degree <= 1
    };
    std::vector<Generator> generators;

    std::vector<int> raising;                       // indices into generators
    std::vector<std::vector<int>> raising_weights;  // per raising operator

    int num_letters() const { return static_cast<int>(alphabet.size()); }
    int generator_index(std::string_view gen) const;  // -1 if unknown

    /// Checks structural invariants: action images are combinations of
    /// letters, and raising actions shift weights by the raising weight.
    /// Throws std::invalid_argument on violation.
    void validate() const;

    /// Hash of the canonical JSON dump; keys caches.
    std::string content_hash() const;

    nlohmann::json to_json() const;
    static RepSpec from_json(const nlohmann::json& j);
};

/// Built-in representations: "sl2-natural", "sl2-adjoint", "sl3-natural".
RepSpec builtin_rep(std::string_view name);
std::vector<std::string> builtin_rep_names();

/// Weight of a Hall word: sum of letter weights over its leaves.
std::vector<int> weight(const RepSpec& rep, WordId w);

/// Hall words of the given degree and weight, ascending.
std::vector<WordId> weight_basis(const RepSpec& rep, int degree, const std::vector<int>& w);

/// Generator action on Lie polynomials by the derivation rule
/// D.[t,u] = [D.t,u] + [t,D.u], memoized per Hall word.
class ActionCache {
  public:
    explicit ActionCache(const RepSpec& rep) : rep_(rep), memo_(rep.generators.size()) {}

    const RepSpec& rep() const { return rep_; }
    const LiePoly& act_word(int gen, WordId w);
    LiePoly act(int gen, const LiePoly& p);
    void clear();

  private:
    const RepSpec& rep_;
    std::vector<std::unordered_map<WordId, LiePoly>> memo_;
};

/// One-shot convenience; throws on unknown generator name.
LiePoly act(const RepSpec& rep, std::string_view gen, const LiePoly& p);

}  // namespace lieinv
