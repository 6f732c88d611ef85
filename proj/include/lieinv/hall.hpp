#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieinv/arith.hpp"

namespace lieinv {

/// Id of an interned binary bracketing (magma tree) over letters 0,1,2,...
using WordId = int32_t;
inline constexpr WordId kNoWord = -1;

/// Process-wide intern table for magma trees. Trees are immutable once
/// created; identical subtrees share one id, so equality is id equality.
/// Insertion is not synchronized: confine tree construction to one thread
/// per computation.
class Magma {
  public:
    static Magma& get();

    WordId leaf(int letter);
    WordId node(WordId left, WordId right);

    bool is_leaf(WordId w) const { return nodes_[w].left == kNoWord; }
    int letter(WordId w) const { return nodes_[w].right; }
    WordId left(WordId w) const { return nodes_[w].left; }
    WordId right(WordId w) const { return nodes_[w].right; }
    /// Leaf count.
    int degree(WordId w) const { return nodes_[w].degree; }
    /// Occurrences of each letter; size = largest letter in w + 1.
    const std::vector<int>& letter_counts(WordId w);

    size_t size() const { return nodes_.size(); }

  private:
    Magma() = default;
    struct Node {
        WordId left;   // kNoWord for a leaf
        WordId right;  // letter index for a leaf
        int32_t degree;
    };
    std::vector<Node> nodes_;
    std::vector<WordId> leaves_;
    std::vector<std::vector<int>> counts_;           // lazily filled, indexed by id
    std::unordered_map<uint64_t, WordId> pair_ids_;  // (left,right) -> id
};

/// Total order on magma trees: degree first, then letters, then left
/// subtree, then right subtree. Returns -1, 0, or 1.
int compare(WordId a, WordId b);
inline bool word_less(WordId a, WordId b) { return compare(a, b) < 0; }

/// Hall conditions: every internal node (t',t'') has t' > t'' and
/// (t' is a letter or (t')'' <= t'').
bool is_hall(WordId w);

/// All Hall words over letters 0..num_letters-1 of the given degree, in
/// ascending order. With letter_degrees (all >= 1), "degree" is the weighted
/// total degree and letters appear at their assigned degree; by default every
/// letter has degree 1 and degree is the leaf count. Results are cached.
std::vector<WordId> hall_words(int num_letters, int degree,
                               const std::vector<int>& letter_degrees = {});

/// An element of the free Lie algebra in Hall coordinates: a finite map from
/// Hall words to exact rational coefficients, kept sorted in the word order
/// with no zero coefficients.
class LiePoly {
  public:
    using Term = std::pair<WordId, Rat>;

    LiePoly() = default;
    static LiePoly word(WordId w, Rat c = Rat(1));

    bool zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    // lvalues only: iterating the terms of a temporary would dangle
    const std::vector<Term>& terms() const& { return terms_; }
    const std::vector<Term>& terms() && = delete;
    Rat coeff(WordId w) const;

    /// Common degree of all terms; -1 for the zero polynomial.
    int degree() const;
    bool homogeneous() const;

    void add_term(WordId w, const Rat& c);
    LiePoly& operator+=(const LiePoly& o);
    LiePoly& operator-=(const LiePoly& o);
    LiePoly& operator*=(const Rat& c);
    friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
    friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
    friend LiePoly operator*(LiePoly a, const Rat& c) { return a *= c; }
    friend LiePoly operator*(const Rat& c, LiePoly a) { return a *= c; }
    LiePoly operator-() const;
    bool operator==(const LiePoly& o) const { return terms_ == o.terms_; }

  private:
    std::vector<Term> terms_;
};

/// Hall's recursive normalization of an arbitrary bracketing into a linear
/// combination of Hall words.
LiePoly hall_form(WordId tree);

/// Hall form of the bracket [u,v] of two Hall words. Memoized.
LiePoly bracket_words(WordId u, WordId v);

/// Bilinear bracket of two Lie polynomials, normalized to Hall coordinates.
LiePoly bracket(const LiePoly& p, const LiePoly& q);

/// Release the memo used by bracket_words/hall_form.
void clear_bracket_cache();

// --- text form ---------------------------------------------------------
//
// A word is a letter or "[" item+ "]" (two or more items fold to the left:
// [xyz] = [[xy]z]); commas between items are optional. Default letter names
// are a, b, c, ... ; multi-character names require comma or space separation
// and are emitted comma-separated.

WordId parse_tree(std::string_view text, const std::vector<std::string>& letters = {});
/// parse_tree + Hall validation; throws std::invalid_argument on non-Hall input.
WordId parse_hall_word(std::string_view text, const std::vector<std::string>& letters = {});
std::string format_word(WordId w, const std::vector<std::string>& letters = {});

/// Terms look like "[-]c*word" or "[-]c/q*word" or a bare "[-]word", joined
/// by "+"/"-".
LiePoly parse_poly(std::string_view text, const std::vector<std::string>& letters = {});
std::string format_poly(const LiePoly& p, const std::vector<std::string>& letters = {});

}  // namespace lieinv
