#include <doctest.h>

#include <random>

#include "lieinv/reps.hpp"

using namespace lieinv;

namespace {

LiePoly random_poly(std::mt19937& rng, int num_letters, int degree, int nterms) {
    const std::vector<WordId> basis = hall_words(num_letters, degree);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    LiePoly p;
    for (int i = 0; i < nterms; ++i) p.add_term(basis[pick(rng)], Rat(coeff(rng)));
    return p;
}

std::vector<std::string> word_list(const std::vector<WordId>& words) {
    std::vector<std::string> out;
    for (WordId w : words) out.push_back(format_word(w));
    return out;
}

}  // namespace

TEST_CASE("built-in action tables") {
    RepSpec nat = builtin_rep("sl2-natural");
    RepSpec adj = builtin_rep("sl2-adjoint");
    RepSpec sl3 = builtin_rep("sl3-natural");
    nat.validate();
    adj.validate();
    sl3.validate();

    CHECK(format_poly(act(nat, "x", parse_poly("b"))) == "1*a");
    CHECK(act(nat, "x", parse_poly("a")).zero());
    CHECK(format_poly(act(nat, "y", parse_poly("a"))) == "1*b");
    CHECK(format_poly(act(nat, "h", parse_poly("b"))) == "-1*b");

    CHECK(format_poly(act(adj, "x", parse_poly("b"))) == "-2*a");
    CHECK(format_poly(act(adj, "x", parse_poly("c"))) == "1*b");
    CHECK(format_poly(act(adj, "h", parse_poly("a"))) == "2*a");
    // the ad(y) matrix sends the Cartan letter to 2c
    CHECK(format_poly(act(adj, "y", parse_poly("b"))) == "2*c");
    CHECK(format_poly(act(adj, "y", parse_poly("a"))) == "-1*b");

    CHECK(format_poly(act(sl3, "x1", parse_poly("b"))) == "1*a");
    CHECK(act(sl3, "x1", parse_poly("c")).zero());
    CHECK(format_poly(act(sl3, "x2", parse_poly("c"))) == "1*b");
    // x3 from the matrix: kills b, sends c to a
    CHECK(act(sl3, "x3", parse_poly("b")).zero());
    CHECK(format_poly(act(sl3, "x3", parse_poly("c"))) == "1*a");

    CHECK_THROWS_AS(builtin_rep("sl4-natural"), std::invalid_argument);
    CHECK_THROWS_AS(act(nat, "z", parse_poly("a")), std::invalid_argument);
}

TEST_CASE("derivation action examples") {
    RepSpec nat = builtin_rep("sl2-natural");
    RepSpec adj = builtin_rep("sl2-adjoint");

    CHECK(act(nat, "x", parse_poly("[ba]")).zero());
    CHECK(format_poly(act(nat, "x", parse_poly("[[[b,a],a],b]"))) == "1*[[[ba]a]a]");

    CHECK(format_poly(act(adj, "x", parse_poly("[[ca]b]"))) == "1*[[ba]b] - 2*[[ca]a]");
    CHECK(format_poly(act(adj, "x", parse_poly("[[[ba]b][cb]]"))) ==
          "-2*[[[ba]a][cb]] - 2*[[[ba]b][ca]]");

    // the six degree-5 weight-zero images whose combination kills I_5
    auto image = [&](const char* w) { return format_poly(act(adj, "x", parse_poly(w))); };
    CHECK(image("[[[ba]c][ca]]") == "1*[[[ba]b][ca]] + 1*[[[ba]c][ba]]");
    CHECK(image("[[[ca]a][cb]]") == "1*[[[ba]a][cb]] - 2*[[[ca]a][ca]]");
    CHECK(image("[[[ca]b][ca]]") == "1*[[[ba]b][ca]] - 2*[[[ca]a][ca]] + 1*[[[ca]b][ba]]");
    CHECK(image("[[[ca]c][ba]]") == "1*[[[ba]c][ba]] + 1*[[[ca]b][ba]]");
    CHECK(image("[[[cb]b][ba]]") == "2*[[[ba]c][ba]] - 4*[[[ca]b][ba]]");

    // degree-4 images
    CHECK(image("[[cb][ba]]") == "-2*[[ca][ba]]");
    CHECK(image("[[[ba]b]c]") == "-2*[[[ba]a]c] + 1*[[[ba]b]b]");
    CHECK(image("[[[ca]a]c]") == "1*[[[ba]a]c] + 1*[[[ca]a]b]");
    CHECK(image("[[[ca]b]b]") == "-2*[[ca][ba]] + 1*[[[ba]b]b] - 4*[[[ca]a]b]");
}

TEST_CASE("degree-6 raising action in two letters") {
    RepSpec nat = builtin_rep("sl2-natural");
    auto image = [&](const char* w) { return format_poly(act(nat, "x", parse_poly(w))); };
    CHECK(act(nat, "x", parse_poly("[[[ba]b][[ba]a]]")).zero());
    CHECK(image("[[[[ba]a]b][ba]]") == "1*[[[[ba]a]a][ba]]");
    CHECK(image("[[[[[ba]a]a]b]b]") == "1*[[[[ba]a]a][ba]] + 2*[[[[[ba]a]a]a]b]");
}

TEST_CASE("sl3 degree-3 actions") {
    RepSpec sl3 = builtin_rep("sl3-natural");
    CHECK(act(sl3, "x1", parse_poly("[[b,a],c]")).zero());
    CHECK(format_poly(act(sl3, "x1", parse_poly("[[c,a],b]"))) == "1*[[ca]a]");
    CHECK(format_poly(act(sl3, "x2", parse_poly("[[b,a],c]"))) == "1*[[ba]b]");
    CHECK(format_poly(act(sl3, "x2", parse_poly("[[c,a],b]"))) == "1*[[ba]b]");
}

TEST_CASE("weights of Hall words") {
    RepSpec nat = builtin_rep("sl2-natural");
    RepSpec adj = builtin_rep("sl2-adjoint");
    RepSpec sl3 = builtin_rep("sl3-natural");
    CHECK(weight(nat, parse_hall_word("[ba]")) == std::vector<int>{0});
    CHECK(weight(adj, parse_hall_word("[[ca]b]")) == std::vector<int>{0});
    CHECK(weight(sl3, parse_hall_word("[[ca]a]")) == std::vector<int>{2, -1});
    // sum of letter weights equals the letter-count formulas
    for (int d = 1; d <= 5; ++d)
        for (WordId w : hall_words(3, d)) {
            const std::vector<int>& counts = Magma::get().letter_counts(w);
            auto at = [&](int i) { return i < static_cast<int>(counts.size()) ? counts[i] : 0; };
            CHECK(weight(adj, w) == std::vector<int>{2 * at(0) - 2 * at(2)});
            CHECK(weight(sl3, w) == std::vector<int>{at(0) - at(1), at(1) - at(2)});
        }
}

TEST_CASE("weight-space dimensions") {
    RepSpec nat = builtin_rep("sl2-natural");
    RepSpec adj = builtin_rep("sl2-adjoint");
    RepSpec sl3 = builtin_rep("sl3-natural");
    CHECK(weight_basis(nat, 12, {0}).size() == 75);
    CHECK(weight_basis(nat, 12, {2}).size() == 66);
    CHECK(weight_basis(adj, 7, {0}).size() == 56);
    CHECK(weight_basis(adj, 7, {2}).size() == 51);
    CHECK(weight_basis(sl3, 9, {0, 0}).size() == 186);
    CHECK(weight_basis(sl3, 9, {2, -1}).size() == 140);
    CHECK(weight_basis(sl3, 9, {-1, 2}).size() == 140);
}

TEST_CASE("printed degree-6 weight spaces in two letters") {
    RepSpec nat = builtin_rep("sl2-natural");
    CHECK(word_list(weight_basis(nat, 6, {0})) ==
          std::vector<std::string>{"[[[ba]b][[ba]a]]", "[[[[ba]a]b][ba]]", "[[[[[ba]a]a]b]b]"});
    CHECK(word_list(weight_basis(nat, 6, {2})) ==
          std::vector<std::string>{"[[[[ba]a]a][ba]]", "[[[[[ba]a]a]a]b]"});
}

TEST_CASE("printed degree-5 weight spaces in the adjoint rep") {
    RepSpec adj = builtin_rep("sl2-adjoint");
    CHECK(word_list(weight_basis(adj, 5, {0})) ==
          std::vector<std::string>{"[[[ba]b][cb]]", "[[[ba]c][ca]]", "[[[ca]a][cb]]",
                                   "[[[ca]b][ca]]", "[[[ca]c][ba]]", "[[[cb]b][ba]]",
                                   "[[[[ba]a]c]c]", "[[[[ba]b]b]c]", "[[[[ca]a]b]c]",
                                   "[[[[ca]b]b]b]"});
    CHECK(word_list(weight_basis(adj, 5, {2})) ==
          std::vector<std::string>{"[[[ba]a][cb]]", "[[[ba]b][ca]]", "[[[ba]c][ba]]",
                                   "[[[ca]a][ca]]", "[[[ca]b][ba]]", "[[[[ba]a]b]c]",
                                   "[[[[ba]b]b]b]", "[[[[ca]a]a]c]", "[[[[ca]a]b]b]"});
}

TEST_CASE("printed degree-6 weight spaces for sl3") {
    RepSpec sl3 = builtin_rep("sl3-natural");
    // the printed tables also record each word's position in the full
    // degree-6 Hall list (1-based)
    std::vector<std::pair<std::string, int>> zero = {
        {"[[[ca]b][[ba]c]]", 9},   {"[[[ca]c][[ba]b]]", 12},  {"[[[cb]b][[ca]a]]", 19},
        {"[[[cb]c][[ba]a]]", 22},  {"[[[ca][ba]][cb]]", 31},  {"[[[cb][ba]][ca]]", 33},
        {"[[[[ba]a]c][cb]]", 45},  {"[[[[ba]b]c][ca]]", 50},  {"[[[[ba]c]c][ba]]", 52},
        {"[[[[ca]a]b][cb]]", 60},  {"[[[[ca]b]b][ca]]", 65},  {"[[[[ca]b]c][ba]]", 67},
        {"[[[[[ba]a]b]c]c]", 90},  {"[[[[[ca]a]b]b]c]", 104}};
    std::vector<std::pair<std::string, int>> plus = {
        {"[[[ca]a][[ba]c]]", 6},   {"[[[ca]b][[ca]a]]", 10},  {"[[[ca]c][[ba]a]]", 11},
        {"[[[ca][ba]][ca]]", 30},  {"[[[[ba]a]c][ca]]", 44},  {"[[[[ca]a]a][cb]]", 57},
        {"[[[[ca]a]b][ca]]", 59},  {"[[[[ca]a]c][ba]]", 61},  {"[[[[[ba]a]a]c]c]", 87},
        {"[[[[[ca]a]a]b]c]", 101}};
    std::vector<std::pair<std::string, int>> minus = {
        {"[[[ba]c][[ba]b]]", 3},   {"[[[ca]b][[ba]b]]", 8},   {"[[[cb]b][[ba]a]]", 16},
        {"[[[cb][ba]][ba]]", 32},  {"[[[[ba]a]b][cb]]", 42},  {"[[[[ba]b]b][ca]]", 47},
        {"[[[[ba]b]c][ba]]", 49},  {"[[[[ca]b]b][ba]]", 64},  {"[[[[[ba]a]b]b]c]", 89},
        {"[[[[[ca]a]b]b]b]", 103}};

    auto all6 = hall_words(3, 6);
    auto check_list = [&](const std::vector<std::pair<std::string, int>>& expected,
                          const std::vector<int>& w) {
        auto basis = weight_basis(sl3, 6, w);
        REQUIRE(basis.size() == expected.size());
        for (size_t i = 0; i < expected.size(); ++i) {
            CHECK(format_word(basis[i]) == expected[i].first);
            // 1-based position in the full degree-6 list
            auto it = std::find(all6.begin(), all6.end(), basis[i]);
            CHECK(static_cast<int>(it - all6.begin()) + 1 == expected[i].second);
        }
    };
    check_list(zero, {0, 0});
    check_list(plus, {2, -1});
    check_list(minus, {-1, 2});
}

TEST_CASE("derivation rule identity") {
    std::mt19937 rng(7);
    for (const char* name : {"sl2-natural", "sl2-adjoint", "sl3-natural"}) {
        RepSpec rep = builtin_rep(name);
        int q = rep.num_letters();
        ActionCache cache(rep);
        for (int trial = 0; trial < 10; ++trial) {
            int d1 = 1 + trial % 3, d2 = 1 + (trial / 3) % 3;
            LiePoly p = random_poly(rng, q, d1, 2);
            LiePoly s = random_poly(rng, q, d2, 2);
            for (size_t g = 0; g < rep.generators.size(); ++g) {
                LiePoly lhs = cache.act(static_cast<int>(g), bracket(p, s));
                LiePoly rhs = bracket(cache.act(static_cast<int>(g), p), s) +
                              bracket(p, cache.act(static_cast<int>(g), s));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("weight additivity of the bracket") {
    RepSpec sl3 = builtin_rep("sl3-natural");
    for (int d1 = 1; d1 <= 2; ++d1)
        for (int d2 = 1; d2 <= 2; ++d2)
            for (WordId u : hall_words(3, d1))
                for (WordId v : hall_words(3, d2)) {
                    std::vector<int> expected = weight(sl3, u);
                    std::vector<int> wv = weight(sl3, v);
                    for (size_t k = 0; k < expected.size(); ++k) expected[k] += wv[k];
                    LiePoly bw = bracket_words(u, v);
                    for (const auto& [w, c] : bw.terms())
                        CHECK(weight(sl3, w) == expected);
                }
}

TEST_CASE("raising operators shift weight by the raising weight") {
    for (const char* name : {"sl2-natural", "sl2-adjoint", "sl3-natural"}) {
        RepSpec rep = builtin_rep(name);
        ActionCache cache(rep);
        for (int d = 1; d <= 4; ++d)
            for (WordId w : hall_words(rep.num_letters(), d))
                for (size_t r = 0; r < rep.raising.size(); ++r) {
                    std::vector<int> expected = weight(rep, w);
                    for (int k = 0; k < rep.rank; ++k) expected[k] += rep.raising_weights[r][k];
                    for (const auto& [t, c] : cache.act_word(rep.raising[r], w).terms())
                        CHECK(weight(rep, t) == expected);
                }
    }
}

TEST_CASE("Hall words are h-eigenvectors with their weight as eigenvalue") {
    for (const char* name : {"sl2-natural", "sl2-adjoint", "sl3-natural"}) {
        RepSpec rep = builtin_rep(name);
        ActionCache cache(rep);
        std::vector<int> h_gens;
        for (size_t g = 0; g < rep.generators.size(); ++g)
            if (rep.generators[g].name[0] == 'h') h_gens.push_back(static_cast<int>(g));
        REQUIRE(static_cast<int>(h_gens.size()) == rep.rank);
        for (int d = 1; d <= 5; ++d)
            for (WordId w : hall_words(rep.num_letters(), d)) {
                std::vector<int> wt = weight(rep, w);
                for (int k = 0; k < rep.rank; ++k) {
                    LiePoly expected = LiePoly::word(w, Rat(wt[k]));
                    CHECK(cache.act(h_gens[k], LiePoly::word(w)) == expected);
                }
            }
    }
}

TEST_CASE("commutator of the sl3 raising operators is the third root vector") {
    RepSpec sl3 = builtin_rep("sl3-natural");
    ActionCache cache(sl3);
    int x1 = sl3.generator_index("x1"), x2 = sl3.generator_index("x2"),
        x3 = sl3.generator_index("x3");
    std::mt19937 rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        LiePoly p = random_poly(rng, 3, 1 + trial % 4, 3);
        LiePoly lhs = cache.act(x1, cache.act(x2, p)) - cache.act(x2, cache.act(x1, p));
        CHECK(lhs == cache.act(x3, p));
    }
}

TEST_CASE("rep validation rejects inconsistent tables") {
    RepSpec rep = builtin_rep("sl2-natural");
    rep.raising_weights[0] = {3};  // x shifts weight by 2, not 3
    CHECK_THROWS_AS(rep.validate(), std::invalid_argument);

    RepSpec rep2 = builtin_rep("sl2-natural");
    rep2.generators[0].action[1] = parse_poly("[ba]");  // not degree 1
    CHECK_THROWS_AS(rep2.validate(), std::invalid_argument);
}
