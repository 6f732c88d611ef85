#include "lieinv/reps.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lieinv {

using nlohmann::json;

int RepSpec::generator_index(std::string_view gen) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == gen) return static_cast<int>(i);
    return -1;
}

void RepSpec::validate() const {
    if (alphabet.empty()) throw std::invalid_argument("rep: empty alphabet");
    if (rank < 1) throw std::invalid_argument("rep: rank must be >= 1");
    if (letter_weights.size() != alphabet.size())
        throw std::invalid_argument("rep: letter_weights size mismatch");
    for (const auto& w : letter_weights)
        if (static_cast<int>(w.size()) != rank)
            throw std::invalid_argument("rep: letter weight rank mismatch");
    Magma& m = Magma::get();
    for (const auto& g : generators) {
        if (g.action.size() != alphabet.size())
            throw std::invalid_argument("rep: action table size mismatch for " + g.name);
        for (const LiePoly& img : g.action)
            for (const auto& [w, c] : img.terms())
                if (!m.is_leaf(w) || m.letter(w) >= num_letters())
                    throw std::invalid_argument("rep: action image of " + g.name +
                                                " is not a combination of letters");
    }
    if (raising.size() != raising_weights.size())
        throw std::invalid_argument("rep: raising/raising_weights size mismatch");
    for (size_t r = 0; r < raising.size(); ++r) {
        if (raising[r] < 0 || raising[r] >= static_cast<int>(generators.size()))
            throw std::invalid_argument("rep: raising index out of range");
        if (static_cast<int>(raising_weights[r].size()) != rank)
            throw std::invalid_argument("rep: raising weight rank mismatch");
        const Generator& g = generators[raising[r]];
        for (int l = 0; l < num_letters(); ++l)
            for (const auto& [w, c] : g.action[l].terms()) {
                int target = m.letter(w);
                for (int k = 0; k < rank; ++k)
                    if (letter_weights[target][k] - letter_weights[l][k] != raising_weights[r][k])
                        throw std::invalid_argument("rep: raising operator " + g.name +
                                                    " does not shift weights by its raising weight");
            }
    }
}

namespace {

json poly_to_pairs(const LiePoly& p, const std::vector<std::string>& alphabet) {
    json arr = json::array();
    Magma& m = Magma::get();
    for (const auto& [w, c] : p.terms()) {
        json pair = json::array();
        Rat r = c;
        if (r.get_den() == 1)
            pair.push_back(r.get_num().get_si());
        else
            pair.push_back(r.get_str());
        pair.push_back(alphabet[m.letter(w)]);
        arr.push_back(pair);
    }
    return arr;
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("rep: coefficient must be an integer or a string");
}

}  // namespace

json RepSpec::to_json() const {
    json j;
    j["name"] = name;
    j["alphabet"] = alphabet;
    j["rank"] = rank;
    json lw = json::object();
    for (size_t i = 0; i < alphabet.size(); ++i) lw[alphabet[i]] = letter_weights[i];
    j["letter_weights"] = lw;
    json gens = json::object();
    for (const Generator& g : generators) {
        json table = json::object();
        for (size_t l = 0; l < alphabet.size(); ++l)
            if (!g.action[l].zero()) table[alphabet[l]] = poly_to_pairs(g.action[l], alphabet);
        gens[g.name] = table;
    }
    j["generators"] = gens;
    json raising_names = json::array();
    for (int r : raising) raising_names.push_back(generators[r].name);
    j["raising"] = raising_names;
    json rw = json::object();
    for (size_t r = 0; r < raising.size(); ++r)
        rw[generators[raising[r]].name] = raising_weights[r];
    j["raising_weights"] = rw;
    return j;
}

RepSpec RepSpec::from_json(const json& j) {
    RepSpec rep;
    rep.name = j.value("name", "custom");
    rep.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    rep.rank = j.at("rank").get<int>();
    auto letter_index = [&](const std::string& s) {
        for (size_t i = 0; i < rep.alphabet.size(); ++i)
            if (rep.alphabet[i] == s) return static_cast<int>(i);
        throw std::invalid_argument("rep: unknown letter " + s);
    };
    rep.letter_weights.resize(rep.alphabet.size());
    for (const auto& [lname, w] : j.at("letter_weights").items())
        rep.letter_weights[letter_index(lname)] = w.get<std::vector<int>>();
    Magma& m = Magma::get();
    for (const auto& [gname, table] : j.at("generators").items()) {
        Generator g;
        g.name = gname;
        g.action.assign(rep.alphabet.size(), LiePoly{});
        for (const auto& [lname, pairs] : table.items()) {
            LiePoly img;
            for (const auto& pair : pairs)
                img.add_term(m.leaf(letter_index(pair.at(1).get<std::string>())),
                             rat_from_json(pair.at(0)));
            g.action[letter_index(lname)] = std::move(img);
        }
        rep.generators.push_back(std::move(g));
    }
    for (const auto& rname : j.at("raising")) {
        int idx = rep.generator_index(rname.get<std::string>());
        if (idx < 0) throw std::invalid_argument("rep: unknown raising generator");
        rep.raising.push_back(idx);
    }
    rep.raising_weights.resize(rep.raising.size());
    for (const auto& [rname, w] : j.at("raising_weights").items()) {
        int idx = rep.generator_index(rname);
        for (size_t r = 0; r < rep.raising.size(); ++r)
            if (rep.raising[r] == idx) rep.raising_weights[r] = w.get<std::vector<int>>();
    }
    rep.validate();
    return rep;
}

std::string RepSpec::content_hash() const {
    std::string dump = to_json().dump();
    // FNV-1a
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

RepSpec make_sl2_natural() {
    RepSpec rep;
    rep.name = "sl2-natural";
    rep.alphabet = {"a", "b"};
    rep.rank = 1;
    rep.letter_weights = {{1}, {-1}};
    Magma& m = Magma::get();
    WordId a = m.leaf(0), b = m.leaf(1);
    auto unit = [](WordId w) { return LiePoly::word(w); };
    rep.generators.push_back({"x", {LiePoly{}, unit(a)}});                   // x.a=0, x.b=a
    rep.generators.push_back({"h", {unit(a), LiePoly::word(b, Rat(-1))}});   // h.a=a, h.b=-b
    rep.generators.push_back({"y", {unit(b), LiePoly{}}});                   // y.a=b, y.b=0
    rep.raising = {0};
    rep.raising_weights = {{2}};
    return rep;
}

RepSpec make_sl2_adjoint() {
    RepSpec rep;
    rep.name = "sl2-adjoint";
    rep.alphabet = {"a", "b", "c"};
    rep.rank = 1;
    rep.letter_weights = {{2}, {0}, {-2}};
    Magma& m = Magma::get();
    WordId a = m.leaf(0), b = m.leaf(1), c = m.leaf(2);
    // ad on the basis a=x, b=h, c=y; actions read off the ad matrices
    rep.generators.push_back({"x", {LiePoly{}, LiePoly::word(a, Rat(-2)), LiePoly::word(b)}});
    rep.generators.push_back({"h", {LiePoly::word(a, Rat(2)), LiePoly{}, LiePoly::word(c, Rat(-2))}});
    rep.generators.push_back({"y", {LiePoly::word(b, Rat(-1)), LiePoly::word(c, Rat(2)), LiePoly{}}});
    rep.raising = {0};
    rep.raising_weights = {{2}};
    return rep;
}

RepSpec make_sl3_natural() {
    RepSpec rep;
    rep.name = "sl3-natural";
    rep.alphabet = {"a", "b", "c"};
    rep.rank = 2;
    rep.letter_weights = {{1, 0}, {-1, 1}, {0, -1}};
    Magma& m = Magma::get();
    WordId a = m.leaf(0), b = m.leaf(1), c = m.leaf(2);
    auto unit = [](WordId w) { return LiePoly::word(w); };
    LiePoly zero;
    rep.generators.push_back({"x1", {zero, unit(a), zero}});  // x1.b = a
    rep.generators.push_back({"x2", {zero, zero, unit(b)}});  // x2.c = b
    rep.generators.push_back({"x3", {zero, zero, unit(a)}});  // x3.c = a (matrix x3)
    rep.generators.push_back({"h1", {unit(a), LiePoly::word(b, Rat(-1)), zero}});
    rep.generators.push_back({"h2", {zero, unit(b), LiePoly::word(c, Rat(-1))}});
    rep.generators.push_back({"y1", {unit(b), zero, zero}});
    rep.generators.push_back({"y2", {zero, unit(c), zero}});
    rep.generators.push_back({"y3", {unit(c), zero, zero}});
    rep.raising = {0, 1};
    rep.raising_weights = {{2, -1}, {-1, 2}};
    return rep;
}

}  // namespace

RepSpec builtin_rep(std::string_view name) {
    if (name == "sl2-natural") return make_sl2_natural();
    if (name == "sl2-adjoint") return make_sl2_adjoint();
    if (name == "sl3-natural") return make_sl3_natural();
    throw std::invalid_argument("unknown representation: " + std::string(name));
}

std::vector<std::string> builtin_rep_names() {
    return {"sl2-natural", "sl2-adjoint", "sl3-natural"};
}

std::vector<int> weight(const RepSpec& rep, WordId w) {
    const std::vector<int>& counts = Magma::get().letter_counts(w);
    std::vector<int> out(rep.rank, 0);
    for (size_t l = 0; l < counts.size(); ++l) {
        if (counts[l] == 0) continue;
        if (l >= rep.letter_weights.size())
            throw std::invalid_argument("word uses a letter outside the rep alphabet");
        for (int k = 0; k < rep.rank; ++k) out[k] += counts[l] * rep.letter_weights[l][k];
    }
    return out;
}

std::vector<WordId> weight_basis(const RepSpec& rep, int degree, const std::vector<int>& w) {
    std::vector<WordId> out;
    for (WordId word : hall_words(rep.num_letters(), degree))
        if (weight(rep, word) == w) out.push_back(word);
    return out;
}

const LiePoly& ActionCache::act_word(int gen, WordId w) {
    auto it = memo_[gen].find(w);
    if (it != memo_[gen].end()) return it->second;
    Magma& m = Magma::get();
    LiePoly result;
    if (m.is_leaf(w)) {
        result = rep_.generators[gen].action[m.letter(w)];
    } else {
        WordId l = m.left(w), r = m.right(w);
        result = bracket(act_word(gen, l), LiePoly::word(r)) +
                 bracket(LiePoly::word(l), act_word(gen, r));
    }
    return memo_[gen].emplace(w, std::move(result)).first->second;
}

LiePoly ActionCache::act(int gen, const LiePoly& p) {
    LiePoly result;
    for (const auto& [w, c] : p.terms()) {
        LiePoly t = act_word(gen, w);
        t *= c;
        result += t;
    }
    return result;
}

void ActionCache::clear() {
    for (auto& m : memo_) m.clear();
}

LiePoly act(const RepSpec& rep, std::string_view gen, const LiePoly& p) {
    int idx = rep.generator_index(gen);
    if (idx < 0) throw std::invalid_argument("unknown generator: " + std::string(gen));
    ActionCache cache(rep);
    return cache.act(idx, p);
}

}  // namespace lieinv
