#include "lieinv/hall.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace lieinv {

Magma& Magma::get() {
    static Magma instance;
    return instance;
}

WordId Magma::leaf(int letter) {
    if (letter < 0) throw std::invalid_argument("negative letter index");
    while (static_cast<int>(leaves_.size()) <= letter) {
        int next = static_cast<int>(leaves_.size());
        nodes_.push_back(Node{kNoWord, next, 1});
        leaves_.push_back(static_cast<WordId>(nodes_.size() - 1));
    }
    return leaves_[letter];
}

WordId Magma::node(WordId left, WordId right) {
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(left)) << 32) |
                   static_cast<uint32_t>(right);
    auto it = pair_ids_.find(key);
    if (it != pair_ids_.end()) return it->second;
    nodes_.push_back(Node{left, right, nodes_[left].degree + nodes_[right].degree});
    WordId id = static_cast<WordId>(nodes_.size() - 1);
    pair_ids_.emplace(key, id);
    return id;
}

const std::vector<int>& Magma::letter_counts(WordId w) {
    if (counts_.size() < nodes_.size()) counts_.resize(nodes_.size());
    if (!counts_[w].empty()) return counts_[w];
    std::vector<int> out;
    if (is_leaf(w)) {
        out.assign(letter(w) + 1, 0);
        out[letter(w)] = 1;
    } else {
        std::vector<int> cl = letter_counts(left(w));   // copies: recursion may
        std::vector<int> cr = letter_counts(right(w));  // resize counts_
        out.assign(std::max(cl.size(), cr.size()), 0);
        for (size_t i = 0; i < cl.size(); ++i) out[i] += cl[i];
        for (size_t i = 0; i < cr.size(); ++i) out[i] += cr[i];
    }
    counts_[w] = std::move(out);
    return counts_[w];
}

int compare(WordId a, WordId b) {
    if (a == b) return 0;
    Magma& m = Magma::get();
    int da = m.degree(a), db = m.degree(b);
    if (da != db) return da < db ? -1 : 1;
    if (da == 1) return m.letter(a) < m.letter(b) ? -1 : 1;
    if (int c = compare(m.left(a), m.left(b))) return c;
    return compare(m.right(a), m.right(b));
}

bool is_hall(WordId w) {
    Magma& m = Magma::get();
    if (m.is_leaf(w)) return true;
    WordId l = m.left(w), r = m.right(w);
    if (compare(l, r) <= 0) return false;
    if (!m.is_leaf(l) && compare(m.right(l), r) > 0) return false;
    return is_hall(l) && is_hall(r);
}

namespace {

struct BasisKey {
    int num_letters;
    std::vector<int> letter_degrees;
    bool operator<(const BasisKey& o) const {
        if (num_letters != o.num_letters) return num_letters < o.num_letters;
        return letter_degrees < o.letter_degrees;
    }
};

// per-alphabet table of Hall words by degree, grown on demand
std::map<BasisKey, std::vector<std::vector<WordId>>>& basis_cache() {
    static std::map<BasisKey, std::vector<std::vector<WordId>>> cache;
    return cache;
}

}  // namespace

std::vector<WordId> hall_words(int num_letters, int degree,
                               const std::vector<int>& letter_degrees) {
    if (degree <= 0) throw std::invalid_argument("empty degree");
    if (num_letters <= 0) throw std::invalid_argument("empty alphabet");
    if (!letter_degrees.empty()) {
        if (static_cast<int>(letter_degrees.size()) != num_letters)
            throw std::invalid_argument("letter_degrees size mismatch");
        for (int d : letter_degrees)
            if (d < 1) throw std::invalid_argument("letter degree must be positive");
    }
    Magma& m = Magma::get();
    auto& table = basis_cache()[BasisKey{num_letters, letter_degrees}];
    if (table.empty()) table.resize(1);  // index 0 unused
    for (int d = static_cast<int>(table.size()); d <= degree; ++d) {
        std::vector<WordId> words;
        for (int i = 0; i < num_letters; ++i) {
            int ld = letter_degrees.empty() ? 1 : letter_degrees[i];
            if (ld == d) words.push_back(m.leaf(i));
        }
        for (int d1 = 1; d1 < d; ++d1) {
            int d2 = d - d1;
            for (WordId t1 : table[d1]) {
                bool t1_leaf = m.is_leaf(t1);
                WordId t1_right = t1_leaf ? kNoWord : m.right(t1);
                for (WordId t2 : table[d2]) {
                    if (compare(t1, t2) <= 0) continue;
                    if (!t1_leaf && compare(t1_right, t2) > 0) continue;
                    words.push_back(m.node(t1, t2));
                }
            }
        }
        std::sort(words.begin(), words.end(), word_less);
        table.push_back(std::move(words));
    }
    return table[degree];
}

// --- LiePoly ------------------------------------------------------------

LiePoly LiePoly::word(WordId w, Rat c) {
    LiePoly p;
    if (c != 0) p.terms_.emplace_back(w, std::move(c));
    return p;
}

Rat LiePoly::coeff(WordId w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, WordId x) { return word_less(t.first, x); });
    if (it != terms_.end() && it->first == w) return it->second;
    return Rat(0);
}

int LiePoly::degree() const {
    if (terms_.empty()) return -1;
    return Magma::get().degree(terms_.front().first);
}

bool LiePoly::homogeneous() const {
    if (terms_.empty()) return true;
    int d = Magma::get().degree(terms_.front().first);
    for (const Term& t : terms_)
        if (Magma::get().degree(t.first) != d) return false;
    return true;
}

void LiePoly::add_term(WordId w, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, WordId x) { return word_less(t.first, x); });
    if (it != terms_.end() && it->first == w) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{w, c});
    }
}

LiePoly& LiePoly::operator+=(const LiePoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.end() && b != o.terms_.end()) {
        int c = compare(a->first, b->first);
        if (c < 0) {
            merged.push_back(*a++);
        } else if (c > 0) {
            merged.push_back(*b++);
        } else {
            Rat s = a->second + b->second;
            if (s != 0) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, terms_.cend());
    merged.insert(merged.end(), b, o.terms_.cend());
    terms_ = std::move(merged);
    return *this;
}

LiePoly& LiePoly::operator-=(const LiePoly& o) { return *this += -o; }

LiePoly& LiePoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.second *= c;
    return *this;
}

LiePoly LiePoly::operator-() const {
    LiePoly r = *this;
    for (Term& t : r.terms_) t.second = -t.second;
    return r;
}

// --- Hall normalization --------------------------------------------------

namespace {

std::unordered_map<uint64_t, LiePoly>& pair_cache() {
    static std::unordered_map<uint64_t, LiePoly> cache;
    return cache;
}

}  // namespace

void clear_bracket_cache() { pair_cache().clear(); }

LiePoly bracket_words(WordId u, WordId v) {
    if (u == v) return LiePoly{};
    if (compare(u, v) < 0) return -bracket_words(v, u);
    // u > v from here on
    Magma& m = Magma::get();
    if (m.degree(u) == 1) return LiePoly::word(m.node(u, v));
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
                   static_cast<uint32_t>(v);
    auto it = pair_cache().find(key);
    if (it != pair_cache().end()) return it->second;
    WordId p = m.left(u), q = m.right(u);
    LiePoly result;
    if (compare(v, q) >= 0) {
        // ((p,q),v) with v >= q is already a Hall word
        result = LiePoly::word(m.node(u, v));
    } else {
        // Jacobi rewrite ((p,q),v) -> ((p,v),q) - ((q,v),p); the produced
        // terms need not be Hall, so normalize recursively
        result = bracket(bracket_words(p, v), LiePoly::word(q)) -
                 bracket(bracket_words(q, v), LiePoly::word(p));
    }
    pair_cache().emplace(key, result);
    return result;
}

LiePoly bracket(const LiePoly& p, const LiePoly& q) {
    LiePoly result;
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) {
            LiePoly t = bracket_words(u, v);
            t *= a * b;
            result += t;
        }
    return result;
}

LiePoly hall_form(WordId tree) {
    Magma& m = Magma::get();
    if (m.degree(tree) == 1) return LiePoly::word(tree);
    if (is_hall(tree)) return LiePoly::word(tree);
    return bracket(hall_form(m.left(tree)), hall_form(m.right(tree)));
}

// --- text form -----------------------------------------------------------

namespace {

std::string default_letter_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "g" + std::to_string(i);
}

std::string letter_name(int i, const std::vector<std::string>& letters) {
    if (letters.empty()) return default_letter_name(i);
    if (i >= static_cast<int>(letters.size()))
        throw std::invalid_argument("letter index out of range");
    return letters[i];
}

bool any_multichar(const std::vector<std::string>& letters) {
    for (const std::string& s : letters)
        if (s.size() > 1) return true;
    return false;
}

struct Parser {
    std::string_view text;
    size_t pos = 0;
    const std::vector<std::string>& letters;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\n' || text[pos] == '\r' || text[pos] == ','))
            ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    int parse_letter() {
        if (letters.empty()) {
            char c = text[pos];
            if (c < 'a' || c > 'z') throw std::invalid_argument("unknown letter '" + std::string(1, c) + "'");
            ++pos;
            return c - 'a';
        }
        // longest match against the alphabet
        int best = -1;
        size_t best_len = 0;
        for (size_t i = 0; i < letters.size(); ++i) {
            const std::string& name = letters[i];
            if (name.size() > best_len && text.substr(pos, name.size()) == name) {
                best = static_cast<int>(i);
                best_len = name.size();
            }
        }
        if (best < 0)
            throw std::invalid_argument("unknown letter at '" + std::string(text.substr(pos, 8)) + "'");
        pos += best_len;
        return best;
    }

    WordId parse_word() {
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("unexpected end of word");
        Magma& m = Magma::get();
        if (text[pos] == '[') {
            ++pos;
            WordId acc = parse_word();
            int items = 1;
            for (;;) {
                skip_ws();
                if (pos >= text.size()) throw std::invalid_argument("missing ']'");
                if (text[pos] == ']') {
                    ++pos;
                    break;
                }
                WordId next = parse_word();
                acc = m.node(acc, next);  // left-nested fold
                ++items;
            }
            if (items < 2) throw std::invalid_argument("bracket needs at least two items");
            return acc;
        }
        return m.leaf(parse_letter());
    }
};

}  // namespace

WordId parse_tree(std::string_view text, const std::vector<std::string>& letters) {
    Parser p{text, 0, letters};
    WordId w = p.parse_word();
    if (!p.at_end()) throw std::invalid_argument("trailing input after word");
    return w;
}

WordId parse_hall_word(std::string_view text, const std::vector<std::string>& letters) {
    WordId w = parse_tree(text, letters);
    if (!is_hall(w)) throw std::invalid_argument("not a Hall word: " + std::string(text));
    return w;
}

std::string format_word(WordId w, const std::vector<std::string>& letters) {
    Magma& m = Magma::get();
    bool sep = any_multichar(letters);
    std::string out;
    auto emit = [&](auto&& self, WordId x) -> void {
        if (m.is_leaf(x)) {
            out += letter_name(m.letter(x), letters);
            return;
        }
        out += '[';
        self(self, m.left(x));
        if (sep) out += ',';
        self(self, m.right(x));
        out += ']';
    };
    emit(emit, w);
    return out;
}

LiePoly parse_poly(std::string_view text, const std::vector<std::string>& letters) {
    LiePoly result;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text.substr(pos) == "0") return result;
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("dangling sign");
        Rat coeff(1);
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            std::string num(text.substr(start, pos - start));
            std::string den = "1";
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                size_t dstart = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (dstart == pos) throw std::invalid_argument("missing denominator");
                den = std::string(text.substr(dstart, pos - dstart));
            }
            coeff = Rat(Int(num), Int(den));
            coeff.canonicalize();
            skip_ws();
            if (pos < text.size() && text[pos] == '*') ++pos;
            skip_ws();
        }
        if (pos >= text.size()) {
            if (coeff == 0) break;  // a lone "0" term
            throw std::invalid_argument("coefficient without word");
        }
        if (text[pos] == '0' && coeff == 1) {
            ++pos;
            first = false;
            continue;  // explicit zero term
        }
        Parser wp{text, pos, letters};
        WordId w = wp.parse_word();
        pos = wp.pos;
        LiePoly term = hall_form(w);
        term *= Rat(sign) * coeff;
        result += term;
        first = false;
    }
    return result;
}

std::string format_poly(const LiePoly& p, const std::vector<std::string>& letters) {
    if (p.zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += a.get_str();
        out += "*";
        out += format_word(w, letters);
    }
    return out;
}

}  // namespace lieinv
