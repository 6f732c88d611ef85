#include "lieinv/report.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lieinv {

using nlohmann::json;

std::string render_dim_table(const RepSpec& rep, const std::vector<DimReport>& rows) {
    std::vector<std::string> headers = {"degree"};
    headers.push_back("weight 0");
    for (size_t r = 0; r < rep.raising.size(); ++r) {
        std::string w = "weight";
        for (int k : rep.raising_weights[r]) w += " " + std::to_string(k);
        headers.push_back(w);
    }
    headers.push_back("invariants");
    headers.push_back("primitive");

    std::vector<std::vector<std::string>> cells;
    for (const DimReport& row : rows) {
        std::vector<std::string> line = {std::to_string(row.degree)};
        for (const Int& d : row.weight_dims) line.push_back(d.get_str());
        line.push_back(std::to_string(row.invariant_dim));
        std::string prim = std::to_string(row.primitive_dim);
        if (row.nonprimitive_predicted && row.nonprimitive_dim > 0) prim += "*";
        line.push_back(prim);
        cells.push_back(std::move(line));
    }

    std::vector<size_t> width(headers.size());
    for (size_t j = 0; j < headers.size(); ++j) width[j] = headers[j].size();
    for (const auto& line : cells)
        for (size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& line) {
        for (size_t j = 0; j < line.size(); ++j) {
            if (j) os << "  ";
            os << std::string(width[j] - line[j].size(), ' ') << line[j];
        }
        os << "\n";
    };
    emit(headers);
    for (const auto& line : cells) emit(line);
    return os.str();
}

json dim_table_json(const RepSpec& rep, const std::vector<DimReport>& rows) {
    json out = json::array();
    for (const DimReport& row : rows) {
        json r;
        r["degree"] = row.degree;
        json wd = json::array();
        for (const Int& d : row.weight_dims) wd.push_back(d.get_str());
        r["weight_dims"] = wd;
        r["invariants"] = row.invariant_dim;
        r["nonprimitive"] = row.nonprimitive_dim;
        r["primitive"] = row.primitive_dim;
        r["nonprimitive_predicted"] = row.nonprimitive_predicted;
        (void)rep;
        out.push_back(std::move(r));
    }
    return out;
}

json poly_json(const LiePoly& p, const std::vector<std::string>& letters) {
    json arr = json::array();
    for (const auto& [w, c] : p.terms()) {
        json term;
        term["coeff"] = Rat(c).get_str();
        term["word"] = format_word(w, letters);
        arr.push_back(std::move(term));
    }
    return arr;
}

LiePoly poly_from_json(const json& j, const std::vector<std::string>& letters) {
    LiePoly p;
    for (const auto& term : j) {
        Rat c(term.at("coeff").get<std::string>());
        c.canonicalize();
        p.add_term(parse_hall_word(term.at("word").get<std::string>(), letters), c);
    }
    return p;
}

json invariant_basis_json(const RepSpec& rep, const InvariantBasis& basis) {
    json j;
    j["rep"] = basis.rep_name;
    j["rep_hash"] = rep.content_hash();
    j["degree"] = basis.degree;
    j["backend"] = backend_name(basis.backend);
    j["primes"] = basis.primes;
    j["modular"] = basis.modular;
    j["dim"] = basis.dim;
    j["stacked_rank"] = basis.stacked_rank;
    j["row_dims"] = basis.row_dims;
    json cols = json::array();
    for (WordId w : basis.columns) cols.push_back(format_word(w, rep.alphabet));
    j["columns"] = cols;
    json vecs = json::array();
    for (const IntVec& v : basis.vectors) {
        json vec = json::array();
        for (const Int& x : v) vec.push_back(x.get_str());
        vecs.push_back(std::move(vec));
    }
    j["vectors"] = vecs;
    json elems = json::array();
    for (const LiePoly& e : basis.elements) elems.push_back(format_poly(e, rep.alphabet));
    j["elements"] = elems;
    json norms = json::array();
    for (const Int& n : basis.sq_norms) norms.push_back(n.get_str());
    j["sq_norms"] = norms;
    return j;
}

InvariantBasis invariant_basis_from_json(const RepSpec& rep, const json& j) {
    InvariantBasis basis;
    basis.rep_name = j.at("rep").get<std::string>();
    basis.degree = j.at("degree").get<int>();
    std::string b = j.at("backend").get<std::string>();
    basis.backend = b == "rational"  ? Backend::rational
                    : b == "modular" ? Backend::modular
                                     : Backend::hnf_lll;
    basis.primes = j.at("primes").get<std::vector<uint32_t>>();
    basis.modular = j.at("modular").get<bool>();
    basis.dim = j.at("dim").get<int>();
    basis.stacked_rank = j.at("stacked_rank").get<int>();
    basis.row_dims = j.at("row_dims").get<std::vector<int>>();
    for (const auto& c : j.at("columns"))
        basis.columns.push_back(parse_hall_word(c.get<std::string>(), rep.alphabet));
    for (const auto& vec : j.at("vectors")) {
        IntVec v;
        for (const auto& x : vec) v.push_back(Int(x.get<std::string>()));
        basis.vectors.push_back(std::move(v));
    }
    for (const IntVec& v : basis.vectors) {
        LiePoly p;
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) p.add_term(basis.columns[k], Rat(v[k]));
        basis.elements.push_back(std::move(p));
    }
    for (const auto& n : j.at("sq_norms")) basis.sq_norms.push_back(Int(n.get<std::string>()));
    return basis;
}

std::string poly_latex(const LiePoly& p, const std::vector<std::string>& letters,
                       const std::string& lhs, int terms_per_line) {
    std::ostringstream os;
    os << "\\begin{align*}\n";
    if (!lhs.empty()) os << lhs << "\n";
    os << "&=\n";
    if (p.zero()) {
        os << "0\n\\end{align*}\n";
        return os.str();
    }
    int in_line = 0;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (!first && in_line == 0) os << "\\\\\n&\\quad\n";
        std::string sign = neg ? "- " : (first ? "" : "+ ");
        os << sign;
        if (a != 1) os << a.get_str() << " ";
        os << format_word(w, letters) << "\n";
        first = false;
        if (++in_line == terms_per_line) in_line = 0;
    }
    os << "\\end{align*}\n";
    return os.str();
}

std::vector<std::pair<std::string, LiePoly>> read_poly_file(
    std::istream& is, const std::vector<std::string>& letters) {
    std::vector<std::pair<std::string, LiePoly>> out;
    std::string line, entry, name;
    auto flush = [&] {
        if (entry.find_first_not_of(" \t\r\n") == std::string::npos) {
            entry.clear();
            name.clear();
            return;
        }
        std::string text = entry;
        size_t eq = text.find('=');
        if (eq != std::string::npos) {
            // "name = poly": treat the prefix as a name if it contains no brackets
            std::string prefix = text.substr(0, eq);
            if (prefix.find('[') == std::string::npos) {
                name = prefix;
                size_t a = name.find_first_not_of(" \t");
                size_t b = name.find_last_not_of(" \t");
                name = a == std::string::npos ? "" : name.substr(a, b - a + 1);
                text = text.substr(eq + 1);
            }
        }
        out.emplace_back(name, parse_poly(text, letters));
        entry.clear();
        name.clear();
    };
    while (std::getline(is, line)) {
        std::string trimmed = line;
        size_t a = trimmed.find_first_not_of(" \t\r");
        if (a == std::string::npos) {
            flush();
            continue;
        }
        if (trimmed[a] == '#') continue;
        entry += " " + line;
    }
    flush();
    return out;
}

// --- cache --------------------------------------------------------------------

namespace {

std::filesystem::path cache_path(const CacheConfig& cfg, const std::string& rep_name, int degree) {
    return cfg.dir / rep_name / (std::to_string(degree) + ".json");
}

std::string backend_signature(const ComputeOptions& opts) {
    std::string sig = backend_name(opts.backend);
    if (opts.backend == Backend::modular) {
        for (uint32_t p : opts.primes) sig += ":" + std::to_string(p);
        if (!opts.want_basis) sig += ":dims";
    }
    if (opts.backend == Backend::hnf_lll) sig += ":" + opts.delta.get_str();
    return sig;
}

}  // namespace

std::optional<InvariantBasis> cache_load(const CacheConfig& cfg, const RepSpec& rep, int degree,
                                         const ComputeOptions& opts) {
    if (!cfg.enabled) return std::nullopt;
    std::filesystem::path path = cache_path(cfg, rep.name, degree);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("rep_hash").get<std::string>() != rep.content_hash()) return std::nullopt;
        if (j.at("backend_signature").get<std::string>() != backend_signature(opts))
            return std::nullopt;
        return invariant_basis_from_json(rep, j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_store(const CacheConfig& cfg, const RepSpec& rep, const InvariantBasis& basis,
                 const ComputeOptions& opts) {
    if (!cfg.enabled) return;
    std::filesystem::path path = cache_path(cfg, rep.name, basis.degree);
    std::filesystem::create_directories(path.parent_path());
    json j = invariant_basis_json(rep, basis);
    j["backend_signature"] = backend_signature(opts);
    std::ofstream out(path);
    out << j.dump(1) << "\n";
}

void cache_clear(const CacheConfig& cfg) {
    if (cfg.dir.empty()) return;
    std::error_code ec;
    std::filesystem::remove_all(cfg.dir, ec);
}

}  // namespace lieinv
