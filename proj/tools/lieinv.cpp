// Command-line front end: Hall word enumeration, invariant computation,
// invariant verification, and Witt dimension tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lieinv/invariants.hpp"
#include "lieinv/report.hpp"
#include "lieinv/witt.hpp"

using namespace lieinv;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBackendDisagreement = 3;

RepSpec load_rep(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("--rep-file", "cannot open " + file);
        RepSpec rep = RepSpec::from_json(json::parse(in));
        return rep;
    }
    return builtin_rep(name);
}

std::vector<std::string> parse_letters(const std::string& spec) {
    std::vector<std::string> letters;
    if (spec.find(',') != std::string::npos) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) letters.push_back(item);
    } else {
        for (char c : spec) letters.emplace_back(1, c);
    }
    return letters;
}

std::vector<int> parse_weight(const std::string& spec) {
    std::vector<int> w;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
    return w;
}

std::pair<int, int> parse_degree_range(const std::string& spec) {
    size_t dots = spec.find("..");
    if (dots == std::string::npos) {
        int d = std::stoi(spec);
        return {d, d};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

Rat parse_rational(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

std::vector<uint32_t> default_primes() {
    std::vector<uint32_t> primes;
    if (const char* env = std::getenv("LIEINV_PRIMES")) {
        std::stringstream ss(env);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) primes.push_back(static_cast<uint32_t>(std::stoul(item)));
    }
    if (primes.empty()) primes = {101, 32003};
    return primes;
}

// "rational" | "modular[:p1,p2,...]" | "hnf-lll" | "auto"
ComputeOptions parse_backend(const std::string& spec, const Rat& delta, bool& auto_backend) {
    ComputeOptions opts;
    opts.delta = delta;
    auto_backend = false;
    if (spec == "auto" || spec.empty()) {
        auto_backend = true;
        opts.primes = default_primes();
        return opts;
    }
    if (spec == "rational") {
        opts.backend = Backend::rational;
        return opts;
    }
    if (spec == "hnf-lll") {
        opts.backend = Backend::hnf_lll;
        return opts;
    }
    if (spec.rfind("modular", 0) == 0) {
        opts.backend = Backend::modular;
        opts.primes.clear();
        if (spec.size() > 7 && spec[7] == ':') {
            std::stringstream ss(spec.substr(8));
            std::string item;
            while (std::getline(ss, item, ','))
                opts.primes.push_back(static_cast<uint32_t>(std::stoul(item)));
        }
        std::vector<uint32_t> defaults = default_primes();
        if (opts.primes.empty()) opts.primes = defaults;
        if (opts.primes.size() == 1) {
            // a rank confirmation at a second prime is mandatory
            for (uint32_t p : defaults)
                if (p != opts.primes[0]) {
                    opts.primes.push_back(p);
                    break;
                }
            if (opts.primes.size() == 1) opts.primes.push_back(opts.primes[0] == 32003 ? 101 : 32003);
        }
        for (uint32_t p : opts.primes)
            if (!is_prime(p)) throw CLI::ValidationError("--backend", std::to_string(p) + " is not prime");
        return opts;
    }
    throw CLI::ValidationError("--backend", "unknown backend " + spec);
}

CacheConfig make_cache_config(const std::string& flag_dir, bool no_cache) {
    CacheConfig cfg;
    if (no_cache) return cfg;
    if (!flag_dir.empty()) {
        cfg.dir = flag_dir;
        cfg.enabled = true;
    } else if (const char* env = std::getenv("LIEINV_CACHE_DIR")) {
        cfg.dir = env;
        cfg.enabled = true;
    }
    return cfg;
}

int cmd_hall(const std::string& letters_spec, const std::string& rep_name,
             const std::string& rep_file, int degree, bool count_only,
             const std::string& weight_spec) {
    std::vector<std::string> letters;
    RepSpec rep;
    bool have_rep = !rep_name.empty() || !rep_file.empty();
    if (have_rep) {
        rep = load_rep(rep_name, rep_file);
        letters = rep.alphabet;
    } else {
        letters = parse_letters(letters_spec);
        if (letters.empty()) throw CLI::ValidationError("--letters", "empty alphabet");
    }
    std::vector<WordId> words;
    if (!weight_spec.empty()) {
        if (!have_rep)
            throw CLI::ValidationError("--weight", "weight filtering needs --rep/--rep-file");
        words = weight_basis(rep, degree, parse_weight(weight_spec));
    } else {
        words = hall_words(static_cast<int>(letters.size()), degree);
    }
    if (count_only) {
        std::cout << words.size() << "\n";
    } else {
        for (WordId w : words) std::cout << format_word(w, letters) << "\n";
    }
    return kExitOk;
}

int cmd_invariants(const std::string& rep_name, const std::string& rep_file,
                   const std::string& degrees_spec, const std::string& backend_spec,
                   const std::string& delta_spec, bool emit_basis, bool split,
                   const std::string& format, const std::string& cache_dir, bool no_cache,
                   const std::string& dump_matrix, bool verbose) {
    RepSpec rep = load_rep(rep_name, rep_file);
    rep.validate();
    auto [deg_lo, deg_hi] = parse_degree_range(degrees_spec);
    if (deg_lo < 1 || deg_hi < deg_lo)
        throw CLI::ValidationError("--degrees", "bad degree range");
    Rat delta = parse_rational(delta_spec);
    if (delta <= Rat(1, 4) || delta > 1)
        throw CLI::ValidationError("--delta", "delta must lie in (1/4, 1]");
    bool auto_backend = false;
    ComputeOptions opts = parse_backend(backend_spec, delta, auto_backend);
    CacheConfig cache = make_cache_config(cache_dir, no_cache);

    // primitive counts accumulate from degree 1 so the primitive column of
    // any requested range is well defined
    std::map<int, int> primitive_counts;
    std::map<int, InvariantBasis> chain;  // lower-degree bases for --split
    std::vector<DimReport> rows;
    std::vector<std::pair<int, InvariantBasis>> emitted;

    if (!dump_matrix.empty()) {
        if (deg_lo != deg_hi)
            throw CLI::ValidationError("--dump-matrix", "needs a single degree");
        ActionMatrixBundle bundle = action_matrix(rep, deg_lo);
        std::ofstream out(dump_matrix);
        if (!out) throw CLI::ValidationError("--dump-matrix", "cannot open " + dump_matrix);
        bundle.stacked.write_triples(out);
    }

    for (int d = 1; d <= deg_hi; ++d) {
        bool requested = d >= deg_lo;
        std::vector<int> zero(rep.rank, 0);
        int ncols = static_cast<int>(weight_basis(rep, d, zero).size());

        ComputeOptions local = opts;
        if (auto_backend)
            local.backend = ncols <= 3000 ? Backend::rational : Backend::modular;
        if (!requested && local.backend == Backend::modular) local.want_basis = false;

        InvariantBasis basis;
        std::optional<InvariantBasis> cached = cache_load(cache, rep, d, local);
        if (cached) {
            basis = std::move(*cached);
            if (verbose) std::cerr << "degree " << d << ": cache hit\n";
        } else {
            basis = compute_invariants(rep, d, local);
            cache_store(cache, rep, basis, local);
        }
        if (verbose)
            std::cerr << "degree " << d << ": " << backend_name(basis.backend) << ", dim "
                      << basis.dim << "\n";

        Int nonprim = nonprimitive_dims(primitive_counts, d)[d];
        int nonprim_dim = static_cast<int>(nonprim.get_si());
        int prim_dim = basis.dim - nonprim_dim;
        primitive_counts[d] = prim_dim;

        DimReport row;
        row.degree = d;
        row.weight_dims.push_back(Int(ncols));
        for (const auto& rw : rep.raising_weights)
            row.weight_dims.push_back(Int(weight_basis(rep, d, rw).size()));
        row.invariant_dim = basis.dim;
        row.nonprimitive_dim = nonprim_dim;
        row.primitive_dim = prim_dim;
        row.nonprimitive_predicted = true;

        if (split && !basis.modular) {
            std::vector<LiePoly> np = nonprimitive_basis(rep, d, chain);
            PrimitiveSplit ps = primitive_split(rep, d, basis, std::move(np));
            if (static_cast<int>(ps.nonprimitive.size()) != nonprim_dim ||
                static_cast<int>(ps.primitive_selection.size()) != prim_dim)
                throw std::logic_error("bracket split disagrees with the Witt prediction");
            row.nonprimitive_predicted = false;
        }
        chain[d] = basis;

        if (requested) {
            rows.push_back(row);
            if (emit_basis) emitted.emplace_back(d, std::move(basis));
        }
    }

    if (format == "json") {
        json out;
        out["rep"] = rep.name;
        out["table"] = dim_table_json(rep, rows);
        if (emit_basis) {
            json bases = json::array();
            for (const auto& [d, basis] : emitted) bases.push_back(invariant_basis_json(rep, basis));
            out["bases"] = bases;
        }
        std::cout << out.dump(1) << "\n";
    } else if (format == "latex") {
        for (const auto& [d, basis] : emitted) {
            for (size_t i = 0; i < basis.elements.size(); ++i) {
                std::string lhs = "I_{" + std::to_string(d) + "}^{(" + std::to_string(i + 1) + ")}";
                std::cout << poly_latex(basis.elements[i], rep.alphabet, lhs);
            }
        }
        if (emitted.empty()) std::cout << render_dim_table(rep, rows);
    } else {
        std::cout << render_dim_table(rep, rows);
        for (const auto& [d, basis] : emitted) {
            if (basis.dim == 0) continue;
            std::cout << "\ndegree " << d << " basis (" << backend_name(basis.backend);
            if (basis.modular) std::cout << " mod " << basis.primes[0];
            std::cout << "):\n";
            for (size_t i = 0; i < basis.elements.size(); ++i) {
                std::cout << "  " << format_poly(basis.elements[i], rep.alphabet) << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& rep_name, const std::string& rep_file,
               const std::string& file) {
    RepSpec rep = load_rep(rep_name, rep_file);
    std::vector<std::pair<std::string, LiePoly>> polys;
    if (file.empty() || file == "-") {
        polys = read_poly_file(std::cin, rep.alphabet);
    } else {
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("file", "cannot open " + file);
        polys = read_poly_file(in, rep.alphabet);
    }
    bool all_ok = true;
    for (size_t i = 0; i < polys.size(); ++i) {
        const auto& [name, poly] = polys[i];
        std::string label = name.empty() ? "#" + std::to_string(i + 1) : name;
        VerifyResult res = verify_invariant(rep, poly);
        if (res.ok) {
            std::cout << "PASS " << label << "\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << label << " (nonzero under:";
            for (const auto& [gen, residual] : res.residuals) std::cout << " " << gen;
            std::cout << ")\n";
        }
    }
    return all_ok ? kExitOk : kExitVerifyFailure;
}

// "(1):3" or "(1,1):1,(1,-1):1"
GeneratorSpec parse_gens(const std::string& spec) {
    GeneratorSpec gens;
    gens.rank = 0;
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t open = spec.find('(', pos);
        if (open == std::string::npos) break;
        size_t close = spec.find(')', open);
        if (close == std::string::npos) throw CLI::ValidationError("--gens", "unbalanced parens");
        MultiDeg tau = parse_weight(spec.substr(open + 1, close - open - 1));
        size_t colon = spec.find(':', close);
        if (colon == std::string::npos) throw CLI::ValidationError("--gens", "missing count");
        size_t end = spec.find(',', colon);
        size_t count_end = end == std::string::npos ? spec.size() : end;
        int count = std::stoi(spec.substr(colon + 1, count_end - colon - 1));
        if (gens.rank == 0) gens.rank = static_cast<int>(tau.size());
        gens.gens[tau] += count;
        pos = count_end + 1;
    }
    if (gens.gens.empty()) throw CLI::ValidationError("--gens", "no generators parsed");
    return gens;
}

std::map<int, int> parse_primitives(const std::string& spec) {
    std::map<int, int> counts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--primitives", "expected degree:count");
        counts[std::stoi(item.substr(0, colon))] += std::stoi(item.substr(colon + 1));
    }
    return counts;
}

int cmd_witt(const std::string& rep_name, const std::string& rep_file,
             const std::string& gens_spec, const std::string& primitives_spec, int bound,
             const std::string& weights_spec, const std::string& format) {
    if (!primitives_spec.empty()) {
        std::map<int, int> prim = parse_primitives(primitives_spec);
        std::map<int, Int> np = nonprimitive_dims(prim, bound);
        if (format == "json") {
            json out = json::object();
            for (const auto& [d, v] : np) out[std::to_string(d)] = v.get_str();
            std::cout << out.dump(1) << "\n";
        } else {
            std::cout << "degree  nonprimitive\n";
            for (const auto& [d, v] : np)
                std::cout << std::string(6 - std::to_string(d).size(), ' ') << d << "  " << v << "\n";
        }
        return kExitOk;
    }
    if (!gens_spec.empty()) {
        GeneratorSpec gens = parse_gens(gens_spec);
        std::map<MultiDeg, Int> dims = free_lie_dims(gens, bound);
        std::map<int, Int> by_degree;
        for (const auto& [tau, v] : dims) by_degree[tau[0]] += v;
        if (format == "json") {
            json out;
            json total = json::object();
            for (const auto& [d, v] : by_degree) total[std::to_string(d)] = v.get_str();
            out["by_degree"] = total;
            json comps = json::array();
            for (const auto& [tau, v] : dims) {
                json c;
                c["multidegree"] = tau;
                c["dim"] = v.get_str();
                comps.push_back(std::move(c));
            }
            out["components"] = comps;
            std::cout << out.dump(1) << "\n";
        } else {
            std::cout << "degree  dim\n";
            for (const auto& [d, v] : by_degree)
                std::cout << std::string(6 - std::to_string(d).size(), ' ') << d << "  " << v << "\n";
        }
        return kExitOk;
    }
    RepSpec rep = load_rep(rep_name, rep_file);
    std::vector<std::vector<int>> weights;
    if (!weights_spec.empty()) {
        std::stringstream ss(weights_spec);
        std::string item;
        while (std::getline(ss, item, ';')) {
            std::vector<int> w = parse_weight(item);
            if (rep.rank == 1) {
                // "0,2" for a rank-1 rep means the two weights 0 and 2
                for (int x : w) weights.push_back({x});
            } else {
                weights.push_back(w);
            }
        }
    }
    json jrows = json::array();
    std::ostringstream text;
    text << "degree";
    std::vector<std::vector<int>> cols = weights;
    if (cols.empty()) {
        cols.push_back(std::vector<int>(rep.rank, 0));
        for (const auto& rw : rep.raising_weights) cols.push_back(rw);
    }
    for (const auto& w : cols) {
        text << "  weight";
        for (int k : w) text << " " << k;
    }
    text << "  (predicted = enumerated?)\n";
    GeneratorSpec letter_gens;
    letter_gens.rank = 1 + rep.rank;
    for (size_t i = 0; i < rep.alphabet.size(); ++i) {
        MultiDeg tau(letter_gens.rank);
        tau[0] = 1;
        for (int k = 0; k < rep.rank; ++k) tau[1 + k] = rep.letter_weights[i][k];
        letter_gens.gens[tau] += 1;
    }
    bool all_ok = true;
    for (int d = 1; d <= bound; ++d) {
        WeightCountRecord rec = weight_count_check(rep, d);
        json jrow;
        jrow["degree"] = d;
        json jweights = json::array();
        text << std::string(6 - std::to_string(d).size(), ' ') << d;
        bool row_ok = true;
        for (const auto& w : cols) {
            Int predicted = 0, enumerated = 0;
            bool found = false;
            for (const auto& wc : rec.counts)
                if (wc.weight == w) {
                    predicted = wc.predicted;
                    enumerated = wc.enumerated;
                    found = true;
                }
            if (!found) {
                // a weight outside the standard record: compute directly
                auto dims = free_lie_dims(letter_gens, d);
                MultiDeg tau(letter_gens.rank);
                tau[0] = d;
                for (int k = 0; k < rep.rank; ++k) tau[1 + k] = w[k];
                predicted = dims.count(tau) ? dims[tau] : Int(0);
                enumerated = Int(weight_basis(rep, d, w).size());
            }
            if (predicted != enumerated) row_ok = false;
            text << "  " << predicted;
            if (predicted != enumerated) text << "!=" << enumerated;
            json jw;
            jw["weight"] = w;
            jw["predicted"] = predicted.get_str();
            jw["enumerated"] = enumerated.get_str();
            jweights.push_back(std::move(jw));
        }
        text << "\n";
        if (!row_ok) all_ok = false;
        jrow["weights"] = std::move(jweights);
        jrow["pass"] = row_ok;
        jrows.push_back(std::move(jrow));
    }
    if (format == "json")
        std::cout << jrows.dump(1) << "\n";
    else
        std::cout << text.str();
    return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of Lie invariants in free Lie algebras"};
    app.require_subcommand(1);

    // hall
    auto* hall = app.add_subcommand("hall", "List or count Hall words");
    std::string hall_letters = "ab", hall_rep, hall_rep_file, hall_weight;
    int hall_degree = 1;
    bool hall_count = false;
    hall->add_option("--letters", hall_letters, "Alphabet, e.g. ab or abc");
    hall->add_option("--rep", hall_rep, "Use a built-in rep's alphabet");
    hall->add_option("--rep-file", hall_rep_file, "RepSpec JSON file");
    hall->add_option("--degree", hall_degree, "Degree")->required();
    hall->add_flag("--count", hall_count, "Print only the count");
    hall->add_option("--weight", hall_weight, "Filter by weight (needs --rep)");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Compute invariant Lie polynomials");
    std::string inv_rep, inv_rep_file, inv_degrees, inv_backend = "auto", inv_delta = "3/4";
    std::string inv_format = "text", inv_cache_dir;
    bool inv_emit = false, inv_split = false, inv_no_cache = false, inv_verbose = false;
    inv->add_option("--rep", inv_rep, "Built-in rep name");
    inv->add_option("--rep-file", inv_rep_file, "RepSpec JSON file");
    inv->add_option("--degree,--degrees", inv_degrees, "Degree N or range A..B")->required();
    inv->add_option("--backend", inv_backend,
                    "auto | rational | modular[:p1,p2,...] | hnf-lll");
    inv->add_option("--delta", inv_delta, "LLL parameter in (1/4,1], e.g. 3/4 or 99/100");
    inv->add_flag("--emit-basis", inv_emit, "Print the invariant bases");
    inv->add_flag("--split", inv_split,
                  "Construct the non-primitive bracket basis and verify the split");
    inv->add_option("--format", inv_format, "text | json | latex");
    inv->add_option("--cache-dir", inv_cache_dir, "Cache directory (or LIEINV_CACHE_DIR)");
    inv->add_flag("--no-cache", inv_no_cache, "Disable the cache");
    std::string inv_dump_matrix;
    inv->add_option("--dump-matrix", inv_dump_matrix,
                    "Write the stacked action matrix in triple format (single degree)");
    inv->add_flag("-v,--verbose", inv_verbose, "Progress to stderr");

    // verify
    auto* ver = app.add_subcommand("verify", "Verify Lie polynomials are invariants");
    std::string ver_rep, ver_rep_file, ver_file;
    ver->add_option("--rep", ver_rep, "Built-in rep name");
    ver->add_option("--rep-file", ver_rep_file, "RepSpec JSON file");
    ver->add_option("file", ver_file, "Polynomial file ('-' or empty for stdin)");

    // witt
    auto* witt = app.add_subcommand("witt", "Witt dimension formulas");
    std::string witt_rep, witt_rep_file, witt_gens, witt_primitives, witt_weights,
        witt_format = "text";
    int witt_bound = 1;
    witt->add_option("--rep", witt_rep, "Check rep weight-space counts");
    witt->add_option("--rep-file", witt_rep_file, "RepSpec JSON file");
    witt->add_option("--gens", witt_gens, "Generators, e.g. \"(1):3\" or \"(1,1):1,(1,-1):1\"");
    witt->add_option("--primitives", witt_primitives, "Primitive counts, e.g. 2:1,6:1,10:4");
    witt->add_option("--bound", witt_bound, "Total degree bound")->required();
    witt->add_option("--weights", witt_weights, "Weight columns, e.g. \"0;2\"");
    witt->add_option("--format", witt_format, "text | json");

    // rep dump
    auto* rep_cmd = app.add_subcommand("rep", "Representation specifications");
    auto* rep_dump = rep_cmd->add_subcommand("dump", "Dump a RepSpec as JSON");
    std::string dump_rep = "sl2-natural", dump_out;
    rep_dump->add_option("--rep", dump_rep, "Built-in rep name");
    rep_dump->add_option("--out", dump_out, "Output file (default stdout)");
    auto* rep_list = rep_cmd->add_subcommand("list", "List built-in reps");

    // cache clear
    auto* cache_cmd = app.add_subcommand("cache", "Cache maintenance");
    auto* cache_clear_cmd = cache_cmd->add_subcommand("clear", "Remove the cache directory");
    std::string cache_dir_flag;
    cache_clear_cmd->add_option("--cache-dir", cache_dir_flag, "Cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*hall)
            return cmd_hall(hall_letters, hall_rep, hall_rep_file, hall_degree, hall_count,
                            hall_weight);
        if (*inv)
            return cmd_invariants(inv_rep, inv_rep_file, inv_degrees, inv_backend, inv_delta,
                                  inv_emit, inv_split, inv_format, inv_cache_dir, inv_no_cache,
                                  inv_dump_matrix, inv_verbose);
        if (*ver) return cmd_verify(ver_rep, ver_rep_file, ver_file);
        if (*witt)
            return cmd_witt(witt_rep, witt_rep_file, witt_gens, witt_primitives, witt_bound,
                            witt_weights, witt_format);
        if (*rep_cmd) {
            if (*rep_list) {
                for (const std::string& name : builtin_rep_names()) std::cout << name << "\n";
                return kExitOk;
            }
            if (*rep_dump) {
                RepSpec rep = builtin_rep(dump_rep);
                std::string text = rep.to_json().dump(1) + "\n";
                if (dump_out.empty()) {
                    std::cout << text;
                } else {
                    std::ofstream out(dump_out);
                    out << text;
                }
                return kExitOk;
            }
            std::cerr << "rep: expected a subcommand (dump, list)\n";
            return kExitConfig;
        }
        if (*cache_cmd) {
            if (*cache_clear_cmd) {
                CacheConfig cfg = make_cache_config(cache_dir_flag, false);
                if (!cfg.enabled) {
                    std::cerr << "cache clear: no cache directory configured\n";
                    return kExitConfig;
                }
                cache_clear(cfg);
                return kExitOk;
            }
            std::cerr << "cache: expected a subcommand (clear)\n";
            return kExitConfig;
        }
    } catch (const BackendDisagreement& e) {
        std::cerr << "backend disagreement: " << e.what() << "\n";
        return kExitBackendDisagreement;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitConfig;
}
