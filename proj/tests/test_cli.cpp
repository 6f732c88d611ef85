#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LIEINV_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("hall subcommand") {
    CHECK(run("hall --letters ab --degree 6 --count").output == "9\n");
    CHECK(run("hall --letters ab --degree 2").output == "[ba]\n");
    CHECK(run("hall --letters abc --degree 12 --count").output == "44220\n");
    RunResult weighted = run("hall --rep sl2-adjoint --degree 5 --weight 0 --count");
    CHECK(weighted.output == "10\n");
    CHECK(run("hall --letters ab --degree 0").exit_code == 2);
}

TEST_CASE("invariants subcommand") {
    RunResult r = run("invariants --rep sl2-natural --degree 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("4         1         1           0          0") != std::string::npos);

    RunResult basis = run("invariants --rep sl2-natural --degrees 1..8 --emit-basis --split");
    CHECK(basis.exit_code == 0);
    CHECK(basis.output.find("1*[ba]") != std::string::npos);
    CHECK(basis.output.find("1*[[[ba]b][[ba]a]]") != std::string::npos);

    // identical config gives byte-identical output
    RunResult again = run("invariants --rep sl2-natural --degrees 1..8 --emit-basis --split");
    CHECK(again.output == basis.output);

    RunResult json_out = run("invariants --rep sl2-natural --degree 8 --format json");
    CHECK(json_out.output.find("\"invariants\": 1") != std::string::npos);
    RunResult json_again = run("invariants --rep sl2-natural --degree 8 --format json");
    CHECK(json_again.output == json_out.output);

    RunResult latex = run("invariants --rep sl2-adjoint --degree 5 --emit-basis --format latex");
    CHECK(latex.output.find("\\begin{align*}") != std::string::npos);
    CHECK(latex.output.find("4 [[[ba]c][ca]]") != std::string::npos);

    CHECK(run("invariants --rep no-such-rep --degree 2").exit_code == 2);
    CHECK(run("invariants --rep sl2-natural --degree 2 --backend modular:91").exit_code == 2);
    CHECK(run("invariants --rep sl2-natural --degree 2 --delta 1/5").exit_code == 2);

    // the degree-8 matrix has a row divisible by 2, so its rank drops mod 2
    RunResult disagree =
        run("invariants --rep sl2-natural --degree 8 --backend modular:101,2");
    CHECK(disagree.exit_code == 3);
    CHECK(disagree.output.find("disagreement") != std::string::npos);

    namespace fs = std::filesystem;
    fs::path triples = fs::temp_directory_path() / "lieinv-deg8.triples";
    RunResult dump = run("invariants --rep sl2-natural --degree 8 --dump-matrix " +
                         triples.string());
    CHECK(dump.exit_code == 0);
    std::ifstream in(triples);
    std::string header;
    std::getline(in, header);
    CHECK(header == "7 8");
}

TEST_CASE("verify subcommand") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lieinv-cli-test";
    fs::create_directories(dir);

    fs::path good = dir / "good.txt";
    std::ofstream(good) << "I2 = [ba]\n\nI6 = [[[ba]b][[ba]a]]\n";
    RunResult ok = run("verify --rep sl2-natural " + good.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS I2") != std::string::npos);
    CHECK(ok.output.find("PASS I6") != std::string::npos);

    fs::path mixed = dir / "mixed.txt";
    std::ofstream(mixed) << "good = [ba]\n\nbad = [[ba]a]\n";
    RunResult fail = run("verify --rep sl2-natural " + mixed.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("FAIL bad") != std::string::npos);

    // the three-letter expression from the verify corpus normalizes and passes
    RunResult wever =
        run(std::string("verify --rep sl3-natural ") + LIEINV_TEST_DATA + "/wever_deg9.txt");
    CHECK(wever.exit_code == 0);
    CHECK(wever.output.find("PASS W9") != std::string::npos);
}

TEST_CASE("witt subcommand") {
    RunResult np = run("witt --primitives 2:1,6:1,10:4,12:4 --bound 14");
    CHECK(np.exit_code == 0);
    CHECK(np.output.find("    14  10") != std::string::npos);

    RunResult gens = run("witt --gens \"(1):3\" --bound 9");
    CHECK(gens.output.find("     9  2184") != std::string::npos);

    RunResult rep = run("witt --rep sl2-natural --bound 8 --weights \"0;2\"");
    CHECK(rep.exit_code == 0);
    CHECK(rep.output.find("     8  8  7") != std::string::npos);

    RunResult deg14 = run("witt --rep sl2-natural --bound 14 --weights 0,2");
    CHECK(deg14.exit_code == 0);
    CHECK(deg14.output.find("    14  245  212") != std::string::npos);
}

TEST_CASE("user-supplied rep from a config file") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lieinv-cli-rep";
    fs::create_directories(dir);
    fs::path spec = dir / "rep.json";
    REQUIRE(run("rep dump --rep sl2-natural --out " + spec.string()).exit_code == 0);
    RunResult r = run("invariants --rep-file " + spec.string() + " --degree 8 --emit-basis");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1*[[[[ba]a][ba]][[ba]b]]") != std::string::npos);
    RunResult h = run("hall --rep-file " + spec.string() + " --degree 6 --weight 0 --count");
    CHECK(h.output == "3\n");
}

TEST_CASE("rep dump and cache clear") {
    RunResult dump = run("rep dump --rep sl3-natural");
    CHECK(dump.exit_code == 0);
    CHECK(dump.output.find("\"x3\"") != std::string::npos);
    CHECK(dump.output.find("sl3-natural") != std::string::npos);

    RunResult list = run("rep list");
    CHECK(list.output.find("sl2-adjoint") != std::string::npos);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lieinv-cli-cache";
    fs::remove_all(dir);
    RunResult first =
        run("invariants --rep sl2-natural --degree 8 --cache-dir " + dir.string() + " -v");
    CHECK(first.exit_code == 0);
    CHECK(fs::exists(dir / "sl2-natural" / "8.json"));
    RunResult second =
        run("invariants --rep sl2-natural --degree 8 --cache-dir " + dir.string() + " -v");
    CHECK(second.output.find("cache hit") != std::string::npos);
    CHECK(run("cache clear --cache-dir " + dir.string()).exit_code == 0);
    CHECK(!fs::exists(dir));
}
