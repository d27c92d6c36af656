// Black box checks of the command line tool: exact text contracts, exit
// codes, JSON shapes, and determinism across thread counts. The binary under
// test comes in as argv[1]; everything runs through popen.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

int failures = 0;
std::string cli;

struct Run {
    int rc = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) r.rc = WEXITSTATUS(status);
    return r;
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

void check_eq(const std::string& got, const std::string& want, const std::string& what) {
    if (got != want) {
        ++failures;
        std::cout << "FAIL: " << what << "\n  want: " << want << "\n  got:  " << got << "\n";
    }
}

void check_rc(const Run& r, int want, const std::string& what) {
    if (r.rc != want) {
        ++failures;
        std::cout << "FAIL: " << what << " exited " << r.rc << ", want " << want << "\n";
    }
}

json parse(const Run& r, const std::string& what) {
    try {
        return json::parse(r.out);
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL: " << what << " is not JSON: " << e.what() << "\n";
        return json::object();
    }
}

void read_contract() {
    Run r = run("read --x 011010 --ell 3");
    check_rc(r, 0, "read fixed word");
    check_eq(r.out, "0,1,2,2,2,1,1,0\n", "read fixed word output");

    r = run("read --x 011010 --ell 3 --format json");
    check_rc(r, 0, "read json");
    json j = parse(r, "read json");
    check(j["ell"] == 3 && j["x"] == "011010" && j["read"] == "0,1,2,2,2,1,1,0",
          "read json fields");

    r = run("read --r 0,1,2,2,2,1,1,0 --ell 3 --mod2");
    check_rc(r, 0, "read reconstruct");
    check_eq(r.out, "x=011010\nmod2=010001\n", "read reconstruct output");

    r = run("read --r 0,2,0 --ell 2");
    check_rc(r, 1, "read invalid vector");
    check_eq(r.out, "invalid\n", "read invalid vector output");

    check_rc(run("read --x '' --ell 3"), 2, "read empty word");
    check_rc(run("read --x 011010 --r 0,1 --ell 3"), 2, "read with both inputs");
    check_rc(run("read --ell 3"), 2, "read with no input");

    r = run("read --x 011010 --ell 3 --edits 2:0,4:1 --format json");
    check_rc(r, 0, "read with edits");
    j = parse(r, "read with edits");
    check(j["read"] == "0,0,2,1,2,1,1,0" && j["effective"] == 2, "read edit fields");

    // Distance between the reads of 011010 and 101100.
    r = run("read --x 011010 --ell 3 --diff 1,1,2,2,2,1,0,0");
    check_rc(r, 0, "read diff");
    check_eq(r.out, "0,1,2,2,2,1,1,0\ndistance=2\n", "read diff output");
}

void perm_contract() {
    Run r = run("perm --n 6 --p 2 --ell 3");
    check_rc(r, 0, "perm map");
    check_eq(r.out, "1,2,4,5,3,6\n", "perm map output");

    check_eq(run("perm --n 6 --p 2 --ell 3 --x 011010").out, "010110\n", "perm image");
    check_eq(run("perm --n 6 --p 2 --ell 3 --x 101100").out, "101010\n", "perm image 2");
    check_eq(run("perm --n 6 --p 2 --ell 3 --x 010110 --invert").out, "011010\n",
             "perm preimage");
    check_rc(run("perm --n 6 --p 2 --ell 3 --invert"), 2, "perm invert without word");
    check_rc(run("perm --n 6 --p 0 --ell 3"), 2, "perm bad p");

    const json j = parse(run("perm --n 6 --p 2 --ell 3 --x 011010 --format json"), "perm json");
    check(j["map"] == "1,2,4,5,3,6" && j["result"] == "010110" && j["inverted"] == false,
          "perm json fields");
}

void codec_contract() {
    check_eq(run("encode --inner repetition --len 5 --ell 2 --msg 1").out, "10101\n",
             "encode repetition");

    Run r = run("decode --inner repetition --len 5 --ell 2 --r 1,0,1,2,1,1");
    check_rc(r, 0, "decode corrupted");
    check_eq(r.out, "message=1 x=10101 corrections=2 residual=2\n", "decode corrupted output");

    r = run("decode --inner repetition --len 4 --ell 2 --r 0,1,1,0,1");
    check_rc(r, 1, "decode tie");
    check_eq(r.out, "decode failure\n", "decode tie output");

    check_rc(run("encode --inner bch --ell 2 --msg 1"), 2, "bch without parameters");
    check_rc(run("encode --inner repetition --ell 2 --msg 1"), 2, "repetition without length");

    const json j = parse(
        run("encode --inner bch --m 4 --t 2 --ell 2 --msg 1010101 --format json"),
        "encode json");
    check(j["inner"]["kind"] == "bch" && j["inner"]["n"] == 15 && j["inner"]["k"] == 7,
          "encode json inner block");
    check(j.contains("x") && j.contains("read"), "encode json payload");
}

void simulate_contract() {
    const std::string base = "simulate --inner bch --m 4 --t 2 --ell 2 --trials 3000 "
                             "--weight 2 --seed 5 --format json";
    Run a = run(base + " --threads 1");
    Run b = run(base + " --threads 4");
    check_rc(a, 0, "simulate");
    check(a.out == b.out, "simulate output is thread count invariant");

    const json j = parse(a, "simulate json");
    // Report keys lead with the headline counters, in a fixed order.
    const char* head[] = {"trials", "weight", "success", "miscorrect", "fail", "seed"};
    auto it = j.begin();
    for (const char* key : head) {
        check(it != j.end() && it.key() == key, std::string("simulate key order: ") + key);
        if (it != j.end()) ++it;
    }
    check(j["trials"] == 3000 && j["success"] == 3000 && j["fail"] == 0,
          "simulate full success at weight 2");
    check(j["success_rate"] == 1.0, "simulate rate");

    check_rc(run("simulate --inner bch --m 4 --t 2 --ell 2 --weight 2 --trials 10"), 2,
             "simulate without seed");
    check_rc(run("simulate --inner bch --m 4 --t 2 --ell 2 --weight -3 --trials 10 --seed 1"),
             2, "simulate bad weight");
}

void cover_contract() {
    Run r = run("cover-count --m 2 --p 1 --t 2");
    check_rc(r, 0, "cover-count");
    check_eq(r.out, "formula=16, enumerated=16, match=true\n", "cover-count output");

    json j = parse(run("cover-count --m 2 --p 2 --t 2 --format json"), "cover-count json");
    check(j["formula"] == "196" && j["enumerated"] == "196" && j["match"] == true,
          "cover-count json fields");

    r = run("cover-verify --n 8 --p 2 --t 2 --ell 2");
    check_rc(r, 0, "cover-verify");
    check_eq(r.out, "verified=true words=256 cliques=196 max_distance=4\n",
             "cover-verify output");

    j = parse(run("cover-verify --n 6 --p 2 --t 2 --ell 3 --format json"), "cover-verify json");
    check(j["verified"] == true && j["cliques"] == "56" && j["count_formula"] == "56" &&
              j["count_match"] == true,
          "cover-verify json fields");
    check(j["levels"].contains("0") && j["levels"].contains("1"), "cover-verify level map");

    check_rc(run("cover-verify --n 20 --p 2 --t 2 --ell 2"), 2, "cover-verify oversized");
}

void bound_contract() {
    Run r = run("bound --n 8 --t 2 --ell 2 --eps 0.1");
    check_rc(r, 0, "bound");
    check_eq(r.out, "p=2 m=2 log2_cover=7.614710 bound=0.385290 t_log2_n=6.000000 "
                    "gap=5.614710\n",
             "bound output");

    const json j = parse(run("bound --n 255 --t 2 --ell 2 --eps 0.1 --format json"),
                         "bound json");
    check(j["p"] == 4 && j["cover_cliques"].is_string(), "bound json fields");
    check(double(j["gap"]) < 16.0, "bound json gap");
}

void mis_contract() {
    Run r = run("mis --n 6 --ell 2 --t 2");
    check_rc(r, 0, "mis");
    check_eq(r.out, "size=5 exact=true\n", "mis output");

    const json j = parse(run("mis --n 6 --ell 2 --t 2 --witness --format json"), "mis json");
    check(j["size"] == "5" && j["exact"] == true && j["witness"].size() == 5,
          "mis json fields");

    r = run("mis --n 7 --ell 2 --t 2 --greedy");
    check_rc(r, 0, "mis greedy");
    check(r.out.find("exact=false") != std::string::npos, "mis greedy is marked inexact");
}

void code_check_contract() {
    Run r = run("code-check --ell 2 --t 2 --word 00000 --word 11111");
    check_rc(r, 0, "code-check pass");
    check_eq(r.out, "ok=true words=2\n", "code-check pass output");

    r = run("code-check --ell 2 --t 2 --all-n 4");
    check_rc(r, 1, "code-check full space");
    check(r.out.find("ok=false") == 0, "code-check full space verdict");
    check(r.out.find("witness=") != std::string::npos, "code-check witness line");

    const std::string path = "/tmp/nanoread_cli_words.txt";
    std::ofstream f(path);
    f << "# two far apart words\n00000000\n11111111\n\n";
    f.close();
    r = run("code-check --ell 2 --t 2 --words " + path);
    check_rc(r, 0, "code-check word file");
    check_eq(r.out, "ok=true words=2\n", "code-check word file output");
    std::remove(path.c_str());

    check_rc(run("code-check --ell 2 --t 2"), 2, "code-check without words");
    check_rc(run("code-check --ell 2 --t 2 --all-n 4 --word 0101"), 2,
             "code-check with two sources");
}

void sweep_contract() {
    Run r = run("sweep --kind bound --n-list 15,31 --t 2 --ell 2 --eps 0.1");
    check_rc(r, 0, "sweep bound");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    check_eq(line, "n,p,m,log2_cover,bound,t_log2_n,gap", "sweep bound header");
    std::getline(lines, line);
    check_eq(line, "15,2,3,14.426265,0.573735,7.813781,7.240046", "sweep bound first row");

    r = run("sweep --kind gap --m-list 4 --t 2 --ell 2 --eps 0.1");
    check_rc(r, 0, "sweep gap");
    check_eq(r.out, "n,k,redundancy,bound,gap\n15,7,8,0.573735,7.426265\n", "sweep gap rows");

    r = run("sweep --kind s1 --eps 0.9 --s 1 --exp-lo 10 --exp-hi 12");
    check_rc(r, 0, "sweep s1");
    check(r.out.rfind("exp,n,p,m,log2_s1\n", 0) == 0, "sweep s1 header");

    const json j = parse(run("sweep --kind s1 --eps 0.9 --s 1 --exp-lo 10 --exp-hi 12 "
                             "--format json"),
                         "sweep json");
    check(j["rows"].size() == 3 && j["rows"][0]["p"] == 1, "sweep json rows");

    check_rc(run("sweep --kind nonsense"), 2, "sweep unknown kind");
}

void misc_contract() {
    check_rc(run("--help"), 0, "top level help");
    check_rc(run("read --help"), 0, "subcommand help");
    check_rc(run(""), 2, "missing subcommand");
    check_rc(run("frobnicate"), 2, "unknown subcommand");
    check_rc(run("read --x 01 --ell 2 --bogus"), 2, "unknown flag");

    const std::string path = "/tmp/nanoread_cli_out.txt";
    Run r = run("read --x 011010 --ell 3 --out " + path);
    check_rc(r, 0, "write to file");
    check_eq(r.out, "", "file mode leaves stdout empty");
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    check_eq(content.str(), "0,1,2,2,2,1,1,0\n", "file mode payload");
    std::remove(path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: nanoread_cli_tests <path-to-nanoread-binary>\n";
        return 2;
    }
    cli = argv[1];

    read_contract();
    perm_contract();
    codec_contract();
    simulate_contract();
    cover_contract();
    bound_contract();
    mis_contract();
    code_check_contract();
    sweep_contract();
    misc_contract();

    if (failures) {
        std::cout << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
