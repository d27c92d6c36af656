// Command line front end for the nanoread library. One subcommand per
// operation family; every subcommand has a --format json mode and all
// randomized runs take an explicit seed.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nanoread/clique_cover.hpp"
#include "nanoread/codec.hpp"
#include "nanoread/inner_code.hpp"
#include "nanoread/parallel.hpp"
#include "nanoread/permutation.hpp"
#include "nanoread/read_graph.hpp"
#include "nanoread/read_vector.hpp"
#include "nanoread/words.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace nanoread;

struct OutputOpts {
    std::string format = "text";
    std::string path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out, bool sweep_mode = false) {
    const std::string def = sweep_mode ? "csv" : "text";
    out.format = def;
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember(sweep_mode ? std::vector<std::string>{"csv", "json", "text"}
                                         : std::vector<std::string>{"text", "json"}))
        ->default_str(def);
    cmd->add_option("--out", out.path, "write the report to this file instead of stdout");
}

void emit(const OutputOpts& out, const std::string& text, const json& j) {
    std::string payload = out.format == "json" ? j.dump(2) + "\n" : text;
    if (!payload.empty() && payload.back() != '\n') payload += '\n';
    if (out.path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file " + out.path);
        f << payload;
    }
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

SubstitutionPattern parse_edits(const std::string& s) {
    SubstitutionPattern pattern;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        const std::string tok = s.substr(start, comma - start);
        const std::size_t colon = tok.find(':');
        try {
            if (tok.empty() || colon == std::string::npos) throw std::invalid_argument(tok);
            Edit e;
            e.pos = std::stoi(tok.substr(0, colon));
            e.value = std::stoi(tok.substr(colon + 1));
            pattern.edits.push_back(e);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad edit \"" + tok + "\" in --edits, expected pos:value");
        }
        if (comma == s.size()) break;
        start = comma + 1;
    }
    return pattern;
}

std::vector<int> parse_int_list(const std::string& s, const char* flag) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        const std::string tok = s.substr(start, comma - start);
        try {
            if (tok.empty()) throw std::invalid_argument(tok);
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad value \"") + tok + "\" in " + flag);
        }
        if (comma == s.size()) break;
        start = comma + 1;
    }
    return out;
}

// Inner code selection shared by encode/decode/simulate.
struct InnerFlags {
    std::string kind;
    int m = 0;
    int t = 0;
    std::uint32_t shorten = 0;
    int len = 0;
};

void add_inner_opts(CLI::App* cmd, InnerFlags& f) {
    cmd->add_option("--inner", f.kind, "inner code: bch, repetition or identity")
        ->required()
        ->check(CLI::IsMember({"bch", "repetition", "identity"}));
    cmd->add_option("--m", f.m, "BCH field degree (length 2^m - 1)");
    cmd->add_option("--t", f.t, "BCH designed substitution count");
    cmd->add_option("--shorten", f.shorten, "BCH: drop this many leading message bits");
    cmd->add_option("--len", f.len, "repetition/identity block length");
}

InnerCode make_inner(const InnerFlags& f) {
    if (f.kind == "bch") {
        if (f.m == 0 || f.t == 0) throw std::invalid_argument("--inner bch needs --m and --t");
        return InnerCode::bch(f.m, f.t, f.shorten);
    }
    if (f.len == 0) {
        throw std::invalid_argument("--inner " + f.kind + " needs --len");
    }
    return f.kind == "repetition" ? InnerCode::repetition(std::uint32_t(f.len))
                                  : InnerCode::identity(std::uint32_t(f.len));
}

json inner_json(const InnerCode& c) {
    json j;
    j["kind"] = c.kind() == InnerKind::Bch ? "bch"
                : c.kind() == InnerKind::Repetition ? "repetition"
                                                    : "identity";
    j["n"] = c.length();
    j["k"] = c.dimension();
    j["t"] = c.design_errors();
    return j;
}

int run_cli(CLI::App& app, int argc, char** argv) {
    int rc = 0;

    // ---- read ----------------------------------------------------------
    struct {
        std::string x, r, edits, diff;
        int ell = 0;
        bool mod2 = false;
        OutputOpts out;
    } rd;
    auto* read_cmd = app.add_subcommand(
        "read", "Read-vector transform, substitutions, parity prefix, reconstruction");
    read_cmd->add_option("--x", rd.x, "binary word as a 0/1 string");
    read_cmd->add_option("--r", rd.r, "read vector, comma separated; reconstructs the word");
    read_cmd->add_option("--ell", rd.ell, "window length")->required();
    read_cmd->add_option("--edits", rd.edits, "substitutions to apply, pos:value[,pos:value...]");
    read_cmd->add_flag("--mod2", rd.mod2, "also report the mod-2 parity prefix");
    read_cmd->add_option("--diff", rd.diff, "second read vector; report the Hamming distance");
    add_output_opts(read_cmd, rd.out);
    read_cmd->callback([&] {
        if (read_cmd->count("--x") + read_cmd->count("--r") != 1) {
            throw std::invalid_argument("read needs exactly one of --x and --r");
        }
        const bool word_mode = read_cmd->count("--x") > 0;
        ReadVector r = word_mode ? read_vector(BinaryWord::from_string(rd.x), rd.ell)
                                 : ReadVector::from_string(rd.r, rd.ell);
        json j;
        j["ell"] = rd.ell;
        std::string text;
        int effective = -1;
        if (read_cmd->count("--edits")) {
            EditOutcome outcome = apply_substitutions(r, parse_edits(rd.edits));
            r = outcome.result;
            effective = outcome.effective;
        }
        if (word_mode) {
            j["x"] = rd.x;
            j["read"] = r.to_string();
            text = r.to_string();
        } else {
            j["read"] = r.to_string();
            std::optional<BinaryWord> rec = reconstruct_from_clean_read(r);
            j["valid"] = rec.has_value();
            if (rec) {
                j["x"] = rec->to_string();
                text = "x=" + rec->to_string();
            } else {
                text = "invalid";
                rc = 1;
            }
        }
        if (effective >= 0) j["effective"] = effective;
        if (rd.mod2) {
            const std::string p = mod2_prefix(r, r.word_len()).to_string();
            j["mod2"] = p;
            text += "\nmod2=" + p;
        }
        if (read_cmd->count("--diff")) {
            const int d = hamming_distance(r, ReadVector::from_string(rd.diff, rd.ell));
            j["distance"] = d;
            text += "\ndistance=" + std::to_string(d);
        }
        emit(rd.out, text, j);
    });

    // ---- perm ----------------------------------------------------------
    struct {
        int n = 0, p = 0, ell = 0;
        std::string x;
        bool invert = false;
        OutputOpts out;
    } pm;
    auto* perm_cmd = app.add_subcommand("perm", "Interleaving permutation: index map and images");
    perm_cmd->add_option("--n", pm.n, "word length")->required();
    perm_cmd->add_option("--p", pm.p, "block pair count per row group")->required();
    perm_cmd->add_option("--ell", pm.ell, "window length")->required();
    perm_cmd->add_option("--x", pm.x, "word to permute");
    perm_cmd->add_flag("--invert", pm.invert, "apply the inverse permutation to --x");
    add_output_opts(perm_cmd, pm.out);
    perm_cmd->callback([&] {
        const PermSpec spec{pm.n, pm.p, pm.ell};
        const IndexMap f = f_pi(spec);
        json j;
        j["n"] = pm.n;
        j["p"] = pm.p;
        j["ell"] = pm.ell;
        j["map"] = f.to_string();
        std::string text = f.to_string();
        if (perm_cmd->count("--x")) {
            const BinaryWord x = BinaryWord::from_string(pm.x);
            const BinaryWord y = pm.invert ? invert_pi(x, spec) : apply_pi(x, spec);
            j["x"] = pm.x;
            j["inverted"] = pm.invert;
            j["result"] = y.to_string();
            text = y.to_string();
        } else if (pm.invert) {
            throw std::invalid_argument("--invert needs --x");
        }
        emit(pm.out, text, j);
    });

    // ---- encode --------------------------------------------------------
    struct {
        InnerFlags inner;
        int ell = 0;
        std::string msg;
        OutputOpts out;
    } en;
    auto* enc_cmd = app.add_subcommand("encode", "Message to channel word through the parity map");
    add_inner_opts(enc_cmd, en.inner);
    enc_cmd->add_option("--ell", en.ell, "window length")->required();
    enc_cmd->add_option("--msg", en.msg, "message bits as a 0/1 string")->required();
    add_output_opts(enc_cmd, en.out);
    enc_cmd->callback([&] {
        const Codec codec(make_inner(en.inner), en.ell);
        const BinaryWord x = codec.encode(BinaryWord::from_string(en.msg));
        json j;
        j["inner"] = inner_json(codec.inner());
        j["ell"] = en.ell;
        j["message"] = en.msg;
        j["x"] = x.to_string();
        j["read"] = read_vector(x, en.ell).to_string();
        emit(en.out, x.to_string(), j);
    });

    // ---- decode --------------------------------------------------------
    struct {
        InnerFlags inner;
        int ell = 0;
        std::string r;
        OutputOpts out;
    } de;
    auto* dec_cmd = app.add_subcommand("decode", "Recover message and word from a corrupted read");
    add_inner_opts(dec_cmd, de.inner);
    dec_cmd->add_option("--ell", de.ell, "window length")->required();
    dec_cmd->add_option("--r", de.r, "received read vector, comma separated")->required();
    add_output_opts(dec_cmd, de.out);
    dec_cmd->callback([&] {
        const Codec codec(make_inner(de.inner), de.ell);
        const Codec::ReadDecode res = codec.decode_read(ReadVector::from_string(de.r, de.ell));
        json j;
        j["inner"] = inner_json(codec.inner());
        j["ell"] = de.ell;
        j["ok"] = res.ok;
        std::string text;
        if (res.ok) {
            j["message"] = res.message.to_string();
            j["x"] = res.word.to_string();
            j["parity_corrections"] = res.parity_corrections;
            j["read_residual"] = res.read_residual;
            text = "message=" + res.message.to_string() + " x=" + res.word.to_string() +
                   " corrections=" + std::to_string(res.parity_corrections) +
                   " residual=" + std::to_string(res.read_residual);
        } else {
            text = "decode failure";
            rc = 1;
        }
        emit(de.out, text, j);
    });

    // ---- simulate ------------------------------------------------------
    struct {
        InnerFlags inner;
        int ell = 0;
        std::uint64_t trials = 10000;
        int weight = 0;
        std::uint64_t seed = 0;
        int threads = 0;
        OutputOpts out;
    } si;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo of the substitution channel");
    add_inner_opts(sim_cmd, si.inner);
    sim_cmd->add_option("--ell", si.ell, "window length")->required();
    sim_cmd->add_option("--trials", si.trials, "number of trials")->default_str("10000");
    sim_cmd->add_option("--weight", si.weight, "substitutions per trial")->required();
    sim_cmd->add_option("--seed", si.seed, "RNG seed")->required();
    sim_cmd->add_option("--threads", si.threads, "worker cap, 0 = NANOREAD_THREADS or 1");
    add_output_opts(sim_cmd, si.out);
    sim_cmd->callback([&] {
        const Codec codec(make_inner(si.inner), si.ell);
        const SimReport rep = simulate(codec, si.trials, si.weight, si.seed, si.threads);
        json j;
        j["trials"] = rep.trials;
        j["weight"] = rep.weight;
        j["success"] = rep.success;
        j["miscorrect"] = rep.miscorrect;
        j["fail"] = rep.fail;
        j["seed"] = si.seed;
        j["success_rate"] = rep.success_rate;
        j["max_corrections"] = rep.max_corrections;
        j["inner"] = inner_json(codec.inner());
        j["ell"] = si.ell;
        const std::string text =
            "trials=" + std::to_string(rep.trials) + " weight=" + std::to_string(rep.weight) +
            " success=" + std::to_string(rep.success) +
            " miscorrect=" + std::to_string(rep.miscorrect) + " fail=" + std::to_string(rep.fail) +
            " rate=" + fmt6(rep.success_rate);
        emit(si.out, text, j);
    });

    // ---- cover-verify --------------------------------------------------
    struct {
        int n = 0, p = 0, t = 0, ell = 0, threads = 0;
        OutputOpts out;
    } cv;
    auto* cver_cmd = app.add_subcommand(
        "cover-verify", "Exhaustively check clique membership and pairwise read distance");
    cver_cmd->add_option("--n", cv.n, "word length")->required();
    cver_cmd->add_option("--p", cv.p, "block parameter")->required();
    cver_cmd->add_option("--t", cv.t, "substitution budget")->required();
    cver_cmd->add_option("--ell", cv.ell, "window length")->required();
    cver_cmd->add_option("--threads", cv.threads, "worker cap, 0 = NANOREAD_THREADS or 1");
    add_output_opts(cver_cmd, cv.out);
    cver_cmd->callback([&] {
        const CoverParams params{cv.n, cv.p, cv.t, cv.ell};
        const int threads = cv.threads > 0 ? cv.threads : default_thread_count();
        const CoverReport rep = verify_cover(params, threads);
        const mpz_class expect = cover_size(params);
        const bool count_match = mpz_class(rep.distinct_cliques) == expect;
        json j;
        j["params"] = {{"n", cv.n}, {"p", cv.p}, {"t", cv.t}, {"ell", cv.ell}};
        j["words"] = std::to_string(rep.words);
        j["cliques"] = std::to_string(rep.distinct_cliques);
        j["count_formula"] = expect.get_str();
        j["count_match"] = count_match;
        j["membership_ok"] = rep.membership_ok;
        j["distance_ok"] = rep.distance_ok;
        j["max_pair_distance"] = rep.max_pair_distance;
        json levels = json::object();
        for (const auto& [level, cliques] : rep.cliques_per_level) {
            json row;
            row["cliques"] = std::to_string(cliques);
            auto it = rep.max_distance_per_level.find(level);
            row["max_distance"] = it == rep.max_distance_per_level.end() ? 0 : it->second;
            levels[std::to_string(level)] = row;
        }
        j["levels"] = levels;
        const bool ok = rep.ok() && count_match;
        j["verified"] = ok;
        std::string text = std::string("verified=") + (ok ? "true" : "false") +
                           " words=" + std::to_string(rep.words) +
                           " cliques=" + std::to_string(rep.distinct_cliques) +
                           " max_distance=" + std::to_string(rep.max_pair_distance);
        if (rep.unassigned) {
            j["unassigned"] = rep.unassigned->to_string();
            text += "\nunassigned=" + rep.unassigned->to_string();
        }
        if (rep.counterexample) {
            const auto& [a, b] = *rep.counterexample;
            json w;
            w["x"] = a.to_string();
            w["y"] = b.to_string();
            w["distance"] = hamming_distance(read_vector(a, cv.ell), read_vector(b, cv.ell));
            j["counterexample"] = w;
            text += "\ncounterexample=" + a.to_string() + "," + b.to_string();
        }
        if (!ok) rc = 1;
        emit(cv.out, text, j);
    });

    // ---- cover-count ---------------------------------------------------
    struct {
        int m = 0, p = 0, t = 0;
        OutputOpts out;
    } cc;
    auto* ccount_cmd =
        app.add_subcommand("cover-count", "Clique count: closed formula vs direct enumeration");
    ccount_cmd->add_option("--m", cc.m, "number of blocks")->required();
    ccount_cmd->add_option("--p", cc.p, "block parameter")->required();
    ccount_cmd->add_option("--t", cc.t, "substitution budget")->required();
    add_output_opts(ccount_cmd, cc.out);
    ccount_cmd->callback([&] {
        const mpz_class formula = count_cliques_formula(cc.m, cc.p, cc.t);
        const mpz_class enumerated = count_cliques_enumerate(cc.m, cc.p, cc.t);
        const bool match = formula == enumerated;
        json j;
        j["m"] = cc.m;
        j["p"] = cc.p;
        j["t"] = cc.t;
        j["formula"] = formula.get_str();
        j["enumerated"] = enumerated.get_str();
        j["match"] = match;
        const std::string text = "formula=" + formula.get_str() +
                                 ", enumerated=" + enumerated.get_str() +
                                 ", match=" + (match ? "true" : "false");
        if (!match) rc = 1;
        emit(cc.out, text, j);
    });

    // ---- bound ---------------------------------------------------------
    struct {
        int n = 0, t = 0, ell = 0;
        double eps = 0;
        OutputOpts out;
    } bd;
    auto* bound_cmd =
        app.add_subcommand("bound", "Redundancy lower bound from the clique cover size");
    bound_cmd->add_option("--n", bd.n, "word length")->required();
    bound_cmd->add_option("--t", bd.t, "substitution budget")->required();
    bound_cmd->add_option("--ell", bd.ell, "window length")->required();
    bound_cmd->add_option("--eps", bd.eps, "epsilon in p = ceil((1-eps)/2 log2 n)")->required();
    add_output_opts(bound_cmd, bd.out);
    bound_cmd->callback([&] {
        const BoundReport rep = redundancy_lower_bound(bd.n, bd.t, bd.ell, bd.eps);
        json j;
        j["n"] = rep.n;
        j["t"] = rep.t;
        j["ell"] = rep.ell;
        j["epsilon"] = bd.eps;
        j["p"] = rep.p;
        j["m"] = rep.m;
        j["cover_cliques"] = rep.cover_cliques.get_str();
        j["log2_cover"] = rep.log2_cover;
        j["bound"] = rep.bound;
        j["t_log2_n"] = rep.t_log2_n;
        j["gap"] = rep.gap;
        const std::string text = "p=" + std::to_string(rep.p) + " m=" + std::to_string(rep.m) +
                                 " log2_cover=" + fmt6(rep.log2_cover) +
                                 " bound=" + fmt6(rep.bound) + " t_log2_n=" + fmt6(rep.t_log2_n) +
                                 " gap=" + fmt6(rep.gap);
        emit(bd.out, text, j);
    });

    // ---- mis -----------------------------------------------------------
    struct {
        int n = 0, ell = 0, t = 0;
        bool greedy = false, witness = false;
        OutputOpts out;
    } mi;
    auto* mis_cmd = app.add_subcommand(
        "mis", "Maximum independent set of the read-distance confusability graph");
    mis_cmd->add_option("--n", mi.n, "word length")->required();
    mis_cmd->add_option("--ell", mi.ell, "window length")->required();
    mis_cmd->add_option("--t", mi.t, "substitution budget")->required();
    mis_cmd->add_flag("--greedy", mi.greedy, "skip the exact search, report a greedy set");
    mis_cmd->add_flag("--witness", mi.witness, "include the independent set itself");
    add_output_opts(mis_cmd, mi.out);
    mis_cmd->callback([&] {
        MisResult res;
        if (mi.greedy) {
            const ReadGraph g = build_read_graph(mi.n, mi.ell, mi.t);
            res.exact = false;
            std::vector<std::uint32_t> set = greedy_independent_set(g);
            res.size = (unsigned long)set.size();
            for (std::uint32_t v : set) {
                res.witness.push_back(BinaryWord::from_uint(v, std::size_t(mi.n)));
            }
        } else {
            res = max_independent_set(mi.n, mi.ell, mi.t);
        }
        json j;
        j["n"] = mi.n;
        j["ell"] = mi.ell;
        j["t"] = mi.t;
        j["size"] = res.size.get_str();
        j["exact"] = res.exact;
        if (mi.witness) {
            json w = json::array();
            for (const BinaryWord& x : res.witness) w.push_back(x.to_string());
            j["witness"] = w;
        }
        std::string text = "size=" + res.size.get_str() + " exact=" +
                           (res.exact ? "true" : "false");
        if (mi.witness) {
            for (const BinaryWord& x : res.witness) text += "\nw=" + x.to_string();
        }
        emit(mi.out, text, j);
    });

    // ---- code-check ----------------------------------------------------
    struct {
        int ell = 0, t = 0, all_n = 0;
        std::string file;
        std::vector<std::string> words;
        OutputOpts out;
    } ck;
    auto* check_cmd = app.add_subcommand(
        "code-check", "Check the pairwise read-distance property of a word set");
    check_cmd->add_option("--ell", ck.ell, "window length")->required();
    check_cmd->add_option("--t", ck.t, "substitution budget")->required();
    check_cmd->add_option("--all-n", ck.all_n, "check the full space of this word length");
    check_cmd->add_option("--words", ck.file, "file with one 0/1 word per line");
    check_cmd->add_option("--word", ck.words, "word given inline, repeatable");
    add_output_opts(check_cmd, ck.out);
    check_cmd->callback([&] {
        std::vector<BinaryWord> words;
        if ((check_cmd->count("--all-n") > 0) + (check_cmd->count("--words") > 0) +
                (check_cmd->count("--word") > 0) !=
            1) {
            throw std::invalid_argument(
                "code-check needs exactly one of --all-n, --words and --word");
        }
        if (check_cmd->count("--all-n")) {
            if (ck.all_n < 1 || ck.all_n > 20) {
                throw std::invalid_argument("--all-n allows lengths 1..20");
            }
            for (std::uint64_t v = 0; v < (std::uint64_t(1) << ck.all_n); ++v) {
                words.push_back(BinaryWord::from_uint(v, std::size_t(ck.all_n)));
            }
        } else if (check_cmd->count("--words")) {
            std::ifstream f(ck.file);
            if (!f) throw std::invalid_argument("cannot open word file " + ck.file);
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty() || line[0] == '#') continue;
                words.push_back(BinaryWord::from_string(line));
            }
        } else {
            for (const std::string& w : ck.words) words.push_back(BinaryWord::from_string(w));
        }
        const CodeCheckResult res = is_t_sub_read_code(words, ck.ell, ck.t);
        json j;
        j["ell"] = ck.ell;
        j["t"] = ck.t;
        j["words"] = words.size();
        j["ok"] = res.ok;
        std::string text = std::string("ok=") + (res.ok ? "true" : "false") +
                           " words=" + std::to_string(words.size());
        if (res.witness) {
            json w;
            w["x"] = res.witness->x.to_string();
            w["y"] = res.witness->y.to_string();
            w["distance"] = res.witness->distance;
            j["witness"] = w;
            text += "\nwitness=" + res.witness->x.to_string() + "," +
                    res.witness->y.to_string() +
                    " distance=" + std::to_string(res.witness->distance);
        }
        if (!res.ok) rc = 1;
        emit(ck.out, text, j);
    });

    // ---- sweep ---------------------------------------------------------
    struct {
        std::string kind;
        std::string n_list = "15,31,63,127,255";
        std::string m_list = "4,5,6,7,8";
        int t = 2, ell = 2, s = 1;
        int exp_lo = 10, exp_hi = 20;
        double eps = 0.1;
        OutputOpts out;
    } sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweeps as CSV tables");
    sweep_cmd->add_option("--kind", sw.kind, "bound, gap or s1")
        ->required()
        ->check(CLI::IsMember({"bound", "gap", "s1"}));
    sweep_cmd->add_option("--n-list", sw.n_list, "word lengths for kind=bound");
    sweep_cmd->add_option("--m-list", sw.m_list, "BCH field degrees for kind=gap");
    sweep_cmd->add_option("--t", sw.t, "substitution budget");
    sweep_cmd->add_option("--ell", sw.ell, "window length");
    sweep_cmd->add_option("--eps", sw.eps, "epsilon for the bound parameter p");
    sweep_cmd->add_option("--s", sw.s, "partial sum order for kind=s1");
    sweep_cmd->add_option("--exp-lo", sw.exp_lo, "smallest exponent, n = 2^e, for kind=s1");
    sweep_cmd->add_option("--exp-hi", sw.exp_hi, "largest exponent for kind=s1");
    add_output_opts(sweep_cmd, sw.out, /*sweep_mode=*/true);
    sweep_cmd->callback([&] {
        std::string csv;
        json rows = json::array();
        if (sw.kind == "bound") {
            csv = "n,p,m,log2_cover,bound,t_log2_n,gap\n";
            for (int n : parse_int_list(sw.n_list, "--n-list")) {
                const BoundReport r = redundancy_lower_bound(n, sw.t, sw.ell, sw.eps);
                csv += std::to_string(n) + "," + std::to_string(r.p) + "," +
                       std::to_string(r.m) + "," + fmt6(r.log2_cover) + "," + fmt6(r.bound) +
                       "," + fmt6(r.t_log2_n) + "," + fmt6(r.gap) + "\n";
                json row;
                row["n"] = n;
                row["p"] = r.p;
                row["m"] = r.m;
                row["log2_cover"] = r.log2_cover;
                row["bound"] = r.bound;
                row["t_log2_n"] = r.t_log2_n;
                row["gap"] = r.gap;
                rows.push_back(row);
            }
        } else if (sw.kind == "gap") {
            csv = "n,k,redundancy,bound,gap\n";
            for (int m : parse_int_list(sw.m_list, "--m-list")) {
                const InnerCode code = InnerCode::bch(m, sw.t);
                const int n = int(code.length());
                const BoundReport r = redundancy_lower_bound(n, sw.t, sw.ell, sw.eps);
                const double gap = double(code.redundancy()) - r.bound;
                csv += std::to_string(n) + "," + std::to_string(code.dimension()) + "," +
                       std::to_string(code.redundancy()) + "," + fmt6(r.bound) + "," +
                       fmt6(gap) + "\n";
                json row;
                row["n"] = n;
                row["k"] = code.dimension();
                row["redundancy"] = code.redundancy();
                row["bound"] = r.bound;
                row["gap"] = gap;
                rows.push_back(row);
            }
        } else {
            csv = "exp,n,p,m,log2_s1\n";
            if (sw.exp_lo < 1 || sw.exp_hi < sw.exp_lo || sw.exp_hi > 62) {
                throw std::invalid_argument("sweep kind=s1 needs 1 <= exp-lo <= exp-hi <= 62");
            }
            for (int e = sw.exp_lo; e <= sw.exp_hi; ++e) {
                const long long n = 1LL << e;
                const int p = std::max(
                    1, int(std::ceil(0.5 * (1 - sw.eps) * std::log2(double(n)) - 1e-9)));
                const long long m = (sw.ell / 2) * (n / (std::int64_t(p) * sw.ell));
                const S1Result s1 = partial_sum_s1(sw.s, m, p);
                char log2buf[64];
                std::snprintf(log2buf, sizeof log2buf, "%.6f", s1.log2_value);
                csv += std::to_string(e) + "," + std::to_string(n) + "," + std::to_string(p) +
                       "," + std::to_string(m) + "," + log2buf + "\n";
                json row;
                row["exp"] = e;
                row["n"] = n;
                row["p"] = p;
                row["m"] = m;
                row["log2_s1"] = s1.log2_value;
                rows.push_back(row);
            }
        }
        json j;
        j["kind"] = sw.kind;
        j["t"] = sw.t;
        j["ell"] = sw.ell;
        j["epsilon"] = sw.eps;
        j["rows"] = rows;
        emit(sw.out, csv, j);
    });

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nanoread: sliding-window read channel codes, clique covers and bounds"};
    try {
        return run_cli(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
