#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "nanoread/clique_cover.hpp"

namespace nanoread {

namespace {

constexpr long double kLn2 = 0.6931471805599453094172321214581766L;

void check_mpt(int m, int p, int t) {
    if (m < 1) throw std::invalid_argument("counting needs m >= 1");
    if (p < 1) throw std::invalid_argument("counting needs p >= 1");
    if (t < 1) throw std::invalid_argument("counting needs t >= 1");
}

mpz_class lambda_tilde_size(int p) {
    mpz_class full = 1;
    full <<= 2 * p;
    return full - 2 * p;
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

long double log2_lambda(int p) {
    // lambda = 1 - 2p * 4^-p, evaluated without cancellation.
    long double delta = ldexpl((long double)(2 * p), -2 * p);
    return log1pl(-delta) / kLn2;
}

}  // namespace

double log2_mpz(const mpz_class& z) {
    if (z <= 0) throw std::invalid_argument("log2 of a non-positive integer");
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return double(exp) + std::log2(d);
}

mpz_class count_cliques_formula(int m, int p, int t) {
    check_mpt(m, p, t);
    const mpz_class lt = lambda_tilde_size(p);

    // Plain words and partially designated labels: 2^i C(m,i) |plain|^(m-i).
    mpz_class total = 0;
    for (int i = 0; i <= std::min(t - 1, m); ++i) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), lt.get_mpz_t(), m - i);
        total += (binom(m, i) << i) * pw;
    }
    // Fully designated labels, grouped by the count r of plain blocks before
    // the last designated one; the 2p(m-t-r) free bits after it stay exact.
    if (m >= t) {
        mpz_class second = 0;
        mpz_class ltr = 1;
        for (int r = 0; r <= m - t; ++r) {
            mpz_class term = binom(r + t - 1, t - 1) * ltr;
            term <<= std::size_t(2 * p) * std::size_t(m - t - r);
            second += term;
            ltr *= lt;
        }
        total += second << t;
    }
    return total;
}

mpz_class count_cliques_enumerate(int m, int p, int t) {
    check_mpt(m, p, t);
    {
        mpz_class predicted = count_cliques_formula(m, p, t);
        if (predicted > 100000000) {
            throw std::invalid_argument("enumeration would generate " + predicted.get_str() +
                                        " labels; use the closed form instead");
        }
    }
    const std::vector<std::uint32_t> plain = lambda_tilde(p);
    const std::uint64_t plain_count = plain.size();

    // Counts labels by running odometers over every tuple shape instead of
    // multiplying anything out; the formula above must match this walk.
    mpz_class total = 0;

    // Plain words: |plain|^m via an explicit odometer.
    {
        std::vector<std::uint64_t> odo(m, 0);
        std::uint64_t count = 0;
        for (;;) {
            ++count;
            int pos = m - 1;
            while (pos >= 0 && odo[pos] + 1 == plain_count) odo[pos--] = 0;
            if (pos < 0) break;
            ++odo[pos];
        }
        total += count;
    }

    // Designated labels at level i: choose ascending positions, fill the rest.
    for (int level = 1; level <= std::min(t, m); ++level) {
        const bool full = level == t;
        std::vector<int> pos(level);
        for (int i = 0; i < level; ++i) pos[i] = i + 1;
        mpz_class level_total = 0;
        for (;;) {
            // Filler blocks: everything outside the designated positions when
            // below t, only the gaps before the last designated position at t.
            int fillers = full ? pos.back() - level : m - level;
            std::uint64_t tuples = 1;
            {
                std::vector<std::uint64_t> odo(fillers, 0);
                std::uint64_t count = 0;
                for (;;) {
                    ++count;
                    int q = fillers - 1;
                    while (q >= 0 && odo[q] + 1 == plain_count) odo[q--] = 0;
                    if (q < 0) break;
                    ++odo[q];
                }
                tuples = count;
            }
            if (full) {
                // Free suffix of 2p(m - pos_t) bits, walked one word at a time.
                int free_bits = 2 * p * (m - pos.back());
                std::uint64_t count = 0;
                BinaryWord w = BinaryWord::zeros(free_bits);
                for (;;) {
                    ++count;
                    int q = free_bits - 1;
                    while (q >= 0 && w[q] == 1) w[q--] = 0;
                    if (q < 0) break;
                    w[q] = 1;
                }
                tuples *= count;
            }
            level_total += tuples;

            // Next ascending position tuple.
            int idx = level - 1;
            while (idx >= 0 && pos[idx] == m - (level - 1 - idx)) --idx;
            if (idx < 0) break;
            ++pos[idx];
            for (int q = idx + 1; q < level; ++q) pos[q] = pos[q - 1] + 1;
        }
        total += level_total << level;  // two orientations per designated block
    }
    return total;
}

mpz_class cover_size(const CoverParams& params) {
    params.validate();
    mpz_class count = count_cliques_formula(params.m(), params.p, params.t);
    count <<= params.n - params.covered_len();
    return count;
}

Log2Cover log2_cover_size(const CoverParams& params) {
    params.validate();
    Log2Cover out;
    out.p = params.p;
    out.m = params.m();
    out.log2_total = log2_mpz(cover_size(params));
    out.term_base = double(params.n) - double(2 * params.p - 1) * params.t;
    if (out.m >= params.t) {
        const long double lambda = 1.0L - ldexpl((long double)(2 * params.p), -2 * params.p);
        long double series = 0, term = 1;
        for (long long r = 0;; ++r) {
            series += term;
            if (r == out.m - params.t) break;
            term *= lambda * (long double)(r + params.t) / (long double)(r + 1);
        }
        out.term_series = double(log2l(series));
        out.term_rest = out.log2_total - out.term_base - *out.term_series;
    }
    return out;
}

BoundReport redundancy_lower_bound(int n, int t, int ell, double epsilon) {
    if (n < 2) throw std::invalid_argument("bound needs n >= 2");
    if (t < 1) throw std::invalid_argument("bound needs t >= 1");
    if (ell < 2) throw std::invalid_argument("bound needs ell >= 2");
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("bound needs 0 < epsilon < 1");
    }
    BoundReport report;
    report.n = n;
    report.t = t;
    report.ell = ell;
    // Pull the ceiling down by an epsilon so exact integers like 9.0 do not
    // round up when the product is computed in floating point.
    long double target = 0.5L * (1.0L - (long double)epsilon) * log2l((long double)n);
    report.p = std::max(1, int(ceill(target - 1e-9L)));

    CoverParams params{n, report.p, t, ell};
    params.validate();  // rejects n too small for the prescribed p
    report.m = params.m();
    report.cover_cliques = cover_size(params);
    report.log2_cover = log2_mpz(report.cover_cliques);
    report.bound = double(n) - report.log2_cover;
    report.t_log2_n = double(t) * std::log2(double(n));
    report.gap = report.t_log2_n - report.bound;
    return report;
}

S1Result partial_sum_s1(int s, long long m, int p) {
    if (s < 0) throw std::invalid_argument("series head needs s >= 0");
    if (m < 1) throw std::invalid_argument("series head needs m >= 1");
    if (p < 1) throw std::invalid_argument("series head needs p >= 1");
    const long double l2_lambda = log2_lambda(p);
    const int top = int(std::min<long long>(s, m));
    std::vector<long double> logs;
    logs.reserve(top + 1);
    for (int i = 0; i <= top; ++i) {
        long double l2_binom =
            (lgammal((long double)m + 1) - lgammal((long double)i + 1) -
             lgammal((long double)(m - i) + 1)) /
            kLn2;
        logs.push_back(l2_binom + (long double)(m - i) * l2_lambda -
                       (long double)(2 * p - 1) * i);
    }
    long double peak = logs[0];
    for (long double v : logs) peak = std::max(peak, v);
    long double acc = 0;
    for (long double v : logs) acc += exp2l(v - peak);
    long double log2_value = peak + log2l(acc);
    S1Result out;
    out.log2_value = double(log2_value);
    out.value = double(exp2l(log2_value));
    return out;
}

double partial_sum_s2(long long r_max, int t, double lambda) {
    if (r_max < 0) throw std::invalid_argument("series needs r_max >= 0");
    if (t < 1) throw std::invalid_argument("series needs t >= 1");
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw std::invalid_argument("series needs 0 < lambda < 1");
    }
    long double sum = 0, term = 1;
    for (long long r = 0; r <= r_max; ++r) {
        sum += term;
        term *= (long double)lambda * (long double)(r + t) / (long double)(r + 1);
    }
    return double(sum);
}

}  // namespace nanoread
