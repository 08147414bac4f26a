#include "shf/specfun.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace shf::specfun {

namespace {

constexpr long kLogFactTableSize = 4096;

const double* log_fact_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogFactTableSize);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (long n = 1; n < kLogFactTableSize; ++n) {
            acc += std::log(static_cast<long double>(n));
            t[n] = static_cast<double>(acc);
        }
        return t;
    }();
    return table.data();
}

} // namespace

double log_factorial(long n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    if (n < kLogFactTableSize) return log_fact_table()[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double binomial(long a, long b) {
    if (a < 0) throw std::domain_error("binomial: negative a");
    if (b < 0 || b > a) return 0.0;
    b = std::min(b, a - b);
    if (a <= 60) {
        // multiplicative form stays exact in double for a <= 60
        double r = 1.0;
        for (long i = 1; i <= b; ++i) r = r * static_cast<double>(a - b + i) / static_cast<double>(i);
        return std::round(r);
    }
    return std::exp(log_factorial(a) - log_factorial(b) - log_factorial(a - b));
}

double assoc_laguerre(int n, int alpha, double x) {
    if (n < 0 || alpha < 0) throw std::domain_error("assoc_laguerre: negative index");
    long double sum = 0.0L;
    long double term = binomial(n + alpha, n); // k = 0
    for (int k = 0;; ++k) {
        sum += term;
        if (k == n) break;
        term *= -x * static_cast<long double>(n - k) /
                (static_cast<long double>(k + 1) * static_cast<long double>(alpha + k + 1));
    }
    return static_cast<double>(sum);
}

namespace {

// The Racah sum: all factorial arguments are integers once the twice-values
// pass the parity checks below, so the half-integer arithmetic stays exact.
double clebsch_gordan_uncached(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    if (tm1 + tm2 != tm) return 0.0;
    // parity: j and m must be both-integer or both-half-integer
    if (((tj1 ^ tm1) | (tj2 ^ tm2) | (tj ^ tm)) & 1) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
    // triangle rule, and j1+j2+j must be an integer
    if ((tj1 + tj2 + tj) & 1) return 0.0;
    if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2) return 0.0;

    const long a1 = (tj1 + tj2 - tj) / 2;
    const long a2 = (tj + tj1 - tj2) / 2;
    const long a3 = (tj + tj2 - tj1) / 2;
    const long a4 = (tj + tj1 + tj2) / 2 + 1;

    const double log_a = log_factorial(a1) + log_factorial(a2) + log_factorial(a3) - log_factorial(a4);
    const double log_b = log_factorial((tj1 + tm1) / 2) + log_factorial((tj1 - tm1) / 2) +
                         log_factorial((tj2 + tm2) / 2) + log_factorial((tj2 - tm2) / 2) +
                         log_factorial((tj + tm) / 2) + log_factorial((tj - tm) / 2);
    const double log_front = 0.5 * (std::log(tj + 1.0) + log_a + log_b);

    // C_n factorial arguments; the sum truncates where any would go negative
    const long c1 = (tj1 + tj2 - tj) / 2;  // - n
    const long c2 = (tj1 - tm1) / 2;       // - n
    const long c3 = (tj2 + tm2) / 2;       // - n
    const long c4 = (tj - tj2 + tm1) / 2;  // + n
    const long c5 = (tj - tj1 - tm2) / 2;  // + n

    const long n_lo = std::max({0L, -c4, -c5});
    const long n_hi = std::min({c1, c2, c3});
    double sum = 0.0;
    for (long n = n_lo; n <= n_hi; ++n) {
        const double log_term = log_front - log_factorial(n) - log_factorial(c1 - n) -
                                log_factorial(c2 - n) - log_factorial(c3 - n) -
                                log_factorial(c4 + n) - log_factorial(c5 + n);
        sum += (n % 2 == 0 ? 1.0 : -1.0) * std::exp(log_term);
    }
    return sum;
}

uint64_t cg_key(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    auto pack = [](int v) { return static_cast<uint64_t>(v + 512) & 0x3FF; };
    return pack(tj1) | pack(tm1) << 10 | pack(tj2) << 20 | pack(tm2) << 30 |
           pack(tj) << 40 | pack(tm) << 50;
}

} // namespace

double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2, HalfInteger m2,
                      HalfInteger j, HalfInteger m) {
    static std::unordered_map<uint64_t, double> cache;
    static std::shared_mutex mutex;

    const uint64_t key = cg_key(j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice());
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double value =
        clebsch_gordan_uncached(j1.twice(), m1.twice(), j2.twice(), m2.twice(), j.twice(), m.twice());
    {
        std::unique_lock lock(mutex);
        cache.emplace(key, value);
    }
    return value;
}

double gauss_2f1_a1(int b, int c, double x) {
    if (b < 1 || c < 1) throw std::domain_error("gauss_2f1_a1: b, c must be >= 1");
    if (x < 0.0 || x >= 1.0) throw std::domain_error("gauss_2f1_a1: need 0 <= x < 1");
    double term = 1.0;
    double sum = 1.0;
    for (long k = 0; k < 1000000; ++k) {
        term *= (b + k) * x / (c + k);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("gauss_2f1_a1: series did not converge");
}

} // namespace shf::specfun
