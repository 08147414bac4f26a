#pragma once

#include <cstdint>
#include <stdexcept>

namespace shf::specfun {

// Angular momentum value j or projection m stored as 2j so that
// half-integers stay exact. Negative projections are allowed.
class HalfInteger {
  public:
    constexpr HalfInteger() = default;
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}

    // Construct from an integer value (j = n, not n/2).
    static constexpr HalfInteger from_int(int n) { return HalfInteger(2 * n); }
    static constexpr HalfInteger half(int twice) { return HalfInteger(twice); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
        return HalfInteger(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
        return HalfInteger(a.twice_ - b.twice_);
    }
    friend constexpr bool operator==(HalfInteger a, HalfInteger b) { return a.twice_ == b.twice_; }
    friend constexpr bool operator<(HalfInteger a, HalfInteger b) { return a.twice_ < b.twice_; }
    friend constexpr bool operator<=(HalfInteger a, HalfInteger b) { return a.twice_ <= b.twice_; }

  private:
    int twice_ = 0;
};

// ln(n!). Relative error below 1e-14 for n <= 400.
double log_factorial(long n);

// C(a, b). Zero when b < 0 or b > a. Exact while the result fits a double.
double binomial(long a, long b);

// Associated Laguerre polynomial L_n^alpha(x), evaluated from the finite
// sum  sum_k (-1)^k C(n+alpha, n-k) x^k / k!  (the mathematical convention,
// which differs from some physics texts).
double assoc_laguerre(int n, int alpha, double x);

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> via the Racah sum with
// factorial ratios evaluated in log space. Returns 0 for m != m1+m2, for
// triangle violations and for invalid (j, m) combinations. Results are
// cached; lookups are safe from concurrent threads.
double clebsch_gordan(HalfInteger j1, HalfInteger m1,
                      HalfInteger j2, HalfInteger m2,
                      HalfInteger j, HalfInteger m);

// Gauss hypergeometric F(1, b; c; x) for integer b, c >= 1 and 0 <= x < 1,
// summed until the next term drops below 1e-16 of the partial sum.
double gauss_2f1_a1(int b, int c, double x);

} // namespace shf::specfun
