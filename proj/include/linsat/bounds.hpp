#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "linsat/errors.hpp"

namespace linsat {

// Exact rational; the Theorem 1.5 bounds are non-integral and must compare
// exactly against integer edge counts, so no floating point anywhere.
struct rational {
    long long num = 0;
    long long den = 1;

    rational() = default;
    rational(long long n) : num(n), den(1) {}
    rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend rational operator+(rational a, rational b) {
        return rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend rational operator-(rational a, rational b) {
        return rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend rational operator*(rational a, rational b) {
        return rational(a.num * b.num, a.den * b.den);
    }
    friend bool operator==(const rational& a, const rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const rational& a, const rational& b) { return a < b || a == b; }

    // Smallest integer >= value; correct for negative values too.
    long long ceil() const {
        long long q = num / den;
        if (num % den != 0 && num > 0) ++q;
        return q;
    }

    bool is_integer() const { return den == 1; }

    std::string to_string() const {
        std::ostringstream os;
        os << num;
        if (den != 1) os << '/' << den;
        return os.str();
    }
};

// A theorem-level quantity: exact value, the integer bound it implies, and
// which theorem it came from. Floor formulas are integral, so value equals
// integer_bound; genuine lower bounds carry their ceiling.
struct bound_value {
    rational value;
    long long integer_bound = 0;
    std::string provenance;
};

inline bound_value make_integral_bound(long long v, std::string provenance) {
    return {rational(v), v, std::move(provenance)};
}

inline bound_value make_lower_bound(rational v, std::string provenance) {
    long long c = v.ceil();
    return {v, c, std::move(provenance)};
}

// sat_k^lin(n, Berge-C_t) >= floor((n-1)/(k-1)) for t >= 3, k >= 3, n >= k;
// independent of t.
inline bound_value sat_lower(long long n, int k, int t) {
    if (t < 3 || k < 3 || n < k)
        throw out_of_domain_error("sat_lower requires t >= 3, k >= 3, n >= k");
    return make_integral_bound((n - 1) / (k - 1), "thm1.2");
}

// sat_k^lin(n, Berge-C_3) = floor((n-1)/(k-1)) exactly, for n >= 6, k >= 3.
inline bound_value sat_c3_exact(long long n, int k) {
    if (n < 6 || k < 3) throw out_of_domain_error("sat_c3_exact requires n >= 6 and k >= 3");
    return make_integral_bound((n - 1) / (k - 1), "thm1.3");
}

// Upper bound for sat_3^lin(n, Berge-C_4), by residue class of n mod 18:
// floor(5(n-s)/6) where s makes 15*floor((n-1)/18) + e(T'_i) come out exactly
// (the published piecewise display misplaces residues 3 and 11 by one; the
// construction arithmetic, which this matches, is the consistent version).
inline bound_value sat_c4_upper(long long n) {
    if (n < 1) throw out_of_domain_error("sat_c4_upper requires n >= 1");
    int r = static_cast<int>(n % 18);
    long long shift;
    if (r == 1 || r == 3 || r == 15 || r == 16) shift = 1;
    else if (r == 8 || r == 9 || r == 10 || r == 12 || r == 13) shift = 3;
    else if (r == 14) shift = 4;
    else shift = 2; // 0, 2, 4, 5, 6, 7, 11, 17
    long long v = 5 * (n - shift);
    // floor of 5(n-shift)/6, valid for negative numerators at tiny n
    long long q = v / 6;
    if (v % 6 != 0 && v < 0) --q;
    return make_integral_bound(q, "thm1.4");
}

// Per-component lower bound for disconnected Berge-C_4-saturated linear
// 3-uniform hypergraphs, by minimum hypergraph degree of the component.
inline bound_value component_lower_c4(long long n_prime, int min_degree) {
    if (n_prime < 1 || min_degree < 0)
        throw out_of_domain_error("component_lower_c4 requires n' >= 1 and delta >= 0");
    if (min_degree == 0) return make_lower_bound(rational(0), "thm1.5");
    if (min_degree == 1)
        return make_lower_bound(rational(2 * n_prime, 3) - rational(2), "thm1.5");
    if (min_degree == 2)
        return make_lower_bound(rational(13 * n_prime - 29, 18), "thm1.5");
    return make_lower_bound(rational(n_prime), "thm1.5");
}

// e(H) >= 2n/3 - 4 for disconnected Berge-C_4-saturated linear 3-uniform H.
inline bound_value disconnected_c4_lower(long long n) {
    if (n < 6) throw out_of_domain_error("disconnected_c4_lower requires n >= 6");
    return make_lower_bound(rational(2 * n, 3) - rational(4), "thm1.5");
}

} // namespace linsat
