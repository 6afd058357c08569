#pragma once

#include "igr/errors.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace igr {

// gmpxx has no long long constructor; this platform's long is 64-bit.
inline mpz_class to_mpz(long long v) {
    return mpz_class(static_cast<long>(v));
}

inline mpz_class binomial(const mpz_class& a, unsigned long b) {
    mpz_class out;
    mpz_bin_ui(out.get_mpz_t(), a.get_mpz_t(), b);
    return out;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

namespace detail {

// Exact value of an MPFR number as a rational (MPFR values are dyadic).
inline mpq_class mpfr_to_mpq(mpfr_t x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    mpz_class mant;
    const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    mpq_class out(mant);
    if (e >= 0) {
        mpz_class shift;
        mpz_mul_2exp(shift.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        out = mpq_class(shift);
    } else {
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return out;
}

} // namespace detail

// Directed-rounding bound on log2 of a positive integer, returned as an
// exact dyadic rational. lower=true rounds every step down (the result
// is <= log2 a); lower=false rounds up.
inline mpq_class log2_bound(const mpz_class& a, bool lower, mpfr_prec_t prec = 64) {
    if (a <= 0) throw input_error("log2_bound: argument must be positive");
    const mpfr_rnd_t rnd = lower ? MPFR_RNDD : MPFR_RNDU;
    mpfr_t x;
    mpfr_init2(x, prec);
    mpfr_set_z(x, a.get_mpz_t(), rnd);
    mpfr_log2(x, x, rnd);
    mpq_class out = detail::mpfr_to_mpq(x);
    mpfr_clear(x);
    return out;
}

// floor(base^exponent) for integer base >= 1 and real exponent >= 0,
// computed with correctly rounded MPFR arithmetic.
inline mpz_class floor_pow(long long base, double exponent, mpfr_prec_t prec = 128) {
    if (base < 1 || exponent < 0) throw input_error("floor_pow: require base >= 1 and exponent >= 0");
    mpfr_t x, e;
    mpfr_init2(x, prec);
    mpfr_init2(e, prec);
    mpfr_set_si(x, base, MPFR_RNDN);
    mpfr_set_d(e, exponent, MPFR_RNDN);
    mpfr_pow(x, x, e, MPFR_RNDD);
    mpfr_floor(x, x);
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), x, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_clear(e);
    return out;
}

// ceil(2^sqrt(n)) — the per-n collection size k_n.
inline mpz_class k_n_formula(long long n, mpfr_prec_t prec = 128) {
    if (n < 0) throw input_error("k_n_formula: negative n");
    mpfr_t x;
    mpfr_init2(x, prec);
    mpfr_set_si(x, n, MPFR_RNDN);
    mpfr_sqrt(x, x, MPFR_RNDN);
    mpfr_exp2(x, x, MPFR_RNDN);
    mpfr_ceil(x, x);
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), x, MPFR_RNDN);
    mpfr_clear(x);
    return out;
}

inline std::string to_string(const mpz_class& z) { return z.get_str(); }

} // namespace igr
