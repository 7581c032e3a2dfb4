#include <cstdio>

#include "ksnull/report.hpp"

namespace ksnull {

namespace {

Rat pow10(long e)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(BigInt(1), p) : Rat(p);
}

} // namespace

std::string to_decimal(const Rat& q, int digits)
{
    if (sgn(q) == 0)
        return "0";
    Rat a = abs(q);
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
    while (a < pow10(e))
        --e;
    while (a >= pow10(e + 1))
        ++e;
    // N = round-half-up(a * 10^(digits-1-e))
    Rat scaled = a * pow10(digits - 1 - e) + Rat(1, 2);
    BigInt n;
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    BigInt limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    if (n >= limit) {
        n /= 10;
        ++e;
    }
    std::string d = n.get_str();
    std::string out = sgn(q) < 0 ? "-" : "";
    out += d[0];
    if (d.size() > 1) {
        out += '.';
        out += d.substr(1);
    }
    char exp[32];
    std::snprintf(exp, sizeof exp, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += exp;
    return out;
}

} // namespace ksnull
