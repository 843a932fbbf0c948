#include "fsm/rat.hpp"

#include <stdexcept>

namespace fsm {

Rat make_rat(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("parse_rat: zero denominator");
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Int factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool rat_sqrt(const Rat& r, Rat& out)
{
    if (sgn(r) < 0)
        return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return false;
    Int n = sqrt(r.get_num()), d = sqrt(r.get_den());
    out = Rat(n, d);
    out.canonicalize();
    return true;
}

} // namespace fsm
