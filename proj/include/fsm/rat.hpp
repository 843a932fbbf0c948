#pragma once

#include <gmpxx.h>

#include <string>

namespace fsm {

// Exact rationals; gmp keeps them canonical after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);

Int factorial(long n);
Int binomial(long n, long k);

bool is_integer(const Rat& r);

// Square root inside Q, if it exists.
bool rat_sqrt(const Rat& r, Rat& out);

} // namespace fsm
