#pragma once

#include <gmpxx.h>

namespace gorbetti {

// All combinatorial quantities are exact; binomials outgrow 64 bits quickly,
// so every integer in the core modules is arbitrary precision.
using Integer = mpz_class;
using Rational = mpq_class;

} // namespace gorbetti
