#pragma once

#include <gmpxx.h>

namespace connmat {

using BigInt = mpz_class;

BigInt factorial(unsigned long k);
BigInt pow_ui(const BigInt& base, unsigned long exp);

}  // namespace connmat
