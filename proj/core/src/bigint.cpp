#include "connmat/bigint.hpp"

namespace connmat {

BigInt factorial(unsigned long k) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

BigInt pow_ui(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace connmat
