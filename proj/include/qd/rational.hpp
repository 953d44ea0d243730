#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qd {

// Exact rational arithmetic; every state value in this project is a Rat.
using Rat = mpq_class;
using Int = mpz_class;

inline Int int_pow(uint64_t base, uint64_t exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

inline Rat rat_inv(const Int& d) {
    Rat r(1);
    r /= Rat(d);
    return r;
}

// Canonical "p/q" form (q always printed, also for integers).
inline std::string to_pq_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace qd
