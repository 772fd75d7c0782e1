#pragma once

// Brute-force orders of finite groups of Lie type over the prime field F_p.
// These only use matrix arithmetic mod p and serve as oracles for the
// closed-form volume formulas.

#include <cstdint>

namespace spherex::testing {

// |SL_2(F_p)|: all 2x2 matrices with determinant 1.
std::uint64_t count_sl2(int p);

// |PGL_2(F_p)| = |GL_2(F_p)| / (p - 1), with GL_2 counted entry by entry.
std::uint64_t count_pgl2(int p);

// |Sp_4(F_p)| as the number of ordered symplectic bases (e1, f1, e2, f2).
// Each later vector is drawn only from the vectors meeting the pairing
// constraints against the earlier ones.
std::uint64_t count_sp4(int p);

}  // namespace spherex::testing
