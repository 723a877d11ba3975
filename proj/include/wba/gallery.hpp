#pragma once

// Named weak bialgebras used by the tests, the acceptance run and the CLI.

#include "wba/functors.hpp"

namespace wba {

// The finite factor B = k<U | U^N = 1> of the algebraic quantum torus:
// Delta(U^n) = 1/N sum_{j=1..N} U^{j+n} (x) U^{-j}, eps(1) = N, eps(U^n) = 0
// otherwise, antipode S = id attached. Basis "1", "U", "U^2", ...
// Defaults to Q(zeta_N). Throws UnknownName for N outside 1..64.
WeakBialgebra torus_b(int n);
WeakBialgebra torus_b(int n, const Field& f);

// g_omega = 1/N sum_j omega^j U^j for omega = zeta_N^k.
Vector torus_grouplike(const WeakBialgebra& b, int n, int k);

// "k2", "dual_k2", "kiso2", "dual_iso2", "QZ2", "torusB:N". Validated.
// Throws UnknownName.
WeakBialgebra builtin_wba(const std::string& name);
std::vector<std::string> builtin_wba_names();

}  // namespace wba
