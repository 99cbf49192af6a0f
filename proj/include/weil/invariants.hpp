#pragma once

// Ad-invariant polynomials (Sym^k g*)^g, the kernel of the coadjoint action
// extended as a derivation of Sym g*. Invariance is infinitesimal, so this is
// (Sym g*)^G only for connected G.

#include <vector>

#include "weil/liealg.hpp"
#include "weil/weil_algebra.hpp"

namespace weil {

/// Echelon basis of (Sym^k g*)^g, as Weil elements of bidegree (0, k).
std::vector<WeilElement> invariant_basis(const LieAlgebra& l, int k, Exec exec = default_exec());

/// dim (Sym^k g*)^g for k = 0..max_k.
std::vector<std::size_t> invariant_dims(const LieAlgebra& l, int max_k, Exec exec = default_exec());

/// True iff a has no exterior part.
bool is_symmetric(const WeilElement& a);

/// P(~lambda) -> P(Omega): invariant polynomials to basic elements.
WeilElement invariant_to_basic(const LieAlgebra& l, const WeilElement& p);

/// Inverse of invariant_to_basic on basic elements. Throws DomainError if
/// the result still has an exterior part, i.e. a was not basic.
WeilElement basic_to_invariant(const LieAlgebra& l, const WeilElement& a);

}  // namespace weil
