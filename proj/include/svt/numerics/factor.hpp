#pragma once

#include "svt/numerics/poly.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace svt::num {

using ZPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;

mpz_class content(const ZPoly& f);
// Content removed and leading coefficient made positive.
ZPoly primitive_part(const ZPoly& f);
// Clears denominators and content; leading coefficient positive.
ZPoly to_primitive_z(const QPoly& f);
QPoly to_q(const ZPoly& f);
mpz_class max_norm(const ZPoly& f);
mpz_class one_norm(const ZPoly& f);

// Squarefree decomposition over Q: f = c * prod g_i^i with g_i primitive, squarefree, pairwise coprime.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);
ZPoly squarefree_part(const ZPoly& f);
bool is_squarefree(const ZPoly& f);

// Irreducible factors of a primitive squarefree integer polynomial.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);
// Irreducible factorization with multiplicities, up to a constant factor.
std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f);
bool is_irreducible(const ZPoly& f);

}  // namespace svt::num
