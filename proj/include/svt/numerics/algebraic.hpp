#pragma once

#include "svt/numerics/ball.hpp"
#include "svt/numerics/error.hpp"
#include "svt/numerics/factor.hpp"

#include <vector>

namespace svt::num {

// A complex algebraic number: its minimal polynomial and a disk isolating it among the conjugates.
struct AlgebraicNumber {
    ZPoly minpoly;
    ComplexBall box;

    int degree() const { return minpoly.degree(); }

    // Validates primitivity and irreducibility of the minimal polynomial.
    static AlgebraicNumber make(const ZPoly& minpoly, const ComplexBall& box);
    static AlgebraicNumber rational(const mpq_class& q);
    // Root of an irreducible polynomial nearest to the approximation (picked among certified roots).
    static AlgebraicNumber nearest_root(const ZPoly& minpoly, const ComplexBall& approx);
};

// Certified disks around all complex roots of a squarefree polynomial, each containing exactly one
// root and of radius <= 2^(1-prec)(1+|mid|).  Sorted by real part, then imaginary part.
std::vector<ComplexBall> conjugate_embeddings(const ZPoly& f, long prec);

// Refines the unique root of a.minpoly inside a.box.
ComplexBall refine_embedding(const AlgebraicNumber& a, long prec);

// Decides whether the number is real, by a sign change of the minimal polynomial across its disk.
bool is_real_root(const AlgebraicNumber& a);

// Index of the unique conjugate (in conjugate_embeddings order) lying in box, or -1 when none or
// several could be proven.
int locate_root(const ZPoly& f, const ComplexBall& box, long prec);

}  // namespace svt::num
