#pragma once

#include "svt/numerics/algebraic.hpp"
#include "svt/numerics/factor.hpp"

#include <memory>
#include <optional>
#include <string>

namespace svt::num {

// Q(theta) with theta a root of an irreducible integer polynomial.
struct NumberField {
    ZPoly minpoly;
    QPoly modulus;  // monic rational copy of minpoly
    std::optional<AlgebraicNumber> generator;  // distinguished embedding, when known

    int degree() const { return minpoly.degree(); }
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Builds a field; throws MalformedInput when the polynomial is reducible.
FieldPtr make_field(const ZPoly& minpoly, std::optional<AlgebraicNumber> generator = std::nullopt);

// Element of a number field stored as a reduced polynomial in theta.  A null field means the
// element is rational and combines with any field.
class NfElem {
public:
    NfElem() = default;
    NfElem(long v) : v_(mpq_class(v)) {}  // NOLINT
    NfElem(const mpq_class& v) : v_(v) {}  // NOLINT
    NfElem(FieldPtr field, QPoly v);

    static NfElem generator(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const QPoly& poly() const { return v_; }
    bool is_rational() const { return v_.degree() <= 0; }
    mpq_class rational_value() const { return v_.coeff(0); }

    NfElem operator-() const { return NfElem(field_, -v_); }
    friend NfElem operator+(const NfElem& a, const NfElem& b);
    friend NfElem operator-(const NfElem& a, const NfElem& b);
    friend NfElem operator*(const NfElem& a, const NfElem& b);
    friend NfElem operator/(const NfElem& a, const NfElem& b);
    NfElem& operator+=(const NfElem& b) { return *this = *this + b; }
    NfElem& operator-=(const NfElem& b) { return *this = *this - b; }
    NfElem& operator*=(const NfElem& b) { return *this = *this * b; }
    NfElem& operator/=(const NfElem& b) { return *this = *this / b; }
    friend bool operator==(const NfElem& a, const NfElem& b) { return a.v_ == b.v_; }
    friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }

    NfElem inv() const;
    // Value at a ball enclosing the generator's embedding.
    ComplexBall embed(const ComplexBall& theta) const;
    // Characteristic polynomial of multiplication by this element (monic, degree [K:Q]).
    QPoly charpoly() const;
    std::string to_string() const;

private:
    FieldPtr field_;
    QPoly v_;
};

inline bool is_zero(const NfElem& a) { return a.poly().is_zero(); }
inline NfElem exact_div(const NfElem& a, const NfElem& b) { return a / b; }

// Minimal polynomial over Q (primitive integer) of a field element.
ZPoly minimal_polynomial(const NfElem& a);

// Primitive element of Q(a, b) for algebraic numbers a, b: returns the field (with distinguished
// embedding matching the boxes) and the images of a and b in it.
struct Compositum {
    FieldPtr field;
    NfElem a, b;
};
Compositum compositum(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace svt::num
