#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clearlab/ring.hpp"

namespace clearlab {

/// An element of a concrete ring, with exact arithmetic. Values are
/// immutable after construction; every operation returns a fresh value, so
/// unrestricted concurrent use is safe.
///
/// Representation by ring kind:
///   Z        arbitrary-precision integer
///   Z/n      canonical residue in [0, n)
///   product  {left, right}
///   matrix   row-major entry vector over the base ring
class Element {
public:
    static Element zero(const RingPtr& ring);
    static Element one(const RingPtr& ring);

    /// Scalar rings only. Modular values are reduced into [0, n).
    static Element from_int(const RingPtr& ring, const Int& value);

    static Element pair(const RingPtr& product_ring, Element left, Element right);

    /// Row-major entries, all over the base handle.
    static Element matrix(const RingPtr& matrix_ring, std::vector<Element> entries);

    /// Convenience: matrix over a scalar base from integer literals.
    static Element matrix_from_ints(const RingPtr& matrix_ring,
                                    const std::vector<Int>& entries);

    const RingPtr& ring() const { return ring_; }

    const Int& int_value() const;
    std::uint64_t residue() const;
    /// Scalar value as an integer: the Z value itself or the canonical
    /// residue representative.
    Int lift() const;

    const Element& first() const;
    const Element& second() const;
    const Element& entry(int row, int col) const;
    const std::vector<Element>& parts() const;

    bool is_zero() const;
    bool is_one() const;

    /// Literal syntax: "3", "(1,2)", "[[12,5],[0,0]]".
    std::string str() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Element(RingPtr ring, std::variant<Int, std::uint64_t, std::vector<Element>> v)
        : ring_(std::move(ring)), value_(std::move(v)) {}

    RingPtr ring_;
    std::variant<Int, std::uint64_t, std::vector<Element>> value_;
};

// ---- matrix helpers (commutative base guaranteed by Ring::matrix_ring) ----

Element transpose(const Element& a);
Element trace(const Element& a);
/// Determinant by cofactor expansion; exact for any supported size.
Element determinant(const Element& a);
Element adjugate(const Element& a);
/// Entrywise product with a base-ring scalar.
Element scale_matrix(const Element& scalar, const Element& a);

// ---- units ----

/// Exact two-sided unit test, total over every supported ring kind:
/// Z: +-1; Z/n: gcd test; products componentwise; matrices via unit
/// determinant and adjugate.
bool is_unit(const Element& a);
std::optional<Element> inverse_of(const Element& a);

// ---- reduction mod n ----

/// Entrywise reduction Z -> Z/n; defined on Z scalars and matrices over Z.
Element hom_image(const Element& x, std::uint64_t n);

} // namespace clearlab
