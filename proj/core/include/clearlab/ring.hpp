#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "clearlab/int_util.hpp"

namespace clearlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { integers, modular, product, matrix };

/// A concrete ring model: Z, Z/n, a finite direct product, or a full matrix
/// ring over a commutative base. Handles are immutable and shared; equality
/// is structural (two independently parsed "M2(Z/4)" handles are the same
/// ring).
class Ring {
public:
    static RingPtr integers();

    /// Residue ring Z/n, n >= 2. Residues are stored canonically in [0, n).
    static RingPtr modular(std::uint64_t n);

    static RingPtr product(RingPtr left, RingPtr right);

    /// size x size matrices over `base`. The base must be commutative;
    /// matrix rings are the only noncommutative models supported, so they
    /// do not nest. Arithmetic works for any size >= 1; the diagonal
    /// reduction and decomposition routines are specific to size 2.
    static RingPtr matrix_ring(RingPtr base, int size);

    RingKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    const RingPtr& left() const { return left_; }
    const RingPtr& right() const { return right_; }
    const RingPtr& base() const { return base_; }
    int size() const { return size_; }

    /// True iff the handle contains no Z leaf.
    bool finite() const { return finite_; }
    bool commutative() const { return commutative_; }

    /// Number of elements. Throws InfiniteRingError on a handle with a Z leaf.
    Int cardinality() const;

    /// Canonical descriptor, e.g. "Z/6", "M2(Z)", "Z/2 x Z/3". Injective on
    /// ring structure, so it doubles as the equality key.
    const std::string& name() const { return name_; }

    bool same_as(const Ring& other) const {
        return this == &other || name_ == other.name_;
    }

private:
    Ring() = default;

    RingKind kind_ = RingKind::integers;
    std::uint64_t modulus_ = 0;
    RingPtr left_, right_;
    RingPtr base_;
    int size_ = 0;
    bool finite_ = false;
    bool commutative_ = true;
    std::string name_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

} // namespace clearlab
