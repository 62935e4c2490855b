#include "clearlab/ring.hpp"

#include <stdexcept>

#include "clearlab/error.hpp"

namespace clearlab {

RingPtr Ring::integers() {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::integers;
    r->finite_ = false;
    r->commutative_ = true;
    r->name_ = "Z";
    return r;
}

RingPtr Ring::modular(std::uint64_t n) {
    if (n < 2)
        throw std::invalid_argument("modulus must be at least 2, got " +
                                    std::to_string(n));
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::modular;
    r->modulus_ = n;
    r->finite_ = true;
    r->commutative_ = true;
    r->name_ = "Z/" + std::to_string(n);
    return r;
}

RingPtr Ring::product(RingPtr left, RingPtr right) {
    if (!left || !right)
        throw std::invalid_argument("product of null ring handles");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::product;
    r->left_ = std::move(left);
    r->right_ = std::move(right);
    r->finite_ = r->left_->finite() && r->right_->finite();
    r->commutative_ = r->left_->commutative() && r->right_->commutative();
    // left-associated chains print without parentheses; anything else is
    // parenthesized so that name() stays injective on structure
    const std::string& rn = r->right_->name();
    r->name_ = r->left_->name() + " x " +
               (r->right_->kind() == RingKind::product ? "(" + rn + ")" : rn);
    return r;
}

RingPtr Ring::matrix_ring(RingPtr base, int size) {
    if (!base) throw std::invalid_argument("matrix ring over null handle");
    if (size < 1)
        throw std::invalid_argument("matrix size must be at least 1, got " +
                                    std::to_string(size));
    if (!base->commutative())
        throw std::invalid_argument(
            "matrix ring requires a commutative base, got " + base->name());
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::matrix;
    r->base_ = std::move(base);
    r->size_ = size;
    r->finite_ = r->base_->finite();
    r->commutative_ = (size == 1) && r->base_->commutative();
    r->name_ = "M" + std::to_string(size) + "(" + r->base_->name() + ")";
    return r;
}

Int Ring::cardinality() const {
    switch (kind_) {
    case RingKind::integers:
        throw InfiniteRingError("infinite ring: " + name_);
    case RingKind::modular:
        return Int(modulus_);
    case RingKind::product:
        return left_->cardinality() * right_->cardinality();
    case RingKind::matrix: {
        Int c = base_->cardinality();
        Int out = 1;
        for (int i = 0; i < size_ * size_; ++i) out *= c;
        return out;
    }
    }
    throw std::logic_error("unreachable ring kind");
}

} // namespace clearlab
