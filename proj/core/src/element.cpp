#include "clearlab/element.hpp"

#include <stdexcept>

namespace clearlab {

namespace {

[[noreturn]] void kind_mismatch(const char* what, const Ring& ring) {
    throw std::invalid_argument(std::string(what) + " undefined over " + ring.name());
}

void require_same_ring(const Element& a, const Element& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("mixed-ring arithmetic: " + a.ring()->name() +
                                    " vs " + b.ring()->name());
}

} // namespace

Element Element::zero(const RingPtr& ring) {
    switch (ring->kind()) {
    case RingKind::integers: return Element(ring, Int(0));
    case RingKind::modular: return Element(ring, std::uint64_t(0));
    case RingKind::product:
        return Element(ring, std::vector<Element>{zero(ring->left()), zero(ring->right())});
    case RingKind::matrix: {
        std::vector<Element> e(static_cast<std::size_t>(ring->size()) * ring->size(),
                               zero(ring->base()));
        return Element(ring, std::move(e));
    }
    }
    throw std::logic_error("unreachable");
}

Element Element::one(const RingPtr& ring) {
    switch (ring->kind()) {
    case RingKind::integers: return Element(ring, Int(1));
    case RingKind::modular: return Element(ring, std::uint64_t(1));
    case RingKind::product:
        return Element(ring, std::vector<Element>{one(ring->left()), one(ring->right())});
    case RingKind::matrix: {
        int k = ring->size();
        std::vector<Element> e;
        e.reserve(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                e.push_back(i == j ? one(ring->base()) : zero(ring->base()));
        return Element(ring, std::move(e));
    }
    }
    throw std::logic_error("unreachable");
}

Element Element::from_int(const RingPtr& ring, const Int& value) {
    switch (ring->kind()) {
    case RingKind::integers: return Element(ring, value);
    case RingKind::modular: {
        Int n(ring->modulus());
        Int r = value % n;
        if (r < 0) r += n;
        return Element(ring, static_cast<std::uint64_t>(r));
    }
    default: kind_mismatch("integer literal", *ring);
    }
}

Element Element::pair(const RingPtr& product_ring, Element left, Element right) {
    if (product_ring->kind() != RingKind::product)
        kind_mismatch("pair", *product_ring);
    if (!same_ring(left.ring(), product_ring->left()) ||
        !same_ring(right.ring(), product_ring->right()))
        throw std::invalid_argument("pair components do not match " +
                                    product_ring->name());
    return Element(product_ring, std::vector<Element>{std::move(left), std::move(right)});
}

Element Element::matrix(const RingPtr& matrix_ring, std::vector<Element> entries) {
    if (matrix_ring->kind() != RingKind::matrix)
        kind_mismatch("matrix", *matrix_ring);
    std::size_t want =
        static_cast<std::size_t>(matrix_ring->size()) * matrix_ring->size();
    if (entries.size() != want)
        throw std::invalid_argument("matrix over " + matrix_ring->name() +
                                    " needs " + std::to_string(want) + " entries, got " +
                                    std::to_string(entries.size()));
    for (const Element& e : entries)
        if (!same_ring(e.ring(), matrix_ring->base()))
            throw std::invalid_argument("matrix entry over " + e.ring()->name() +
                                        " does not live in " +
                                        matrix_ring->base()->name());
    return Element(matrix_ring, std::move(entries));
}

Element Element::matrix_from_ints(const RingPtr& matrix_ring,
                                  const std::vector<Int>& entries) {
    std::vector<Element> e;
    e.reserve(entries.size());
    for (const Int& v : entries) e.push_back(from_int(matrix_ring->base(), v));
    return matrix(matrix_ring, std::move(e));
}

const Int& Element::int_value() const {
    if (ring_->kind() != RingKind::integers) kind_mismatch("int_value", *ring_);
    return std::get<Int>(value_);
}

std::uint64_t Element::residue() const {
    if (ring_->kind() != RingKind::modular) kind_mismatch("residue", *ring_);
    return std::get<std::uint64_t>(value_);
}

Int Element::lift() const {
    switch (ring_->kind()) {
    case RingKind::integers: return std::get<Int>(value_);
    case RingKind::modular: return Int(std::get<std::uint64_t>(value_));
    default: kind_mismatch("lift", *ring_);
    }
}

const Element& Element::first() const {
    if (ring_->kind() != RingKind::product) kind_mismatch("first", *ring_);
    return std::get<std::vector<Element>>(value_)[0];
}

const Element& Element::second() const {
    if (ring_->kind() != RingKind::product) kind_mismatch("second", *ring_);
    return std::get<std::vector<Element>>(value_)[1];
}

const Element& Element::entry(int row, int col) const {
    if (ring_->kind() != RingKind::matrix) kind_mismatch("entry", *ring_);
    int k = ring_->size();
    if (row < 0 || row >= k || col < 0 || col >= k)
        throw std::out_of_range("matrix entry index");
    return std::get<std::vector<Element>>(value_)[static_cast<std::size_t>(row) * k + col];
}

const std::vector<Element>& Element::parts() const {
    if (ring_->kind() == RingKind::integers || ring_->kind() == RingKind::modular)
        kind_mismatch("parts", *ring_);
    return std::get<std::vector<Element>>(value_);
}

bool Element::is_zero() const {
    switch (ring_->kind()) {
    case RingKind::integers: return std::get<Int>(value_) == 0;
    case RingKind::modular: return std::get<std::uint64_t>(value_) == 0;
    default: {
        for (const Element& p : std::get<std::vector<Element>>(value_))
            if (!p.is_zero()) return false;
        return true;
    }
    }
}

bool Element::is_one() const { return *this == one(ring_); }

std::string Element::str() const {
    switch (ring_->kind()) {
    case RingKind::integers: return std::get<Int>(value_).str();
    case RingKind::modular: return std::to_string(std::get<std::uint64_t>(value_));
    case RingKind::product:
        return "(" + first().str() + "," + second().str() + ")";
    case RingKind::matrix: {
        int k = ring_->size();
        std::string out = "[";
        for (int i = 0; i < k; ++i) {
            out += i ? ",[" : "[";
            for (int j = 0; j < k; ++j) {
                if (j) out += ",";
                out += entry(i, j).str();
            }
            out += "]";
        }
        return out + "]";
    }
    }
    throw std::logic_error("unreachable");
}

Element operator+(const Element& a, const Element& b) {
    require_same_ring(a, b);
    const RingPtr& ring = a.ring_;
    switch (ring->kind()) {
    case RingKind::integers:
        return Element(ring, std::get<Int>(a.value_) + std::get<Int>(b.value_));
    case RingKind::modular:
        return Element(ring, addmod(std::get<std::uint64_t>(a.value_),
                                    std::get<std::uint64_t>(b.value_),
                                    ring->modulus()));
    default: {
        const auto& pa = std::get<std::vector<Element>>(a.value_);
        const auto& pb = std::get<std::vector<Element>>(b.value_);
        std::vector<Element> out;
        out.reserve(pa.size());
        for (std::size_t i = 0; i < pa.size(); ++i) out.push_back(pa[i] + pb[i]);
        return Element(ring, std::move(out));
    }
    }
}

Element operator-(const Element& a) {
    const RingPtr& ring = a.ring_;
    switch (ring->kind()) {
    case RingKind::integers: return Element(ring, -std::get<Int>(a.value_));
    case RingKind::modular:
        return Element(ring, negmod(std::get<std::uint64_t>(a.value_), ring->modulus()));
    default: {
        const auto& pa = std::get<std::vector<Element>>(a.value_);
        std::vector<Element> out;
        out.reserve(pa.size());
        for (const Element& p : pa) out.push_back(-p);
        return Element(ring, std::move(out));
    }
    }
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
    require_same_ring(a, b);
    const RingPtr& ring = a.ring_;
    switch (ring->kind()) {
    case RingKind::integers:
        return Element(ring, std::get<Int>(a.value_) * std::get<Int>(b.value_));
    case RingKind::modular:
        return Element(ring, mulmod(std::get<std::uint64_t>(a.value_),
                                    std::get<std::uint64_t>(b.value_),
                                    ring->modulus()));
    case RingKind::product: {
        return Element(ring, std::vector<Element>{a.first() * b.first(),
                                                  a.second() * b.second()});
    }
    case RingKind::matrix: {
        int k = ring->size();
        std::vector<Element> out;
        out.reserve(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                Element acc = a.entry(i, 0) * b.entry(0, j);
                for (int t = 1; t < k; ++t) acc = acc + a.entry(i, t) * b.entry(t, j);
                out.push_back(std::move(acc));
            }
        }
        return Element(ring, std::move(out));
    }
    }
    throw std::logic_error("unreachable");
}

bool operator==(const Element& a, const Element& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.value_ == b.value_;
}

Element transpose(const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::matrix) kind_mismatch("transpose", *ring);
    int k = ring->size();
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.push_back(a.entry(j, i));
    return Element::matrix(ring, std::move(out));
}

Element trace(const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::matrix) kind_mismatch("trace", *ring);
    Element acc = a.entry(0, 0);
    for (int i = 1; i < ring->size(); ++i) acc = acc + a.entry(i, i);
    return acc;
}

namespace {

Element det_of_rows(const RingPtr& base, const std::vector<std::vector<Element>>& m) {
    std::size_t k = m.size();
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Element acc = Element::zero(base);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<Element>> minor;
        minor.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Element> row;
            row.reserve(k - 1);
            for (std::size_t t = 0; t < k; ++t)
                if (t != j) row.push_back(m[i][t]);
            minor.push_back(std::move(row));
        }
        Element term = m[0][j] * det_of_rows(base, minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<Element>> rows_of(const Element& a) {
    int k = a.ring()->size();
    std::vector<std::vector<Element>> m;
    m.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::vector<Element> row;
        row.reserve(k);
        for (int j = 0; j < k; ++j) row.push_back(a.entry(i, j));
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

Element determinant(const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::matrix) kind_mismatch("determinant", *ring);
    return det_of_rows(ring->base(), rows_of(a));
}

Element adjugate(const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::matrix) kind_mismatch("adjugate", *ring);
    int k = ring->size();
    if (k == 1) {
        return Element::matrix(ring, {Element::one(ring->base())});
    }
    auto m = rows_of(a);
    std::vector<Element> out(static_cast<std::size_t>(k) * k,
                             Element::zero(ring->base()));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            std::vector<std::vector<Element>> minor;
            minor.reserve(k - 1);
            for (int r = 0; r < k; ++r) {
                if (r == i) continue;
                std::vector<Element> row;
                row.reserve(k - 1);
                for (int c = 0; c < k; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Element cof = det_of_rows(ring->base(), minor);
            if ((i + j) % 2 != 0) cof = -cof;
            // adjugate is the transposed cofactor matrix
            out[static_cast<std::size_t>(j) * k + i] = std::move(cof);
        }
    }
    return Element::matrix(ring, std::move(out));
}

Element scale_matrix(const Element& scalar, const Element& a) {
    const RingPtr& ring = a.ring();
    if (ring->kind() != RingKind::matrix) kind_mismatch("scale_matrix", *ring);
    std::vector<Element> out;
    out.reserve(a.parts().size());
    for (const Element& e : a.parts()) out.push_back(scalar * e);
    return Element::matrix(ring, std::move(out));
}

bool is_unit(const Element& a) { return inverse_of(a).has_value(); }

std::optional<Element> inverse_of(const Element& a) {
    const RingPtr& ring = a.ring();
    switch (ring->kind()) {
    case RingKind::integers: {
        const Int& v = a.int_value();
        if (v == 1 || v == -1) return a;
        return std::nullopt;
    }
    case RingKind::modular: {
        std::uint64_t inv = invmod(a.residue(), ring->modulus());
        if (inv == 0) return std::nullopt;
        return Element::from_int(ring, Int(inv));
    }
    case RingKind::product: {
        auto li = inverse_of(a.first());
        if (!li) return std::nullopt;
        auto ri = inverse_of(a.second());
        if (!ri) return std::nullopt;
        return Element::pair(ring, std::move(*li), std::move(*ri));
    }
    case RingKind::matrix: {
        auto det_inv = inverse_of(determinant(a));
        if (!det_inv) return std::nullopt;
        return scale_matrix(*det_inv, adjugate(a));
    }
    }
    throw std::logic_error("unreachable");
}

Element hom_image(const Element& x, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("hom_image modulus must be at least 2");
    const RingPtr& ring = x.ring();
    if (ring->kind() == RingKind::integers)
        return Element::from_int(Ring::modular(n), x.int_value());
    if (ring->kind() == RingKind::matrix &&
        ring->base()->kind() == RingKind::integers) {
        RingPtr target = Ring::matrix_ring(Ring::modular(n), ring->size());
        std::vector<Element> out;
        out.reserve(x.parts().size());
        for (const Element& e : x.parts())
            out.push_back(Element::from_int(target->base(), e.int_value()));
        return Element::matrix(target, std::move(out));
    }
    throw std::invalid_argument("hom_image expects Z or a matrix over Z, got " +
                                ring->name());
}

} // namespace clearlab
