#include "clearlab/parse.hpp"

#include <cctype>
#include <limits>

#include "clearlab/error.hpp"

namespace clearlab {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
    }

    std::uint64_t parse_u64(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t value = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                fail_at(start, std::string(what) + " out of range");
            value = value * 10 + digit;
            any = true;
            ++pos_;
        }
        if (!any) fail(std::string("expected ") + what);
        return value;
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            digits += text_[pos_++];
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty() || digits == "-" || digits == "+")
            fail_at(start, "expected integer");
        return Int(digits);
    }

    [[noreturn]] void fail(const std::string& message) { fail_at(pos_, message); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& message) {
        throw ParseError(message + " at position " + std::to_string(at) + " in \"" +
                             std::string(text_) + "\"",
                         at);
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

RingPtr parse_ring_expr(Scanner& s);

RingPtr parse_ring_term(Scanner& s) {
    char c = s.peek();
    if (c == '(') {
        s.consume('(');
        RingPtr inner = parse_ring_expr(s);
        s.expect(')', "ring group");
        return inner;
    }
    if (c == 'Z') {
        s.consume('Z');
        if (s.consume('/')) {
            std::size_t at = s.pos();
            std::uint64_t n = s.parse_u64("modulus");
            if (n < 2) s.fail_at(at, "modulus must be at least 2");
            return Ring::modular(n);
        }
        return Ring::integers();
    }
    if (c == 'M') {
        s.consume('M');
        std::size_t at = s.pos();
        std::uint64_t size = s.parse_u64("matrix size");
        if (size < 1 || size > 16) s.fail_at(at, "matrix size must be in [1,16]");
        s.expect('(', "matrix base");
        RingPtr base = parse_ring_expr(s);
        s.expect(')', "matrix base");
        return Ring::matrix_ring(base, static_cast<int>(size));
    }
    s.fail("expected ring descriptor (Z, Z/n, Mk(...), or parentheses)");
}

RingPtr parse_ring_expr(Scanner& s) {
    RingPtr acc = parse_ring_term(s);
    while (s.peek() == 'x') {
        s.consume('x');
        acc = Ring::product(acc, parse_ring_term(s));
    }
    return acc;
}

Element parse_value(Scanner& s, const RingPtr& ring) {
    switch (ring->kind()) {
    case RingKind::integers:
    case RingKind::modular:
        return Element::from_int(ring, s.parse_int());
    case RingKind::product: {
        s.expect('(', "tuple");
        Element left = parse_value(s, ring->left());
        s.expect(',', "tuple");
        Element right = parse_value(s, ring->right());
        s.expect(')', "tuple");
        return Element::pair(ring, std::move(left), std::move(right));
    }
    case RingKind::matrix: {
        int k = ring->size();
        std::vector<Element> entries;
        entries.reserve(static_cast<std::size_t>(k) * k);
        s.expect('[', "matrix");
        for (int i = 0; i < k; ++i) {
            if (i) s.expect(',', "matrix rows");
            s.expect('[', "matrix row");
            for (int j = 0; j < k; ++j) {
                if (j) s.expect(',', "matrix entries");
                entries.push_back(parse_value(s, ring->base()));
            }
            s.expect(']', "matrix row");
        }
        s.expect(']', "matrix");
        return Element::matrix(ring, std::move(entries));
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

RingPtr parse_ring(std::string_view text) {
    Scanner s(text);
    try {
        RingPtr ring = parse_ring_expr(s);
        if (!s.done()) s.fail("trailing input after ring descriptor");
        return ring;
    } catch (const std::invalid_argument& e) {
        // surface Ring factory rejections with the current position
        throw ParseError(std::string(e.what()) + " at position " +
                             std::to_string(s.pos()) + " in \"" + std::string(text) + "\"",
                         s.pos());
    }
}

Element parse_element(const RingPtr& ring, std::string_view text) {
    Scanner s(text);
    Element value = parse_value(s, ring);
    if (!s.done()) s.fail("trailing input after element literal");
    return value;
}

} // namespace clearlab
