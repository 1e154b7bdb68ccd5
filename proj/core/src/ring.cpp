#include "semisym/ring.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <sstream>

namespace semisym {

namespace {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

Int mod_reduce(const Int& v, std::uint64_t m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

// gcd(a, b) = g together with x satisfying a*x = g (mod b); a, b >= 0.
Int ext_gcd_inverse(const Int& a, const Int& m, Int& g) {
    Int old_r = a, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    g = old_r;
    return old_s;
}

void expect(bool cond, const char* msg) {
    if (!cond) throw error(msg);
}

}  // namespace

RingDescriptor RingDescriptor::modular(std::uint64_t m) {
    if (m < 2) throw error("modulus must be at least 2");
    return {RingKind::modular, m};
}

bool RingDescriptor::is_integral_domain() const {
    switch (kind) {
        case RingKind::rational:
        case RingKind::integer:
        case RingKind::eisenstein: return true;
        case RingKind::modular: return is_prime(modulus);
    }
    return false;
}

std::string RingDescriptor::name() const {
    switch (kind) {
        case RingKind::rational: return "Q";
        case RingKind::integer: return "Z";
        case RingKind::modular: return "mod:" + std::to_string(modulus);
        case RingKind::eisenstein: return "eisenstein";
    }
    return "?";
}

RingDescriptor parse_ring_descriptor(std::string_view text) {
    if (text == "Q") return RingDescriptor::rational();
    if (text == "Z") return RingDescriptor::integer();
    if (text == "eisenstein") return RingDescriptor::eisenstein();
    if (text.rfind("mod:", 0) == 0) {
        std::uint64_t m = 0;
        std::string digits(text.substr(4));
        if (digits.empty()) throw error("bad ring descriptor: " + std::string(text));
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw error("bad modulus in ring descriptor: " + std::string(text));
            m = m * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return RingDescriptor::modular(m);
    }
    throw error("unknown ring descriptor: " + std::string(text));
}

void RingElement::normalize() {
    if (desc_.kind == RingKind::modular) {
        a_ = mod_reduce(a_, desc_.modulus);
        b_ = 0;
    }
}

RingElement RingElement::zero(const RingDescriptor& d) {
    RingElement x(d);
    return x;
}

RingElement RingElement::one(const RingDescriptor& d) {
    RingElement x(d);
    if (d.kind == RingKind::rational)
        x.r_ = 1;
    else
        x.a_ = 1;
    return x;
}

RingElement RingElement::from_int(const Int& v, const RingDescriptor& d) {
    RingElement x(d);
    if (d.kind == RingKind::rational)
        x.r_ = Rat(v);
    else
        x.a_ = v;
    x.normalize();
    return x;
}

RingElement RingElement::rational(const Int& num, const Int& den) {
    expect(den != 0, "zero denominator");
    RingElement x(RingDescriptor::rational());
    // cpp_rational rejects negative denominators; normalize the sign here.
    if (den < 0)
        x.r_ = Rat(Int(-num), Int(-den));
    else
        x.r_ = Rat(num, den);
    return x;
}

RingElement RingElement::eisenstein(const Int& a, const Int& b) {
    RingElement x(RingDescriptor::eisenstein());
    x.a_ = a;
    x.b_ = b;
    return x;
}

bool RingElement::is_zero() const {
    if (desc_.kind == RingKind::rational) return r_ == 0;
    return a_ == 0 && b_ == 0;
}

bool RingElement::is_one() const {
    if (desc_.kind == RingKind::rational) return r_ == 1;
    return a_ == 1 && b_ == 0;
}

Int RingElement::integer_value() const {
    if (desc_.kind == RingKind::rational) {
        expect(denominator(r_) == 1, "not an integer value");
        return numerator(r_);
    }
    expect(desc_.kind != RingKind::eisenstein || b_ == 0, "not an integer value");
    return a_;
}

const Rat& RingElement::rational_value() const {
    expect(desc_.kind == RingKind::rational, "not a rational element");
    return r_;
}

Int RingElement::eis_a() const {
    if (desc_.kind == RingKind::rational) {
        expect(denominator(r_) == 1, "not an integral value");
        return numerator(r_);
    }
    return a_;
}

Int RingElement::eis_b() const { return desc_.kind == RingKind::rational ? Int(0) : b_; }

RingElement operator+(const RingElement& x, const RingElement& y) {
    expect(x.desc_ == y.desc_, "ring descriptor mismatch");
    RingElement z(x.desc_);
    if (x.desc_.kind == RingKind::rational) {
        z.r_ = x.r_ + y.r_;
    } else {
        z.a_ = x.a_ + y.a_;
        z.b_ = x.b_ + y.b_;
        z.normalize();
    }
    return z;
}

RingElement operator-(const RingElement& x, const RingElement& y) {
    expect(x.desc_ == y.desc_, "ring descriptor mismatch");
    RingElement z(x.desc_);
    if (x.desc_.kind == RingKind::rational) {
        z.r_ = x.r_ - y.r_;
    } else {
        z.a_ = x.a_ - y.a_;
        z.b_ = x.b_ - y.b_;
        z.normalize();
    }
    return z;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
    expect(x.desc_ == y.desc_, "ring descriptor mismatch");
    RingElement z(x.desc_);
    switch (x.desc_.kind) {
        case RingKind::rational: z.r_ = x.r_ * y.r_; break;
        case RingKind::integer:
        case RingKind::modular:
            z.a_ = x.a_ * y.a_;
            z.normalize();
            break;
        case RingKind::eisenstein:
            // (a + bw)(c + dw) with w^2 = -1 - w.
            z.a_ = x.a_ * y.a_ - x.b_ * y.b_;
            z.b_ = x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_;
            break;
    }
    return z;
}

RingElement RingElement::operator-() const {
    RingElement z(desc_);
    if (desc_.kind == RingKind::rational) {
        z.r_ = -r_;
    } else {
        z.a_ = -a_;
        z.b_ = -b_;
        z.normalize();
    }
    return z;
}

bool RingElement::operator==(const RingElement& y) const {
    if (desc_ != y.desc_) return false;
    if (desc_.kind == RingKind::rational) return r_ == y.r_;
    return a_ == y.a_ && b_ == y.b_;
}

RingElement RingElement::pow(unsigned long long e) const {
    RingElement acc = one(desc_);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1ull) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<RingElement> try_invert(const RingElement& x) {
    const RingDescriptor& d = x.descriptor();
    switch (d.kind) {
        case RingKind::rational: {
            if (x.is_zero()) return std::nullopt;
            Rat r = x.rational_value();
            return RingElement::rational(denominator(r), numerator(r));
        }
        case RingKind::integer: {
            if (x == RingElement::one(d)) return x;
            if (x == -RingElement::one(d)) return x;
            return std::nullopt;
        }
        case RingKind::modular: {
            Int g;
            Int inv = ext_gcd_inverse(x.integer_value(), Int(d.modulus), g);
            if (g != 1) return std::nullopt;
            return RingElement::from_int(inv, d);
        }
        case RingKind::eisenstein: {
            Int a = x.eis_a(), b = x.eis_b();
            Int norm = a * a - a * b + b * b;
            if (norm != 1) return std::nullopt;
            // Conjugate a + b*w^2 = (a - b) - b*w; norm 1 makes it the inverse.
            return RingElement::eisenstein(a - b, -b);
        }
    }
    return std::nullopt;
}

std::optional<RingElement> invert_integer(const Int& v, const RingDescriptor& d) {
    return try_invert(RingElement::from_int(v, d));
}

std::string RingElement::str() const {
    std::ostringstream out;
    switch (desc_.kind) {
        case RingKind::rational:
            if (denominator(r_) == 1)
                out << numerator(r_);
            else
                out << numerator(r_) << "/" << denominator(r_);
            break;
        case RingKind::integer:
        case RingKind::modular: out << a_; break;
        case RingKind::eisenstein: {
            if (b_ == 0) {
                out << a_;
            } else {
                std::string wpart;
                Int babs = b_ < 0 ? Int(-b_) : b_;
                if (babs == 1)
                    wpart = "w";
                else {
                    std::ostringstream t;
                    t << babs << "*w";
                    wpart = t.str();
                }
                if (a_ == 0)
                    out << (b_ < 0 ? "-" : "") << wpart;
                else
                    out << a_ << (b_ < 0 ? "-" : "+") << wpart;
            }
            break;
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    Int integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = take() == '-';
        skip_ws();
        expect(pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])),
               "expected digits in ring element");
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? Int(-v) : v;
    }
};

// One term of an eisenstein literal: integer, w, -w, k*w, ...
void eis_term(Cursor& c, Int& a, Int& b) {
    int sign = 1;
    while (c.peek() == '+' || c.peek() == '-')
        if (c.take() == '-') sign = -sign;
    if (c.peek() == 'w') {
        c.take();
        b += sign;
        return;
    }
    Int v = c.integer();
    if (c.peek() == '*') {
        c.take();
        expect(c.peek() == 'w', "expected w after *");
        c.take();
        b += sign * v;
    } else if (c.peek() == 'w') {
        c.take();
        b += sign * v;
    } else {
        a += sign * v;
    }
}

}  // namespace

RingElement RingElement::parse(std::string_view text, const RingDescriptor& d) {
    Cursor c{text};
    switch (d.kind) {
        case RingKind::rational: {
            Int num = c.integer();
            if (c.peek() == '/') {
                c.take();
                Int den = c.integer();
                expect(c.done(), "trailing characters in rational");
                return RingElement::rational(num, den);
            }
            expect(c.done(), "trailing characters in rational");
            return RingElement::from_int(num, d);
        }
        case RingKind::integer:
        case RingKind::modular: {
            Int v = c.integer();
            expect(c.done(), "trailing characters in integer");
            return RingElement::from_int(v, d);
        }
        case RingKind::eisenstein: {
            Int a = 0, b = 0;
            eis_term(c, a, b);
            while (!c.done()) eis_term(c, a, b);
            return RingElement::eisenstein(a, b);
        }
    }
    throw error("unreachable ring kind");
}

}  // namespace semisym
