// Exact coefficient arithmetic over the rings used by the library:
// rationals, integers, integers mod m, and Z[w] with w^2 = -1 - w.
// Every element carries its ring descriptor; mixing descriptors throws.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semisym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Standing-hypothesis failures (non integral domain, non-invertible group
// order, and similar). The CLI maps these to exit code 2.
struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& msg) : error(msg) {}
};

struct not_a_unit : hypothesis_error {
    explicit not_a_unit(const std::string& msg) : hypothesis_error(msg) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

enum class RingKind { rational, integer, modular, eisenstein };

struct RingDescriptor {
    RingKind kind = RingKind::rational;
    std::uint64_t modulus = 0;  // used when kind == modular

    static RingDescriptor rational() { return {RingKind::rational, 0}; }
    static RingDescriptor integer() { return {RingKind::integer, 0}; }
    static RingDescriptor modular(std::uint64_t m);
    static RingDescriptor eisenstein() { return {RingKind::eisenstein, 0}; }

    bool is_integral_domain() const;
    bool is_q_ring() const { return kind == RingKind::rational; }
    std::string name() const;

    bool operator==(const RingDescriptor&) const = default;
};

// Parses "Q", "Z", "mod:m", "eisenstein".
RingDescriptor parse_ring_descriptor(std::string_view text);

class RingElement {
  public:
    RingElement() = default;  // rational zero

    static RingElement zero(const RingDescriptor& d);
    static RingElement one(const RingDescriptor& d);
    // Image of an integer under the canonical map Z -> K.
    static RingElement from_int(const Int& v, const RingDescriptor& d);
    static RingElement rational(const Int& num, const Int& den);
    static RingElement eisenstein(const Int& a, const Int& b);  // a + b*w

    const RingDescriptor& descriptor() const { return desc_; }
    bool is_zero() const;
    bool is_one() const;

    // Valid for kind rational (must be integral), integer and modular.
    Int integer_value() const;
    const Rat& rational_value() const;
    // Eisenstein coordinates; (a, 0) for integer-like kinds.
    Int eis_a() const;
    Int eis_b() const;

    friend RingElement operator+(const RingElement& x, const RingElement& y);
    friend RingElement operator-(const RingElement& x, const RingElement& y);
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    RingElement operator-() const;
    RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
    RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
    RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

    bool operator==(const RingElement& y) const;
    bool operator!=(const RingElement& y) const { return !(*this == y); }

    RingElement pow(unsigned long long e) const;

    std::string str() const;
    static RingElement parse(std::string_view text, const RingDescriptor& d);

  private:
    explicit RingElement(RingDescriptor d) : desc_(d) {}
    void normalize();

    RingDescriptor desc_ = RingDescriptor::rational();
    Rat r_;        // rational payload
    Int a_, b_;    // integer/modular payload in a_; eisenstein a_ + b_*w
};

// Multiplicative inverse if the element is a unit of its ring.
std::optional<RingElement> try_invert(const RingElement& x);
// try_invert(from_int(v)); used for group orders and stabilizer orders.
std::optional<RingElement> invert_integer(const Int& v, const RingDescriptor& d);

}  // namespace semisym
