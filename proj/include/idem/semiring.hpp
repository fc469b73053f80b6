#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "idem/errors.hpp"
#include "idem/value.hpp"

namespace idem {

/// The six built-in carriers.
enum class Instance : std::uint8_t {
    MaxPlus,     // reals + {-inf}, add = max, mul = +, zero = -inf, one = 0
    MinPlus,     // reals + {+inf}, add = min, mul = +, zero = +inf, one = 0
    MaxMin,      // reals + {-inf,+inf}, add = max, mul = min
    Boolean,     // {0, 1}, add = or, mul = and
    MaxPlusHat,  // max-plus completed with a greatest element +inf
    NonnegReal,  // [0, inf) with ordinary + and *, ordered by <=
};

/// Declared capabilities of an instance. These are trusted as stated; the
/// library does not attempt to decide them algorithmically.
struct Flags {
    bool idempotent = false;
    bool commutative = false;
    bool entire = false;
    bool cancellative = false;
    bool algebraically_closed = false;
    bool stabilizing = false;
    bool has_top = false;
    bool freshman_dream = false;  // (x add y)^n = x^n add y^n
    bool linearly_ordered = false;
};

/// Running tally of scalar add/mul applications, used by complexity checks.
/// Thread-local so concurrent solvers do not race on it.
struct OpCount {
    static void reset();
    static std::uint64_t adds();
    static std::uint64_t muls();
    static std::uint64_t total();
};

/// A semiring profile: the pair of operations, the two constants, the order,
/// and the partial closure/root maps for one concrete instance. Profiles are
/// immutable and shared; all operations are pure.
class Semiring {
public:
    static const Semiring& of(Instance k);

    /// Lookup by CLI key: "max-plus", "min-plus", "max-min", "boolean",
    /// "max-plus-hat", "nonneg-real". Throws ParseError on unknown keys.
    static const Semiring& of(std::string_view key);

    Instance instance() const { return kind_; }
    std::string_view key() const;
    const Flags& flags() const { return flags_; }

    Value zero() const { return zero_; }
    Value one() const { return one_; }

    /// True when v belongs to this carrier (tags admitted, range respected).
    bool valid(const Value& v) const;

    Value add(const Value& x, const Value& y) const;
    Value mul(const Value& x, const Value& y) const;

    /// x^n with n >= 0; n = 0 yields the unity.
    Value pow(const Value& x, int n) const;

    /// Canonical order for idempotent instances (x <= y iff x add y = y),
    /// declared order otherwise. All built-in instances are linearly
    /// ordered, so Incomparable does not occur here.
    Tri leq(const Value& x, const Value& y) const;

    /// Sum of the series one add x add x^2 add ... Throws ClosureUndefined
    /// when the series diverges and the carrier has no top element.
    Value scalar_closure(const Value& x) const;

    /// Solution of z^n = y. Throws RootUndefined when the instance is not
    /// algebraically closed.
    Value nth_root(const Value& y, int n) const;

    /// Text codec: "-inf", "inf", decimal literals, "0"/"1" for Boolean.
    Value parse(std::string_view text) const;
    std::string format(const Value& v) const;

private:
    explicit Semiring(Instance k);

    Instance kind_;
    Flags flags_;
    Value zero_;
    Value one_;
};

}  // namespace idem
