#include "idem/semiring.hpp"

#include <array>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace idem {

namespace {

thread_local std::uint64_t g_adds = 0;
thread_local std::uint64_t g_muls = 0;

Flags flags_for(Instance k) {
    Flags f;
    switch (k) {
    case Instance::MaxPlus:
    case Instance::MinPlus:
        f.idempotent = true;
        f.commutative = true;
        f.entire = true;
        f.cancellative = true;
        f.algebraically_closed = true;
        f.stabilizing = true;
        f.freshman_dream = true;
        f.linearly_ordered = true;
        break;
    case Instance::MaxMin:
        f.idempotent = true;
        f.commutative = true;
        f.entire = true;
        f.cancellative = false;  // min(x,a) = min(x,b) does not force a = b
        f.algebraically_closed = true;  // x^n = x
        f.stabilizing = true;
        f.has_top = true;  // one = +inf is the greatest element
        f.freshman_dream = true;
        f.linearly_ordered = true;
        break;
    case Instance::Boolean:
        f.idempotent = true;
        f.commutative = true;
        f.entire = true;
        f.cancellative = true;
        f.algebraically_closed = true;
        f.stabilizing = true;
        f.has_top = true;
        f.freshman_dream = true;
        f.linearly_ordered = true;
        break;
    case Instance::MaxPlusHat:
        f.idempotent = true;
        f.commutative = true;
        f.entire = true;
        f.cancellative = false;  // inf absorbs nonzero factors
        f.algebraically_closed = true;
        f.stabilizing = true;
        f.has_top = true;
        f.freshman_dream = true;
        f.linearly_ordered = true;
        break;
    case Instance::NonnegReal:
        f.idempotent = false;
        f.commutative = true;
        f.entire = true;
        f.cancellative = true;
        f.algebraically_closed = true;  // real nth roots of nonnegatives
        f.stabilizing = false;
        f.freshman_dream = false;
        f.linearly_ordered = true;
        break;
    }
    return f;
}

Value zero_for(Instance k) {
    switch (k) {
    case Instance::MaxPlus:
    case Instance::MaxMin:
    case Instance::MaxPlusHat:
        return Value::neg_inf();
    case Instance::MinPlus:
        return Value::pos_inf();
    case Instance::Boolean:
        return Value::bool_zero();
    case Instance::NonnegReal:
        return Value::finite(0.0);
    }
    std::abort();
}

Value one_for(Instance k) {
    switch (k) {
    case Instance::MaxPlus:
    case Instance::MinPlus:
    case Instance::MaxPlusHat:
        return Value::finite(0.0);
    case Instance::MaxMin:
        return Value::pos_inf();
    case Instance::Boolean:
        return Value::bool_one();
    case Instance::NonnegReal:
        return Value::finite(1.0);
    }
    std::abort();
}

// Rank of a tag in the linear order -inf < finite < +inf. Finite values are
// compared on their payload separately.
int inf_rank(Tag t) {
    switch (t) {
    case Tag::NegInf: return -1;
    case Tag::Finite: return 0;
    case Tag::PosInf: return 1;
    default: return 0;
    }
}

// max/min on the extended real line; exact selections, never arithmetic.
Value ext_max(const Value& x, const Value& y) {
    int rx = inf_rank(x.tag()), ry = inf_rank(y.tag());
    if (rx != ry) return rx > ry ? x : y;
    if (x.tag() != Tag::Finite) return x;
    return x.num() >= y.num() ? x : y;
}

Value ext_min(const Value& x, const Value& y) {
    int rx = inf_rank(x.tag()), ry = inf_rank(y.tag());
    if (rx != ry) return rx < ry ? x : y;
    if (x.tag() != Tag::Finite) return x;
    return x.num() <= y.num() ? x : y;
}

}  // namespace

void OpCount::reset() { g_adds = g_muls = 0; }
std::uint64_t OpCount::adds() { return g_adds; }
std::uint64_t OpCount::muls() { return g_muls; }
std::uint64_t OpCount::total() { return g_adds + g_muls; }

Semiring::Semiring(Instance k)
    : kind_(k), flags_(flags_for(k)), zero_(zero_for(k)), one_(one_for(k)) {}

const Semiring& Semiring::of(Instance k) {
    static const std::array<Semiring, 6> table = {
        Semiring(Instance::MaxPlus),   Semiring(Instance::MinPlus),
        Semiring(Instance::MaxMin),    Semiring(Instance::Boolean),
        Semiring(Instance::MaxPlusHat), Semiring(Instance::NonnegReal),
    };
    return table[static_cast<std::size_t>(k)];
}

const Semiring& Semiring::of(std::string_view key) {
    if (key == "max-plus") return of(Instance::MaxPlus);
    if (key == "min-plus") return of(Instance::MinPlus);
    if (key == "max-min") return of(Instance::MaxMin);
    if (key == "boolean") return of(Instance::Boolean);
    if (key == "max-plus-hat") return of(Instance::MaxPlusHat);
    if (key == "nonneg-real") return of(Instance::NonnegReal);
    raise(Errc::ParseError, "unknown semiring key: " + std::string(key));
}

std::string_view Semiring::key() const {
    switch (kind_) {
    case Instance::MaxPlus: return "max-plus";
    case Instance::MinPlus: return "min-plus";
    case Instance::MaxMin: return "max-min";
    case Instance::Boolean: return "boolean";
    case Instance::MaxPlusHat: return "max-plus-hat";
    case Instance::NonnegReal: return "nonneg-real";
    }
    std::abort();
}

bool Semiring::valid(const Value& v) const {
    switch (kind_) {
    case Instance::MaxPlus:
        return v.tag() == Tag::NegInf ||
               (v.is_finite() && std::isfinite(v.num()));
    case Instance::MinPlus:
        return v.tag() == Tag::PosInf ||
               (v.is_finite() && std::isfinite(v.num()));
    case Instance::MaxMin:
    case Instance::MaxPlusHat:
        return v.tag() == Tag::NegInf || v.tag() == Tag::PosInf ||
               (v.is_finite() && std::isfinite(v.num()));
    case Instance::Boolean:
        return v.tag() == Tag::BoolZero || v.tag() == Tag::BoolOne;
    case Instance::NonnegReal:
        return v.is_finite() && std::isfinite(v.num()) && v.num() >= 0.0;
    }
    return false;
}

Value Semiring::add(const Value& x, const Value& y) const {
    ++g_adds;
    switch (kind_) {
    case Instance::MaxPlus:
    case Instance::MaxMin:
    case Instance::MaxPlusHat:
        return ext_max(x, y);
    case Instance::MinPlus:
        return ext_min(x, y);
    case Instance::Boolean:
        return (x.tag() == Tag::BoolOne || y.tag() == Tag::BoolOne)
                   ? Value::bool_one()
                   : Value::bool_zero();
    case Instance::NonnegReal:
        return Value::finite(x.num() + y.num());
    }
    std::abort();
}

Value Semiring::mul(const Value& x, const Value& y) const {
    ++g_muls;
    switch (kind_) {
    case Instance::MaxPlus:
    case Instance::MinPlus:
        // zero tag absorbs; both carriers hold exactly one infinity.
        if (!x.is_finite()) return x;
        if (!y.is_finite()) return y;
        return Value::finite(x.num() + y.num());
    case Instance::MaxMin:
        return ext_min(x, y);
    case Instance::MaxPlusHat:
        // -inf (the zero) absorbs even against +inf (the top).
        if (x.tag() == Tag::NegInf || y.tag() == Tag::NegInf)
            return Value::neg_inf();
        if (x.tag() == Tag::PosInf || y.tag() == Tag::PosInf)
            return Value::pos_inf();
        return Value::finite(x.num() + y.num());
    case Instance::Boolean:
        return (x.tag() == Tag::BoolOne && y.tag() == Tag::BoolOne)
                   ? Value::bool_one()
                   : Value::bool_zero();
    case Instance::NonnegReal:
        return Value::finite(x.num() * y.num());
    }
    std::abort();
}

Value Semiring::pow(const Value& x, int n) const {
    assert(n >= 0);
    Value acc = one_;
    for (int i = 0; i < n; ++i) acc = mul(acc, x);
    return acc;
}

Tri Semiring::leq(const Value& x, const Value& y) const {
    if (flags_.idempotent) {
        // canonical order: x <= y iff x add y = y
        if (add(x, y) == y) return Tri::True;
        if (add(y, x) == x) return Tri::False;
        return Tri::Incomparable;
    }
    // NonnegReal: declared order is the usual <=, with 0 least.
    return x.num() <= y.num() ? Tri::True : Tri::False;
}

Value Semiring::scalar_closure(const Value& x) const {
    switch (kind_) {
    case Instance::MaxPlus:
        if (is_true(leq(x, one_))) return one_;
        raise(Errc::ClosureUndefined,
              "scalar closure diverges in max-plus for " + format(x));
    case Instance::MinPlus:
        if (is_true(leq(x, one_))) return one_;
        raise(Errc::ClosureUndefined,
              "scalar closure diverges in min-plus for " + format(x));
    case Instance::MaxMin:
    case Instance::Boolean:
        // one is the top element; the series collapses to it immediately.
        return one_;
    case Instance::MaxPlusHat:
        // a-complete: divergent series sum to the top element.
        return is_true(leq(x, one_)) ? one_ : Value::pos_inf();
    case Instance::NonnegReal:
        if (x.num() < 1.0) return Value::finite(1.0 / (1.0 - x.num()));
        raise(Errc::ClosureUndefined,
              "scalar closure (1-x)^-1 undefined for x >= 1: " + format(x));
    }
    std::abort();
}

Value Semiring::nth_root(const Value& y, int n) const {
    if (!flags_.algebraically_closed)
        raise(Errc::RootUndefined,
              std::string("nth_root unsupported on ") + std::string(key()));
    if (n < 1) raise(Errc::RootUndefined, "nth_root requires n >= 1");
    switch (kind_) {
    case Instance::MaxPlus:
    case Instance::MinPlus:
    case Instance::MaxPlusHat:
        // x^n = n*x on the additive scale; infinities are fixed points.
        if (!y.is_finite()) return y;
        return Value::finite(y.num() / n);
    case Instance::MaxMin:
    case Instance::Boolean:
        return y;  // x^n = x
    case Instance::NonnegReal:
        return Value::finite(std::pow(y.num(), 1.0 / n));
    }
    std::abort();
}

Value Semiring::parse(std::string_view text) const {
    Value v;
    if (text == "-inf") {
        v = Value::neg_inf();
    } else if (text == "inf" || text == "+inf") {
        v = Value::pos_inf();
    } else if (kind_ == Instance::Boolean) {
        if (text == "0")
            v = Value::bool_zero();
        else if (text == "1")
            v = Value::bool_one();
        else
            raise(Errc::ParseError,
                  "boolean element must be \"0\" or \"1\", got: " +
                      std::string(text));
    } else {
        double num = 0.0;
        auto [ptr, ec] =
            std::from_chars(text.data(), text.data() + text.size(), num);
        if (ec != std::errc() || ptr != text.data() + text.size())
            raise(Errc::ParseError,
                  "bad element literal: " + std::string(text));
        v = Value::finite(num);
    }
    if (!valid(v))
        raise(Errc::ParseError, "element " + std::string(text) +
                                    " not admitted by semiring " +
                                    std::string(key()));
    return v;
}

std::string Semiring::format(const Value& v) const {
    switch (v.tag()) {
    case Tag::NegInf: return "-inf";
    case Tag::PosInf: return "inf";
    case Tag::BoolZero: return "0";
    case Tag::BoolOne: return "1";
    case Tag::Finite: {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v.num());
        (void)ec;
        return std::string(buf, ptr);
    }
    }
    std::abort();
}

const char* errc_name(Errc e) {
    switch (e) {
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidBounds: return "InvalidBounds";
    case Errc::StrongViolation: return "StrongViolation";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::NotAPath: return "NotAPath";
    case Errc::ClosureUndefined: return "ClosureUndefined";
    case Errc::ClosureDiverges: return "ClosureDiverges";
    case Errc::RootUndefined: return "RootUndefined";
    case Errc::CapabilityMissing: return "CapabilityMissing";
    case Errc::NoCycle: return "NoCycle";
    case Errc::MaxIterationsExceeded: return "MaxIterationsExceeded";
    }
    return "UnknownError";
}

}  // namespace idem
