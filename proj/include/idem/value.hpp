#pragma once

#include <cstdint>
#include <string>

namespace idem {

/// Element of a semiring carrier. Infinities and the Boolean constants are
/// distinct tags rather than IEEE sentinels, so cases like inf (x) zero in
/// the extended max-plus semiring resolve by case analysis instead of
/// producing NaN.
enum class Tag : std::uint8_t { NegInf, Finite, PosInf, BoolZero, BoolOne };

class Value {
public:
    constexpr Value() : tag_(Tag::Finite), num_(0.0) {}

    static constexpr Value neg_inf() { return Value(Tag::NegInf); }
    static constexpr Value pos_inf() { return Value(Tag::PosInf); }
    static constexpr Value bool_zero() { return Value(Tag::BoolZero); }
    static constexpr Value bool_one() { return Value(Tag::BoolOne); }
    static constexpr Value finite(double x) { return Value(Tag::Finite, x); }

    constexpr Tag tag() const { return tag_; }
    constexpr bool is_finite() const { return tag_ == Tag::Finite; }

    /// Numeric payload; meaningful only for finite values.
    constexpr double num() const { return num_; }

    friend constexpr bool operator==(const Value& a, const Value& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Tag::Finite || a.num_ == b.num_;
    }
    friend constexpr bool operator!=(const Value& a, const Value& b) {
        return !(a == b);
    }

private:
    constexpr explicit Value(Tag t, double x = 0.0) : tag_(t), num_(x) {}

    Tag tag_;
    double num_;
};

/// Tri-state comparison result. Incomparable can only arise in partially
/// ordered carriers such as interval extensions.
enum class Tri : std::uint8_t { False = 0, True = 1, Incomparable = 2 };

constexpr bool is_true(Tri t) { return t == Tri::True; }

}  // namespace idem
