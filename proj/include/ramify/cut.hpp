#pragma once

#include <cstdint>
#include <string>

#include "ramify/value.hpp"

namespace ramify {

// The value group a cut is measured against.
//   DiscreteZ(g): multiples of a positive rational g (Z, (1/p)Z, ...)
//   ZOneOverP(p): Z[1/p]
//   Dense:        all of Q
class ValueGroup {
public:
    enum class Kind { DiscreteZ, ZOneOverP, Dense };

    static ValueGroup discrete(Value granularity = Value(1));
    static ValueGroup z_one_over_p(std::uint32_t p);
    static ValueGroup dense();

    Kind kind() const { return kind_; }
    const Value &granularity() const { return granularity_; }
    std::uint32_t prime() const { return p_; }

    bool contains(const Value &v) const;
    std::string to_string() const;

    friend bool operator==(const ValueGroup &a, const ValueGroup &b);

private:
    Kind kind_ = Kind::DiscreteZ;
    Value granularity_{1};
    std::uint32_t p_ = 0;
};

enum class Bound { Closed, Open };

// A fractional ideal {x : v(x) >= value} (Closed) or {x : v(x) > value}
// (Open) of a valued field with the given value group. Values are in the
// normalization of the base field K throughout.
class Cut {
public:
    Cut(Value value, Bound bound, ValueGroup ambient);
    static Cut closed(Value value, ValueGroup ambient) { return Cut(value, Bound::Closed, ambient); }
    static Cut open(Value value, ValueGroup ambient) { return Cut(value, Bound::Open, ambient); }

    const Value &value() const { return value_; }
    Bound bound() const { return bound_; }
    const ValueGroup &ambient() const { return ambient_; }

    // Canonical representative of the same ideal: over a discrete group every
    // cut becomes Closed at a group element; over Z[1/p] or Q a Closed cut at a
    // value outside the group becomes Open.
    Cut normalized() const;
    // Normalized Closed at a group element. A Closed cut whose stored value lies
    // outside the group does not count, even when its normalization would.
    bool is_principal() const;
    bool contains(const Value &v) const;

    Cut operator*(const Cut &o) const;
    Cut pow(std::int64_t n) const;
    Cut inverse() const;
    // Same bound scaled by `factor` into another group (norm of an ideal of L
    // lands in K with factor p).
    Cut scaled_into(const Value &factor, const ValueGroup &target) const;
    // Intersection with a subfield whose value group is `target`.
    Cut restricted_to(const ValueGroup &target) const;

    // Inclusion order: a <= b iff the ideal a contains the ideal b.
    bool contains_cut(const Cut &o) const;

    // e.g. "Closed(2/3)"
    std::string to_string() const;

    friend bool operator==(const Cut &a, const Cut &b);

private:
    Value value_;
    Bound bound_;
    ValueGroup ambient_;
};

std::string to_string(Bound b);

} // namespace ramify
