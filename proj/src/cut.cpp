#include "ramify/cut.hpp"

#include <sstream>

#include "ramify/error.hpp"

namespace ramify {

namespace {

bool is_power_of(std::int64_t n, std::uint32_t p)
{
    if (n < 1) {
        return false;
    }
    while (n % p == 0) {
        n /= p;
    }
    return n == 1;
}

// Smallest multiple of g that is >= v (strict = false) or > v (strict = true).
Value round_up(const Value &v, const Value &g, bool strict)
{
    const Value q = v / g;
    std::int64_t k = q.ceil();
    if (strict && Value(k) == q) {
        ++k;
    }
    return Value(k) * g;
}

} // namespace

ValueGroup ValueGroup::discrete(Value granularity)
{
    if (granularity <= Value(0)) {
        throw Error(ErrorKind::InvalidSpec, "value group granularity must be positive");
    }
    ValueGroup g;
    g.kind_ = Kind::DiscreteZ;
    g.granularity_ = granularity;
    return g;
}

ValueGroup ValueGroup::z_one_over_p(std::uint32_t p)
{
    ValueGroup g;
    g.kind_ = Kind::ZOneOverP;
    g.p_ = p;
    g.granularity_ = Value(0);
    return g;
}

ValueGroup ValueGroup::dense()
{
    ValueGroup g;
    g.kind_ = Kind::Dense;
    g.granularity_ = Value(0);
    return g;
}

bool ValueGroup::contains(const Value &v) const
{
    switch (kind_) {
        case Kind::DiscreteZ: return (v / granularity_).is_integer();
        case Kind::ZOneOverP: return is_power_of(v.den(), p_);
        case Kind::Dense: return true;
    }
    return false;
}

std::string ValueGroup::to_string() const
{
    switch (kind_) {
        case Kind::DiscreteZ: return "Z*" + granularity_.to_string();
        case Kind::ZOneOverP: return "Z[1/" + std::to_string(p_) + "]";
        case Kind::Dense: return "Q";
    }
    return "?";
}

bool operator==(const ValueGroup &a, const ValueGroup &b)
{
    return a.kind_ == b.kind_ && a.granularity_ == b.granularity_ && a.p_ == b.p_;
}

std::string to_string(Bound b)
{
    return b == Bound::Closed ? "closed" : "open";
}

Cut::Cut(Value value, Bound bound, ValueGroup ambient) : value_(value), bound_(bound), ambient_(ambient) {}

Cut Cut::normalized() const
{
    if (ambient_.kind() == ValueGroup::Kind::DiscreteZ) {
        return Cut(round_up(value_, ambient_.granularity(), bound_ == Bound::Open), Bound::Closed, ambient_);
    }
    if (bound_ == Bound::Closed && !ambient_.contains(value_)) {
        return Cut(value_, Bound::Open, ambient_);
    }
    return *this;
}

bool Cut::is_principal() const
{
    const Cut n = normalized();
    if (n.bound_ != Bound::Closed) {
        return false;
    }
    return bound_ == Bound::Open || ambient_.contains(value_);
}

bool Cut::contains(const Value &v) const
{
    const Cut n = normalized();
    return n.bound_ == Bound::Closed ? v >= n.value_ : v > n.value_;
}

Cut Cut::operator*(const Cut &o) const
{
    if (!(ambient_ == o.ambient_)) {
        throw Error(ErrorKind::AmbientMismatch,
                    "cut product across value groups " + ambient_.to_string() + " and " + o.ambient_.to_string());
    }
    const Cut a = normalized();
    const Cut b = o.normalized();
    const Bound bound = (a.bound_ == Bound::Closed && b.bound_ == Bound::Closed) ? Bound::Closed : Bound::Open;
    return Cut(a.value_ + b.value_, bound, ambient_).normalized();
}

Cut Cut::inverse() const
{
    const Cut a = normalized();
    return Cut(-a.value_, a.bound_, ambient_).normalized();
}

Cut Cut::pow(std::int64_t n) const
{
    if (n == 0) {
        return Cut(Value(0), Bound::Closed, ambient_);
    }
    if (n < 0) {
        return inverse().pow(-n);
    }
    const Cut a = normalized();
    return Cut(a.value_ * Value(n), a.bound_, ambient_).normalized();
}

Cut Cut::scaled_into(const Value &factor, const ValueGroup &target) const
{
    const Cut a = normalized();
    return Cut(a.value_ * factor, a.bound_, target).normalized();
}

Cut Cut::restricted_to(const ValueGroup &target) const
{
    const Cut a = normalized();
    return Cut(a.value_, a.bound_, target).normalized();
}

bool Cut::contains_cut(const Cut &o) const
{
    if (!(ambient_ == o.ambient_)) {
        throw Error(ErrorKind::AmbientMismatch, "cut comparison across value groups");
    }
    const Cut a = normalized();
    const Cut b = o.normalized();
    if (a.value_ != b.value_) {
        return a.value_ < b.value_;
    }
    return a.bound_ == Bound::Closed || b.bound_ == Bound::Open;
}

std::string Cut::to_string() const
{
    std::ostringstream os;
    os << (bound_ == Bound::Closed ? "Closed(" : "Open(") << value_ << ")";
    return os.str();
}

bool operator==(const Cut &a, const Cut &b)
{
    if (!(a.ambient_ == b.ambient_)) {
        return false;
    }
    const Cut x = a.normalized();
    const Cut y = b.normalized();
    return x.value_ == y.value_ && x.bound_ == y.bound_;
}

} // namespace ramify
