#include "field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ts {

namespace {
bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace

Field Field::prime(std::int64_t p) {
    if (!is_prime(p)) throw MalformedInput("field characteristic must be prime, got " + std::to_string(p));
    return Field(Kind::prime, p);
}

std::string Field::name() const {
    return finite() ? "F" + std::to_string(p_) : std::string("Q");
}

std::optional<Field> Field::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        try {
            std::int64_t p = std::stoll(s.substr(1));
            if (is_prime(p)) return prime(p);
        } catch (...) {
        }
    }
    return std::nullopt;
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.p_ = f.finite() ? f.characteristic() : 0;
    return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, std::int64_t n) {
    Scalar s = zero(f);
    if (f.finite()) {
        std::int64_t p = f.characteristic();
        s.fp_ = ((n % p) + p) % p;
    } else {
        s.rat_ = n;
    }
    return s;
}

Scalar Scalar::from_rational(const Rational& r) {
    Scalar s;
    s.p_ = 0;
    s.rat_ = r;
    return s;
}

bool Scalar::is_zero() const { return p_ ? fp_ == 0 : rat_ == 0; }

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw Error("scalar arithmetic across different fields");
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return p_ ? fp_ == o.fp_ : rat_ == o.rat_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (p_)
        r.fp_ = (fp_ + o.fp_) % p_;
    else
        r.rat_ = rat_ + o.rat_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_)
        r.fp_ = fp_ ? p_ - fp_ : 0;
    else
        r.rat_ = -rat_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (p_) {
        // p fits in 31 bits in practice; keep the product exact regardless.
        unsigned __int128 prod = (unsigned __int128)fp_ * (unsigned __int128)o.fp_;
        r.fp_ = (std::int64_t)(prod % (unsigned __int128)p_);
    } else {
        r.rat_ = rat_ * o.rat_;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Scalar r = *this;
    if (p_) {
        // Fermat: p is prime, so a^(p-2) inverts a.
        std::int64_t base = fp_, e = p_ - 2, acc = 1;
        while (e) {
            if (e & 1) acc = (std::int64_t)(((unsigned __int128)acc * base) % (unsigned __int128)p_);
            base = (std::int64_t)(((unsigned __int128)base * base) % (unsigned __int128)p_);
            e >>= 1;
        }
        r.fp_ = acc;
    } else {
        r.rat_ = 1 / rat_;
    }
    return r;
}

std::string Scalar::str() const {
    if (p_) return std::to_string(fp_);
    return rat_.str();
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
    try {
        if (f.finite()) {
            size_t pos = 0;
            std::int64_t n = std::stoll(s, &pos);
            if (pos != s.size()) throw MalformedInput("bad scalar: " + s);
            return from_int(f, n);
        }
        return from_rational(Rational(s));
    } catch (const MalformedInput&) {
        throw;
    } catch (...) {
        throw MalformedInput("bad scalar: " + s);
    }
}

}  // namespace ts
