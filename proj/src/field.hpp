#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"

namespace ts {

using Rational = boost::multiprecision::cpp_rational;

// Exact coefficient field: a prime field F_p (p a machine-word prime) or Q.
// Scalars are self-describing so arithmetic can check compatibility.
class Field {
  public:
    enum class Kind { prime, rationals };

    static Field prime(std::int64_t p);
    static Field rationals() { return Field(Kind::rationals, 0); }

    Kind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }
    bool finite() const { return kind_ == Kind::prime; }

    // "F2", "F3", ..., "Q" — the on-disk spelling.
    std::string name() const;
    static std::optional<Field> parse(const std::string& s);

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    Field(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

// A field element.  For F_p the value lives in fp_ (canonical 0..p-1, with
// the modulus carried alongside); for Q in rat_.  Default-constructed Scalar
// is the zero of Q; normally scalars are made through Field::...  helpers
// below so the tag is always right.
class Scalar {
  public:
    Scalar() : p_(0), fp_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, std::int64_t n);
    static Scalar from_rational(const Rational& r);  // Q only

    bool is_zero() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws Error on zero

    std::int64_t fp_value() const { return fp_; }
    const Rational& rat_value() const { return rat_; }
    bool is_rational_kind() const { return p_ == 0; }
    std::int64_t modulus() const { return p_; }

    // Canonical text: "3", "-1/2".  Parses the same forms.
    std::string str() const;
    static Scalar parse(const Field& f, const std::string& s);

  private:
    std::int64_t p_;  // 0 means Q
    std::int64_t fp_;
    Rational rat_;
    void check_same(const Scalar& o) const;
};

}  // namespace ts
