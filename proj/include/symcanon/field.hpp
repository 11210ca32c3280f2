#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symcanon {

/// Violated precondition or malformed input. Maps to CLI exit code 2.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource bound was hit. Maps to CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Elements are stored as mpq_class values. Over GF(p) they are kept as
/// integers in [0, p).
class FieldSpec {
public:
    enum class Kind { rationals, prime_field };

    FieldSpec() = default;
    static FieldSpec rationals();
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "q", "Q", "rationals", "p:<prime>", "gf(<prime>)".
    static FieldSpec parse(std::string_view text);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::prime_field; }
    std::string to_string() const;

    mpq_class reduce(const mpq_class& x) const;
    mpq_class from_int(long v) const { return reduce(mpq_class(v)); }
    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    /// Symmetric integer representative for printing over GF(p).
    mpq_class printable(const mpq_class& a) const;

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

private:
    Kind kind_ = Kind::rationals;
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Coefficient kernel for GF(p); used by the Groebner and elimination cores.
struct ModP {
    using elem = std::uint32_t;
    std::uint32_t p;

    explicit ModP(std::uint32_t prime) : p(prime) {}
    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem a) const { return a == 0; }
    bool is_one(elem a) const { return a == 1; }
    elem add(elem a, elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return elem(s >= p ? s - p : s);
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : elem(std::uint64_t(a) + p - b); }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem mul(elem a, elem b) const { return elem((std::uint64_t(a) * b) % p); }
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem from(const mpq_class& x) const;
    mpq_class to(elem a) const { return mpq_class(static_cast<unsigned long>(a)); }
};

struct QQ {
    using elem = mpq_class;
    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }
    bool is_one(const elem& a) const { return a == 1; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem inv(const elem& a) const {
        if (sgn(a) == 0) throw ContractError("division by zero");
        return 1 / a;
    }
    elem div(const elem& a, const elem& b) const { return a * inv(b); }
    elem from(const mpq_class& x) const { return x; }
    mpq_class to(const elem& a) const { return a; }
};

/// Calls f(ModP) or f(QQ) according to the field.
template <class F>
decltype(auto) with_kernel(const FieldSpec& field, F&& f) {
    if (field.is_prime_field()) return f(ModP(field.characteristic()));
    return f(QQ{});
}

}  // namespace symcanon
