#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "symcanon/field.hpp"

namespace symcanon {

inline constexpr int kMaxVars = 12;
inline constexpr unsigned kMaxExponent = 1u << 15;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    static Monomial var(int i, unsigned power = 1);
    std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    void set(int i, unsigned v);
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    /// Requires divides(m); returns m / *this.
    Monomial quotient_of(const Monomial& m) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// Graded reverse lexicographic comparison: negative, zero or positive.
int grevlex_cmp(const Monomial& a, const Monomial& b);
int lex_cmp(const Monomial& a, const Monomial& b);

/// Orders terms in descending grevlex; this is the canonical print order.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

class PolyRing {
public:
    PolyRing(std::vector<std::string> variables, FieldSpec field);
    /// x0..x4 over the given field.
    static std::shared_ptr<const PolyRing> standard(FieldSpec field, int nvars = 5);
    static std::shared_ptr<const PolyRing> make(std::vector<std::string> variables, FieldSpec field);

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& variables() const { return vars_; }
    const FieldSpec& field() const { return field_; }
    int index_of(std::string_view name) const;
    bool operator==(const PolyRing& o) const { return vars_ == o.vars_ && field_ == o.field_; }

private:
    std::vector<std::string> vars_;
    FieldSpec field_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

class Polynomial {
public:
    using Terms = std::map<Monomial, mpq_class, GrevlexGreater>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    static Polynomial constant(RingPtr ring, const mpq_class& c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial term(RingPtr ring, const Monomial& m, const mpq_class& c);

    const RingPtr& ring() const { return ring_; }
    const FieldSpec& field() const { return ring_->field(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;
    mpq_class coefficient(const Monomial& m) const;
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const mpq_class& leading_coefficient() const { return terms_.begin()->second; }

    /// Adds c*m in place.
    void add_term(const Monomial& m, const mpq_class& c);

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial scale(const mpq_class& c) const;
    Polynomial mul_monomial(const Monomial& m, const mpq_class& c) const;
    Polynomial pow(unsigned k) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial homogeneous_part(int d) const;
    Polynomial derivative(int var) const;
    mpq_class evaluate(const std::vector<mpq_class>& point) const;
    /// Substitutes images[i] for variable i; images live in the target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Same terms over another ring with the same number of variables or more.
    Polynomial to_ring(const RingPtr& target) const;

    std::string to_string() const;

private:
    void check_ring(const Polynomial& g) const;
    RingPtr ring_;
    Terms terms_;
};

enum class ArithOp { add, sub, mul, scale, power };

/// Single entry point for the arithmetic operations; g is a polynomial for
/// add/sub/mul, a scalar for scale and a nonnegative integer for power.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const std::variant<Polynomial, mpq_class>& g);

/// Parses a polynomial expression. Errors report the character position.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// All monomials of total degree d in descending grevlex order.
const std::vector<Monomial>& graded_basis(int nvars, int d);
std::size_t graded_basis_index(int nvars, int d, const Monomial& m);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

std::string monomial_to_string(const Monomial& m, const PolyRing& ring);

}  // namespace symcanon
