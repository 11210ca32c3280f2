#pragma once

#include <cstdint>
#include <random>

#include "symcanon/linalg.hpp"
#include "symcanon/poly.hpp"

namespace symcanon {

/// Seeded source of field elements and forms. Values depend only on the
/// seed and the call sequence.
class FieldRng {
public:
    FieldRng(std::uint64_t seed, FieldSpec field, long qq_bound = 3) : gen_(seed), field_(field), bound_(qq_bound) {}

    /// Uniform over GF(p); uniform in [-bound, bound] over Q.
    mpq_class element() {
        if (field_.is_prime_field()) return mpq_class(static_cast<unsigned long>(gen_() % field_.characteristic()));
        long span = 2 * bound_ + 1;
        return mpq_class(static_cast<long>(gen_() % static_cast<unsigned long>(span)) - bound_);
    }
    mpq_class nonzero() {
        for (;;) {
            mpq_class v = element();
            if (v != 0) return v;
        }
    }
    std::uint64_t raw() { return gen_(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

    Polynomial form(const RingPtr& ring, int d) {
        Polynomial f(ring);
        for (const auto& m : graded_basis(ring->nvars(), d)) {
            mpq_class c = element();
            if (c != 0) f.add_term(m, c);
        }
        return f;
    }

    Matrix matrix(std::size_t rows, std::size_t cols) {
        Matrix m(field_, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, element());
        return m;
    }

    Matrix invertible(std::size_t n) {
        for (;;) {
            Matrix m = matrix(n, n);
            if (determinant(m) != 0) return m;
        }
    }

    const FieldSpec& field() const { return field_; }

private:
    std::mt19937_64 gen_;
    FieldSpec field_;
    long bound_;
};

}  // namespace symcanon
