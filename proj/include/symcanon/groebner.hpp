#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "symcanon/poly.hpp"

namespace symcanon {

class MonomialOrder {
public:
    enum class Kind { grevlex, lex, elimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    /// Eliminates the first `block` variables: total degree in them first,
    /// then grevlex on the whole monomial.
    static MonomialOrder elimination(int block);
    /// Same, for an arbitrary set of variables given as a bit mask.
    static MonomialOrder elimination_mask(std::uint32_t mask);

    Kind kind() const { return kind_; }
    std::uint32_t mask() const { return mask_; }
    int compare(const Monomial& a, const Monomial& b) const;
    std::string to_string() const;

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && mask_ == o.mask_; }
    bool operator<(const MonomialOrder& o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : mask_ < o.mask_;
    }

private:
    MonomialOrder(Kind k, std::uint32_t mask) : kind_(k), mask_(mask) {}
    Kind kind_;
    std::uint32_t mask_;
};

struct GroebnerBudget {
    int max_degree = 64;
    std::size_t max_pairs = 500000;
};

/// Process-wide budget used when none is passed explicitly.
GroebnerBudget default_budget();
void set_default_budget(const GroebnerBudget& b);

/// Generators plus a write-once cache of reduced bases. Copies share the
/// cache, which is safe because the generator list never changes.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_homogeneous() const;

    /// Reduced, monic basis sorted by increasing leading monomial.
    const std::vector<Polynomial>& basis(const MonomialOrder& ord = MonomialOrder::grevlex()) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex());
/// Buchberger without the homogeneity contract; used internally for
/// elimination with an auxiliary variable.
std::vector<Polynomial> groebner_basis_general(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                               const GroebnerBudget& budget);

Polynomial normal_form_poly(const Polynomial& f, const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex());
/// Remainder of f against an already reduced basis.
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

bool ideal_contains(const Ideal& I, const Polynomial& f);
bool ideal_subset(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

Ideal irrelevant_ideal(const RingPtr& ring);
/// I : J^infinity. The irrelevant ideal is handled through a seeded generic
/// linear form; other J by iterated quotients.
Ideal saturate(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I);

/// Affine Krull dimension of ring/I; -1 for the unit ideal.
int dimension(const Ideal& I);
/// nvars - dimension.
int codim(const Ideal& I);
/// Degree of the projective scheme defined by I (0 if empty).
long multiplicity(const Ideal& I);
/// dim_k (ring/I)_d.
std::size_t hilbert_function(const Ideal& I, int d);
std::vector<Monomial> standard_monomials(const Ideal& I, int d);

/// Number of distinct points of a zero-dimensional projective scheme.
long point_count(const Ideal& I);
bool is_radical_zerodim(const Ideal& I);

/// q with f = q * g, if g divides f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace symcanon
