#include "symcanon/groebner.hpp"

#include <algorithm>
#include <random>

#include "symcanon/linalg.hpp"

namespace symcanon {

MonomialOrder MonomialOrder::elimination(int block) {
    if (block <= 0 || block >= kMaxVars) throw ContractError("elimination block size out of range");
    return MonomialOrder(Kind::elimination, (1u << block) - 1u);
}

MonomialOrder MonomialOrder::elimination_mask(std::uint32_t mask) {
    if (mask == 0) throw ContractError("elimination mask is empty");
    return MonomialOrder(Kind::elimination, mask);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::grevlex: return grevlex_cmp(a, b);
        case Kind::lex: return lex_cmp(a, b);
        case Kind::elimination: {
            unsigned da = 0, db = 0;
            for (int i = 0; i < kMaxVars; ++i)
                if (mask_ >> i & 1u) {
                    da += a[i];
                    db += b[i];
                }
            if (da != db) return da > db ? 1 : -1;
            return grevlex_cmp(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::grevlex: return "grevlex";
        case Kind::lex: return "lex";
        case Kind::elimination: return "elimination(" + std::to_string(mask_) + ")";
    }
    return "?";
}

namespace {

std::mutex g_budget_mu;
GroebnerBudget g_budget;

std::uint32_t support_mask(const Monomial& m) {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i)
        if (m[i]) s |= 1u << i;
    return s;
}

template <class K>
class Engine {
public:
    using E = typename K::elem;
    struct Term {
        Monomial m;
        E c;
    };
    using Poly = std::vector<Term>;

    Engine(K k, MonomialOrder ord, GroebnerBudget budget) : k_(std::move(k)), ord_(ord), budget_(budget) {}

    Poly convert(const Polynomial& f) const {
        Poly p;
        p.reserve(f.size());
        for (const auto& [m, c] : f.terms()) p.push_back({m, k_.from(c)});
        std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord_.compare(a.m, b.m) > 0; });
        return p;
    }

    Polynomial back(const Poly& p, const RingPtr& ring) const {
        Polynomial f(ring);
        for (const auto& t : p) f.add_term(t.m, k_.to(t.c));
        return f;
    }

    void make_monic(Poly& p) const {
        if (p.empty() || k_.is_one(p[0].c)) return;
        E inv = k_.inv(p[0].c);
        for (auto& t : p) t.c = k_.mul(t.c, inv);
    }

    // f[from..] - c * t * g[1..]
    Poly sub_mul(const Poly& f, std::size_t from, const E& c, const Monomial& t, const Poly& g) const {
        Poly r;
        r.reserve(f.size() - from + g.size());
        std::size_t i = from, j = 1;
        while (i < f.size() && j < g.size()) {
            Monomial gm = g[j].m * t;
            int cmp = ord_.compare(f[i].m, gm);
            if (cmp > 0) {
                r.push_back(f[i++]);
            } else if (cmp < 0) {
                r.push_back({gm, k_.neg(k_.mul(c, g[j].c))});
                ++j;
            } else {
                E v = k_.sub(f[i].c, k_.mul(c, g[j].c));
                if (!k_.is_zero(v)) r.push_back({f[i].m, v});
                ++i;
                ++j;
            }
        }
        for (; i < f.size(); ++i) r.push_back(f[i]);
        for (; j < g.size(); ++j) r.push_back({g[j].m * t, k_.neg(k_.mul(c, g[j].c))});
        return r;
    }

    // Full reduction against monic polynomials.
    Poly reduce(Poly f, const std::vector<const Poly*>& G, const std::vector<std::uint32_t>& masks) const {
        Poly out;
        std::size_t pos = 0;
        while (pos < f.size()) {
            const Monomial& m = f[pos].m;
            std::uint32_t sm = support_mask(m);
            const Poly* div = nullptr;
            for (std::size_t i = 0; i < G.size(); ++i) {
                if ((masks[i] & ~sm) != 0) continue;
                if ((*G[i])[0].m.divides(m)) {
                    div = G[i];
                    break;
                }
            }
            if (!div) {
                out.push_back(f[pos++]);
                continue;
            }
            Monomial t = (*div)[0].m.quotient_of(m);
            E c = f[pos].c;
            f = sub_mul(f, pos + 1, c, t, *div);
            pos = 0;
        }
        return out;
    }

    static int degree(const Poly& p) {
        int d = 0;
        for (const auto& t : p) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }

    std::vector<Poly> buchberger(std::vector<Poly> input) {
        polys_.clear();
        sugar_.clear();
        active_.clear();
        pairs_.clear();
        for (auto& f : input) {
            if (f.empty()) continue;
            auto [G, masks] = active_view();
            Poly h = reduce(std::move(f), G, masks);
            if (h.empty()) continue;
            make_monic(h);
            int s = degree(h);
            insert(std::move(h), s);
        }
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t i = 1; i < pairs_.size(); ++i) {
                const Pair& a = pairs_[i];
                const Pair& b = pairs_[best];
                if (a.sugar < b.sugar || (a.sugar == b.sugar && ord_.compare(a.lcm, b.lcm) < 0)) best = i;
            }
            Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            if (p.sugar > budget_.max_degree)
                throw BudgetExceeded("Groebner degree budget " + std::to_string(budget_.max_degree) + " exceeded");
            if (++processed > budget_.max_pairs)
                throw BudgetExceeded("Groebner pair budget " + std::to_string(budget_.max_pairs) + " exceeded");
            const Poly& f = polys_[p.i];
            const Poly& g = polys_[p.j];
            Poly s = spoly(f, g, p.lcm);
            auto [G, masks] = active_view();
            Poly h = reduce(std::move(s), G, masks);
            if (h.empty()) continue;
            make_monic(h);
            insert(std::move(h), p.sugar);
        }
        return interreduce();
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int sugar;
    };

    Poly spoly(const Poly& f, const Poly& g, const Monomial& lcm) const {
        Monomial tf = f[0].m.quotient_of(lcm);
        Monomial tg = g[0].m.quotient_of(lcm);
        Poly a;
        a.reserve(f.size());
        for (std::size_t i = 1; i < f.size(); ++i) a.push_back({f[i].m * tf, f[i].c});
        Poly lead{{lcm, k_.one()}};
        lead.insert(lead.end(), a.begin(), a.end());
        return sub_mul(lead, 1, k_.one(), tg, g);
    }

    std::pair<std::vector<const Poly*>, std::vector<std::uint32_t>> active_view() const {
        std::vector<const Poly*> G;
        std::vector<std::uint32_t> masks;
        for (auto i : active_) {
            G.push_back(&polys_[i]);
            masks.push_back(support_mask(polys_[i][0].m));
        }
        return {G, masks};
    }

    int pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
        int si = sugar_[i] + static_cast<int>(lcm.deg) - static_cast<int>(polys_[i][0].m.deg);
        int sj = sugar_[j] + static_cast<int>(lcm.deg) - static_cast<int>(polys_[j][0].m.deg);
        return std::max(si, sj);
    }

    // Gebauer-Moeller update.
    void insert(Poly h, int sugar) {
        std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        sugar_.push_back(sugar);
        const Monomial& lh = polys_[hi][0].m;

        std::vector<Pair> C;
        for (auto g : active_) {
            Monomial l = lh.lcm(polys_[g][0].m);
            C.push_back({g, hi, l, pair_sugar(g, hi, l)});
        }
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            const Pair& p = C[a];
            bool keep = lh.coprime(polys_[p.i][0].m);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (C[b].lcm.divides(p.lcm)) keep = false;
                for (std::size_t b = 0; b < D.size() && keep; ++b)
                    if (D[b].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) D.push_back(p);
        }
        std::vector<Pair> kept;
        for (const auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && lh.lcm(polys_[p.i][0].m) != p.lcm && lh.lcm(polys_[p.j][0].m) != p.lcm;
            if (!drop) kept.push_back(p);
        }
        for (const auto& p : D)
            if (!lh.coprime(polys_[p.i][0].m)) kept.push_back(p);
        pairs_ = std::move(kept);

        std::vector<std::size_t> act;
        for (auto g : active_)
            if (!lh.divides(polys_[g][0].m)) act.push_back(g);
        act.push_back(hi);
        active_ = std::move(act);
    }

    std::vector<Poly> interreduce() {
        std::vector<std::size_t> idx = active_;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return ord_.compare(polys_[a][0].m, polys_[b][0].m) < 0;
        });
        std::vector<std::size_t> minimal;
        for (auto i : idx) {
            bool red = false;
            for (auto j : minimal)
                if (polys_[j][0].m.divides(polys_[i][0].m)) red = true;
            if (!red) minimal.push_back(i);
        }
        std::vector<Poly> out;
        for (std::size_t a = 0; a < minimal.size(); ++a) {
            std::vector<const Poly*> G;
            std::vector<std::uint32_t> masks;
            for (std::size_t b = 0; b < minimal.size(); ++b) {
                if (a == b) continue;
                G.push_back(&polys_[minimal[b]]);
                masks.push_back(support_mask(polys_[minimal[b]][0].m));
            }
            const Poly& f = polys_[minimal[a]];
            Poly tail(f.begin() + 1, f.end());
            Poly r = reduce(std::move(tail), G, masks);
            Poly full{f[0]};
            full.insert(full.end(), r.begin(), r.end());
            out.push_back(std::move(full));
        }
        return out;
    }

    K k_;
    MonomialOrder ord_;
    GroebnerBudget budget_;
    std::vector<Poly> polys_;
    std::vector<int> sugar_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

std::vector<Polynomial> run_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                     const GroebnerBudget& budget) {
    return with_kernel(ring->field(), [&](auto K) {
        Engine<decltype(K)> eng(K, ord, budget);
        std::vector<typename Engine<decltype(K)>::Poly> in;
        for (const auto& g : gens)
            if (!g.is_zero()) in.push_back(eng.convert(g));
        auto out = eng.buchberger(std::move(in));
        std::vector<Polynomial> res;
        for (const auto& p : out) res.push_back(eng.back(p, ring));
        return res;
    });
}

Polynomial run_reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    return with_kernel(f.field(), [&](auto K) {
        Engine<decltype(K)> eng(K, ord, GroebnerBudget{});
        std::vector<typename Engine<decltype(K)>::Poly> B;
        for (const auto& b : basis) {
            B.push_back(eng.convert(b));
            eng.make_monic(B.back());
        }
        std::vector<const typename Engine<decltype(K)>::Poly*> G;
        std::vector<std::uint32_t> masks;
        for (const auto& b : B) {
            G.push_back(&b);
            masks.push_back(support_mask(b[0].m));
        }
        return eng.back(eng.reduce(eng.convert(f), G, masks), f.ring());
    });
}

std::vector<Monomial> leading_monomials(const Ideal& I) {
    std::vector<Monomial> lm;
    for (const auto& g : I.basis()) lm.push_back(g.leading_monomial());
    return lm;
}

RingPtr with_extra_variable(const RingPtr& ring) {
    if (ring->nvars() + 1 > kMaxVars) throw ContractError("too many variables for an auxiliary elimination variable");
    auto vars = ring->variables();
    vars.push_back("_t");
    return PolyRing::make(vars, ring->field());
}

mpq_class random_element(const FieldSpec& F, std::mt19937_64& rng, long qq_bound) {
    if (F.is_prime_field()) return mpq_class(static_cast<unsigned long>(1 + rng() % (F.characteristic() - 1)));
    long span = 2 * qq_bound + 1;
    long v = static_cast<long>(rng() % static_cast<unsigned long>(span)) - qq_bound;
    return mpq_class(v == 0 ? 1 : v);
}

// Hilbert series numerator of a monomial ideal, as coefficients of t^k.
using Series = std::vector<mpz_class>;

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool red = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                red = true;
                break;
            }
        if (!red) out.push_back(g);
    }
    gens = std::move(out);
}

Series series_sub(const Series& a, const Series& b, unsigned shift) {
    Series r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i];
    return r;
}

Series series_add(const Series& a, const Series& b, unsigned shift) {
    Series r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
    return r;
}

Series hilbert_numerator(std::vector<Monomial> gens) {
    minimalize(gens);
    if (gens.empty()) return {1};
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        Series s{1};
        for (const auto& g : gens) s = series_sub(s, s, g.deg);
        return s;
    }
    // Pivot on the variable occurring in the most generators.
    int best = 0, count = -1;
    for (int v = 0; v < kMaxVars; ++v) {
        int c = 0;
        for (const auto& g : gens)
            if (g[v]) ++c;
        if (c > count) {
            count = c;
            best = v;
        }
    }
    Monomial p = Monomial::var(best);
    std::vector<Monomial> plus{p}, quot;
    for (const auto& g : gens) {
        if (!g[best]) plus.push_back(g);
        Monomial q = g;
        q.set(best, g[best] ? g[best] - 1u : 0u);
        quot.push_back(q);
    }
    // N(I) = N(I + (x)) + t * N(I : x)
    return series_add(hilbert_numerator(std::move(plus)), hilbert_numerator(std::move(quot)), 1);
}

// Univariate helpers; coefficients low to high.
template <class K>
struct Uni {
    using E = typename K::elem;
    K k;

    void trim(std::vector<E>& a) const {
        while (!a.empty() && k.is_zero(a.back())) a.pop_back();
    }
    std::vector<E> rem(std::vector<E> a, const std::vector<E>& b) const {
        trim(a);
        E inv = k.inv(b.back());
        while (a.size() >= b.size()) {
            E c = k.mul(a.back(), inv);
            std::size_t s = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = k.sub(a[s + i], k.mul(c, b[i]));
            a.pop_back();
            trim(a);
        }
        return a;
    }
    std::vector<E> gcd(std::vector<E> a, std::vector<E> b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            auto r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }
    std::vector<E> derivative(const std::vector<E>& a) const {
        std::vector<E> d;
        for (std::size_t i = 1; i < a.size(); ++i) d.push_back(k.mul(a[i], k.from(mpq_class(static_cast<unsigned long>(i)))));
        trim(d);
        return d;
    }
    long squarefree_degree(std::vector<E> a) const {
        trim(a);
        if (a.size() <= 1) return 0;
        auto d = derivative(a);
        auto g = gcd(a, d);
        return static_cast<long>(a.size()) - static_cast<long>(g.size());
    }
};

long distinct_projected_roots(const std::vector<Polynomial>& binary, int u, int w) {
    if (binary.empty()) return -1;
    return with_kernel(binary[0].field(), [&](auto K) -> long {
        using E = typename decltype(K)::elem;
        Uni<decltype(K)> U{K};
        std::vector<E> g;
        bool infinity = true;
        for (const auto& f : binary) {
            int d = f.degree();
            std::vector<E> c(static_cast<std::size_t>(d) + 1, K.zero());
            for (const auto& [m, v] : f.terms()) c[m[u]] = K.add(c[m[u]], K.from(v));
            if (!K.is_zero(c[static_cast<std::size_t>(d)])) infinity = false;
            (void)w;
            g = U.gcd(g, c);
        }
        return U.squarefree_degree(g) + (infinity ? 1 : 0);
    });
}

}  // namespace

GroebnerBudget default_budget() {
    std::lock_guard<std::mutex> lock(g_budget_mu);
    return g_budget;
}

void set_default_budget(const GroebnerBudget& b) {
    if (b.max_degree <= 0 || b.max_pairs == 0) throw ContractError("budgets must be positive");
    std::lock_guard<std::mutex> lock(g_budget_mu);
    g_budget = b;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.ring() && !(*g.ring() == *ring_)) throw ContractError("generator lives in a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

bool Ideal::is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& ord) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->bases.find(ord);
        if (it != cache_->bases.end()) return *it->second;
    }
    if (!is_homogeneous()) throw ContractError("ideal operations require homogeneous generators");
    auto gb = std::make_shared<const std::vector<Polynomial>>(run_groebner(ring_, gens_, ord, default_budget()));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(ord, gb);
    return *it->second;
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord) { return I.basis(ord); }

std::vector<Polynomial> groebner_basis_general(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                               const GroebnerBudget& budget) {
    if (gens.empty()) return {};
    return run_groebner(gens[0].ring(), gens, ord, budget);
}

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    if (f.is_zero() || basis.empty()) return f;
    return run_reduce(f, basis, ord);
}

Polynomial normal_form_poly(const Polynomial& f, const Ideal& I, const MonomialOrder& ord) {
    return reduce_by(f, I.basis(ord), ord);
}

bool ideal_contains(const Ideal& I, const Polynomial& f) { return normal_form_poly(f, I).is_zero(); }

bool ideal_subset(const Ideal& I, const Ideal& J) {
    return std::all_of(I.generators().begin(), I.generators().end(), [&](const Polynomial& g) { return ideal_contains(J, g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!(*I.ring() == *J.ring())) throw ContractError("ideal_equal: ring mismatch");
    return I.basis() == J.basis();
}

bool is_unit_ideal(const Ideal& I) {
    const auto& b = I.basis();
    return b.size() == 1 && b[0].is_constant();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    auto g = I.generators();
    g.insert(g.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), g);
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    if (I.generators().empty() || J.generators().empty()) return Ideal(I.ring());
    RingPtr ext = with_extra_variable(I.ring());
    int t = I.ring()->nvars();
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(tv * f.to_ring(ext));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.to_ring(ext));
    auto gb = groebner_basis_general(gens, MonomialOrder::elimination_mask(1u << t), default_budget());
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool has_t = false;
        for (const auto& [m, c] : g.terms())
            if (m[t]) has_t = true;
        if (!has_t) out.push_back(g.to_ring(I.ring()));
    }
    return Ideal(I.ring(), out);
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw ContractError("division by the zero polynomial");
    const auto& F = f.field();
    Polynomial q(f.ring()), r = f;
    const Monomial& lg = g.leading_monomial();
    mpq_class inv = F.inv(g.leading_coefficient());
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        if (!lg.divides(lr)) return std::nullopt;
        Monomial t = lg.quotient_of(lr);
        mpq_class c = F.mul(r.leading_coefficient(), inv);
        q.add_term(t, c);
        r -= g.mul_monomial(t, c);
    }
    return q;
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw ContractError("ideal_quotient by the zero polynomial");
    if (f.is_constant()) return I;
    Ideal meet = ideal_intersect(I, Ideal(I.ring(), {f}));
    std::vector<Polynomial> out;
    for (const auto& g : meet.generators()) {
        auto q = divide_exact(g, f);
        if (!q) throw std::logic_error("intersection element not divisible by the quotient polynomial");
        out.push_back(*q);
    }
    return Ideal(I.ring(), out);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    if (J.generators().empty()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), 1)});
    std::optional<Ideal> acc;
    for (const auto& g : J.generators()) {
        Ideal q = ideal_quotient(I, g);
        acc = acc ? ideal_intersect(*acc, q) : q;
    }
    return *acc;
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> v;
    for (int i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, v);
}

Ideal saturate(const Ideal& I) {
    const RingPtr& R = I.ring();
    if (I.generators().empty()) return I;
    if (!I.is_homogeneous()) throw ContractError("saturation requires a homogeneous ideal");
    int n = R->nvars();
    int last = n - 1;
    std::mt19937_64 rng(0x5eed5a7u);
    std::vector<mpq_class> c(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < last; ++i) c[static_cast<std::size_t>(i)] = R->field().reduce(random_element(R->field(), rng, 997));
    std::vector<Polynomial> fwd, bwd;
    for (int i = 0; i < n; ++i) {
        fwd.push_back(Polynomial::variable(R, i));
        bwd.push_back(Polynomial::variable(R, i));
    }
    for (int i = 0; i < last; ++i) {
        fwd[static_cast<std::size_t>(last)] -= Polynomial::variable(R, i).scale(c[static_cast<std::size_t>(i)]);
        bwd[static_cast<std::size_t>(last)] += Polynomial::variable(R, i).scale(c[static_cast<std::size_t>(i)]);
    }
    std::vector<Polynomial> moved;
    for (const auto& g : I.generators()) moved.push_back(g.substitute(fwd));
    Ideal J(R, moved);
    std::vector<Polynomial> out;
    for (const auto& g : J.basis()) {
        unsigned k = kMaxExponent;
        for (const auto& [m, v] : g.terms()) k = std::min<unsigned>(k, m[last]);
        Polynomial h = g;
        if (k > 0) h = *divide_exact(g, Polynomial::term(R, Monomial::var(last, k), 1));
        out.push_back(h.substitute(bwd));
    }
    return Ideal(R, out);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (J.generators().empty()) throw ContractError("saturation by the zero ideal");
    if (ideal_equal(J, irrelevant_ideal(I.ring()))) return saturate(I);
    Ideal cur = I;
    for (int it = 0; it < 64; ++it) {
        Ideal nxt = ideal_quotient(cur, J);
        if (ideal_subset(nxt, cur)) return cur;
        cur = nxt;
    }
    throw BudgetExceeded("saturation did not stabilize within 64 quotients");
}

int dimension(const Ideal& I) {
    int n = I.ring()->nvars();
    if (I.generators().empty()) return n;
    auto lm = leading_monomials(I);
    for (const auto& m : lm)
        if (m.deg == 0) return -1;
    std::vector<std::uint32_t> supp;
    for (const auto& m : lm) supp.push_back(support_mask(m));
    int best = 0;
    for (std::uint32_t U = 0; U < (1u << n); ++U) {
        int sz = __builtin_popcount(U);
        if (sz <= best) continue;
        bool indep = std::none_of(supp.begin(), supp.end(), [&](std::uint32_t s) { return (s & ~U) == 0; });
        if (indep) best = sz;
    }
    return best;
}

int codim(const Ideal& I) { return I.ring()->nvars() - dimension(I); }

long multiplicity(const Ideal& I) {
    int d = dimension(I);
    if (d <= 0) return 0;
    int n = I.ring()->nvars();
    Series N = hilbert_numerator(leading_monomials(I));
    // Divide by (1 - t)^(n - d).
    for (int k = 0; k < n - d; ++k) {
        Series q(N.size() > 1 ? N.size() - 1 : 1, 0);
        mpz_class acc = 0;
        for (std::size_t i = 0; i + 1 < N.size(); ++i) {
            acc += N[i];
            q[i] = acc;
        }
        if (acc + N.back() != 0) throw std::logic_error("Hilbert numerator not divisible by (1-t)");
        N = q;
    }
    mpz_class h = 0;
    for (const auto& v : N) h += v;
    return h.get_si();
}

std::vector<Monomial> standard_monomials(const Ideal& I, int d) {
    auto lm = leading_monomials(I);
    std::vector<Monomial> out;
    for (const auto& m : graded_basis(I.ring()->nvars(), d))
        if (std::none_of(lm.begin(), lm.end(), [&](const Monomial& l) { return l.divides(m); })) out.push_back(m);
    return out;
}

std::size_t hilbert_function(const Ideal& I, int d) { return standard_monomials(I, d).size(); }

long point_count(const Ideal& I) {
    Ideal S = saturate(I);
    int d = dimension(S);
    if (d != 1) throw ContractError("point_count: scheme is not zero-dimensional (affine dimension " + std::to_string(d) + ")");
    long mult = multiplicity(S);
    const RingPtr& R = S.ring();
    const FieldSpec& F = R->field();
    if (F.is_prime_field() && F.characteristic() <= static_cast<std::uint32_t>(mult))
        throw ContractError("point_count: characteristic too small for degree " + std::to_string(mult));
    int n = R->nvars();
    if (n < 2) throw ContractError("point_count needs at least two variables");
    std::mt19937_64 rng(0x9017c0u);
    long best = 0;
    for (int attempt = 0; attempt < 5 && best < mult; ++attempt) {
        Matrix M(F, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) M.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), random_element(F, rng, 9));
        } while (determinant(M) == 0);
        std::vector<Polynomial> images;
        for (int i = 0; i < n; ++i) {
            Polynomial img(R);
            for (int j = 0; j < n; ++j) img += Polynomial::variable(R, j).scale(M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            images.push_back(img);
        }
        std::vector<Polynomial> moved;
        for (const auto& g : S.generators()) moved.push_back(g.substitute(images));
        Ideal T(R, moved);
        const auto& gb = T.basis(MonomialOrder::elimination(n - 2));
        std::vector<Polynomial> binary;
        for (const auto& g : gb) {
            bool elim = false;
            for (const auto& [m, c] : g.terms())
                for (int v = 0; v < n - 2; ++v)
                    if (m[v]) elim = true;
            if (!elim) binary.push_back(g);
        }
        best = std::max(best, distinct_projected_roots(binary, n - 2, n - 1));
    }
    return best;
}

bool is_radical_zerodim(const Ideal& I) {
    Ideal S = saturate(I);
    long m = multiplicity(S);
    return point_count(S) == m;
}

}  // namespace symcanon
