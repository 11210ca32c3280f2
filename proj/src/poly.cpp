#include "symcanon/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace symcanon {

Monomial Monomial::var(int i, unsigned power) {
    Monomial m;
    m.set(i, power);
    return m;
}

void Monomial::set(int i, unsigned v) {
    if (i < 0 || i >= kMaxVars) throw ContractError("variable index out of range");
    if (v > kMaxExponent) throw ContractError("exponent exceeds bound 2^15");
    deg = deg - e[static_cast<std::size_t>(i)] + v;
    e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
}

bool Monomial::divides(const Monomial& m) const {
    if (deg > m.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned v = unsigned(e[i]) + o.e[i];
        if (v > kMaxExponent) throw ContractError("exponent exceeds bound 2^15");
        r.e[i] = static_cast<std::uint16_t>(v);
    }
    r.deg = deg + o.deg;
    return r;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(m.e[i] - e[i]);
    r.deg = m.deg - deg;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    r.deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(e[i], o.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ULL;
    return h;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

PolyRing::PolyRing(std::vector<std::string> variables, FieldSpec field)
    : vars_(std::move(variables)), field_(field) {
    if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
        throw ContractError("number of variables must be between 1 and " + std::to_string(kMaxVars));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw ContractError("invalid variable name '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ContractError("invalid variable name '" + v + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (vars_[j] == v) throw ContractError("duplicate variable name '" + v + "'");
    }
}

RingPtr PolyRing::standard(FieldSpec field, int nvars) {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<const PolyRing>(std::move(names), field);
}

RingPtr PolyRing::make(std::vector<std::string> variables, FieldSpec field) {
    return std::make_shared<const PolyRing>(std::move(variables), field);
}

int PolyRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Polynomial Polynomial::constant(RingPtr ring, const mpq_class& c) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial{}, p.field().reduce(c));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw ContractError("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.emplace(Monomial::var(i), mpq_class(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const mpq_class& c) {
    Polynomial p(std::move(ring));
    p.add_term(m, p.field().reduce(c));
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.deg;
    for (const auto& [m, c] : terms_)
        if (m.deg != d) return false;
    return true;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0); }

mpq_class Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second = field().add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_ring(const Polynomial& g) const {
    if (!ring_ || !g.ring_) throw ContractError("polynomial without ring");
    if (ring_ != g.ring_ && !(*ring_ == *g.ring_)) throw ContractError("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    Polynomial r = *this;
    r += g;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    Polynomial r = *this;
    r -= g;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_ring(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_ring(g);
    const auto& F = field();
    for (const auto& [m, c] : g.terms_) add_term(m, F.neg(c));
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_ring(g);
    Polynomial r(ring_);
    const auto& F = field();
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, F.mul(c1, c2));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field().neg(c));
    return r;
}

Polynomial Polynomial::scale(const mpq_class& c) const {
    Polynomial r(ring_);
    mpq_class cc = field().reduce(c);
    if (cc == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field().mul(a, cc));
    return r;
}

Polynomial Polynomial::mul_monomial(const Monomial& mon, const mpq_class& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mon, field().mul(a, c));
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    auto it = g.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (m != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.deg) == d) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        unsigned ev = m[var];
        if (ev == 0) continue;
        Monomial q = m;
        q.set(var, ev - 1);
        r.add_term(q, field().mul(c, field().from_int(static_cast<long>(ev))));
    }
    return r;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    const auto& F = field();
    mpq_class total = 0;
    for (const auto& [m, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < ring_->nvars(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t = F.mul(t, point.at(static_cast<std::size_t>(i)));
        total = F.add(total, t);
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) < ring_->nvars()) throw ContractError("substitution needs one image per variable");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    Polynomial r(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < ring_->nvars(); ++i) {
            unsigned k = m[i];
            if (!k) continue;
            auto& pw = powers[static_cast<std::size_t>(i)];
            if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
            while (pw.size() <= k) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
            t = t * pw[k];
        }
        r += t;
    }
    return r;
}

Polynomial Polynomial::to_ring(const RingPtr& target) const {
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        for (int i = target->nvars(); i < kMaxVars; ++i)
            if (m[i]) throw ContractError("polynomial uses variables missing from the target ring");
        r.add_term(m, target->field().reduce(c));
    }
    return r;
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
    std::string s;
    for (int i = 0; i < ring.nvars(); ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += '*';
        s += ring.variables()[static_cast<std::size_t>(i)];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c0] : terms_) {
        mpq_class c = field().printable(c0);
        bool negative = sgn(c) < 0;
        mpq_class a = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.deg == 0) {
            out += a.get_str();
        } else if (a == 1) {
            out += monomial_to_string(m, *ring_);
        } else {
            out += a.get_str() + "*" + monomial_to_string(m, *ring_);
        }
    }
    return out;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const std::variant<Polynomial, mpq_class>& g) {
    switch (op) {
        case ArithOp::add: return f + std::get<Polynomial>(g);
        case ArithOp::sub: return f - std::get<Polynomial>(g);
        case ArithOp::mul: return f * std::get<Polynomial>(g);
        case ArithOp::scale: return f.scale(std::get<mpq_class>(g));
        case ArithOp::power: {
            const mpq_class& k = std::get<mpq_class>(g);
            if (k.get_den() != 1 || k < 0 || k > kMaxExponent) throw ContractError("power must be a small nonnegative integer");
            return f.pow(static_cast<unsigned>(k.get_num().get_ui()));
        }
    }
    throw ContractError("unknown arithmetic operation");
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        Polynomial p = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ContractError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc(ring_);
        skip();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Polynomial t = term();
        acc += neg ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by nonzero constants");
                }
                acc = acc.scale(ring_->field().inv(d.leading_coefficient()));
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 6) fail("exponent too large");
            unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (k > kMaxExponent) fail("exponent exceeds bound 2^15");
            base = base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class v(std::string(s_.substr(start, pos_ - start)));
            std::size_t at = pos_;
            try {
                return Polynomial::constant(ring_, mpq_class(v));
            } catch (const ContractError& e) {
                pos_ = at;
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            int idx = ring_->index_of(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return Polynomial::variable(ring_, idx);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace {

struct BasisCache {
    std::mutex mu;
    std::map<std::pair<int, int>, std::unique_ptr<std::vector<Monomial>>> lists;
    std::map<std::pair<int, int>, std::unique_ptr<std::unordered_map<Monomial, std::size_t, MonomialHash>>> index;
};

BasisCache& cache() {
    static BasisCache c;
    return c;
}

void enumerate(int nvars, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur.set(var, static_cast<unsigned>(remaining));
        out.push_back(cur);
        cur.set(var, 0);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.set(var, static_cast<unsigned>(k));
        enumerate(nvars, var + 1, remaining - k, cur, out);
    }
    cur.set(var, 0);
}

}  // namespace

const std::vector<Monomial>& graded_basis(int nvars, int d) {
    if (nvars < 1 || nvars > kMaxVars) throw ContractError("number of variables out of range");
    if (d < 0) throw ContractError("degree must be nonnegative");
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto key = std::make_pair(nvars, d);
    auto it = c.lists.find(key);
    if (it != c.lists.end()) return *it->second;
    auto list = std::make_unique<std::vector<Monomial>>();
    Monomial cur;
    enumerate(nvars, 0, d, cur, *list);
    std::sort(list->begin(), list->end(), GrevlexGreater{});
    auto idx = std::make_unique<std::unordered_map<Monomial, std::size_t, MonomialHash>>();
    for (std::size_t i = 0; i < list->size(); ++i) (*idx)[(*list)[i]] = i;
    c.index[key] = std::move(idx);
    return *(c.lists[key] = std::move(list));
}

std::size_t graded_basis_index(int nvars, int d, const Monomial& m) {
    graded_basis(nvars, d);
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    const auto& idx = *c.index.at({nvars, d});
    auto it = idx.find(m);
    if (it == idx.end()) throw ContractError("monomial not of the requested degree");
    return it->second;
}

}  // namespace symcanon
