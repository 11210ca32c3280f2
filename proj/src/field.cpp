#include "symcanon/field.hpp"

#include <cctype>

namespace symcanon {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 31)) throw ContractError("characteristic must be below 2^31");
    if (!is_prime(p)) throw ContractError("characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) throw ContractError("characteristic 2 is not supported (2 must be invertible)");
    FieldSpec f;
    f.kind_ = Kind::prime_field;
    f.p_ = static_cast<std::uint32_t>(p);
    return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(c)));
    if (t == "q" || t == "qq" || t == "rationals" || t == "0") return rationals();
    std::string digits;
    if (t.rfind("p:", 0) == 0) digits = t.substr(2);
    else if (t.rfind("gf(", 0) == 0 && t.back() == ')') digits = t.substr(3, t.size() - 4);
    else if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) digits = t;
    if (digits.empty() || digits.size() > 12) throw ContractError("unrecognized field '" + std::string(text) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ContractError("unrecognized field '" + std::string(text) + "'");
    return prime(std::stoull(digits));
}

std::string FieldSpec::to_string() const {
    return kind_ == Kind::rationals ? "q" : "p:" + std::to_string(p_);
}

mpq_class FieldSpec::reduce(const mpq_class& x) const {
    if (kind_ == Kind::rationals) return x;
    mpz_class num = x.get_num() % p_;
    mpz_class den = x.get_den() % p_;
    if (den == 0) throw ContractError("coefficient " + x.get_str() + " is not defined over " + to_string());
    mpz_class inv;
    mpz_class pz(p_);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class r = (num * inv) % pz;
    if (r < 0) r += pz;
    return mpq_class(r);
}

mpq_class FieldSpec::add(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == Kind::rationals) return a + b;
    mpz_class r = a.get_num() + b.get_num();
    if (r >= p_) r -= p_;
    return mpq_class(r);
}

mpq_class FieldSpec::sub(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == Kind::rationals) return a - b;
    mpz_class r = a.get_num() - b.get_num();
    if (r < 0) r += p_;
    return mpq_class(r);
}

mpq_class FieldSpec::mul(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == Kind::rationals) return a * b;
    return mpq_class(mpz_class(a.get_num() * b.get_num()) % p_);
}

mpq_class FieldSpec::neg(const mpq_class& a) const {
    if (kind_ == Kind::rationals) return -a;
    if (a == 0) return a;
    return mpq_class(mpz_class(p_ - a.get_num()));
}

mpq_class FieldSpec::inv(const mpq_class& a) const {
    if (a == 0) throw ContractError("division by zero");
    if (kind_ == Kind::rationals) return 1 / a;
    mpz_class r, pz(p_);
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz.get_mpz_t());
    return mpq_class(r);
}

mpq_class FieldSpec::printable(const mpq_class& a) const {
    if (kind_ == Kind::rationals) return a;
    if (a.get_num() > p_ / 2) return mpq_class(mpz_class(a.get_num() - p_));
    return a;
}

ModP::elem ModP::inv(elem a) const {
    if (a == 0) throw ContractError("division by zero");
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<elem>(t);
}

ModP::elem ModP::from(const mpq_class& x) const {
    mpz_class num = x.get_num() % p;
    if (num < 0) num += p;
    elem n = static_cast<elem>(num.get_ui());
    if (x.get_den() == 1) return n;
    mpz_class den = x.get_den() % p;
    if (den == 0) throw ContractError("coefficient " + x.get_str() + " is not defined mod " + std::to_string(p));
    return mul(n, inv(static_cast<elem>(den.get_ui())));
}

}  // namespace symcanon
