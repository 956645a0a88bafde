#include "lsym/poly.hpp"

#include <sstream>

namespace lsym {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) fail("bad-input", "not a rational: '" + text + "'");
    if (sgn(q.get_den()) == 0) fail("bad-input", "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

void trim(Monomial& mono) {
    while (!mono.empty() && mono.back() == 0) mono.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size() > b.size() ? a : b);
    const Monomial& s = a.size() > b.size() ? b : a;
    for (std::size_t k = 0; k < s.size(); ++k) r[k] = static_cast<std::uint16_t>(r[k] + s[k]);
    return r;
}

}  // namespace

Monomial make_monomial(const std::vector<std::pair<int, unsigned>>& factors) {
    Monomial mono;
    for (auto [id, e] : factors) {
        if (mono.size() <= static_cast<std::size_t>(id)) mono.resize(id + 1, 0);
        mono[id] = static_cast<std::uint16_t>(mono[id] + e);
    }
    trim(mono);
    return mono;
}

Poly Poly::var(int id, unsigned exp) {
    Poly p;
    p.terms_[make_monomial({{id, exp}})] = 1;
    return p;
}

Integer Poly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Poly::add_term(const Monomial& mono, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, Integer(-c));
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, Integer(-c));
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), Integer(ca * cb));
    return r;
}

Poly operator/(const Poly& a, const Poly& b) {
    // Exact division by a unit constant is the only case that is needed.
    if (b.size() == 1 && b.terms().begin()->first.empty()) {
        const Integer& c = b.terms().begin()->second;
        if (c == 1) return a;
        if (c == -1) return -a;
    }
    fail("bad-input", "polynomial division is not supported");
}

Rational Poly::eval(const std::map<int, Rational>& values) const {
    Rational total = 0;
    for (const auto& [mono, c] : terms_) {
        Rational term(c);
        for (std::size_t id = 0; id < mono.size(); ++id) {
            if (mono[id] == 0) continue;
            auto it = values.find(static_cast<int>(id));
            if (it == values.end()) fail("bad-input", "no value for variable " + std::to_string(id));
            for (unsigned e = 0; e < mono[id]; ++e) term *= it->second;
        }
        total += term;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Integer ac = abs(c);
        bool constant = mono.empty();
        if (ac != 1 || constant) os << ac.get_str();
        bool need_star = ac != 1;
        for (std::size_t id = 0; id < mono.size(); ++id) {
            if (mono[id] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << "x[" << id / 16 + 1 << "," << id % 16 + 1 << "]";
            if (mono[id] > 1) os << "^" << mono[id];
        }
    }
    return os.str();
}

}  // namespace lsym
