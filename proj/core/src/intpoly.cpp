#include "symrep/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symrep {

namespace {

const Int kZero = 0;

int sign_of(const Int& x) { return sgn(x); }

/// Content: gcd of all coefficients, always nonnegative (0 for the zero
/// polynomial).
Int content(const IntPoly& f) {
    Int c = 0;
    for (const Int& a : f.coeffs()) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

IntPoly divide_by_positive(const IntPoly& f, const Int& d) {
    std::vector<Int> out(f.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), d.get_mpz_t());
    return IntPoly(std::move(out));
}

/// Primitive part, leading-coefficient sign preserved.
IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    Int c = content(f);
    if (c == 1) return f;
    return divide_by_positive(f, c);
}

IntPoly shift_mul(const IntPoly& f, int k, const Int& c) {
    if (f.is_zero() || c == 0) return IntPoly::zero();
    std::vector<Int> out(f.coeffs().size() + static_cast<size_t>(k));
    for (size_t i = 0; i < f.coeffs().size(); ++i) out[i + k] = f.coeffs()[i] * c;
    return IntPoly(std::move(out));
}

/// Remainder of a by b scaled by a positive integer multiple, so the sign
/// pattern needed by Sturm chains is preserved. Each reduction step
/// multiplies the running remainder by lc(b)^2 > 0.
IntPoly positive_pseudo_rem(const IntPoly& a, const IntPoly& b) {
    const Int& m = b.leading_coefficient();
    Int m2 = m * m;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Int c = r.leading_coefficient();
        r = r * m2 - shift_mul(b, k, m * c);
    }
    return r;
}

/// Classical pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    const Int& m = b.leading_coefficient();
    int delta = a.degree() - b.degree();
    IntPoly r = a;
    int steps_left = delta + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Int c = r.leading_coefficient();
        r = r * m - shift_mul(b, k, c);
        --steps_left;
    }
    // prem is defined with exactly delta+1 factors of lc(b)
    while (steps_left-- > 0) r = r * m;
    return r;
}

int sign_at_plus_inf(const IntPoly& p) { return sign_of(p.leading_coefficient()); }

int sign_at_minus_inf(const IntPoly& p) {
    int s = sign_of(p.leading_coefficient());
    return (p.degree() % 2 == 0) ? s : -s;
}

int count_variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int k, Int c) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, 0);
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading_coefficient() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

Int IntPoly::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& scalar) const {
    if (scalar == 0) return IntPoly();
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * scalar;
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

std::string IntPoly::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || d == 0) os << a.get_str();
        if (d >= 1) {
            os << 'X';
            if (d > 1) os << '^' << d;
        }
        first = false;
    }
    return os.str();
}

IntPoly IntPoly::from_string(const std::string& text) {
    std::vector<Int> coeffs;
    std::string token;
    std::istringstream is(text);
    if (text.empty()) throw ParseError("empty polynomial string");
    if (text.back() == ',') throw ParseError("trailing comma in '" + text + "'");
    while (std::getline(is, token, ',')) {
        size_t b = token.find_first_not_of(" \t");
        size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
        std::string digits = token.substr(b, e - b + 1);
        size_t p = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
        if (p == digits.size()) throw ParseError("bad coefficient '" + digits + "'");
        for (size_t i = p; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i])))
                throw ParseError("bad coefficient '" + digits + "'");
        coeffs.emplace_back(digits, 10);
    }
    if (coeffs.empty()) throw ParseError("no coefficients in '" + text + "'");
    return IntPoly(std::move(coeffs));
}

IntPoly SquarefreeDecomposition::recombine() const {
    IntPoly acc = IntPoly::constant(1);
    for (const Part& part : parts)
        for (int i = 0; i < part.multiplicity; ++i) acc = acc * part.factor;
    return acc;
}

IntPoly derivative(const IntPoly& f) {
    if (f.is_constant()) return IntPoly::zero();
    std::vector<Int> out(f.coeffs().size() - 1);
    for (size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = f.coeffs()[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(out));
}

std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& f, const IntPoly& g) {
    if (!g.is_monic() || g.degree() < 1) throw DivisorNotMonic();
    if (f.is_zero() || f.degree() < g.degree()) return {IntPoly::zero(), f};
    std::vector<Int> q(static_cast<size_t>(f.degree() - g.degree()) + 1);
    IntPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        Int c = r.leading_coefficient();
        q[static_cast<size_t>(k)] = c;
        r = r - shift_mul(g, k, c);
    }
    return {IntPoly(std::move(q)), r};
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    IntPoly a = primitive_part(f);
    IntPoly b = primitive_part(g);
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) {
            std::swap(a, b);
            continue;
        }
        IntPoly r = positive_pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    if (!a.is_zero() && a.leading_coefficient() < 0) return -a;
    return a;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.is_constant() && g.is_constant()) return 1;
    IntPoly a = f;
    IntPoly b = g;
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        std::swap(a, b);
    }
    // res(c, b) for constant c
    if (b.is_constant()) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.coeff(0).get_mpz_t(), static_cast<unsigned long>(a.degree()));
        return s * r;
    }
    Int ca = content(a);
    Int cb = content(b);
    a = divide_by_positive(a, ca);
    b = divide_by_positive(b, cb);
    Int t;
    {
        Int pa, pb;
        mpz_pow_ui(pa.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
        mpz_pow_ui(pb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
        t = pa * pb * s;
    }
    Int gg = 1;
    Int hh = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) t = -t;
        IntPoly r = pseudo_rem(a, b);
        a = b;
        Int denom = gg;
        for (int i = 0; i < delta; ++i) denom *= hh;
        if (r.is_zero())
            b = IntPoly::zero();
        else {
            std::vector<Int> out(r.coeffs().size());
            for (size_t i = 0; i < out.size(); ++i)
                mpz_divexact(out[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(), denom.get_mpz_t());
            b = IntPoly(std::move(out));
        }
        gg = a.leading_coefficient();
        // h <- h^(1-delta) g^delta, exact in Z
        if (delta == 1) {
            hh = gg;
        } else if (delta > 1) {
            Int num;
            mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
            Int den;
            mpz_pow_ui(den.get_mpz_t(), hh.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.is_zero()) return 0;
        if (b.degree() == 0) break;
    }
    // final correction: h <- lc(B)^degA / h^(degA - 1)
    Int num;
    mpz_pow_ui(num.get_mpz_t(), b.coeff(0).get_mpz_t(), static_cast<unsigned long>(a.degree()));
    if (a.degree() > 1) {
        Int den;
        mpz_pow_ui(den.get_mpz_t(), hh.get_mpz_t(), static_cast<unsigned long>(a.degree() - 1));
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return t * num;
}

int sturm_distinct_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.is_constant()) return 0;
    std::vector<IntPoly> chain;
    chain.push_back(primitive_part(f));
    chain.push_back(primitive_part(derivative(f)));
    while (!chain.back().is_zero()) {
        const IntPoly& p = chain[chain.size() - 2];
        const IntPoly& q = chain.back();
        IntPoly r = positive_pseudo_rem(p, q);
        chain.push_back(-primitive_part(r));
    }
    chain.pop_back();
    std::vector<int> at_minus, at_plus;
    at_minus.reserve(chain.size());
    at_plus.reserve(chain.size());
    for (const IntPoly& p : chain) {
        at_minus.push_back(sign_at_minus_inf(p));
        at_plus.push_back(sign_at_plus_inf(p));
    }
    return count_variations(at_minus) - count_variations(at_plus);
}

bool is_strict_real_zero(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("is_strict_real_zero expects a monic polynomial of degree >= 1");
    return sturm_distinct_real_roots(f) == f.degree();
}

bool is_real_zero(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("is_real_zero expects a monic polynomial of degree >= 1");
    IntPoly g = poly_gcd(f, derivative(f));
    IntPoly sqfree = g.is_constant() ? f : poly_divrem(f, g).first;
    return sturm_distinct_real_roots(sqfree) == sqfree.degree();
}

SquarefreeDecomposition squarefree_decompose(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("squarefree_decompose expects a monic polynomial of degree >= 1");
    SquarefreeDecomposition result;
    IntPoly fp = derivative(f);
    IntPoly a0 = poly_gcd(f, fp);
    IntPoly b = a0.is_constant() ? f : poly_divrem(f, a0).first;
    IntPoly c = a0.is_constant() ? fp : poly_divrem(fp, a0).first;
    IntPoly d = c - derivative(b);
    int multiplicity = 1;
    while (b.degree() > 0) {
        IntPoly a = poly_gcd(b, d);
        if (a.degree() > 0) result.parts.push_back({a, multiplicity});
        b = a.is_constant() ? b : poly_divrem(b, a).first;
        c = a.is_constant() ? d : poly_divrem(d, a).first;
        d = c - derivative(b);
        ++multiplicity;
    }
    return result;
}

}  // namespace symrep
