#include "pwt/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pwt {

Poly::Poly(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (s.field() != f) throw FieldMismatch("polynomial coefficient field mismatch");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::x_minus(const Scalar& c) {
    return Poly(c.field(), {-c, Scalar::one(c.field())});
}

Poly Poly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(Scalar::of(f, v));
    return Poly(f, std::move(c));
}

Scalar Poly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return Scalar::zero(field_);
}

const Scalar& Poly::lead() const {
    if (is_zero()) throw ArithmeticError("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Scalar inv = lead().inverse();
    std::vector<Scalar> c = c_;
    for (auto& s : c) s = inv * s;
    return Poly(field_, std::move(c));
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly(field_);
    std::vector<Scalar> c;
    c.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(Scalar::of(field_, static_cast<long long>(i)) * c_[i]);
    return Poly(field_, std::move(c));
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<Scalar> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<Scalar> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_ || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !c_[i].is_one()) os << c_[i].to_string();
        if (i >= 1) os << (i == 1 ? "t" : "t^" + std::to_string(i));
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    Poly r = a;
    Poly q(a.field());
    Scalar lead_inv = b.lead().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Scalar c = r.lead() * lead_inv;
        std::vector<Scalar> mono(static_cast<std::size_t>(shift) + 1, Scalar::zero(a.field()));
        mono.back() = c;
        Poly term(a.field(), std::move(mono));
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_pow(const Poly& a, int e) {
    Poly r = Poly::constant(Scalar::one(a.field()));
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

namespace {

// t^p mod f via square-and-multiply on exponent p.
Poly x_pow_mod(const Poly& f, std::int64_t e) {
    const Field& k = f.field();
    Poly result = Poly::constant(Scalar::one(k));
    Poly base(k, {Scalar::zero(k), Scalar::one(k)});
    while (e > 0) {
        if (e & 1) result = divmod(result * base, f).second;
        base = divmod(base * base, f).second;
        e >>= 1;
    }
    return result;
}

// Berlekamp splitting of a squarefree monic polynomial over GF(p).
void berlekamp_squarefree(const Poly& f, std::vector<Poly>& out) {
    const Field& k = f.field();
    int n = f.degree();
    if (n <= 1) {
        if (n == 1) out.push_back(f);
        return;
    }
    std::int64_t p = k.characteristic();
    // Frobenius matrix: column i holds coefficients of t^{p*i} mod f.
    Matrix frob(k, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    Poly tp = x_pow_mod(f, p);
    Poly cur = Poly::constant(Scalar::one(k));
    for (int i = 0; i < n; ++i) {
        for (int r = 0; r <= cur.degree(); ++r) frob(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = cur.coeff(static_cast<std::size_t>(r));
        cur = divmod(cur * tp, f).second;
    }
    Matrix fixed = kernel_basis(frob - Matrix::identity(k, static_cast<std::size_t>(n)));
    if (fixed.cols() <= 1) {
        out.push_back(f);  // irreducible
        return;
    }
    // Pick a non-constant fixed polynomial and split with gcd(f, v - c).
    for (std::size_t j = 0; j < fixed.cols(); ++j) {
        std::vector<Scalar> coeffs;
        for (int r = 0; r < n; ++r) coeffs.push_back(fixed(static_cast<std::size_t>(r), j));
        Poly v(k, std::move(coeffs));
        if (v.degree() < 1) continue;
        std::vector<Poly> pieces;
        Poly rest = f;
        for (std::int64_t c = 0; c < p && rest.degree() > 0; ++c) {
            Poly g = gcd(rest, v - Poly::constant(Scalar::of(k, c)));
            if (g.degree() >= 1) {
                pieces.push_back(g);
                rest = divmod(rest, g).first.monic();
            }
        }
        if (rest.degree() >= 1) pieces.push_back(rest);
        if (pieces.size() > 1) {
            for (const auto& piece : pieces) berlekamp_squarefree(piece, out);
            return;
        }
    }
    // All fixed polynomials were constants on this branch; cannot happen for
    // kernel dimension > 1, but stay safe.
    out.push_back(f);
}

// Squarefree factorization over GF(p), multiplicities included.
void squarefree_gf(const Poly& f, int outer_mult, std::map<std::string, PolyFactor>& acc,
                   std::vector<PolyFactor>& order) {
    const Field& k = f.field();
    std::int64_t p = k.characteristic();
    Poly d = f.derivative();
    auto push = [&](const Poly& sq, int mult) {
        std::vector<Poly> irr;
        berlekamp_squarefree(sq.monic(), irr);
        for (const auto& q : irr) {
            std::string key = q.to_string();
            auto it = acc.find(key);
            if (it == acc.end()) {
                acc.emplace(key, PolyFactor{q, mult});
                order.push_back(PolyFactor{q, 0});
            } else {
                it->second.multiplicity += mult;
            }
        }
    };
    if (d.is_zero()) {
        // f = g(t^p); over the prime field coefficients are Frobenius-fixed.
        std::vector<Scalar> g;
        for (int i = 0; i * p <= f.degree(); ++i) g.push_back(f.coeff(static_cast<std::size_t>(i * p)));
        squarefree_gf(Poly(k, std::move(g)), outer_mult * static_cast<int>(p), acc, order);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = divmod(f, c).first.monic();
    int i = 1;
    while (w.degree() >= 1) {
        Poly y = gcd(w, c);
        Poly z = divmod(w, y).first.monic();
        if (z.degree() >= 1) push(z, i * outer_mult);
        ++i;
        w = y;
        c = divmod(c, y).first.monic();
    }
    if (c.degree() >= 1) squarefree_gf(c, outer_mult, acc, order);
}

// Divisors of |v| when v fits comfortably in 64 bits; empty on overflow.
std::vector<long long> small_divisors(const BigInt& v) {
    BigInt a = v < 0 ? BigInt(-v) : v;
    if (a == 0 || a > BigInt(1000000000000LL)) return {};
    long long n = a.convert_to<long long>();
    std::vector<long long> ds;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Yun's squarefree decomposition over Q: pieces g_i of multiplicity i.
std::vector<PolyFactor> yun_squarefree_q(const Poly& f) {
    std::vector<PolyFactor> out;
    Poly d = f.derivative();
    Poly a = gcd(f, d);
    Poly b = divmod(f, a).first.monic();
    Poly c = divmod(d, a).first;
    int i = 1;
    while (b.degree() >= 1) {
        Poly e = c - b.derivative();
        Poly g = gcd(b, e);
        if (g.degree() >= 1) out.push_back(PolyFactor{g, i});
        b = divmod(b, g).first.monic();
        c = divmod(e, g).first;
        ++i;
    }
    return out;
}

// Rational roots of f over Q by the rational root scan. Returns (root, mult)
// pairs and divides them out of f.
std::vector<std::pair<Scalar, int>> extract_rational_roots(Poly& f) {
    const Field& k = f.field();
    std::vector<std::pair<Scalar, int>> roots;
    // Zero roots first.
    int zmult = 0;
    while (f.degree() >= 1 && f.coeff(0).is_zero()) {
        std::vector<Scalar> shifted;
        for (int i = 1; i <= f.degree(); ++i) shifted.push_back(f.coeff(static_cast<std::size_t>(i)));
        f = Poly(k, std::move(shifted));
        ++zmult;
    }
    if (zmult > 0) roots.emplace_back(Scalar::zero(k), zmult);
    if (f.degree() < 1) return roots;
    // Clear denominators into an integer polynomial.
    BigInt denlcm = 1;
    for (int i = 0; i <= f.degree(); ++i) {
        const Rational& q = f.coeff(static_cast<std::size_t>(i)).rational();
        denlcm = boost::multiprecision::lcm(denlcm, boost::multiprecision::denominator(q));
    }
    std::vector<BigInt> ic;
    for (int i = 0; i <= f.degree(); ++i) {
        const Rational& q = f.coeff(static_cast<std::size_t>(i)).rational();
        ic.push_back(boost::multiprecision::numerator(q) * (denlcm / boost::multiprecision::denominator(q)));
    }
    auto nums = small_divisors(ic.front());
    auto dens = small_divisors(ic.back());
    if (nums.empty() || dens.empty()) return roots;  // coefficients too large; skip scan
    for (long long num : nums) {
        for (long long den : dens) {
            for (int sign : {1, -1}) {
                if (f.degree() < 1) return roots;
                Scalar cand = Scalar::ratio(k, sign * num, den);
                int mult = 0;
                while (f.degree() >= 1 && f.eval(cand).is_zero()) {
                    f = divmod(f, Poly::x_minus(cand)).first;
                    ++mult;
                }
                if (mult > 0) roots.emplace_back(cand, mult);
            }
        }
    }
    return roots;
}

}  // namespace

std::vector<PolyFactor> factor_gf(const Poly& f) {
    if (!f.field().is_prime()) throw FieldMismatch("factor_gf requires a prime field");
    if (f.degree() < 1) return {};
    std::map<std::string, PolyFactor> acc;
    std::vector<PolyFactor> order;
    squarefree_gf(f.monic(), 1, acc, order);
    std::vector<PolyFactor> out;
    for (auto& stub : order) {
        auto it = acc.find(stub.factor.to_string());
        if (it != acc.end()) {
            out.push_back(it->second);
            acc.erase(it);
        }
    }
    return out;
}

std::vector<PolyFactor> primary_coprime_parts(const Poly& f) {
    if (f.degree() < 1) return {};
    if (f.field().is_prime()) {
        auto irr = factor_gf(f);
        std::vector<PolyFactor> out;
        out.reserve(irr.size());
        for (auto& [q, m] : irr) out.push_back(PolyFactor{q, m});
        return out;
    }
    // Rationals: peel rational roots, then split the remainder by Yun
    // multiplicity classes. Pieces are pairwise coprime by construction.
    Poly rest = f.monic();
    std::vector<PolyFactor> out;
    for (auto& [root, mult] : extract_rational_roots(rest))
        out.push_back(PolyFactor{Poly::x_minus(root), mult});
    if (rest.degree() >= 1)
        for (auto& pf : yun_squarefree_q(rest)) out.push_back(pf);
    return out;
}

Poly minimal_polynomial(const Matrix& t) {
    if (!t.is_square()) throw DimensionMismatch("minimal polynomial of a non-square matrix");
    const Field& k = t.field();
    std::size_t n = t.rows();
    if (n == 0) return Poly(k, {Scalar::one(k)});  // unit; the operator on 0 is vacuous
    Matrix krylov(k, n * n, 0);
    Matrix power = Matrix::identity(k, n);
    for (std::size_t deg = 0; deg <= n; ++deg) {
        Matrix v = vec(power);
        auto coeffs = solve(krylov, v);
        if (coeffs) {
            std::vector<Scalar> c;
            for (std::size_t i = 0; i < deg; ++i) c.push_back(-(*coeffs)(i, 0));
            c.push_back(Scalar::one(k));
            return Poly(k, std::move(c));
        }
        krylov = hcat(krylov, v);
        power = power * t;
    }
    throw InternalError("minimal polynomial search exceeded dimension bound");
}

}  // namespace pwt
