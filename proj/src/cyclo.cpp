#include "lattangle/cyclo.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace lattangle {

// ---------- polynomial helpers ----------

static void poly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

static QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// a = q*b + r with deg r < deg b.
static void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    poly_trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
    Rational lead_inv = 1 / b.back();
    while (a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        Rational f = a.back() * lead_inv;
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        poly_trim(a);
        if (a.empty()) break;
    }
    poly_trim(q);
    r = std::move(a);
}

static QPoly poly_mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    poly_divmod(a, b, q, r);
    return r;
}

// s*a + t*m = gcd (monic); only s is needed for inverses mod m.
static QPoly poly_invmod(const QPoly& a, const QPoly& m) {
    QPoly r0 = m, r1 = poly_mod(a, m);
    QPoly s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        QPoly q, r;
        poly_divmod(r0, r1, q, r);
        QPoly s = s0;
        QPoly qs1 = poly_mul(q, s1);
        if (s.size() < qs1.size()) s.resize(qs1.size(), Rational(0));
        for (size_t i = 0; i < qs1.size(); ++i) s[i] -= qs1[i];
        poly_trim(s);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw std::domain_error("inverse does not exist");
    Rational g_inv = 1 / r0[0];
    for (auto& c : s0) c *= g_inv;
    return s0;
}

// ---------- cyclotomic polynomial cache ----------

const QPoly& cyclotomic_poly(long n) {
    static std::map<long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    for (long d : divisors(n)) {
        if (cache.count(d)) continue;
        QPoly num(d + 1, Rational(0));
        num[0] = -1;
        num[d] = 1;
        for (long e : divisors(d)) {
            if (e == d) continue;
            QPoly q, r;
            poly_divmod(num, cache.at(e), q, r);
            if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

long order_cap() {
    static long cap = [] {
        const char* s = std::getenv("LATTANGLE_ORDER_CAP");
        return s ? std::atol(s) : 10000L;
    }();
    return cap;
}

// ---------- Cyclo ----------

static QVec reduce_to_basis(const QPoly& p, long n) {
    const QPoly& phi = cyclotomic_poly(n);
    QPoly r = poly_mod(p, phi);
    r.resize(phi.size() - 1, Rational(0));
    return r;
}

Cyclo Cyclo::root(const RootOfUnity& r) {
    Cyclo x;
    x.order_ = r.den;
    QPoly p(r.num + 1, Rational(0));
    p[r.num] = 1;
    x.coords_ = reduce_to_basis(p, r.den);
    return x;
}

Cyclo Cyclo::from_coords(long order, QVec coords) {
    const size_t phi = cyclotomic_poly(order).size() - 1;
    if (coords.size() != phi) throw std::invalid_argument("coordinate length mismatch");
    Cyclo x;
    x.order_ = order;
    x.coords_ = std::move(coords);
    return x;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

std::optional<Rational> Cyclo::as_rational() const {
    if (!is_rational()) {
        Cyclo r = reduced();
        if (r.order_ == 1) return r.coords_[0];
        return std::nullopt;
    }
    return coords_[0];
}

Cyclo Cyclo::lifted(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
    if (m > order_cap()) throw std::domain_error("cyclotomic order cap exceeded");
    long step = m / order_;
    QPoly p((coords_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < coords_.size(); ++i) p[i * step] = coords_[i];
    Cyclo x;
    x.order_ = m;
    x.coords_ = reduce_to_basis(p, m);
    return x;
}

Cyclo Cyclo::reduced() const {
    if (order_ == 1) return *this;
    for (long d : divisors(order_)) {
        if (d == order_) break;
        // basis of Q(zeta_d) expressed inside Q(zeta_n)
        size_t phi_d = cyclotomic_poly(d).size() - 1;
        long step = order_ / d;
        QMat a(coords_.size(), QVec(phi_d, Rational(0)));
        for (size_t j = 0; j < phi_d; ++j) {
            QPoly p(j * step + 1, Rational(0));
            p[j * step] = 1;
            QVec col = reduce_to_basis(p, order_);
            for (size_t i = 0; i < col.size(); ++i) a[i][j] = col[i];
        }
        if (auto sol = solve(a, coords_)) {
            Cyclo x;
            x.order_ = d;
            x.coords_ = *sol;
            return x;
        }
    }
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    for (auto& c : x.coords_) c = -c;
    return x;
}

Cyclo Cyclo::galois(long k) const {
    k %= order_;
    if (k < 0) k += order_;
    if (order_ == 1) return *this;
    if (std::gcd(k, order_) != 1) throw std::invalid_argument("galois exponent not coprime to order");
    QPoly p(order_, Rational(0));
    for (size_t i = 0; i < coords_.size(); ++i) p[(i * k) % order_] += coords_[i];
    Cyclo x;
    x.order_ = order_;
    x.coords_ = reduce_to_basis(p, order_);
    return x;
}

Cyclo Cyclo::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (is_rational()) return Cyclo(Rational(1 / coords_[0]));
    QPoly p(coords_.begin(), coords_.end());
    poly_trim(p);
    QPoly s = poly_invmod(p, cyclotomic_poly(order_));
    Cyclo x;
    x.order_ = order_;
    x.coords_ = reduce_to_basis(s, order_);
    return x;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

static long common_order(const Cyclo& a, const Cyclo& b) {
    long m = std::lcm(a.order(), b.order());
    if (m > order_cap()) throw std::domain_error("cyclotomic order cap exceeded");
    return m;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    long m = common_order(a, b);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    long m = common_order(a, b);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long m = common_order(a, b);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    QPoly p(x.coords_.begin(), x.coords_.end());
    QPoly q(y.coords_.begin(), y.coords_.end());
    poly_trim(p);
    poly_trim(q);
    Cyclo r;
    r.order_ = m;
    if (p.empty() || q.empty()) {
        r.coords_.assign(x.coords_.size(), Rational(0));
        return r;
    }
    r.coords_ = reduce_to_basis(poly_mul(p, q), m);
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    long m = common_order(a, b);
    return a.lifted(m).coords_ == b.lifted(m).coords_;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
    long m = common_order(a, b);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coords_.size(); ++i) {
        int c = cmp(x.coords_[i], y.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool is_real(const Cyclo& x) { return x.conj() == x; }
bool is_imaginary(const Cyclo& x) { return x.conj() == -x; }

RatioResult rational_ratio(const Cyclo& u, const Cyclo& v) {
    bool uz = u.is_zero(), vz = v.is_zero();
    if (uz && vz) return {RatioResult::Indeterminate, Rational(0)};
    if (vz) return {RatioResult::None, Rational(0)};
    long m = std::lcm(u.order(), v.order());
    Cyclo a = u.lifted(m), b = v.lifted(m);
    size_t i = 0;
    while (b.coords()[i] == 0) ++i;
    Rational rho = a.coords()[i] / b.coords()[i];
    for (size_t j = 0; j < a.coords().size(); ++j)
        if (a.coords()[j] != rho * b.coords()[j]) return {RatioResult::None, Rational(0)};
    return {RatioResult::Ratio, rho};
}

QPoly min_poly(const Cyclo& x) {
    std::vector<Cyclo> powers = {Cyclo(1)};
    for (size_t d = 1;; ++d) {
        Cyclo xd = powers.back() * x;
        long m = xd.order();
        // columns: powers 0..d-1, rhs: -x^d, all in Q(zeta_m)
        size_t rows = xd.coords().size();
        QMat a(rows, QVec(d, Rational(0)));
        for (size_t j = 0; j < d; ++j) {
            QVec col = powers[j].lifted(m).coords();
            for (size_t i = 0; i < rows; ++i) a[i][j] = col[i];
        }
        QVec rhs(rows);
        for (size_t i = 0; i < rows; ++i) rhs[i] = -xd.coords()[i];
        if (auto sol = solve(a, rhs)) {
            QPoly mp(d + 1);
            for (size_t j = 0; j < d; ++j) mp[j] = (*sol)[j];
            mp[d] = 1;
            return mp;
        }
        powers.push_back(xd);
    }
}

std::optional<RootOfUnity> as_root_of_unity(const Cyclo& x) {
    if (x.is_zero()) return std::nullopt;
    Cyclo r = x.reduced();
    long n = r.order();
    long m = std::lcm(2L, n);  // torsion of Q(zeta_n)* is the group of order lcm(2, n)
    for (long k = 0; k < m; ++k)
        if (r == Cyclo::root(RootOfUnity(k, m))) return RootOfUnity(k, m);
    return std::nullopt;
}

std::optional<QVec> q_decompose(const Cyclo& x, const std::vector<Cyclo>& basis) {
    long m = x.order();
    for (const auto& b : basis) m = std::lcm(m, b.order());
    if (m > order_cap()) throw std::domain_error("cyclotomic order cap exceeded");
    QVec rhs = x.lifted(m).coords();
    QMat a(rhs.size(), QVec(basis.size(), Rational(0)));
    for (size_t j = 0; j < basis.size(); ++j) {
        QVec col = basis[j].lifted(m).coords();
        for (size_t i = 0; i < col.size(); ++i) a[i][j] = col[i];
    }
    return solve(a, rhs);
}

size_t q_rank(const std::vector<Cyclo>& elems) {
    if (elems.empty()) return 0;
    long m = 1;
    for (const auto& e : elems) m = std::lcm(m, e.order());
    if (m > order_cap()) throw std::domain_error("cyclotomic order cap exceeded");
    QMat a;
    for (const auto& e : elems) a.push_back(e.lifted(m).coords());
    return rank(std::move(a));
}

}  // namespace lattangle
