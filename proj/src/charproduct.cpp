#include "qres/charproduct.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qres {

CharProduct CharProduct::factor(const Int& m, const Int& a) {
    CharProduct cp;
    cp.multiply_factor(m, a);
    return cp;
}

void CharProduct::multiply_factor(const Int& m, const Int& a) {
    if (m < 1) throw std::invalid_argument("CharProduct: order must be >= 1");
    if (a == 0) return;
    auto it = factors_.find(m);
    if (it == factors_.end()) {
        factors_[m] = a;
    } else {
        it->second += a;
        if (it->second == 0) factors_.erase(it);
    }
}

CharProduct CharProduct::operator*(const CharProduct& o) const {
    CharProduct r = *this;
    for (auto& [m, a] : o.factors_) r.multiply_factor(m, a);
    return r;
}

CharProduct CharProduct::inverse() const {
    CharProduct r;
    for (auto& [m, a] : factors_) r.factors_[m] = -a;
    return r;
}

CharProduct CharProduct::substitute_power(const Int& s) const {
    if (s < 1) throw std::invalid_argument("substitute_power: s must be >= 1");
    CharProduct r;
    for (auto& [m, a] : factors_) r.factors_[m * s] = a;
    return r;
}

CharProduct CharProduct::delta_k(const Int& k) const {
    if (k < 1) throw std::invalid_argument("delta_k: k must be >= 1");
    CharProduct r;
    for (auto& [m, a] : factors_) {
        Int g = gcd(m, k);
        r.multiply_factor(m / g, g * a);
    }
    return r;
}

Int CharProduct::degree() const {
    Int d = 0;
    for (auto& [m, a] : factors_) d += m * a;
    return d;
}

std::string CharProduct::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        if (!first) os << "*";
        first = false;
        os << "(t";
        if (it->first != 1) os << "^" << to_string(it->first);
        os << "-1)";
        if (it->second != 1) os << "^" << to_string(it->second);
    }
    return os.str();
}

bool CyclotomicVector::is_polynomial() const {
    for (auto& [d, cd] : c)
        if (cd < 0) return false;
    return true;
}

Int CyclotomicVector::degree() const {
    Int deg = 0;
    for (auto& [d, cd] : c) deg += cd * euler_phi(to_long(d));
    return deg;
}

std::string CyclotomicVector::str() const {
    if (c.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, cd] : c) {
        if (!first) os << "*";
        first = false;
        os << "Phi_" << to_string(d);
        if (cd != 1) os << "^" << to_string(cd);
    }
    return os.str();
}

CyclotomicVector to_cyclotomic(const CharProduct& cp) {
    CyclotomicVector v;
    for (auto& [m, a] : cp.factors()) {
        // t^m - 1 = prod_{d | m} Phi_d
        for (Int d = 1; d * d <= m; ++d) {
            if (m % d != 0) continue;
            v.c[d] += a;
            if (d * d != m) v.c[m / d] += a;
        }
    }
    for (auto it = v.c.begin(); it != v.c.end();)
        it = (it->second == 0) ? v.c.erase(it) : std::next(it);
    return v;
}

PolyZ polyz_mul(const PolyZ& a, const PolyZ& b) {
    if (a.empty() || b.empty()) return {};
    PolyZ r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

PolyZ polyz_div(const PolyZ& a, const PolyZ& b) {
    PolyZ r = a, q;
    long db = (long)b.size() - 1;
    while (db >= 0 && b[db] == 0) --db;
    if (db < 0) throw std::domain_error("polyz_div: division by zero");
    long dr = (long)r.size() - 1;
    while (dr >= 0 && r[dr] == 0) --dr;
    if (dr < db) {
        for (long i = 0; i <= dr; ++i)
            if (r[i] != 0) throw std::domain_error("polyz_div: not divisible");
        return {Int(0)};
    }
    q.assign(dr - db + 1, Int(0));
    while (dr >= db) {
        if (r[dr] % b[db] != 0) throw std::domain_error("polyz_div: not divisible");
        Int c = r[dr] / b[db];
        q[dr - db] = c;
        for (long i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        while (dr >= 0 && r[dr] == 0) --dr;
    }
    for (long i = 0; i <= dr; ++i)
        if (r[i] != 0) throw std::domain_error("polyz_div: not divisible");
    return q;
}

Int euler_phi(long d) {
    Int result = d;
    long n = d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result = result / p * (p - 1);
    }
    if (n > 1) result = result / n * (n - 1);
    return result;
}

PolyZ cyclotomic_poly(long d) {
    static std::recursive_mutex guard;
    static std::map<long, PolyZ> cache;
    std::lock_guard<std::recursive_mutex> lock(guard);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    PolyZ num(d + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    for (long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        num = polyz_div(num, cyclotomic_poly(e));
    }
    cache[d] = num;
    return num;
}

PolyZ expand(const CharProduct& cp) {
    CyclotomicVector v = to_cyclotomic(cp);
    if (!v.is_polynomial())
        throw std::domain_error("expand: product is not a polynomial: " + v.str());
    PolyZ r{Int(1)};
    for (auto& [d, cd] : v.c) {
        PolyZ phi = cyclotomic_poly(to_long(d));
        for (Int i = 0; i < cd; ++i) r = polyz_mul(r, phi);
    }
    return r;
}

CharProduct acampo(const std::vector<std::pair<Int, Int>>& strata, int n) {
    CharProduct inner;
    inner.multiply_factor(1, -1);
    for (auto& [m, chi] : strata) {
        if (m < 1) throw std::invalid_argument("acampo: stratum multiplicity must be >= 1");
        inner.multiply_factor(m, chi);
    }
    return (n % 2 == 0) ? inner : inner.inverse();
}

Int milnor_number(const CharProduct& cp) { return cp.degree(); }

CharProduct closed_sis(const Int& chi_comp, long m, const std::vector<CharProduct>& local_deltas) {
    CharProduct r;
    r.multiply_factor(m, chi_comp);
    r.multiply_factor(1, -1);
    for (auto& d : local_deltas) r = r * d.substitute_power(m + 1);
    return r;
}

CharProduct closed_yls(const Int& chi_comp, long m, long k,
                       const std::vector<CharProduct>& local_deltas) {
    CharProduct r;
    r.multiply_factor(m, chi_comp);
    r.multiply_factor(1, -1);
    for (auto& d : local_deltas) r = r * d.delta_k(k).substitute_power(m + k);
    return r;
}

} // namespace qres
