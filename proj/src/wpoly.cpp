#include "qres/wpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qres {

WPoly::WPoly(const Rat& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
}

WPoly WPoly::monomial(const Rat& c, long ex, long ey, long ez) {
    WPoly p;
    if (c != 0) {
        if (ex < 0 || ey < 0 || ez < 0) throw std::invalid_argument("negative exponent");
        p.terms_[{ex, ey, ez}] = c;
    }
    return p;
}

WPoly WPoly::variable(int index, long power) {
    Expo e{0, 0, 0};
    e[index] = power;
    WPoly p;
    p.terms_[e] = 1;
    return p;
}

void WPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int WPoly::var_count() const {
    int n = 2;
    for (auto& [e, c] : terms_)
        if (e[2] > 0) n = 3;
    return n;
}

long WPoly::degree() const {
    long d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

long WPoly::order() const {
    long d = -1;
    for (auto& [e, c] : terms_) {
        long s = e[0] + e[1] + e[2];
        if (d < 0 || s < d) d = s;
    }
    return d;
}

long WPoly::max_exponent(int var) const {
    long d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

long WPoly::min_exponent(int var) const {
    long d = -1;
    for (auto& [e, c] : terms_) {
        if (d < 0 || e[var] < d) d = e[var];
    }
    return d < 0 ? 0 : d;
}

Rat WPoly::coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

WPoly WPoly::operator-() const {
    WPoly r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

WPoly WPoly::operator+(const WPoly& o) const {
    WPoly r = *this;
    r += o;
    return r;
}

WPoly WPoly::operator-(const WPoly& o) const {
    WPoly r = *this;
    r -= o;
    return r;
}

WPoly& WPoly::operator+=(const WPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

WPoly WPoly::operator*(const WPoly& o) const {
    WPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

WPoly& WPoly::operator*=(const WPoly& o) {
    *this = *this * o;
    return *this;
}

WPoly WPoly::scaled(const Rat& c) const {
    WPoly r;
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = c * v;
    return r;
}

WPoly operator*(const Rat& c, const WPoly& p) { return p.scaled(c); }

WPoly WPoly::pow(long n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    WPoly r(Rat(1));
    WPoly base = *this;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

WPoly WPoly::derivative(int var) const {
    WPoly r;
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

WPoly WPoly::monomial_substitute(const std::array<Expo, 3>& images) const {
    WPoly r;
    for (auto& [e, c] : terms_) {
        Expo n{0, 0, 0};
        for (int v = 0; v < 3; ++v)
            for (int w = 0; w < 3; ++w) n[w] += e[v] * images[v][w];
        r.add_term(n, c);
    }
    return r;
}

WPoly WPoly::translate(const Rat& x0, const Rat& y0, const Rat& z0) const {
    const Rat shifts[3] = {x0, y0, z0};
    WPoly r;
    for (auto& [e, c] : terms_) {
        WPoly t(c);
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            WPoly base = WPoly::variable(v) + WPoly(shifts[v]);
            t *= base.pow(e[v]);
        }
        r += t;
    }
    return r;
}

WPoly WPoly::root_substitute(int var, long d) const {
    if (d <= 0) throw std::invalid_argument("root_substitute: d must be positive");
    WPoly r;
    for (auto& [e, c] : terms_) {
        if (e[var] % d != 0)
            throw std::domain_error("root_substitute: exponent " + std::to_string(e[var]) +
                                    " not divisible by " + std::to_string(d));
        Expo n = e;
        n[var] = e[var] / d;
        r.terms_[n] = c;
    }
    return r;
}

WPoly WPoly::divide_by_monomial(int var, long power) const {
    WPoly r;
    for (auto& [e, c] : terms_) {
        if (e[var] < power) throw std::domain_error("divide_by_monomial: not divisible");
        Expo n = e;
        n[var] -= power;
        r.terms_[n] = c;
    }
    return r;
}

WPoly WPoly::eval_var(int var, const Rat& value) const {
    WPoly r;
    for (auto& [e, c] : terms_) {
        Rat coeff = c;
        for (long i = 0; i < e[var]; ++i) coeff *= value;
        Expo n = e;
        n[var] = 0;
        r.add_term(n, coeff);
    }
    return r;
}

Rat WPoly::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc = 0;
    for (auto& [e, c] : terms_) {
        Rat t = c;
        for (long i = 0; i < e[0]; ++i) t *= x;
        for (long i = 0; i < e[1]; ++i) t *= y;
        for (long i = 0; i < e[2]; ++i) t *= z;
        acc += t;
    }
    return acc;
}

WPoly WPoly::homogeneous_part(long deg) const {
    WPoly r;
    for (auto& [e, c] : terms_)
        if (e[0] + e[1] + e[2] == deg) r.terms_[e] = c;
    return r;
}

std::vector<Rat> WPoly::univariate(int var) const {
    std::vector<Rat> out;
    for (auto& [e, c] : terms_) {
        for (int v = 0; v < 3; ++v)
            if (v != var && e[v] != 0)
                throw std::domain_error("univariate: polynomial is not univariate");
        if ((long)out.size() <= e[var]) out.resize(e[var] + 1, Rat(0));
        out[e[var]] = c;
    }
    return out;
}

// ---- parsing ----

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what +
                                    " in \"" + s + "\"");
    }

    Int natural() {
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected number");
        Int v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }

    // factor := rational | var [^ nat]
    // returns (coefficient, exponent-vector)
    std::pair<Rat, Expo> factor() {
        skip();
        char c = peek();
        if (std::isdigit((unsigned char)c)) {
            Int num = natural();
            Int den = 1;
            if (accept('/')) den = natural();
            if (den == 0) fail("zero denominator");
            return {Rat(num, den), {0, 0, 0}};
        }
        int var = -1;
        if (c == 'x') var = 0;
        else if (c == 'y') var = 1;
        else if (c == 'z') var = 2;
        else fail("expected coefficient or variable");
        ++i;
        long exp = 1;
        if (accept('^')) exp = to_long(natural());
        Expo e{0, 0, 0};
        e[var] = exp;
        return {Rat(1), e};
    }

    WPoly term() {
        Rat coeff(1);
        Expo e{0, 0, 0};
        auto [c0, e0] = factor();
        coeff *= c0;
        for (int v = 0; v < 3; ++v) e[v] += e0[v];
        while (accept('*')) {
            auto [c1, e1] = factor();
            coeff *= c1;
            for (int v = 0; v < 3; ++v) e[v] += e1[v];
        }
        return WPoly::monomial(coeff, e[0], e[1], e[2]);
    }

    WPoly poly() {
        WPoly result;
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        WPoly t = term();
        result += negative ? -t : t;
        while (!eof()) {
            if (accept('+')) negative = false;
            else if (accept('-')) negative = true;
            else fail("expected '+' or '-'");
            t = term();
            result += negative ? -t : t;
        }
        return result;
    }
};

} // namespace

WPoly WPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("parse error: empty input");
    return p.poly();
}

std::string WPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree last keeps germs readable as power series
    for (auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = e[0] + e[1] + e[2] > 0;
        bool printed = false;
        if (a != 1 || !has_vars) {
            os << to_string(a);
            printed = true;
        }
        static const char* names[3] = {"x", "y", "z"};
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (printed) os << "*";
            os << names[v];
            if (e[v] > 1) os << "^" << e[v];
            printed = true;
        }
    }
    return os.str();
}

// ---- weighted structure ----

Int w_order(const WPoly& h, long p, long q) {
    if (h.is_zero()) throw std::domain_error("w_order of the zero polynomial");
    bool first = true;
    Int best = 0;
    for (auto& [e, c] : h.terms()) {
        Int d = Int(p) * e[0] + Int(q) * e[1];
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

std::vector<WHomogPiece> w_parts(const WPoly& h, long p, long q) {
    std::map<Int, WPoly> buckets;
    for (auto& [e, c] : h.terms()) {
        Int d = Int(p) * e[0] + Int(q) * e[1];
        buckets[d] += WPoly::monomial(c, e[0], e[1], e[2]);
    }
    std::vector<WHomogPiece> out;
    for (auto& [d, part] : buckets) out.push_back({p, q, d, part});
    return out;
}

std::pair<Int, WPoly> strict_transform(const WPoly& h, long p, long q, int chart) {
    if (h.is_zero()) throw std::domain_error("strict_transform of the zero polynomial");
    Int nu = w_order(h, p, q);
    long nul = to_long(nu);
    WPoly sub;
    if (chart == 1) {
        sub = h.monomial_substitute({Expo{p, 0, 0}, Expo{q, 1, 0}, Expo{0, 0, 1}});
        return {nu, sub.divide_by_monomial(0, nul)};
    } else if (chart == 2) {
        sub = h.monomial_substitute({Expo{1, p, 0}, Expo{0, q, 0}, Expo{0, 0, 1}});
        return {nu, sub.divide_by_monomial(1, nul)};
    }
    throw std::invalid_argument("strict_transform: chart must be 1 or 2");
}

// ---- univariate toolkit ----

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long upoly_deg(const UPoly& p) {
    for (long i = (long)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return upoly_trim(r);
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return upoly_trim(r);
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    long db = upoly_deg(b);
    if (db < 0) throw std::domain_error("upoly_divmod: division by zero polynomial");
    UPoly r = upoly_trim(a);
    long dr = upoly_deg(r);
    if (dr < db) return {{}, r};
    UPoly q(dr - db + 1, Rat(0));
    while (dr >= db) {
        Rat c = r[dr] / b[db];
        q[dr - db] = c;
        for (long i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        r = upoly_trim(r);
        dr = upoly_deg(r);
    }
    return {upoly_trim(q), r};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(a);
    b = upoly_trim(b);
    while (upoly_deg(b) >= 0) {
        auto [q, r] = upoly_divmod(a, b);
        a = b;
        b = r;
    }
    long d = upoly_deg(a);
    if (d >= 0 && a[d] != 1) {
        Rat lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

UPoly upoly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat((long)i);
    return upoly_trim(r);
}

Rat upoly_eval(const UPoly& p, const Rat& t) {
    Rat acc = 0;
    for (long i = (long)p.size() - 1; i >= 0; --i) acc = acc * t + p[i];
    return acc;
}

std::vector<std::pair<UPoly, long>> upoly_squarefree(const UPoly& p0) {
    // Yun's algorithm
    std::vector<std::pair<UPoly, long>> out;
    UPoly p = upoly_trim(p0);
    if (upoly_deg(p) <= 0) return out;
    UPoly dp = upoly_derivative(p);
    UPoly a = upoly_gcd(p, dp);
    UPoly b = upoly_divmod(p, a).first;
    UPoly c = upoly_divmod(dp, a).first;
    UPoly d = upoly_add(c, UPoly{});
    // d = c - b'
    {
        UPoly bp = upoly_derivative(b);
        for (auto& x : bp) x = -x;
        d = upoly_add(c, bp);
    }
    long i = 1;
    while (upoly_deg(b) > 0) {
        UPoly g = upoly_gcd(b, d);
        if (upoly_deg(g) > 0) out.push_back({g, i});
        b = upoly_divmod(b, g).first;
        UPoly cnew = upoly_divmod(d, g).first;
        UPoly bp = upoly_derivative(b);
        for (auto& x : bp) x = -x;
        d = upoly_add(cnew, bp);
        ++i;
    }
    return out;
}

namespace {

// primitive integer form with positive leading coefficient
std::vector<Int> primitive_int(const UPoly& p) {
    Int den = 1;
    for (auto& c : p) den = lcm(den, denominator(c));
    std::vector<Int> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = numerator(p[i]) * (den / denominator(p[i]));
    Int content = 0;
    for (auto& c : v) content = gcd(content, c);
    if (content == 0) return {};
    for (auto& c : v) c /= content;
    long d = -1;
    for (long i = (long)v.size() - 1; i >= 0; --i)
        if (v[i] != 0) {
            d = i;
            break;
        }
    if (d >= 0 && v[d] < 0)
        for (auto& c : v) c = -c;
    v.resize(d + 1);
    return v;
}

UPoly to_upoly(const std::vector<Int>& v) {
    UPoly p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rat(v[i]);
    return p;
}

std::vector<Int> all_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> ds;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d * d != n) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Lagrange interpolation through (t_j, v_j)
UPoly interpolate(const std::vector<Rat>& ts, const std::vector<Rat>& vs) {
    UPoly acc;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        UPoly basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t l = 0; l < ts.size(); ++l) {
            if (l == j) continue;
            basis = upoly_mul(basis, UPoly{-ts[l], Rat(1)});
            denom *= ts[j] - ts[l];
        }
        for (auto& c : basis) c = c * vs[j] / denom;
        acc = upoly_add(acc, basis);
    }
    return acc;
}

bool is_integer_poly(const UPoly& p) {
    for (auto& c : p)
        if (denominator(c) != 1) return false;
    return true;
}

// Kronecker factor search on a primitive squarefree integer polynomial with
// no rational roots. Returns a proper factor or empty when irreducible.
UPoly kronecker_find_factor(const UPoly& p) {
    long n = upoly_deg(p);
    std::vector<Rat> sample_points;
    for (long v = 0; (long)sample_points.size() < n + 1; ++v) {
        sample_points.push_back(Rat(v == 0 ? 0 : (v % 2 ? (v + 1) / 2 : -(v / 2))));
    }
    const long work_cap = 2000000;
    for (long d = 1; d <= n / 2; ++d) {
        std::vector<Rat> ts(sample_points.begin(), sample_points.begin() + d + 1);
        std::vector<std::vector<Int>> divs(d + 1);
        long work = 1;
        bool too_big = false;
        for (long j = 0; j <= d; ++j) {
            Rat v = upoly_eval(p, ts[j]);
            // no rational roots left, so v != 0 at integer points
            divs[j] = all_divisors(numerator(v));
            long options = (long)divs[j].size() * (j == 0 ? 1 : 2);
            if (work > work_cap / std::max(options, 1L)) {
                too_big = true;
                break;
            }
            work *= options;
        }
        if (too_big)
            throw std::runtime_error("kronecker factorization: candidate space too large");
        std::vector<long> idx(d + 1, 0);
        std::vector<int> sign(d + 1, 1);
        while (true) {
            std::vector<Rat> vals(d + 1);
            for (long j = 0; j <= d; ++j) vals[j] = Rat(sign[j] * divs[j][idx[j]]);
            UPoly cand = interpolate(ts, vals);
            if (upoly_deg(cand) == d && is_integer_poly(cand)) {
                auto [q, r] = upoly_divmod(p, cand);
                if (upoly_deg(upoly_trim(r)) < 0 && is_integer_poly(q)) return cand;
            }
            // advance odometer over divisor choices and signs (sign fixed + for j=0)
            long j = 0;
            for (; j <= d; ++j) {
                if (j > 0 && sign[j] == 1) {
                    sign[j] = -1;
                    break;
                }
                sign[j] = 1;
                if (++idx[j] < (long)divs[j].size()) break;
                idx[j] = 0;
            }
            if (j > d) break;
        }
    }
    return {};
}

void factor_irreducible(const UPoly& prim, long mult, std::vector<std::pair<UPoly, long>>& out) {
    long d = upoly_deg(prim);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back({prim, mult});
        return;
    }
    UPoly factor = kronecker_find_factor(prim);
    if (factor.empty()) {
        out.push_back({prim, mult});
        return;
    }
    UPoly rest = upoly_divmod(prim, factor).first;
    factor_irreducible(to_upoly(primitive_int(factor)), mult, out);
    factor_irreducible(to_upoly(primitive_int(rest)), mult, out);
}

} // namespace

std::vector<std::pair<Rat, long>> upoly_rational_roots(const UPoly& p) {
    std::vector<std::pair<Rat, long>> out;
    for (auto& [part, mult] : upoly_squarefree(p)) {
        auto prim = primitive_int(part);
        if (prim.size() < 2) continue;
        // strip root 0
        std::size_t low = 0;
        while (low < prim.size() && prim[low] == 0) ++low;
        if (low > 0) out.push_back({Rat(0), mult});  // squarefree: exponent exactly 1
        std::vector<Int> q(prim.begin() + low, prim.end());
        if (q.size() < 2) continue;
        Int a0 = q.front(), an = q.back();
        UPoly qq = to_upoly(q);
        for (const Int& num : all_divisors(a0)) {
            for (const Int& den : all_divisors(an)) {
                if (gcd(num, den) != 1) continue;
                for (int s : {1, -1}) {
                    Rat cand(s * num, den);
                    if (upoly_eval(qq, cand) == 0) out.push_back({cand, mult});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<UPoly, long>> upoly_factor(const UPoly& p0) {
    std::vector<std::pair<UPoly, long>> out;
    UPoly p = upoly_trim(p0);
    if (upoly_deg(p) <= 0) return out;
    // power of w
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) {
        out.push_back({UPoly{Rat(0), Rat(1)}, (long)low});
        p.erase(p.begin(), p.begin() + low);
    }
    for (auto& [part, mult] : upoly_squarefree(p)) {
        UPoly prim = to_upoly(primitive_int(part));
        // peel rational roots first
        for (auto& [root, rm] : upoly_rational_roots(prim)) {
            UPoly lin{-numerator(root), denominator(root)};
            prim = upoly_divmod(prim, lin).first;
            out.push_back({lin, mult});
        }
        prim = to_upoly(primitive_int(prim));
        factor_irreducible(prim, mult, out);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

// ---- factorization of weighted-homogeneous pieces ----

FactoredWHomog factor_whomog(const WHomogPiece& piece) {
    if (piece.part.is_zero()) throw std::invalid_argument("factor_whomog: zero piece");
    const long p = piece.p, q = piece.q;
    for (auto& [e, c] : piece.part.terms())
        if (Int(p) * e[0] + Int(q) * e[1] != piece.degree)
            throw std::invalid_argument("factor_whomog: piece is not weighted-homogeneous");

    FactoredWHomog out;
    out.e0 = piece.part.min_exponent(0);
    out.einf = piece.part.min_exponent(1);
    WPoly core = piece.part.divide_by_monomial(0, out.e0).divide_by_monomial(1, out.einf);

    // core is a binary form in (x^q, y^p); collapse to a univariate polynomial
    long imax = core.max_exponent(0);
    if (imax % q != 0) throw std::logic_error("factor_whomog: exponent structure violated");
    long n = imax / q;
    UPoly g(n + 1, Rat(0));
    for (auto& [e, c] : core.terms()) {
        if (e[0] % q != 0) throw std::logic_error("factor_whomog: exponent structure violated");
        g[e[0] / q] = c;
    }
    if (n == 0) {
        out.unit = g[0];
        return out;
    }
    auto factors = upoly_factor(g);
    Rat lead_product = 1;
    for (auto& [f, mult] : factors) {
        long d = upoly_deg(f);
        Rat lf = f[d];
        for (long i = 0; i < mult; ++i) lead_product *= lf;
        WPoly form;
        for (long s = 0; s <= d; ++s)
            if (f[s] != 0) form += WPoly::monomial(f[s], q * s, p * (d - s));
        out.factors.push_back({form, d, mult});
    }
    out.unit = g[n] / lead_product;
    return out;
}

// ---- resultants ----

namespace {

Rat det_rational(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

} // namespace

WPoly resultant(const WPoly& f, const WPoly& g, int var) {
    if (f.is_zero() || g.is_zero()) return WPoly();
    int other = -1;
    for (int v = 0; v < 3; ++v) {
        if (v == var) continue;
        if (f.max_exponent(v) > 0 || g.max_exponent(v) > 0) {
            if (other >= 0) throw std::domain_error("resultant: more than two variables");
            other = v;
        }
    }
    long m = f.max_exponent(var), n = g.max_exponent(var);
    if (m == 0 && n == 0) return WPoly(Rat(1));
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);

    // coefficient polynomials in the other variable
    auto coeffs = [&](const WPoly& h, long deg) {
        std::vector<WPoly> cs(deg + 1);
        for (auto& [e, c] : h.terms()) {
            Expo r = e;
            long k = e[var];
            r[var] = 0;
            cs[k] += WPoly::monomial(c, r[0], r[1], r[2]);
        }
        return cs;
    };
    auto fc = coeffs(f, m), gc = coeffs(g, n);

    long df = 0, dg = 0;
    if (other >= 0) {
        df = f.max_exponent(other);
        dg = g.max_exponent(other);
    }
    long bound = n * df + m * dg;

    std::vector<Rat> ts, vs;
    for (long t = 0; t <= bound; ++t) {
        Rat tv(t);
        std::size_t N = m + n;
        std::vector<std::vector<Rat>> s(N, std::vector<Rat>(N, Rat(0)));
        auto ev = [&](const WPoly& c) {
            return other >= 0 ? c.eval_var(other, tv).constant_term() : c.constant_term();
        };
        for (long r = 0; r < n; ++r)
            for (long k = 0; k <= m; ++k) s[r][r + k] = ev(fc[m - k]);
        for (long r = 0; r < m; ++r)
            for (long k = 0; k <= n; ++k) s[n + r][r + k] = ev(gc[n - k]);
        ts.push_back(tv);
        vs.push_back(det_rational(std::move(s)));
    }
    UPoly res = interpolate(ts, vs);
    WPoly out;
    for (std::size_t i = 0; i < res.size(); ++i) {
        if (res[i] == 0) continue;
        Expo e{0, 0, 0};
        if (other >= 0) e[other] = (long)i;
        else if (i > 0) throw std::logic_error("resultant: unexpected degree");
        out += WPoly::monomial(res[i], e[0], e[1], e[2]);
    }
    return out;
}

} // namespace qres
