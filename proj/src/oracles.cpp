#include "qres/oracles.hpp"

#include <stdexcept>
#include <vector>

namespace qres {

namespace {

long rank_over_q(std::vector<std::vector<Rat>>& m) {
    if (m.empty()) return 0;
    std::size_t ncols = m[0].size();
    long rank = 0;
    for (std::size_t col = 0; col < ncols && rank < (long)m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if ((long)r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

Int milnor_jacobian_truncated(const WPoly& h, long bound) {
    WPoly fx = h.derivative(0);
    WPoly fy = h.derivative(1);
    if (fx.constant_term() != 0 || fy.constant_term() != 0) return 0;
    if (fx.is_zero() && fy.is_zero())
        throw std::domain_error("milnor_jacobian: zero Jacobian ideal");

    // monomial index below the truncation degree
    std::vector<std::pair<long, long>> mons;
    for (long a = 0; a < bound; ++a)
        for (long b = 0; a + b < bound; ++b) mons.push_back({a, b});
    auto index_of = [&](long a, long b) -> long {
        // triangular enumeration matching the loop above
        if (a + b >= bound) return -1;
        long idx = 0;
        for (long aa = 0; aa < a; ++aa) idx += bound - aa;
        return idx + b;
    };

    std::vector<std::vector<Rat>> rows;
    for (const WPoly* gen : {&fx, &fy}) {
        if (gen->is_zero()) continue;
        long ord = gen->order();
        for (auto& [a, b] : mons) {
            if (a + b + ord >= bound) continue;
            std::vector<Rat> row(mons.size(), Rat(0));
            bool nonzero = false;
            for (auto& [e, c] : gen->terms()) {
                long idx = index_of(a + e[0], b + e[1]);
                if (idx < 0) continue;
                row[idx] += c;
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    long rank = rank_over_q(rows);
    return Int((long)mons.size() - rank);
}

Int milnor_jacobian(const WPoly& h) {
    if (h.max_exponent(2) > 0)
        throw std::invalid_argument("milnor_jacobian expects a germ in x and y");
    long start = std::max<long>(4, h.degree() + 2);
    Int prev = -1;
    for (long bound = start; bound <= 64; bound += 2) {
        Int cur = milnor_jacobian_truncated(h, bound);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw std::domain_error("milnor_jacobian: dimension did not stabilize (non-isolated singularity?)");
}

CharProduct classical_charpoly(const WPoly& h) {
    CurveResolution res = resolve_curve(h, WeightStrategy::classical());
    return curve_charpoly(res);
}

Int quasihomog_mu(long p, long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("quasihomog_mu: p,q >= 2 required");
    return Int(p - 1) * Int(q - 1);
}

CharProduct torus_knot_delta(long p, long q) {
    CharProduct cp;
    cp.multiply_factor(Int(p) * q, 1);
    cp.multiply_factor(1, 1);
    cp.multiply_factor(p, -1);
    cp.multiply_factor(q, -1);
    return cp;
}

} // namespace qres
