#include "qres/quotient.hpp"

#include "qres/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qres {

QuotientType QuotientType::cyclic(Int d, std::vector<Int> row) {
    QuotientType t;
    t.ncols = (int)row.size();
    if (d < 1) throw std::invalid_argument("cyclic: order must be positive");
    t.orders.push_back(d);
    t.weights.push_back(std::move(row));
    return t;
}

Int QuotientType::group_order() const {
    Int n = 1;
    for (auto& d : orders) n *= d;
    return n;
}

bool QuotientType::operator==(const QuotientType& o) const {
    return ncols == o.ncols && orders == o.orders && weights == o.weights;
}

std::string QuotientType::str() const {
    if (is_trivial()) return "X(1)";
    std::ostringstream os;
    os << "X(";
    for (int i = 0; i < rows(); ++i) {
        if (i) os << " | ";
        os << to_string(orders[i]) << ";";
        for (int j = 0; j < ncols; ++j) os << " " << to_string(weights[i][j]);
    }
    os << ")";
    return os.str();
}

QuotientType simplify_type(const QuotientType& t) {
    QuotientType out;
    out.ncols = t.ncols;
    for (int i = 0; i < t.rows(); ++i) {
        Int d = t.orders[i];
        std::vector<Int> row = t.weights[i];
        Int g = d;
        for (auto& a : row) g = gcd(g, a);
        d /= g;
        if (d == 1) continue;
        for (auto& a : row) a = mod_reduce(a / g, d);
        bool all_zero = true;
        for (auto& a : row)
            if (a != 0) all_zero = false;
        if (all_zero) continue;
        // rescaling by a unit reparametrizes the cyclic factor; pick the
        // lexicographically smallest representative as canonical form
        std::vector<Int> best = row;
        for (Int u = 2; u < d; ++u) {
            if (gcd(u, d) != 1) continue;
            std::vector<Int> cand(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) cand[j] = mod_reduce(row[j] * u, d);
            if (cand < best) best = cand;
        }
        out.orders.push_back(d);
        out.weights.push_back(std::move(best));
    }
    return out;
}

bool is_invariant_monomial(const QuotientType& t, const Expo& e) {
    for (int i = 0; i < t.rows(); ++i) {
        Int s = 0;
        for (int j = 0; j < t.ncols; ++j) s += t.weights[i][j] * e[j];
        if (mod_reduce(s, t.orders[i]) != 0) return false;
    }
    return true;
}

bool is_function(const QuotientType& t, const WPoly& poly) {
    for (auto& [e, c] : poly.terms())
        if (!is_invariant_monomial(t, e)) return false;
    return true;
}

WPoly MonomialMap::pullback(const WPoly& on_target) const {
    return on_target.monomial_substitute(exponents);
}

std::pair<QuotientType, MonomialMap> normalize_2d(const QuotientType& t0) {
    QuotientType t = simplify_type(t0);
    if (t.ncols != 2 || t.rows() > 1)
        throw std::invalid_argument("normalize_2d expects a one-row two-column type");
    MonomialMap map;
    map.source = t0;
    if (t.is_trivial()) {
        map.target = QuotientType::trivial(2);
        return {map.target, map};
    }
    Int d = t.orders[0];
    Int a = t.weights[0][0], b = t.weights[0][1];
    if (gcd(gcd(d, a), b) != 1)
        throw std::invalid_argument("normalize_2d: type has global isotropy (gcd(d,a,b) > 1)");

    // factor out the subgroup acting trivially on x: it acts on y alone by
    // pseudo-reflections, so pass to the coordinate y^{gx}
    Int gx = gcd(d, a);
    Int d1 = d / gx;
    Int a1 = a / gx;             // a1 mod d1, gcd(d1, a1) = 1
    Int b1 = mod_reduce(b, d1);
    // symmetric step on y
    Int gy = gcd(d1, b1);
    Int d2 = d1 / gy;
    Int a2 = mod_reduce(a1, d2);
    Int b2 = (gy == 0 ? Int(0) : b1 / gy);

    map.exponents = {Expo{to_long(gy), 0, 0}, Expo{0, to_long(gx), 0}, Expo{0, 0, 1}};
    QuotientType n;
    n.ncols = 2;
    if (d2 > 1) {
        n.orders.push_back(d2);
        n.weights.push_back({a2, mod_reduce(b2, d2)});
    }
    n = simplify_type(n);
    map.target = n;
    return {n, map};
}

namespace {

// Index [Z^c : L] of the lattice spanned by the given generator rows
// together with D*Z^c; computed by integer row reduction to echelon form.
Int lattice_index(std::vector<std::vector<Int>> rows, const Int& D, int c) {
    for (int j = 0; j < c; ++j) {
        std::vector<Int> unit(c, 0);
        unit[j] = D;
        rows.push_back(std::move(unit));
    }
    Int det = 1;
    int rank = 0;
    for (int col = 0; col < c; ++col) {
        int pivot = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;   // not full rank (cannot happen with D-units)
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < (int)rows.size(); ++r) {
            while (rows[r][col] != 0) {
                Int q = rows[rank][col] / rows[r][col];
                for (int cc = col; cc < c; ++cc) rows[rank][cc] -= q * rows[r][cc];
                std::swap(rows[rank], rows[r]);
            }
        }
        if (rows[rank][col] < 0)
            for (int cc = col; cc < c; ++cc) rows[rank][cc] = -rows[rank][cc];
        det *= rows[rank][col];
        ++rank;
    }
    return det;
}

} // namespace

Int count_trivial_on(const QuotientType& t, const std::vector<int>& coords) {
    if (t.is_trivial()) return 1;
    if (coords.empty()) return t.group_order();
    Int D = 1;
    for (auto& d : t.orders) D = lcm(D, d);
    // generator i acts on coordinate j by the character a_ij/d_i in Q/Z;
    // the subgroup is the kernel of the combined character map, whose image
    // has order D^{|J|} / [lattice index]
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < t.rows(); ++i) {
        std::vector<Int> row;
        for (int j : coords) row.push_back(mod_reduce(t.weights[i][j] * (D / t.orders[i]), D));
        gens.push_back(std::move(row));
    }
    int c = (int)coords.size();
    Int covol = lattice_index(std::move(gens), D, c);
    Int image_order = 1;
    for (int j = 0; j < c; ++j) image_order *= D;
    image_order /= covol;
    return t.group_order() / image_order;
}

Int stabilizer_order(const QuotientType& t, const std::vector<int>& zero_coords) {
    std::vector<int> free_coords;
    for (int j = 0; j < t.ncols; ++j)
        if (std::find(zero_coords.begin(), zero_coords.end(), j) == zero_coords.end())
            free_coords.push_back(j);
    std::vector<int> all;
    for (int j = 0; j < t.ncols; ++j) all.push_back(j);
    return count_trivial_on(t, free_coords) / count_trivial_on(t, all);
}

Int multiplicity_L(const QuotientType& t, int coord) {
    Int L = 1;
    for (int i = 0; i < t.rows(); ++i)
        L = lcm(L, t.orders[i] / gcd(t.orders[i], t.weights[i][coord]));
    return L;
}

Int stratum_character_order(const QuotientType& t, int coord, const std::vector<int>& free_coords) {
    std::vector<int> with_coord = free_coords;
    if (std::find(with_coord.begin(), with_coord.end(), coord) == with_coord.end())
        with_coord.push_back(coord);
    return count_trivial_on(t, free_coords) / count_trivial_on(t, with_coord);
}

namespace {

using IntMat = std::vector<std::vector<Int>>;

// Basis of the integer kernel of A (m x n): column-reduce [A; I] so that the
// columns of A become echelon; columns of the I-block under zero A-columns
// span the kernel.
IntMat integer_kernel_basis(const IntMat& a, int n) {
    int m = (int)a.size();
    IntMat work(m + n, std::vector<Int>(n, 0));
    for (int i = 0; i < m; ++i) work[i] = a[i];
    for (int j = 0; j < n; ++j) work[m + j][j] = 1;

    int lead = 0;
    for (int row = 0; row < m && lead < n; ++row) {
        // gcd-sweep the row to at most one nonzero entry at `lead`
        while (true) {
            int nz = -1;
            for (int j = lead; j < n; ++j)
                if (work[row][j] != 0) {
                    nz = j;
                    break;
                }
            if (nz < 0) break;
            // move to lead position
            if (nz != lead)
                for (int i = 0; i < m + n; ++i) std::swap(work[i][nz], work[i][lead]);
            bool clean = true;
            for (int j = lead + 1; j < n; ++j) {
                if (work[row][j] == 0) continue;
                Int q = work[row][j] / work[row][lead];
                for (int i = 0; i < m + n; ++i) work[i][j] -= q * work[i][lead];
                if (work[row][j] != 0) {
                    for (int i = 0; i < m + n; ++i) std::swap(work[i][j], work[i][lead]);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (work[row][lead] != 0) ++lead;
    }
    IntMat kernel;
    for (int j = lead; j < n; ++j) {
        std::vector<Int> v(n);
        bool in_kernel = true;
        for (int i = 0; i < m; ++i)
            if (work[i][j] != 0) in_kernel = false;
        if (!in_kernel) continue;
        for (int i = 0; i < n; ++i) v[i] = work[m + i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// solves B x = rhs for integer B (square, invertible over Q) with rational x
std::vector<Rat> solve_rational(IntMat b, std::vector<Rat> rhs) {
    int n = (int)b.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(b[i][j]);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_rational: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

} // namespace

QuotientType present_subgroup(const QuotientType& t, const std::vector<int>& trivial_coords) {
    QuotientType out = QuotientType::trivial(t.ncols);
    if (t.is_trivial()) return out;
    const int r = t.rows();
    Int L = 1;
    for (auto& d : t.orders) L = lcm(L, d);

    // lattice of exponent tuples kappa acting trivially on the given
    // coordinates: sum_i kappa_i a_ij (L/d_i) = 0 mod L for j in the set,
    // encoded with one auxiliary multiple-of-L variable per constraint
    const int naux = (int)trivial_coords.size();
    IntMat constraint;
    for (int jj = 0; jj < naux; ++jj) {
        std::vector<Int> row(r + naux, 0);
        for (int i = 0; i < r; ++i) row[i] = t.weights[i][trivial_coords[jj]] * (L / t.orders[i]);
        row[r + jj] = L;
        constraint.push_back(std::move(row));
    }
    IntMat gens;
    for (auto& v : integer_kernel_basis(constraint, r + naux))
        gens.push_back(std::vector<Int>(v.begin(), v.begin() + r));
    for (int i = 0; i < r; ++i) {
        std::vector<Int> v(r, 0);
        v[i] = t.orders[i];
        gens.push_back(std::move(v));
    }

    // row-reduce the spanning set to a lattice basis
    IntMat basis;
    {
        IntMat rows = gens;
        int rank = 0;
        for (int col = 0; col < r; ++col) {
            int pivot = -1;
            for (int i = rank; i < (int)rows.size(); ++i)
                if (rows[i][col] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rows[rank], rows[pivot]);
            for (int i = rank + 1; i < (int)rows.size(); ++i) {
                while (rows[i][col] != 0) {
                    Int q = rows[rank][col] / rows[i][col];
                    for (int c = 0; c < r; ++c) rows[rank][c] -= q * rows[i][c];
                    std::swap(rows[rank], rows[i]);
                }
            }
            ++rank;
        }
        rows.resize(rank);
        basis = rows;
    }
    if ((int)basis.size() != r) throw std::logic_error("present_subgroup: lattice not full rank");

    // relation matrix: diag(d) rows written in the lattice basis
    IntMat c(r, std::vector<Int>(r));
    IntMat bt(r, std::vector<Int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) bt[i][j] = basis[j][i];
    for (int i = 0; i < r; ++i) {
        std::vector<Rat> rhs(r, Rat(0));
        rhs[i] = Rat(t.orders[i]);
        auto x = solve_rational(bt, rhs);
        for (int j = 0; j < r; ++j) {
            if (denominator(x[j]) != 1)
                throw std::logic_error("present_subgroup: relation not integral");
            c[i][j] = numerator(x[j]);
        }
    }

    // Smith form S = U C V; the subgroup is the direct sum of Z/s_t with
    // generators the rows of V^{-1} * basis. Track W = V^{-1} through the
    // column operations.
    IntMat a = c;
    IntMat w(r, std::vector<Int>(r, 0));
    for (int i = 0; i < r; ++i) w[i][i] = 1;
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int rr = 0; rr < r; ++rr) a[rr][dst] += f * a[rr][src];
        for (int cc = 0; cc < r; ++cc) w[src][cc] -= f * w[dst][cc];
    };
    auto swap_cols = [&](int i, int j) {
        for (int rr = 0; rr < r; ++rr) std::swap(a[rr][i], a[rr][j]);
        std::swap(w[i], w[j]);
    };
    auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); };
    auto add_row = [&](int dst, int src, const Int& f) {
        for (int cc = 0; cc < r; ++cc) a[dst][cc] += f * a[src][cc];
    };
    for (int tt = 0; tt < r; ++tt) {
        while (true) {
            int pr = -1, pc = -1;
            for (int i = tt; i < r && pr < 0; ++i)
                for (int j = tt; j < r; ++j)
                    if (a[i][j] != 0) {
                        pr = i;
                        pc = j;
                        break;
                    }
            if (pr < 0) break;
            swap_rows(tt, pr);
            swap_cols(tt, pc);
            bool again = false;
            for (int i = tt + 1; i < r; ++i) {
                if (a[i][tt] == 0) continue;
                add_row(i, tt, -(a[i][tt] / a[tt][tt]));
                if (a[i][tt] != 0) {
                    swap_rows(tt, i);
                    again = true;
                }
            }
            if (again) continue;
            for (int j = tt + 1; j < r; ++j) {
                if (a[tt][j] == 0) continue;
                add_col(j, tt, -(a[tt][j] / a[tt][tt]));
                if (a[tt][j] != 0) {
                    swap_cols(tt, j);
                    again = true;
                }
            }
            if (!again) break;
        }
    }
    for (int tt = 0; tt < r; ++tt) {
        Int order = a[tt][tt] < 0 ? -a[tt][tt] : a[tt][tt];
        if (order <= 1) continue;
        std::vector<Int> gen(r, 0);
        for (int j = 0; j < r; ++j)
            for (int cc = 0; cc < r; ++cc) gen[cc] += w[tt][j] * basis[j][cc];
        std::vector<Int> wrow(t.ncols);
        for (int coord = 0; coord < t.ncols; ++coord) {
            Rat phase = 0;
            for (int i = 0; i < r; ++i) phase += Rat(gen[i] * t.weights[i][coord], t.orders[i]);
            Rat scaled = phase * Rat(order);
            if (denominator(scaled) != 1)
                throw std::logic_error("present_subgroup: generator order mismatch");
            wrow[coord] = mod_reduce(numerator(scaled), order);
        }
        out.orders.push_back(order);
        out.weights.push_back(std::move(wrow));
    }
    return simplify_type(out);
}

Blowup2D blowup_2d(const QuotientType& t0, long p, long q) {
    QuotientType t = simplify_type(t0);
    if (t.ncols != 2 || t.rows() > 1)
        throw std::invalid_argument("blowup_2d expects a one-row two-column type");
    if (gcd(Int(p), Int(q)) != 1 || p < 1 || q < 1)
        throw std::invalid_argument("blowup_2d: weights must be positive and coprime");
    Int d = 1, a = 0, b = 0;
    if (!t.is_trivial()) {
        d = t.orders[0];
        a = t.weights[0][0];
        b = t.weights[0][1];
        if (gcd(d, a) != 1 || gcd(d, b) != 1)
            throw std::invalid_argument("blowup_2d: type " + t.str() + " is not normalized");
    }
    Int e = gcd(d, Int(p) * b - Int(q) * a);
    Int beta = (d == 1) ? Int(0) : mod_inverse(a, d);
    Int mu = (d == 1) ? Int(0) : mod_inverse(b, d);

    Blowup2D out;
    out.e = e;
    out.chart1.type = simplify_type(
        QuotientType::cyclic(Int(p) * d / e, {Int(1), (-Int(q) + beta * p * b) / e}));
    out.chart1.substitution = {Expo{p, 0, 0}, Expo{q, 1, 0}, Expo{0, 0, 1}};
    out.chart1.exceptional_coord = 0;
    out.chart1.root_index = e;

    out.chart2.type = simplify_type(
        QuotientType::cyclic(Int(q) * d / e, {(-Int(p) + mu * q * a) / e, Int(1)}));
    out.chart2.substitution = {Expo{1, p, 0}, Expo{0, q, 0}, Expo{0, 0, 1}};
    out.chart2.exceptional_coord = 1;
    out.chart2.root_index = e;
    return out;
}

Blowup3D blowup_3d(const QuotientType& t, long p, long q, long r) {
    if (t.ncols != 3) throw std::invalid_argument("blowup_3d expects a three-column type");
    if (p < 1 || q < 1 || r < 1) throw std::invalid_argument("blowup_3d: weights must be positive");

    auto lifted = [&](int chart) {
        QuotientType c;
        c.ncols = 3;
        const Int P(p), Q(q), R(r);
        if (chart == 0) {
            c.orders.push_back(P);
            c.weights.push_back({Int(-1), Q, R});
        } else if (chart == 1) {
            c.orders.push_back(Q);
            c.weights.push_back({P, Int(-1), R});
        } else {
            c.orders.push_back(R);
            c.weights.push_back({P, Q, Int(-1)});
        }
        for (int i = 0; i < t.rows(); ++i) {
            const Int d = t.orders[i];
            const Int a = t.weights[i][0], b = t.weights[i][1], cc = t.weights[i][2];
            if (chart == 0) {
                c.orders.push_back(P * d);
                c.weights.push_back({a, P * b - Q * a, P * cc - R * a});
            } else if (chart == 1) {
                c.orders.push_back(Q * d);
                c.weights.push_back({Q * a - P * b, b, Q * cc - R * b});
            } else {
                c.orders.push_back(R * d);
                c.weights.push_back({R * a - P * cc, R * b - Q * cc, cc});
            }
        }
        return simplify_type(c);
    };

    Blowup3D out;
    out.charts[0] = {lifted(0), {Expo{p, 0, 0}, Expo{q, 1, 0}, Expo{r, 0, 1}}, 0, 1};
    out.charts[1] = {lifted(1), {Expo{1, p, 0}, Expo{0, q, 0}, Expo{0, r, 1}}, 1, 1};
    out.charts[2] = {lifted(2), {Expo{1, 0, p}, Expo{0, 1, q}, Expo{0, 0, r}}, 2, 1};
    return out;
}

WPoly translate_point(const QuotientType& t, const WPoly& h, const Rat& x0, const Rat& y0) {
    Rat shifts[2] = {x0, y0};
    for (int coord = 0; coord < 2 && coord < t.ncols; ++coord) {
        if (shifts[coord] == 0) continue;
        if (count_trivial_on(t, {coord}) != t.group_order())
            throw ScopeError("translation in coordinate " + std::string(coord == 0 ? "x" : "y") +
                             " is not equivariant on " + t.str());
    }
    return h.translate(x0, y0);
}

std::vector<std::pair<long, long>> invariant_monomials_2d(const QuotientType& t, long bound) {
    std::vector<std::pair<long, long>> out;
    for (long i = 0; i <= bound; ++i)
        for (long j = 0; j <= bound; ++j)
            if (is_invariant_monomial(t, {i, j, 0})) out.push_back({i, j});
    return out;
}

} // namespace qres
