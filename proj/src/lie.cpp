#include "crystal/lie.hpp"

#include <stdexcept>

namespace crystal {

LieType::LieType(Family f, int n) : family(f), rank(n) {
    int lo = 1;
    switch (f) {
        case Family::A: lo = 1; break;
        case Family::B: lo = 2; break;
        case Family::C: lo = 2; break;
        case Family::D: lo = 4; break;
    }
    if (n < lo)
        throw std::invalid_argument("rank " + std::to_string(n) + " too small for type " + std::string(1, char(f)));
}

LieType parse_type(const std::string& fam, int rank) {
    if (fam.size() != 1) throw std::invalid_argument("bad family '" + fam + "'");
    switch (fam[0]) {
        case 'A': case 'a': return LieType(Family::A, rank);
        case 'B': case 'b': return LieType(Family::B, rank);
        case 'C': case 'c': return LieType(Family::C, rank);
        case 'D': case 'd': return LieType(Family::D, rank);
    }
    throw std::invalid_argument("bad family '" + fam + "'");
}

Weight zero_weight(const LieType& t) { return Weight(t.weight_dim(), Rat(0)); }

Weight add(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t j = 0; j < r.size(); ++j) r[j] += b[j];
    return r;
}

Weight sub(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
    return r;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t j = 0; j < w.size(); ++j) {
        if (j) s += ",";
        s += w[j].str();
    }
    return s + ")";
}

Rat pairing(const LieType& t, const Weight& w, int i) {
    int n = t.rank;
    if (i < 1 || i > n) throw std::out_of_range("pairing: color out of range");
    // <eps_j, h_i> = delta_{j,i} - delta_{j,i+1} for i < n (and for all i of A);
    // the last coroot depends on the family.
    if (t.family == Family::A || i < n) return w[i - 1] - w[i];
    switch (t.family) {
        case Family::B: return w[n - 1] * Rat(2);
        case Family::C: return w[n - 1];
        case Family::D: return w[n - 2] + w[n - 1];
        default: break;
    }
    throw std::logic_error("pairing");
}

Weight simple_root(const LieType& t, int i) {
    int n = t.rank;
    Weight a = zero_weight(t);
    if (t.family == Family::A || i < n) {
        a[i - 1] = Rat(1);
        a[i] = Rat(-1);
        return a;
    }
    switch (t.family) {
        case Family::B: a[n - 1] = Rat(1); return a;
        case Family::C: a[n - 1] = Rat(2); return a;
        case Family::D: a[n - 2] = Rat(1); a[n - 1] = Rat(1); return a;
        default: break;
    }
    throw std::logic_error("simple_root");
}

Weight fundamental(const LieType& t, int i) {
    int n = t.rank;
    if (i < 1 || i > n) throw std::out_of_range("fundamental: index out of range");
    Weight w = zero_weight(t);
    if (t.family == Family::A) {
        for (int j = 0; j < i; ++j) w[j] = Rat(1);
        return w;
    }
    if (t.family == Family::B) {
        if (i < n) { for (int j = 0; j < i; ++j) w[j] = Rat(1); }
        else { for (int j = 0; j < n; ++j) w[j] = Rat(1, 2); }
        return w;
    }
    if (t.family == Family::C) {
        for (int j = 0; j < i; ++j) w[j] = Rat(1);
        return w;
    }
    // D
    if (i <= n - 2) { for (int j = 0; j < i; ++j) w[j] = Rat(1); }
    else if (i == n - 1) { for (int j = 0; j < n; ++j) w[j] = Rat(1, 2); w[n - 1] = Rat(-1, 2); }
    else { for (int j = 0; j < n; ++j) w[j] = Rat(1, 2); }
    return w;
}

Weight weight_from_coeffs(const LieType& t, const std::vector<long>& c) {
    if ((int)c.size() != t.rank) throw std::invalid_argument("weight_from_coeffs: need rank coefficients");
    Weight w = zero_weight(t);
    for (int i = 1; i <= t.rank; ++i) {
        if (c[i - 1] < 0) throw std::invalid_argument("weight coefficients must be nonnegative");
        if (c[i - 1] == 0) continue;
        Weight f = fundamental(t, i);
        for (size_t j = 0; j < w.size(); ++j) w[j] += f[j] * Rat(c[i - 1]);
    }
    return w;
}

std::vector<long> coeffs_from_weight(const LieType& t, const Weight& w) {
    std::vector<long> c(t.rank);
    for (int i = 1; i <= t.rank; ++i) {
        Rat p = pairing(t, w, i);
        if (!p.is_integer() || p.num < 0) throw std::invalid_argument("weight is not dominant integral");
        c[i - 1] = (long)p.num;
    }
    return c;
}

bool is_dominant_integral(const LieType& t, const Weight& w) {
    for (int i = 1; i <= t.rank; ++i) {
        Rat p = pairing(t, w, i);
        if (!p.is_integer() || p.num < 0) return false;
    }
    return true;
}

namespace {

// Positive roots in epsilon coordinates, as sparse (index, coeff) pairs.
std::vector<Weight> positive_roots(const LieType& t) {
    int n = t.rank;
    std::vector<Weight> roots;
    auto mk = [&](int i, int ci, int j, int cj) {
        Weight r = zero_weight(t);
        r[i] = Rat(ci);
        if (j >= 0) r[j] = Rat(cj);
        roots.push_back(r);
    };
    if (t.family == Family::A) {
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) mk(i, 1, j, -1);
        return roots;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) { mk(i, 1, j, -1); mk(i, 1, j, 1); }
    if (t.family == Family::B)
        for (int i = 0; i < n; ++i) mk(i, 1, -1, 0);
    if (t.family == Family::C)
        for (int i = 0; i < n; ++i) mk(i, 2, -1, 0);
    return roots;
}

Rat dot(const Weight& a, const Weight& b) {
    Rat s(0);
    for (size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

} // namespace

long long weyl_dim(const LieType& t, const Weight& lam) {
    if (!is_dominant_integral(t, lam)) throw std::invalid_argument("weyl_dim: weight not dominant integral");
    auto roots = positive_roots(t);
    Weight rho = zero_weight(t);
    for (const auto& a : roots)
        for (size_t j = 0; j < rho.size(); ++j) rho[j] += a[j] * Rat(1, 2);
    Rat prod(1);
    Weight lr = add(lam, rho);
    for (const auto& a : roots) prod *= dot(lr, a) / dot(rho, a);
    if (!prod.is_integer() || prod.num <= 0) throw std::logic_error("weyl_dim: non-integral product");
    return prod.num;
}

} // namespace crystal
