#include "crystal/kn_tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace crystal {

namespace {

int mirror_color(const LieType& t, int i) {
    int n = t.rank;
    if (i == n) return n - 1;
    if (i == n - 1) return n;
    return i;
}

Letter mirror_letter(const LieType& t, Letter x) {
    return (x == t.rank || x == -t.rank) ? -x : x;
}

bool needs_mirror(const LieType& t, const Weight& lam) {
    return t.family == Family::D && lam[t.rank - 1] < Rat(0);
}

Weight mirror_weight(const LieType& t, Weight w) {
    w[t.rank - 1] = -w[t.rank - 1];
    return w;
}

// Reverse a column and bar its entries (the 180-degree rotation used to
// transport the reverse-tableau conditions to the KN orientation for D).
std::vector<Letter> rotbar_col(const std::vector<Letter>& c) {
    std::vector<Letter> r(c.rbegin(), c.rend());
    for (auto& x : r) x = -x;
    return r;
}

std::vector<int> kn_column_heights(const LieType& t, const Weight& lam, bool& spin_out) {
    int n = t.rank;
    std::vector<Rat> l(lam.begin(), lam.begin() + n);
    bool spin = !l[0].is_integer();
    if (spin)
        for (auto& x : l) x -= Rat(1, 2);
    long width = l[0].num;
    std::vector<int> heights; // left to right, weakly decreasing
    for (long c = 1; c <= width; ++c) {
        int h = 0;
        for (int j = 0; j < n; ++j)
            if (l[j] >= Rat(c)) ++h;
        heights.push_back(h);
    }
    spin_out = spin;
    return heights;
}

bool column_strict(const LieType& t, const std::vector<Letter>& col) {
    for (Letter x : col)
        if (!letter_in_alphabet(t, x)) return false;
    for (size_t j = 0; j + 1 < col.size(); ++j) {
        Letter u = col[j], v = col[j + 1];
        if (letter_lt(t, u, v)) continue;
        if (t.family == Family::B && u == 0 && v == 0) continue;
        if (t.family == Family::D && ((u == t.rank && v == -t.rank) || (u == -t.rank && v == t.rank)))
            continue;
        return false;
    }
    return true;
}

// Middle letters of an (a,n)-configuration and the (n,n) pairs.
bool is_middle(const LieType& t, Letter x) {
    if (x == t.rank || x == -t.rank) return true;
    return t.family == Family::B && x == 0;
}

bool is_nn_pair(const LieType& t, Letter x, Letter y) {
    int n = t.rank;
    if (t.family == Family::B)
        return (x == n && y == 0) || (x == n && y == -n) || (x == 0 && y == -n);
    return x == n && y == -n;
}

} // namespace

GYDiagram gy_shape(const LieType& t, const Weight& lam) {
    if (!is_dominant_integral(t, lam)) throw std::invalid_argument("gy_shape: weight not dominant");
    GYDiagram d{t, {}};
    for (int j = 0; j < t.rank; ++j) d.rows.push_back(lam[j]);
    return d;
}

Weight gy_weight(const GYDiagram& d) {
    Weight w = zero_weight(d.type);
    for (size_t j = 0; j < d.rows.size(); ++j) w[j] = d.rows[j];
    return w;
}

Word KNTableau::reading() const {
    Word w;
    for (size_t c = cols.size(); c-- > 0;)
        for (Letter x : cols[c]) w.push_back(Factor::of_letter(x));
    if (spin) w.push_back(Factor::of_spin(*spin));
    return w;
}

namespace {

KNTableau kn_from_word(const KNTableau& shape, const Word& w) {
    KNTableau out = shape;
    size_t k = 0;
    for (size_t c = out.cols.size(); c-- > 0;)
        for (Letter& x : out.cols[c]) x = w[k++].letter;
    if (out.spin) out.spin = w[k].spin;
    return out;
}

} // namespace

Weight KNTableau::weight() const {
    Weight w = word_weight(type, reading());
    return mirrored ? mirror_weight(type, w) : w;
}

int KNTableau::eps(int i) const { return word_eps(type, mirrored ? mirror_color(type, i) : i, reading()); }
int KNTableau::phi(int i) const { return word_phi(type, mirrored ? mirror_color(type, i) : i, reading()); }

std::optional<KNTableau> KNTableau::e(int i) const {
    auto r = word_apply(type, Op::e, mirrored ? mirror_color(type, i) : i, reading());
    if (!r) return std::nullopt;
    return kn_from_word(*this, r->first);
}

std::optional<KNTableau> KNTableau::f(int i) const {
    auto r = word_apply(type, Op::f, mirrored ? mirror_color(type, i) : i, reading());
    if (!r) return std::nullopt;
    return kn_from_word(*this, r->first);
}

std::string KNTableau::key() const {
    std::ostringstream os;
    os << "KN";
    if (spin) {
        os << "[sp:";
        for (size_t j = 0; j < spin->signs.size(); ++j) {
            int v = spin->signs[j];
            if (mirrored && (int)j == type.rank - 1) v = -v;
            os << (v > 0 ? '+' : '-');
        }
        os << "]";
    }
    for (const auto& c : cols) {
        os << "[";
        for (size_t j = 0; j < c.size(); ++j) {
            if (j) os << ",";
            os << (mirrored ? mirror_letter(type, c[j]) : c[j]);
        }
        os << "]";
    }
    return os.str();
}

std::string KNTableau::text() const {
    Weight w = weight();
    std::ostringstream os;
    os << "GY:";
    for (int j = 0; j < type.rank; ++j) os << " " << w[j].str();
    os << "\n";
    std::vector<std::vector<Letter>> shown = cols;
    if (mirrored)
        for (auto& c : shown)
            for (auto& x : c) x = mirror_letter(type, x);
    std::optional<std::vector<Letter>> sp;
    if (spin) {
        SpinColumn s = *spin;
        if (mirrored) s.signs[type.rank - 1] = -s.signs[type.rank - 1];
        sp = s.letters();
    }
    size_t height = sp ? type.rank : 0;
    for (const auto& c : shown) height = std::max(height, c.size());
    for (size_t r = 1; r <= height; ++r) {
        bool first = true;
        if (sp) {
            os << "sp:" << (*sp)[r - 1];
            first = false;
        }
        for (const auto& c : shown) {
            if (!first) os << " ";
            first = false;
            if (c.size() >= r) os << c[r - 1];
            else os << ".";
        }
        os << "\n";
    }
    return os.str();
}

KNTableau kn_from_external(const LieType& t, const Weight& lam,
                           const std::vector<std::vector<Letter>>& cols,
                           const std::optional<SpinColumn>& spin) {
    KNTableau r;
    r.type = t;
    r.mirrored = needs_mirror(t, lam);
    r.cols = cols;
    r.spin = spin;
    if (r.mirrored) {
        for (auto& c : r.cols)
            for (auto& x : c) x = mirror_letter(t, x);
        if (r.spin) r.spin->signs[t.rank - 1] = -r.spin->signs[t.rank - 1];
    }
    return r;
}

std::vector<KNConfiguration> find_configurations(const LieType& t, const std::vector<Letter>& C,
                                                 const std::vector<Letter>& Cp) {
    std::vector<KNConfiguration> out;
    int n = t.rank;
    int N = (int)C.size(), M = (int)Cp.size();
    if (M > N) throw std::invalid_argument("find_configurations: right column is longer");

    // (a,b)-configurations, 1 <= a <= b < n.
    for (int p = 1; p <= std::min(N, M); ++p) {
        Letter a = C[p - 1];
        if (a <= 0 || a >= n) continue;
        for (int s = p; s <= M; ++s) {
            if (Cp[s - 1] != -a) continue;
            // variant 1: b, bbar inside C; variant 2: inside C'.
            for (int q = p; q <= M; ++q)
                for (int r = q + 1; r <= s; ++r) {
                    if (q <= N && r <= N && C[q - 1] > 0 && C[q - 1] < n && C[r - 1] == -C[q - 1] &&
                        C[q - 1] >= a)
                        out.push_back({a, C[q - 1], p, q, r, s, (q - p) + (s - r)});
                    if (Cp[q - 1] > 0 && Cp[q - 1] < n && Cp[r - 1] == -Cp[q - 1] && Cp[q - 1] >= a)
                        out.push_back({a, Cp[q - 1], p, q, r, s, (q - p) + (s - r)});
                }
        }
    }

    // (a,n)-configurations: middles at rows q, q+1.
    for (int p = 1; p <= std::min(N, M); ++p) {
        Letter a = C[p - 1];
        if (a <= 0 || a >= n) continue;
        for (int s = p; s <= M; ++s) {
            if (Cp[s - 1] != -a) continue;
            for (int q = p; q + 1 <= s; ++q) {
                int r = q + 1;
                if (q <= N && r <= N && is_middle(t, C[q - 1]) && is_middle(t, C[r - 1]))
                    out.push_back({a, n, p, q, r, s, (q - p) + (s - r)});
                else if (is_middle(t, Cp[q - 1]) && is_middle(t, Cp[r - 1]))
                    out.push_back({a, n, p, q, r, s, (q - p) + (s - r)});
            }
        }
    }

    // (n,n)-configurations.
    for (int p = 1; p <= std::min(N, M); ++p)
        for (int q = p + 1; q <= M; ++q)
            if (is_nn_pair(t, C[p - 1], Cp[q - 1])) out.push_back({n, n, p, q, 0, 0, 0});

    return out;
}

bool check_2cc(const LieType& t, const std::vector<Letter>& C, const std::vector<Letter>& Cp) {
    for (const auto& cfg : find_configurations(t, C, Cp))
        if (cfg.pval >= cfg.b - cfg.a) return false;
    return true;
}

namespace {

// Horizontal compatibility of adjacent KN columns (left not shorter).
bool kn_pair_ok(const LieType& t, const std::vector<Letter>& L, const std::vector<Letter>& R) {
    if (L.size() < R.size()) return false;
    for (size_t r = 0; r < R.size(); ++r) {
        if (t.family == Family::B && L[r] == 0 && R[r] == 0) return false;
        if (!letter_le(t, L[r], R[r])) return false;
    }
    switch (t.family) {
        case Family::A: return true;
        case Family::B:
        case Family::C: return check_2cc(t, L, R);
        case Family::D: {
            // Transport the reverse-tableau pair conditions through the
            // 180-degree rotation; the proper condition list for D is not
            // printed here, see the module notes.
            auto l2 = rotbar_col(R), r2 = rotbar_col(L);
            return check_2cc1(t, l2, r2, true) && check_2cc2(t, l2, r2) && check_2cc3(t, l2, r2);
        }
    }
    return false;
}

} // namespace

bool kn_valid(const LieType& t, const Weight& lam, const KNTableau& tab) {
    Weight ilam = tab.mirrored ? mirror_weight(t, lam) : lam;
    if (needs_mirror(t, lam) != tab.mirrored) return false;

    bool spin = false;
    auto heights = kn_column_heights(t, ilam, spin);
    if (spin != tab.spin.has_value()) throw std::invalid_argument("kn_valid: shape mismatch (spin column)");
    if (heights.size() != tab.cols.size()) throw std::invalid_argument("kn_valid: shape mismatch");
    for (size_t c = 0; c < heights.size(); ++c)
        if ((int)tab.cols[c].size() != heights[c]) throw std::invalid_argument("kn_valid: shape mismatch");

    if (t.family == Family::D && tab.spin) {
        const OmegaDecomp d = omega_decompose(t, ilam);
        if (tab.spin->minus_parity() != (d.b1 ? 1 : 0)) return false;
    }

    std::vector<std::vector<Letter>> all;
    if (tab.spin) all.push_back(tab.spin->letters());
    for (const auto& c : tab.cols) all.push_back(c);

    for (const auto& c : all)
        if (!column_strict(t, c) || !check_1cc(t, c) || !d_height_n_side_ok(t, c)) return false;
    for (size_t c = 0; c + 1 < all.size(); ++c)
        if (!kn_pair_ok(t, all[c], all[c + 1])) return false;
    return true;
}

namespace {

void gen_columns_kn(const LieType& t, int height, std::vector<std::vector<Letter>>& out) {
    std::vector<Letter> ab = alphabet(t);
    std::vector<Letter> cur;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == height) {
            if (check_1cc(t, cur) && d_height_n_side_ok(t, cur)) out.push_back(cur);
            return;
        }
        for (Letter x : ab) {
            if (!cur.empty()) {
                Letter u = cur.back();
                bool ok = letter_lt(t, u, x) || (t.family == Family::B && u == 0 && x == 0) ||
                          (t.family == Family::D && ((u == t.rank && x == -t.rank) || (u == -t.rank && x == t.rank)));
                if (!ok) continue;
            }
            cur.push_back(x);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

} // namespace

std::vector<KNTableau> enumerate_kn(const LieType& t, const Weight& lam, size_t cap) {
    if (!is_dominant_integral(t, lam)) throw std::invalid_argument("enumerate_kn: weight not dominant");
    bool mir = needs_mirror(t, lam);
    Weight ilam = mir ? mirror_weight(t, lam) : lam;

    bool spin = false;
    auto heights = kn_column_heights(t, ilam, spin);
    int parity = 0;
    if (t.family == Family::D && spin) {
        const OmegaDecomp d = omega_decompose(t, ilam);
        parity = d.b1 ? 1 : 0;
    }

    std::vector<std::vector<std::vector<Letter>>> cand(heights.size());
    for (size_t c = 0; c < heights.size(); ++c) gen_columns_kn(t, heights[c], cand[c]);

    std::vector<SpinColumn> spins;
    if (spin) {
        int n = t.rank;
        for (long mask = 0; mask < (1L << n); ++mask) {
            SpinColumn s{t, std::vector<int>(n, 1)};
            for (int j = 0; j < n; ++j)
                if (mask & (1L << j)) s.signs[j] = -1;
            if (t.family == Family::D && s.minus_parity() != parity) continue;
            spins.push_back(s);
        }
    }

    std::vector<KNTableau> out;
    KNTableau work;
    work.type = t;
    work.mirrored = mir;
    work.cols.resize(heights.size());

    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == heights.size()) {
            if (out.size() >= cap) throw ResourceLimit("enumerate_kn: cap exceeded");
            out.push_back(work);
            return;
        }
        for (const auto& col : cand[c]) {
            if (c > 0) {
                if (!kn_pair_ok(t, work.cols[c - 1], col)) continue;
            } else if (work.spin) {
                if (!kn_pair_ok(t, work.spin->letters(), col)) continue;
            }
            work.cols[c] = col;
            rec(c + 1);
        }
        work.cols[c].clear();
    };

    if (spin) {
        for (const auto& s : spins) {
            work.spin = s;
            rec(0);
        }
    } else {
        rec(0);
    }

    std::sort(out.begin(), out.end(),
              [](const KNTableau& a, const KNTableau& b) { return a.key() < b.key(); });
    return out;
}

KNTableau highest_kn(const LieType& t, const Weight& lam) {
    bool mir = needs_mirror(t, lam);
    Weight ilam = mir ? mirror_weight(t, lam) : lam;
    bool spin = false;
    auto heights = kn_column_heights(t, ilam, spin);
    KNTableau r;
    r.type = t;
    r.mirrored = mir;
    for (int h : heights) {
        std::vector<Letter> col;
        for (int x = 1; x <= h; ++x) col.push_back(x);
        r.cols.push_back(col);
    }
    if (spin) r.spin = SpinColumn{t, std::vector<int>(t.rank, 1)};
    return r;
}

} // namespace crystal
