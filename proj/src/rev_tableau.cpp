#include "crystal/rev_tableau.hpp"

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

// Entry at row r (1-based from the bottom) of a bottom-justified column
// given top to bottom; 0 height rows do not reach here.
Letter at_row(const std::vector<Letter>& col, int r) { return col[col.size() - r]; }

} // namespace

GRYDiagram gry_shape(const LieType& t, const Weight& lam) {
    if (!is_dominant_integral(t, lam)) throw std::invalid_argument("gry_shape: weight not dominant");
    GRYDiagram d{t, {}};
    for (int j = 0; j < t.rank; ++j) d.rows.push_back(lam[j]);
    return d;
}

Weight gry_weight(const GRYDiagram& d) {
    Weight w = zero_weight(d.type);
    for (size_t j = 0; j < d.rows.size(); ++j) w[j] = d.rows[j];
    return w;
}

OmegaDecomp omega_decompose(const LieType& t, const Weight& lam) {
    auto c = coeffs_from_weight(t, lam);
    int n = t.rank;
    OmegaDecomp d;
    if (t.family == Family::A || t.family == Family::C) {
        for (int i = 1; i <= n; ++i)
            for (long k = 0; k < c[i - 1]; ++k) d.parts.push_back(i);
        return d;
    }
    if (t.family == Family::B) {
        for (int i = 1; i < n; ++i)
            for (long k = 0; k < c[i - 1]; ++k) d.parts.push_back(i);
        for (long k = 0; k < c[n - 1] / 2; ++k) d.parts.push_back(n);
        d.b_spin = int(c[n - 1] % 2);
        return d;
    }
    // D: omega_{n-1} = lambda_{n-1}+lambda_n, omega_n = 2 lambda_n,
    // omega_{n+1} = 2 lambda_{n-1}.
    for (int i = 1; i <= n - 2; ++i)
        for (long k = 0; k < c[i - 1]; ++k) d.parts.push_back(i);
    long m = std::min(c[n - 2], c[n - 1]);
    for (long k = 0; k < m; ++k) d.parts.push_back(n - 1);
    long rest = c[n - 1] - c[n - 2];
    if (rest >= 0) {
        for (long k = 0; k < rest / 2; ++k) d.parts.push_back(n);
        d.b2 = int(rest % 2);
    } else {
        for (long k = 0; k < (-rest) / 2; ++k) d.parts.push_back(n + 1);
        d.b1 = int((-rest) % 2);
    }
    std::sort(d.parts.begin(), d.parts.end());
    return d;
}

Weight RevTableau::weight() const {
    Weight w = word_weight(type, reading());
    return mirrored ? mirror_weight(type, w) : w;
}

Word RevTableau::reading() const {
    Word w;
    if (spin) w.push_back(Factor::of_spin(*spin));
    for (size_t c = cols.size(); c-- > 0;)
        for (Letter x : cols[c]) w.push_back(Factor::of_letter(x));
    return w;
}

namespace {

RevTableau rev_from_word(const RevTableau& shape, const Word& w) {
    RevTableau out = shape;
    size_t k = 0;
    if (out.spin) out.spin = w[k++].spin;
    for (size_t c = out.cols.size(); c-- > 0;)
        for (Letter& x : out.cols[c]) x = w[k++].letter;
    return out;
}

} // namespace

int RevTableau::eps(int i) const { return word_eps(type, mirrored ? mirror_color(type, i) : i, reading()); }
int RevTableau::phi(int i) const { return word_phi(type, mirrored ? mirror_color(type, i) : i, reading()); }

std::optional<RevTableau> RevTableau::e(int i) const {
    auto r = word_apply(type, Op::e, mirrored ? mirror_color(type, i) : i, reading());
    if (!r) return std::nullopt;
    return rev_from_word(*this, r->first);
}

std::optional<RevTableau> RevTableau::f(int i) const {
    auto r = word_apply(type, Op::f, mirrored ? mirror_color(type, i) : i, reading());
    if (!r) return std::nullopt;
    return rev_from_word(*this, r->first);
}

std::string RevTableau::key() const {
    std::ostringstream os;
    os << "T";
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

std::string RevTableau::text() const {
    // Shape line, then rows top to bottom; absent cells print as '.'.
    Weight w = weight();
    std::ostringstream os;
    os << "GRY:";
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
    for (size_t r = height; r >= 1; --r) {
        bool first = true;
        for (const auto& c : shown) {
            if (!first) os << " ";
            first = false;
            if (c.size() >= r) os << at_row(c, (int)r);
            else os << ".";
        }
        if (sp) {
            if (!first) os << " ";
            if (sp->size() >= r) os << "sp:" << at_row(*sp, (int)r);
            else os << ".";
        }
        os << "\n";
        if (r == 1) break;
    }
    return os.str();
}

RevTableau rev_from_external(const LieType& t, const Weight& lam,
                             const std::vector<std::vector<Letter>>& cols,
                             const std::optional<SpinColumn>& spin) {
    RevTableau r;
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

bool check_1cc(const LieType& t, const std::vector<Letter>& col) {
    int N = (int)col.size();
    for (int s = 1; s <= N; ++s) {
        if (col[s - 1] <= 0) continue;
        int a = col[s - 1];
        for (int u = s + 1; u <= N; ++u) {
            if (col[u - 1] != -a) continue;
            if (s + (N - u + 1) > a) return false;
        }
    }
    return true;
}

bool check_2cc1(const LieType& t, const std::vector<Letter>& left, const std::vector<Letter>& right,
                bool min_form) {
    int n = t.rank;
    int hl = (int)left.size(), hr = (int)right.size();
    for (int p = 2; p <= hl; ++p) {
        Letter a = at_row(left, p);
        if (a <= 0) continue;
        for (int q = 1; q < p && q <= hr; ++q) {
            Letter y = at_row(right, q);
            if (y >= 0) continue;
            int b = -y;
            if (!min_form && b != a) continue;
            if (p - q > n - std::min(a, b)) return false;
        }
    }
    return true;
}

bool check_2cc2(const LieType& t, const std::vector<Letter>& left, const std::vector<Letter>& right) {
    int hl = (int)left.size(), hr = (int)right.size();
    for (int p = 2; p <= hl; ++p) {
        Letter a = at_row(left, p);
        if (a <= 0) continue;
        for (int q = 1; q < p && q <= hr; ++q) {
            if (at_row(right, q) != -a) continue;
            // trigger (a; p, q): scan both columns for (b, cbar) pairs with
            // rows inside [q, p]
            for (const auto* colp : {&left, &right}) {
                const auto& col = *colp;
                int h = (int)col.size();
                for (int rr = p; rr > q; --rr) {
                    if (rr > h) continue;
                    Letter b = at_row(col, rr);
                    if (b <= 0) continue;
                    for (int ss = q; ss < rr; ++ss) {
                        if (ss > h) continue;
                        Letter cy = at_row(col, ss);
                        if (cy >= 0) continue;
                        int cc = -cy;
                        if ((p - rr) + (ss - q) >= std::max(b, cc) - a) return false;
                    }
                }
            }
        }
    }
    return true;
}

bool check_2cc3(const LieType& t, const std::vector<Letter>& left, const std::vector<Letter>& right) {
    if (t.family != Family::D) return true;
    int n = t.rank;
    int hl = (int)left.size(), hr = (int)right.size();
    auto isn = [&](Letter x) { return x == n || x == -n; };
    // a = n degenerate configurations: the same {n, nbar} step duplicated at
    // the same rows of both columns (the analogue of the (n,n)-configuration)
    for (int r = 1; r + 1 <= std::min(hl, hr); ++r) {
        Letter a1 = at_row(left, r), a2 = at_row(left, r + 1);
        Letter b1 = at_row(right, r), b2 = at_row(right, r + 1);
        if (isn(a1) && a1 == b1 && a2 == -a1 && b2 == -b1) return false;
    }
    for (int p = 1; p <= hl; ++p) {
        Letter a = at_row(left, p);
        if (a <= 0 || a >= n) continue;
        for (int s = 1; s <= hr; ++s) {
            if (at_row(right, s) != -a) continue;
            for (int q = s; q <= p && q <= hr; ++q) {
                Letter jq = at_row(right, q);
                if (!isn(jq)) continue;
                for (int r = s; r < q && r <= hl; ++r) {
                    Letter ir = at_row(left, r);
                    if (!isn(ir)) continue;
                    // pattern check: mixed colors <-> odd row spread
                    bool mixed = (jq == -ir);
                    bool odd = ((q - r + 1) % 2) != 0;
                    if (mixed != odd) continue;
                    if (p - s >= n - a) return false;
                }
            }
        }
    }
    return true;
}

bool d_height_n_side_ok(const LieType& t, const std::vector<Letter>& col) {
    if (t.family != Family::D || (int)col.size() != t.rank) return true;
    int n = t.rank;
    int barred_outside = 0;
    Letter run_bottom = 0;
    for (Letter x : col) {
        if (x == n || x == -n) run_bottom = x; // run entries are consecutive; keep the last
        else if (x < 0) ++barred_outside;
    }
    return (barred_outside + (run_bottom == -n ? 1 : 0)) % 2 == 0;
}

namespace {

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

// Rows weakly increase; for B the letter 0 may appear at most once per row.
// Checked pairwise between horizontally adjacent cells.
bool rows_ok(const LieType& t, const std::vector<std::vector<Letter>>& cols,
             const std::optional<SpinColumn>& spin) {
    std::vector<std::vector<Letter>> all = cols;
    if (spin) all.push_back(spin->letters());
    for (size_t c = 0; c + 1 < all.size(); ++c) {
        const auto& L = all[c];
        const auto& R = all[c + 1];
        if (L.size() > R.size()) return false; // heights weakly increase rightward
        for (int r = 1; r <= (int)L.size(); ++r) {
            Letter u = at_row(L, r), v = at_row(R, r);
            if (t.family == Family::B && u == 0 && v == 0) return false;
            if (!letter_le(t, u, v)) return false;
        }
    }
    return true;
}

std::vector<int> full_column_heights(const LieType& t, const Weight& lam, bool& spin_out) {
    int n = t.rank;
    std::vector<Rat> l(lam.begin(), lam.begin() + n);
    bool spin = !l[0].is_integer();
    if (spin)
        for (auto& x : l) x -= Rat(1, 2);
    long width = l[0].num;
    std::vector<int> heights; // left to right: rows are right aligned, so the
                              // column x places from the right has height #{j : l_j >= x}
    for (long c = width; c >= 1; --c) {
        int h = 0;
        for (int j = 0; j < n; ++j)
            if (l[j] >= Rat(c)) ++h;
        heights.push_back(h);
    }
    spin_out = spin;
    return heights;
}

} // namespace

bool t_valid(const LieType& t, const Weight& lam, const RevTableau& tab, const TwoColOptions& opt) {
    Weight ilam = tab.mirrored ? mirror_weight(t, lam) : lam;
    if (needs_mirror(t, lam) != tab.mirrored) return false;

    bool spin = false;
    auto heights = full_column_heights(t, ilam, spin);
    if (spin != tab.spin.has_value()) throw std::invalid_argument("t_valid: shape mismatch (spin column)");
    if (heights.size() != tab.cols.size()) throw std::invalid_argument("t_valid: shape mismatch");
    for (size_t c = 0; c < heights.size(); ++c)
        if ((int)tab.cols[c].size() != heights[c]) throw std::invalid_argument("t_valid: shape mismatch");

    if (t.family == Family::D && tab.spin) {
        const OmegaDecomp d = omega_decompose(t, ilam);
        if (tab.spin->minus_parity() != (d.b1 ? 1 : 0)) return false;
    }

    for (const auto& c : tab.cols)
        if (!column_strict(t, c) || !d_height_n_side_ok(t, c)) return false;
    if (!rows_ok(t, tab.cols, tab.spin)) return false;
    if (t.family == Family::A) return true;

    std::vector<std::vector<Letter>> all = tab.cols;
    if (tab.spin) all.push_back(tab.spin->letters());
    for (const auto& c : all)
        if (!check_1cc(t, c)) return false;
    for (size_t c = 0; c + 1 < all.size(); ++c) {
        if (!check_2cc1(t, all[c], all[c + 1], opt.cc1_min_form)) return false;
        if (!check_2cc2(t, all[c], all[c + 1])) return false;
        if (t.family == Family::D && !check_2cc3(t, all[c], all[c + 1])) return false;
    }
    return true;
}

namespace {

// All strictly increasing columns of the given height (B: 0 may repeat;
// D: n and nbar may alternate).
void gen_columns(const LieType& t, int height, std::vector<std::vector<Letter>>& out) {
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

std::vector<RevTableau> enumerate_t(const LieType& t, const Weight& lam, size_t cap,
                                    const TwoColOptions& opt) {
    if (!is_dominant_integral(t, lam)) throw std::invalid_argument("enumerate_t: weight not dominant");
    bool mir = needs_mirror(t, lam);
    Weight ilam = mir ? mirror_weight(t, lam) : lam;

    bool spin = false;
    auto heights = full_column_heights(t, ilam, spin);
    int parity = 0;
    if (t.family == Family::D && spin) {
        const OmegaDecomp d = omega_decompose(t, ilam);
        parity = d.b1 ? 1 : 0;
    }

    // Candidate columns per distinct height.
    std::vector<std::vector<std::vector<Letter>>> cand(heights.size());
    for (size_t c = 0; c < heights.size(); ++c) gen_columns(t, heights[c], cand[c]);

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

    std::vector<RevTableau> out;
    RevTableau work;
    work.type = t;
    work.mirrored = mir;
    work.cols.resize(heights.size());

    auto pair_ok = [&](const std::vector<Letter>& L, const std::vector<Letter>& R) {
        if (L.size() > R.size()) return false;
        for (int r = 1; r <= (int)L.size(); ++r) {
            Letter u = at_row(L, r), v = at_row(R, r);
            if (t.family == Family::B && u == 0 && v == 0) return false;
            if (!letter_le(t, u, v)) return false;
        }
        if (t.family == Family::A) return true;
        if (!check_2cc1(t, L, R, opt.cc1_min_form)) return false;
        if (!check_2cc2(t, L, R)) return false;
        if (t.family == Family::D && !check_2cc3(t, L, R)) return false;
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == heights.size()) {
            if (!spin) {
                if (out.size() >= cap) throw ResourceLimit("enumerate_t: cap exceeded");
                out.push_back(work);
                return;
            }
            for (const auto& s : spins) {
                if (!work.cols.empty() && !pair_ok(work.cols.back(), s.letters())) continue;
                if (out.size() >= cap) throw ResourceLimit("enumerate_t: cap exceeded");
                work.spin = s;
                out.push_back(work);
            }
            work.spin.reset();
            return;
        }
        for (const auto& col : cand[c]) {
            if (c > 0 && !pair_ok(work.cols[c - 1], col)) continue;
            work.cols[c] = col;
            rec(c + 1);
        }
        work.cols[c].clear();
    };
    rec(0);

    std::sort(out.begin(), out.end(),
              [](const RevTableau& a, const RevTableau& b) { return a.key() < b.key(); });
    return out;
}

RevTableau highest_rev(const LieType& t, const Weight& lam) {
    bool mir = needs_mirror(t, lam);
    Weight ilam = mir ? mirror_weight(t, lam) : lam;
    bool spin = false;
    auto heights = full_column_heights(t, ilam, spin);
    RevTableau r;
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
