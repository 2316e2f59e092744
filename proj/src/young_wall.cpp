#include "crystal/young_wall.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystal {

namespace {

void require_b(const LieType& t) {
    if (t.family != Family::B)
        throw std::invalid_argument("young walls are implemented for the B_n^(1) pattern only");
}

} // namespace

Cell YoungWall::cell_at(int k, int c) const {
    (void)k; // the cell pattern is column independent; only ground content varies
    int n = type.rank;
    int period = 2 * n - 2;
    int m = (ground == WallGround::spin) ? ((c - (n - 1)) % period + period) % period : c % period;
    if (m == 0) return {CellKind::tcell, 0};
    if (m <= n - 2) return {CellKind::unit, m + 1};
    if (m == n - 1) return {CellKind::ncell, n};
    return {CellKind::unit, 2 * n - 1 - m};
}

int YoungWall::ground_tri_color(int k) const {
    if (ground == WallGround::spin) throw std::logic_error("spin ground has no triangle");
    int base = (ground == WallGround::saw0) ? 0 : 1;
    return (k % 2 == 0) ? base : 1 - base;
}

namespace {

WallColumn ground_state(const YoungWall& y, int k) {
    if (y.ground == WallGround::spin) return {0, ColPartial::nlow};
    return {0, y.ground_tri_color(k) == 0 ? ColPartial::t0 : ColPartial::t1};
}

int extent_of(const WallColumn& c) {
    switch (c.partial) {
        case ColPartial::none: return 2 * c.cells;
        case ColPartial::nlow: return 2 * c.cells + 1;
        default: return 2 * c.cells + 2; // half-width partial spans its whole cell
    }
}

int covered_of(const WallColumn& c) {
    return 2 * c.cells + (c.partial == ColPartial::nlow ? 1 : 0);
}

} // namespace

WallColumn YoungWall::col(int k) const {
    return k < (int)cols.size() ? cols[k] : ground_state(*this, k);
}

int YoungWall::extent_hu(int k) const { return extent_of(col(k)); }
int YoungWall::covered_hu(int k) const { return covered_of(col(k)); }

bool YoungWall::is_full(int k) const {
    WallColumn c = col(k);
    return c.partial == ColPartial::none && c.cells > 0;
}

bool YoungWall::is_proper() const {
    std::set<int> heights;
    for (int k = 0; k < (int)cols.size(); ++k) {
        if (!is_full(k)) continue;
        if (!heights.insert(cols[k].cells).second) return false;
    }
    return true;
}

bool YoungWall::is_valid() const {
    for (int k = 0; k < (int)cols.size(); ++k) {
        const WallColumn& c = cols[k];
        if (c.cells < 0) return false;
        if (c.partial == ColPartial::nlow && cell_at(k, c.cells).kind != CellKind::ncell) return false;
        if ((c.partial == ColPartial::t0 || c.partial == ColPartial::t1) &&
            cell_at(k, c.cells).kind != CellKind::tcell)
            return false;
        if (c.cells == 0) {
            if (ground == WallGround::spin) {
                if (c.partial != ColPartial::nlow) return false;
            } else {
                WallColumn g = ground_state(*this, k);
                if (c.partial != g.partial) return false;
            }
        }
        if (k >= 1 && !(c == ground_state(*this, k))) {
            // full-depth content needs full-depth coverage on the right
            WallColumn left = col(k - 1);
            if (covered_of(left) < covered_of(c)) return false;
            if (c.partial == ColPartial::t0 || c.partial == ColPartial::t1) {
                // a lone half-width block rests on the neighbor's matching
                // layer: either the cell there is complete, or it holds the
                // opposite-color half-width block (the layers alternate
                // column to column)
                bool full = covered_of(left) >= 2 * c.cells + 2;
                bool partner = left.cells == c.cells &&
                               ((c.partial == ColPartial::t0 && left.partial == ColPartial::t1) ||
                                (c.partial == ColPartial::t1 && left.partial == ColPartial::t0));
                if (!full && !partner) return false;
            }
        }
    }
    return is_proper();
}

Weight YoungWall::weight() const {
    const LieType& t = type;
    int n = t.rank;
    Weight w;
    switch (ground) {
        case WallGround::spin: w = fundamental(t, n); break;
        case WallGround::saw0: w = fundamental(t, 1); break;
        case WallGround::saw1: w = zero_weight(t); break;
    }
    Weight theta = zero_weight(t); // highest root eps_1 + eps_2
    theta[0] = Rat(1);
    theta[1] = Rat(1);
    for (int k = 0; k < (int)cols.size(); ++k) {
        // walk added blocks: full cells, then the partial
        auto sub_color = [&](int color, int count) {
            if (count == 0) return;
            Weight a = (color == 0) ? sub(zero_weight(t), theta) : simple_root(t, color);
            for (size_t j = 0; j < w.size(); ++j) w[j] -= a[j] * Rat(count);
        };
        const WallColumn& c = cols[k];
        for (int cc = 0; cc < c.cells; ++cc) {
            Cell cell = cell_at(k, cc);
            switch (cell.kind) {
                case CellKind::tcell: sub_color(0, 1); sub_color(1, 1); break;
                case CellKind::ncell: sub_color(n, 2); break;
                case CellKind::unit: sub_color(cell.color, 1); break;
            }
        }
        if (c.partial == ColPartial::nlow) sub_color(n, 1);
        if (c.partial == ColPartial::t0) sub_color(0, 1);
        if (c.partial == ColPartial::t1) sub_color(1, 1);
        // the ground frame is not part of the added blocks
        if (ground == WallGround::spin) sub_color(n, -1);
        else sub_color(ground_tri_color(k), -1);
    }
    return w;
}

std::string YoungWall::key() const {
    std::ostringstream os;
    os << "W|" << type.str() << "|";
    switch (ground) {
        case WallGround::spin: os << "s"; break;
        case WallGround::saw0: os << "g0"; break;
        case WallGround::saw1: os << "g1"; break;
    }
    for (const auto& c : cols) {
        os << "|" << c.cells << char(c.partial);
    }
    return os.str();
}

namespace {

void trim(YoungWall& y) {
    while (!y.cols.empty() && y.cols.back() == ground_state(y, (int)y.cols.size() - 1)) y.cols.pop_back();
}

// Candidate add steps of the given color at column k (at most 2, validated
// sequentially against support and properness).
std::vector<WallColumn> add_steps(const YoungWall& y, int k, int i) {
    std::vector<WallColumn> out;
    YoungWall work = y;
    while ((int)work.cols.size() <= k) work.cols.push_back(ground_state(work, (int)work.cols.size()));
    for (int step = 0; step < 2; ++step) {
        WallColumn c = work.cols[k];
        std::optional<WallColumn> next;
        switch (c.partial) {
            case ColPartial::nlow:
                if (i == y.type.rank) next = WallColumn{c.cells + 1, ColPartial::none};
                break;
            case ColPartial::t0:
                if (i == 1) next = WallColumn{c.cells + 1, ColPartial::none};
                break;
            case ColPartial::t1:
                if (i == 0) next = WallColumn{c.cells + 1, ColPartial::none};
                break;
            case ColPartial::none: {
                Cell cell = y.cell_at(k, c.cells);
                if (cell.kind == CellKind::tcell) {
                    if (i == 0) next = WallColumn{c.cells, ColPartial::t0};
                    if (i == 1) next = WallColumn{c.cells, ColPartial::t1};
                } else if (cell.kind == CellKind::ncell) {
                    if (i == y.type.rank) next = WallColumn{c.cells, ColPartial::nlow};
                } else if (cell.color == i) {
                    next = WallColumn{c.cells + 1, ColPartial::none};
                }
                break;
            }
        }
        if (!next) break;
        work.cols[k] = *next;
        if (!work.is_valid()) break;
        out.push_back(*next);
    }
    return out;
}

std::vector<WallColumn> remove_steps(const YoungWall& y, int k, int i) {
    std::vector<WallColumn> out;
    if (k >= (int)y.cols.size()) return out; // ground columns have nothing removable
    YoungWall work = y;
    for (int step = 0; step < 2; ++step) {
        WallColumn c = work.cols[k];
        std::optional<WallColumn> next;
        switch (c.partial) {
            case ColPartial::nlow:
                if (i == y.type.rank && !(y.ground == WallGround::spin && c.cells == 0))
                    next = WallColumn{c.cells, ColPartial::none};
                break;
            case ColPartial::t0:
                if (i == 0 && !(y.ground != WallGround::spin && c.cells == 0 && y.ground_tri_color(k) == 0))
                    next = WallColumn{c.cells, ColPartial::none};
                break;
            case ColPartial::t1:
                if (i == 1 && !(y.ground != WallGround::spin && c.cells == 0 && y.ground_tri_color(k) == 1))
                    next = WallColumn{c.cells, ColPartial::none};
                break;
            case ColPartial::none: {
                if (c.cells == 0) break;
                Cell cell = y.cell_at(k, c.cells - 1);
                if (cell.kind == CellKind::tcell) {
                    bool cell0saw = (y.ground != WallGround::spin && c.cells - 1 == 0);
                    if (i == 0 && !(cell0saw && y.ground_tri_color(k) == 0))
                        next = WallColumn{c.cells - 1, ColPartial::t1};
                    if (i == 1 && !(cell0saw && y.ground_tri_color(k) == 1))
                        next = WallColumn{c.cells - 1, ColPartial::t0};
                } else if (cell.kind == CellKind::ncell) {
                    if (i == y.type.rank) next = WallColumn{c.cells - 1, ColPartial::nlow};
                } else if (cell.color == i) {
                    next = WallColumn{c.cells - 1, ColPartial::none};
                }
                break;
            }
        }
        if (!next) break;
        work.cols[k] = *next;
        trim(work);
        if (!work.is_valid()) break;
        while ((int)work.cols.size() <= k) work.cols.push_back(ground_state(work, (int)work.cols.size()));
        out.push_back(*next);
    }
    return out;
}

} // namespace

WallSignature wall_signature(const YoungWall& y, int i) {
    require_b(y.type);
    int m = y.active_columns() + 1;
    std::vector<Sym> seq;
    std::vector<int> owner;
    // The string lists columns left to right as drawn: y_{m-1} ... y_1 y_0.
    for (int k = m - 1; k >= 0; --k) {
        size_t r = remove_steps(y, k, i).size();
        size_t a = add_steps(y, k, i).size();
        for (size_t j = 0; j < r; ++j) { seq.push_back(Sym::minus); owner.push_back(k); }
        for (size_t j = 0; j < a; ++j) { seq.push_back(Sym::plus); owner.push_back(k); }
    }
    ReducedSignature red = reduce_signature(seq);
    WallSignature out;
    out.syms = red.syms;
    for (size_t pos : red.origin) out.columns.push_back(owner[pos]);
    return out;
}

int YoungWall::eps(int i) const {
    WallSignature s = wall_signature(*this, i);
    return (int)std::count(s.syms.begin(), s.syms.end(), Sym::minus);
}

int YoungWall::phi(int i) const {
    WallSignature s = wall_signature(*this, i);
    return (int)std::count(s.syms.begin(), s.syms.end(), Sym::plus);
}

std::optional<YoungWall> YoungWall::e(int i) const {
    WallSignature s = wall_signature(*this, i);
    int pick = -1;
    for (size_t j = 0; j < s.syms.size(); ++j)
        if (s.syms[j] == Sym::minus) pick = (int)j;
    if (pick < 0) return std::nullopt;
    int k = s.columns[pick];
    auto steps = remove_steps(*this, k, i);
    YoungWall out = *this;
    out.cols[k] = steps.front();
    trim(out);
    return out;
}

std::optional<YoungWall> YoungWall::f(int i) const {
    WallSignature s = wall_signature(*this, i);
    int pick = -1;
    for (size_t j = 0; j < s.syms.size(); ++j)
        if (s.syms[j] == Sym::plus) { pick = (int)j; break; }
    if (pick < 0) return std::nullopt;
    int k = s.columns[pick];
    auto steps = add_steps(*this, k, i);
    YoungWall out = *this;
    while ((int)out.cols.size() <= k) out.cols.push_back(ground_state(out, (int)out.cols.size()));
    out.cols[k] = steps.front();
    trim(out);
    return out;
}

bool is_reduced(const YoungWall& y) {
    require_b(y.type);
    int n = y.type.rank;
    int period = 2 * n - 2;
    for (int k = 0; k < (int)y.cols.size(); ++k) {
        WallColumn c = y.cols[k];
        WallColumn down{c.cells - period, c.partial};
        if (down.cells < 0) continue;
        YoungWall cand = y;
        cand.cols[k] = down;
        trim(cand);
        if (cand.is_valid()) return false; // is_valid rejects walls digging into the ground frame
    }
    return true;
}

YoungWall ground_wall(const LieType& t, const Weight& lam) {
    require_b(t);
    OmegaDecomp d = omega_decompose(t, lam);
    YoungWall y;
    y.type = t;
    if (d.b_spin) {
        y.ground = WallGround::spin;
    } else {
        long total = 0;
        for (int p : d.parts) total += p;
        // anchor: the ground half-width block of the last part's letter-1
        // column (index total-1) must have color 0
        y.ground = ((total - 1) % 2 == 0) ? WallGround::saw0 : WallGround::saw1;
    }
    return y;
}

YoungWall highest_wall(const LieType& t, const Weight& lam) {
    require_b(t);
    int n = t.rank;
    OmegaDecomp d = omega_decompose(t, lam);
    YoungWall y = ground_wall(t, lam);
    int period = 2 * n - 2;
    int t_count = (int)d.parts.size();
    int P = 0;
    for (int k = 1; k <= t_count; ++k) {
        int ik = d.parts[k - 1];
        int off = (t_count - k) * period + (d.b_spin ? n - 1 : 0);
        for (int a = 1; a <= ik; ++a) {
            int L = ik + 1 - a; // letter of y^a in the highest tableau column
            WallColumn c;
            if (L == 1) c = WallColumn{off, ColPartial::t0};
            else c = WallColumn{off + L - 1, ColPartial::none};
            while ((int)y.cols.size() <= P + a - 1) y.cols.push_back(ground_state(y, (int)y.cols.size()));
            y.cols[P + a - 1] = c;
        }
        P += ik;
    }
    // spin part columns stay at the ground state
    trim(y);
    if (!y.is_valid()) throw std::logic_error("highest_wall: construction invalid");
    return y;
}

YoungWall e_saturate(const YoungWall& y) {
    YoungWall cur = y;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= cur.type.rank; ++i) {
            if (auto up = cur.e(i)) {
                cur = *up;
                moved = true;
                break;
            }
        }
    }
    return cur;
}

namespace {

// Letter of an omega-part column from its top state; off is the part base in
// cells.  Throws on a pattern gap.
Letter part_letter(const LieType& t, const WallColumn& c, int off) {
    int n = t.rank;
    int rel = c.cells - off;
    switch (c.partial) {
        case ColPartial::t0:
            if (rel == 0) return 1;
            break;
        case ColPartial::t1:
            if (rel == 2 * n - 2) return -1;
            break;
        case ColPartial::nlow:
            if (rel == n - 1) return 0;
            break;
        case ColPartial::none:
            if (rel >= 1 && rel <= n - 1) return rel + 1;
            if (rel == n) return -n;
            if (rel >= n + 1 && rel <= 2 * n - 2) return -(2 * n - rel);
            break;
    }
    throw std::runtime_error("unmatched column-top pattern (omega part, rel " + std::to_string(rel) + ")");
}

// Letter of a spin-part column; 0 return means "no added blocks" (the entry
// comes from the complement rule).
std::optional<Letter> spin_part_letter(const LieType& t, const WallColumn& c) {
    int n = t.rank;
    switch (c.partial) {
        case ColPartial::nlow:
            if (c.cells == 0) return std::nullopt;
            break;
        case ColPartial::t1:
            if (c.cells == n - 1) return -1;
            break;
        case ColPartial::none:
            if (c.cells >= 1 && c.cells <= n - 1) return -(n + 1 - c.cells);
            break;
        default: break;
    }
    throw std::runtime_error("unmatched column-top pattern (spin part)");
}

std::vector<WallBlock> column_blocks(const YoungWall& y, int k, bool include_ground) {
    std::vector<WallBlock> out;
    WallColumn c = y.col(k);
    int n = y.type.rank;
    for (int cc = 0; cc < c.cells; ++cc) {
        Cell cell = y.cell_at(k, cc);
        int lo = 2 * cc, hi = 2 * cc + 2;
        switch (cell.kind) {
            case CellKind::tcell: {
                int first = 0;
                if (y.ground != WallGround::spin && cc == 0) first = y.ground_tri_color(k);
                out.push_back({first, lo, hi, true});
                out.push_back({1 - first, lo, hi, true});
                break;
            }
            case CellKind::ncell:
                out.push_back({n, lo, lo + 1, false});
                out.push_back({n, lo + 1, hi, false});
                break;
            case CellKind::unit:
                out.push_back({cell.color, lo, hi, false});
                break;
        }
    }
    int lo = 2 * c.cells;
    if (c.partial == ColPartial::nlow) out.push_back({n, lo, lo + 1, false});
    if (c.partial == ColPartial::t0) out.push_back({0, lo, lo + 2, true});
    if (c.partial == ColPartial::t1) out.push_back({1, lo, lo + 2, true});
    if (!include_ground && !out.empty()) out.erase(out.begin());
    return out;
}

int block_row(const WallBlock& b, int base_cells) {
    return (b.hi_hu - 2 * base_cells + 1) / 2; // ceil over half units
}

} // namespace

WallDecomposition decompose(const YoungWall& y, const Weight& lam) {
    require_b(y.type);
    const LieType& t = y.type;
    int n = t.rank;
    OmegaDecomp d = omega_decompose(t, lam);
    YoungWall G = ground_wall(t, lam);
    if (G.ground != y.ground) throw std::invalid_argument("decompose: wall ground does not match lambda");
    int want = 0;
    for (int p : d.parts) want += p;
    if (d.b_spin) want += n;
    if (y.active_columns() > want)
        throw std::invalid_argument("decompose: column count inconsistent with lambda");

    YoungWall H = highest_wall(t, lam);
    WallDecomposition out;
    out.has_spin = d.b_spin != 0;

    int period = 2 * n - 2;
    int t_count = (int)d.parts.size();
    int P = 0;
    for (int k = 1; k <= t_count; ++k) {
        int ik = d.parts[k - 1];
        int off = (t_count - k) * period + (d.b_spin ? n - 1 : 0);
        WallPartPiece piece;
        piece.omega = ik;
        piece.first_col = P;
        piece.last_col = P + ik - 1;
        for (int a = 1; a <= ik; ++a) {
            int col = P + a - 1;
            WallColumn c = y.col(col);
            piece.letters.push_back(part_letter(t, c, off));
            auto yb = column_blocks(y, col, true);
            auto hb = column_blocks(H, col, true);
            if (yb.size() < hb.size()) throw std::invalid_argument("decompose: wall lies below the highest wall");
            piece.base_cells.push_back(off);
            piece.added.emplace_back(yb.begin() + hb.size(), yb.end());
        }
        out.parts.push_back(std::move(piece));
        P += ik;
    }
    if (d.b_spin) {
        WallPartPiece piece;
        piece.omega = 0;
        piece.first_col = P;
        piece.last_col = P + n - 1;
        for (int a = 1; a <= n; ++a) {
            int col = P + a - 1;
            WallColumn c = y.col(col);
            auto L = spin_part_letter(t, c);
            piece.letters.push_back(L ? *L : 0);
            auto yb = column_blocks(y, col, true);
            piece.base_cells.push_back(0);
            piece.added.emplace_back(yb.begin() + 1, yb.end()); // drop the ground half block
        }
        out.parts.push_back(std::move(piece));
    }

    // (C1) triggers and the (a;p,q) triangle pieces of every adjacent pair.
    for (size_t pk = 0; pk + 1 < out.parts.size(); ++pk) {
        const WallPartPiece& left = out.parts[pk];
        const WallPartPiece& right = out.parts[pk + 1];
        for (int p = 1; p <= (int)left.letters.size(); ++p) {
            Letter a = left.letters[p - 1];
            if (a <= 0) continue;
            for (int q = 1; q < p && q <= (int)right.letters.size(); ++q) {
                if (right.letters[q - 1] != -a) continue;
                TrianglePiece tri;
                tri.a = a;
                tri.p = p;
                tri.q = q;
                int top = a + p - q - 1;
                auto rows_of = [&](const WallPartPiece& part, int colidx, bool added_only) {
                    std::vector<std::pair<int, int>> rows;
                    int col = part.first_col + colidx - 1;
                    auto blocks = added_only ? part.added[colidx - 1] : column_blocks(y, col, true);
                    for (const auto& b : blocks)
                        rows.emplace_back(block_row(b, part.base_cells[colidx - 1]), b.color);
                    return rows;
                };
                auto clip = [&](std::vector<std::pair<int, int>> rows, int lo, int hi) {
                    std::vector<std::pair<int, int>> out2;
                    for (auto [r, c] : rows)
                        if (r >= lo && r <= hi) out2.emplace_back(r, c);
                    std::sort(out2.begin(), out2.end());
                    out2.erase(std::unique(out2.begin(), out2.end()), out2.end());
                    return out2;
                };
                // left side: columns y^q .. y^{p-2}, added blocks only
                for (int c = q; c <= p - 2 && c <= (int)left.letters.size(); ++c) {
                    int lo = a + (c - q);
                    tri.left_minus.push_back(clip(rows_of(left, c, true), lo, top));
                    tri.left_plus.push_back(clip(rows_of(left, c, true), 2 * n - top, 2 * n - lo));
                }
                // right side: columns y^q .. y^{p-1}, full content
                for (int c = q; c <= p - 1 && c <= (int)right.letters.size(); ++c) {
                    int lo = a + (c - q);
                    tri.right_minus.push_back(clip(rows_of(right, c, false), lo, top));
                    tri.right_plus.push_back(clip(rows_of(right, c, false), 2 * n - top, 2 * n - lo));
                }
                out.triangles.push_back(std::move(tri));
            }
        }
    }
    return out;
}

namespace {

// Reflect a family of per-column row sets along row n and pack blocks to the
// right; containment means every (column index, row) of plus survives.
bool reflect_contains(int n, const std::vector<std::vector<int>>& minus_rows,
                      const std::vector<std::vector<int>>& plus_rows) {
    std::map<int, int> packed; // row -> count of reflected blocks
    for (const auto& colrows : minus_rows)
        for (int r : colrows) ++packed[2 * n - r];
    for (size_t c = 0; c < plus_rows.size(); ++c)
        for (int r : plus_rows[c]) {
            auto it = packed.find(r);
            if (it == packed.end() || it->second < (int)c + 1) return false;
        }
    return true;
}

} // namespace

std::vector<std::vector<Letter>> wall_tableau_columns(const LieType& t, const WallDecomposition& d) {
    std::vector<std::vector<Letter>> cols;
    for (const auto& part : d.parts) {
        if (part.omega == 0) {
            std::vector<Letter> sp;
            std::set<int> barred;
            for (Letter L : part.letters)
                if (L != 0) { sp.push_back(L); barred.insert(-L); }
            for (int j = 1; j <= t.rank; ++j)
                if (!barred.count(j)) sp.push_back(j);
            if ((int)sp.size() != t.rank) throw std::runtime_error("spin letters are not distinct");
            std::sort(sp.begin(), sp.end(), [&](Letter a, Letter b) { return letter_lt(t, a, b); });
            cols.push_back(sp);
        } else {
            std::vector<Letter> col(part.letters.rbegin(), part.letters.rend());
            cols.push_back(col);
        }
    }
    return cols;
}

bool check_Y1(const YoungWall& y, const Weight& lam) {
    WallDecomposition d = decompose(y, lam);
    int n = y.type.rank;
    for (const auto& part : d.parts) {
        if (part.omega == 0) continue;
        std::vector<std::vector<int>> minus_rows, plus_rows;
        for (size_t c = 0; c < part.added.size(); ++c) {
            std::vector<int> mr, pr;
            for (const auto& b : part.added[c]) {
                int r = block_row(b, part.base_cells[c]);
                if (r <= n - 1) mr.push_back(r);
                if (r >= n + 1) pr.push_back(r);
            }
            std::sort(mr.begin(), mr.end());
            mr.erase(std::unique(mr.begin(), mr.end()), mr.end());
            std::sort(pr.begin(), pr.end());
            pr.erase(std::unique(pr.begin(), pr.end()), pr.end());
            minus_rows.push_back(mr);
            plus_rows.push_back(pr);
        }
        if (!reflect_contains(n, minus_rows, plus_rows)) return false;
    }
    return true;
}

bool check_Y2(const YoungWall& y, const Weight& lam) {
    WallDecomposition d = decompose(y, lam);
    auto cols = wall_tableau_columns(y.type, d);
    for (size_t c = 0; c + 1 < cols.size(); ++c) {
        const auto& L = cols[c];
        const auto& R = cols[c + 1];
        for (int r = 1; r <= (int)L.size(); ++r) {
            Letter u = L[L.size() - r], v = R[R.size() - r];
            if (!letter_le(y.type, u, v)) return false;
        }
    }
    return true;
}

bool check_Y3(const YoungWall& y, const Weight& lam) {
    WallDecomposition d = decompose(y, lam);
    auto cols = wall_tableau_columns(y.type, d);
    for (size_t c = 0; c + 1 < cols.size(); ++c)
        if (!check_2cc1(y.type, cols[c], cols[c + 1], true)) return false;
    return true;
}

bool check_Y4(const YoungWall& y, const Weight& lam) {
    WallDecomposition d = decompose(y, lam);
    int n = y.type.rank;
    for (const auto& tri : d.triangles) {
        auto strip = [](const std::vector<std::vector<std::pair<int, int>>>& rc) {
            std::vector<std::vector<int>> rows;
            for (const auto& col : rc) {
                std::vector<int> r;
                for (auto [row, color] : col) r.push_back(row);
                rows.push_back(r);
            }
            return rows;
        };
        if (!reflect_contains(n, strip(tri.left_minus), strip(tri.left_plus))) return false;
        if (!reflect_contains(n, strip(tri.right_minus), strip(tri.right_plus))) return false;
    }
    return true;
}

YoungWall parse_wall(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    YoungWall y;
    bool have_type = false, have_ground = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "type") {
            std::string fam;
            int rank;
            ls >> fam >> rank;
            y.type = parse_type(fam, rank);
            have_type = true;
        } else if (tok == "ground") {
            std::string g;
            ls >> g;
            if (g == "spin") y.ground = WallGround::spin;
            else if (g == "saw0") y.ground = WallGround::saw0;
            else if (g == "saw1") y.ground = WallGround::saw1;
            else throw std::invalid_argument("parse_wall: unknown ground '" + g + "'");
            have_ground = true;
        } else if (tok == "col") {
            if (!have_type || !have_ground) throw std::invalid_argument("parse_wall: col before type/ground");
            int k = (int)y.cols.size();
            std::string g;
            ls >> g;
            if (g.rfind("ground:", 0) != 0) throw std::invalid_argument("parse_wall: missing ground count");
            int gcount = std::stoi(g.substr(7));
            if (gcount != 1) throw std::invalid_argument("parse_wall: ground count must be 1");
            std::vector<std::pair<int, char>> toks;
            while (ls >> tok) {
                auto pos = tok.find(':');
                if (pos == std::string::npos) throw std::invalid_argument("parse_wall: bad token " + tok);
                toks.emplace_back(std::stoi(tok.substr(0, pos)), tok.substr(pos + 1)[0]);
            }
            // replay the tokens against the column pattern
            WallColumn c{0, ColPartial::none};
            size_t j = 0;
            auto fail = [&]() { throw std::invalid_argument("parse_wall: tokens do not follow the pattern"); };
            while (j < toks.size()) {
                Cell cell = y.cell_at(k, c.cells);
                if (cell.kind == CellKind::tcell) {
                    if (toks[j].second != 't' || (toks[j].first != 0 && toks[j].first != 1)) fail();
                    int first = toks[j].first;
                    ++j;
                    if (j < toks.size() && toks[j].second == 't') {
                        if (toks[j].first != 1 - first) fail();
                        ++j;
                        c = {c.cells + 1, ColPartial::none};
                    } else {
                        if (j != toks.size()) fail();
                        c = {c.cells, first == 0 ? ColPartial::t0 : ColPartial::t1};
                    }
                } else if (cell.kind == CellKind::ncell) {
                    if (toks[j].second != 'h' || toks[j].first != y.type.rank) fail();
                    ++j;
                    if (j < toks.size() && toks[j].second == 'h') {
                        if (toks[j].first != y.type.rank) fail();
                        ++j;
                        c = {c.cells + 1, ColPartial::none};
                    } else {
                        if (j != toks.size()) fail();
                        c = {c.cells, ColPartial::nlow};
                    }
                } else {
                    if (toks[j].second != 'u' || toks[j].first != cell.color) fail();
                    ++j;
                    c = {c.cells + 1, ColPartial::none};
                }
            }
            // the single ground block must open the column correctly
            auto blocks = [&]() {
                YoungWall probe = y;
                while ((int)probe.cols.size() <= k) probe.cols.push_back(ground_state(probe, (int)probe.cols.size()));
                probe.cols[k] = c;
                return column_blocks(probe, k, true);
            }();
            if (blocks.empty()) throw std::invalid_argument("parse_wall: empty column");
            if ((int)blocks.size() != (int)toks.size()) fail();
            for (size_t b = 0; b < blocks.size(); ++b) {
                char shape = blocks[b].half_width ? 't' : (blocks[b].hi_hu - blocks[b].lo_hu == 1 ? 'h' : 'u');
                if (blocks[b].color != toks[b].first || shape != toks[b].second) fail();
            }
            y.cols.push_back(c);
        } else {
            throw std::invalid_argument("parse_wall: unknown directive '" + tok + "'");
        }
    }
    if (!have_type || !have_ground) throw std::invalid_argument("parse_wall: missing header");
    trim(y);
    if (!y.is_valid()) throw std::invalid_argument("parse_wall: wall is not a valid proper wall");
    return y;
}

std::string print_wall(const YoungWall& y) {
    std::ostringstream os;
    os << "type " << char(y.type.family) << " " << y.type.rank << "\n";
    os << "ground ";
    switch (y.ground) {
        case WallGround::spin: os << "spin"; break;
        case WallGround::saw0: os << "saw0"; break;
        case WallGround::saw1: os << "saw1"; break;
    }
    os << "\n";
    for (int k = 0; k < (int)y.cols.size(); ++k) {
        os << "col ground:1";
        for (const auto& b : column_blocks(y, k, true)) {
            char shape = b.half_width ? 't' : (b.hi_hu - b.lo_hu == 1 ? 'h' : 'u');
            os << " " << b.color << ":" << shape;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace crystal
