#ifndef CRYSTAL_REV_TABLEAU_HPP
#define CRYSTAL_REV_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "crystal/word.hpp"

namespace crystal {

// Generalized reverse Young diagram: row lengths l_1 >= l_2 >= ..., rows
// indexed bottom to top.  For D the last row may be negative.
struct GRYDiagram {
    LieType type;
    std::vector<Rat> rows;
};

GRYDiagram gry_shape(const LieType& t, const Weight& lam);
Weight gry_weight(const GRYDiagram& d);

// lambda = omega_{i_1} + ... + omega_{i_t} (+ spin leftovers).
struct OmegaDecomp {
    std::vector<int> parts; // i_1 <= ... <= i_t; for D values may reach n+1
    int b_spin = 0;         // B: coefficient of lambda_n (0 or 1)
    int b1 = 0, b2 = 0;     // D: leftover lambda_{n-1} / lambda_n
};

OmegaDecomp omega_decompose(const LieType& t, const Weight& lam);

// Tableau on a reverse diagram: full columns left to right with weakly
// increasing heights, bottom-justified, plus an optional spin half column on
// the right.  For D with l_n < 0 the element is stored on the n <-> nbar
// relabeled side and the flag is set; keys, text and weights show the
// relabeled (actual) form.
struct RevTableau {
    LieType type;
    bool mirrored = false;
    std::vector<std::vector<Letter>> cols; // entries top to bottom
    std::optional<SpinColumn> spin;

    Weight weight() const;
    int eps(int i) const;
    int phi(int i) const;
    std::optional<RevTableau> e(int i) const;
    std::optional<RevTableau> f(int i) const;
    std::string key() const;
    std::string text() const;

    // Reading word: spin column first, then full columns right to left, each
    // top to bottom (internal side).
    Word reading() const;

    friend bool operator==(const RevTableau& a, const RevTableau& b) {
        return a.type == b.type && a.mirrored == b.mirrored && a.cols == b.cols && a.spin == b.spin;
    }
};

// Build from entries as they print (applies the D relabeling internally when
// lam has negative last coordinate).
RevTableau rev_from_external(const LieType& t, const Weight& lam,
                             const std::vector<std::vector<Letter>>& cols,
                             const std::optional<SpinColumn>& spin);

struct TwoColOptions {
    bool cc1_min_form = true; // stronger min(a,b) form of (2CC-1)
};

// Per-column and per-pair conditions.  Columns are passed top to bottom;
// rows are counted bottom to top with the columns bottom-justified.
bool check_1cc(const LieType& t, const std::vector<Letter>& col);

// D only: a full column of height n sits on the 2 lambda_n side exactly when
// the number of barred entries outside the {n, nbar} run, plus one if that
// run ends in nbar, is even.  The lambda with l_n < 0 is handled by the
// relabeling, so valid tableaux use only this side.
bool d_height_n_side_ok(const LieType& t, const std::vector<Letter>& col);
bool check_2cc1(const LieType& t, const std::vector<Letter>& left, const std::vector<Letter>& right,
                bool min_form = true);
bool check_2cc2(const LieType& t, const std::vector<Letter>& left, const std::vector<Letter>& right);
bool check_2cc3(const LieType& t, const std::vector<Letter>& left, const std::vector<Letter>& right);

bool t_valid(const LieType& t, const Weight& lam, const RevTableau& tab, const TwoColOptions& opt = {});

std::vector<RevTableau> enumerate_t(const LieType& t, const Weight& lam,
                                    size_t cap = default_node_cap, const TwoColOptions& opt = {});

RevTableau highest_rev(const LieType& t, const Weight& lam);

} // namespace crystal

#endif
