#ifndef CRYSTAL_KN_TABLEAU_HPP
#define CRYSTAL_KN_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "crystal/rev_tableau.hpp"
#include "crystal/word.hpp"

namespace crystal {

// Generalized Young diagram: row lengths top to bottom.
struct GYDiagram {
    LieType type;
    std::vector<Rat> rows;
};

GYDiagram gy_shape(const LieType& t, const Weight& lam);
Weight gy_weight(const GYDiagram& d);

// Kashiwara-Nakashima tableau: full columns left to right with weakly
// decreasing heights, top-justified; optional spin half column on the left.
// D with negative last row is stored relabeled, as in RevTableau.
struct KNTableau {
    LieType type;
    bool mirrored = false;
    std::vector<std::vector<Letter>> cols; // entries top to bottom
    std::optional<SpinColumn> spin;

    Weight weight() const;
    int eps(int i) const;
    int phi(int i) const;
    std::optional<KNTableau> e(int i) const;
    std::optional<KNTableau> f(int i) const;
    std::string key() const;
    std::string text() const;

    // Far-Eastern reading: columns right to left, top to bottom; the spin
    // column, being leftmost, is the final factor.
    Word reading() const;

    friend bool operator==(const KNTableau& a, const KNTableau& b) {
        return a.type == b.type && a.mirrored == b.mirrored && a.cols == b.cols && a.spin == b.spin;
    }
};

KNTableau kn_from_external(const LieType& t, const Weight& lam,
                           const std::vector<std::vector<Letter>>& cols,
                           const std::optional<SpinColumn>& spin);

// (a,b)/(a,n)/(n,n)-configurations of an adjacent pair; C is the left (and
// not shorter) column, entries top to bottom.  p,q,r,s are 1-based witness
// indices; for an (n,n)-configuration r,s are 0 and pval is 0.
struct KNConfiguration {
    int a, b;
    int p, q, r, s;
    int pval;
};

std::vector<KNConfiguration> find_configurations(const LieType& t, const std::vector<Letter>& C,
                                                 const std::vector<Letter>& Cp);

bool check_2cc(const LieType& t, const std::vector<Letter>& C, const std::vector<Letter>& Cp);

bool kn_valid(const LieType& t, const Weight& lam, const KNTableau& tab);

std::vector<KNTableau> enumerate_kn(const LieType& t, const Weight& lam,
                                    size_t cap = default_node_cap);

KNTableau highest_kn(const LieType& t, const Weight& lam);

} // namespace crystal

#endif
