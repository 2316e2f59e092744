#ifndef CRYSTAL_YOUNG_WALL_HPP
#define CRYSTAL_YOUNG_WALL_HPP

#include <optional>
#include <string>
#include <vector>

#include "crystal/rev_tableau.hpp"

namespace crystal {

// Young walls for B_n^(1).  Blocks: colors 0 and 1 are half-width (the two
// halves of one unit cell, no stacking order between them), colors
// 2..n-1 unit cubes, color n half-height.  Every column follows one cyclic
// pattern; one cycle holds exactly one delta-column: one 0, one 1, two of
// each 2..n-1 and two n-blocks.
//
// Ground-state walls shipped as descriptors:
//   spin     - one lower half-height n-block in every column (level-1 spin
//              weight); used when lambda has an odd lambda_n coefficient.
//   saw0/saw1- one 0/1 half-width block in column 0, colors alternating
//              leftward; used for integral lambda.
enum class WallGround : char { spin = 's', saw0 = '0', saw1 = '1' };

enum class ColPartial : char { none = 'n', nlow = 'h', t0 = '0', t1 = '1' };

struct WallColumn {
    int cells = 0;            // complete unit cells above the base line
    ColPartial partial = ColPartial::none;

    friend bool operator==(const WallColumn& a, const WallColumn& b) {
        return a.cells == b.cells && a.partial == b.partial;
    }
};

enum class CellKind : char { tcell = 't', ncell = 'n', unit = 'u' };

struct Cell {
    CellKind kind;
    int color; // unit color; unused otherwise
};

struct YoungWall {
    LieType type;        // family B
    WallGround ground = WallGround::spin;
    std::vector<WallColumn> cols; // column 0 is the rightmost; trailing ground columns trimmed

    // Pattern cell at index c of column k (k matters only for saw grounds).
    Cell cell_at(int k, int c) const;
    int ground_tri_color(int k) const; // saw grounds: color of the ground half-width block

    WallColumn col(int k) const; // ground state beyond the active prefix
    int active_columns() const { return (int)cols.size(); }

    // Heights in half units.
    int extent_hu(int k) const;
    int covered_hu(int k) const; // full-depth coverage (half-width partials do not count)

    bool is_full(int k) const;
    bool is_proper() const;
    bool is_valid() const; // pattern + support + proper

    Weight weight() const; // classical weight: Lambda_cl - sum k_i alpha_i
    std::string key() const;

    int eps(int i) const; // colors 0..n
    int phi(int i) const;
    std::optional<YoungWall> e(int i) const;
    std::optional<YoungWall> f(int i) const;

    friend bool operator==(const YoungWall& a, const YoungWall& b) {
        return a.type == b.type && a.ground == b.ground && a.cols == b.cols;
    }
};

// Per-column reduced signature data: surviving symbols with their columns.
struct WallSignature {
    std::vector<Sym> syms;
    std::vector<int> columns;
};

WallSignature wall_signature(const YoungWall& y, int i);

bool is_reduced(const YoungWall& y);

// Ground-state wall for lambda: spin ground when the lambda_n coefficient is
// odd, otherwise a sawtooth anchored so the letter-1 column carries a 0-block.
YoungWall ground_wall(const LieType& t, const Weight& lam);

// Highest-weight wall of the lambda component (built directly; tests confirm
// it is killed by every classical e_i).
YoungWall highest_wall(const LieType& t, const Weight& lam);

// Repeatedly apply classical e_i (smallest color first).
YoungWall e_saturate(const YoungWall& y);

// ---- decomposition machinery (Prop 2.9) ----

struct WallBlock {
    int color;
    int lo_hu, hi_hu; // vertical span in half units
    bool half_width;
};

struct WallPartPiece {
    int omega = 0;                 // part index i_k, or 0 for the spin part
    int first_col = 0, last_col = 0; // wall column range (inclusive)
    std::vector<int> base_cells;     // per column: cell count of the highest-weight wall
    std::vector<std::vector<WallBlock>> added; // per column, bottom to top
    std::vector<Letter> letters;     // Step 1 / Step 2 letter per column (y^1 first)
};

struct TrianglePiece {
    int a = 0, p = 0, q = 0; // (C1) trigger
    // (row, color) sets per column starting at y^q, rows from the part base
    using RowColors = std::vector<std::pair<int, int>>;
    std::vector<RowColors> left_minus, left_plus;
    std::vector<RowColors> right_minus, right_plus;
};

struct WallDecomposition {
    std::vector<WallPartPiece> parts; // omega parts right to left, then the spin part if present
    bool has_spin = false;
    std::vector<TrianglePiece> triangles; // one per (C1) trigger of each adjacent pair
};

WallDecomposition decompose(const YoungWall& y, const Weight& lam);

// Step 1 / Step 2 letter columns of the decomposition, one per part (top to
// bottom entries; the spin part arrives sorted), left to right.
std::vector<std::vector<Letter>> wall_tableau_columns(const LieType& t, const WallDecomposition& d);

bool check_Y1(const YoungWall& y, const Weight& lam);
bool check_Y2(const YoungWall& y, const Weight& lam);
bool check_Y3(const YoungWall& y, const Weight& lam);
bool check_Y4(const YoungWall& y, const Weight& lam);

// Fixture file format: "type B n", "ground spin|saw0|saw1", then one line per
// column: "col ground:<count> <color>:<shape>..." bottom to top, shapes
// u/h/t.  parse . print is the identity on canonical files.
YoungWall parse_wall(const std::string& text);
std::string print_wall(const YoungWall& y);

} // namespace crystal

#endif
