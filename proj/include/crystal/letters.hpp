#ifndef CRYSTAL_LETTERS_HPP
#define CRYSTAL_LETTERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "crystal/lie.hpp"

namespace crystal {

// A letter of the vector-representation alphabet, packed as an int:
// k > 0 is the unbarred letter k, k < 0 is the barred letter |k|, 0 is the
// zero letter of type B.  Type A uses 1..n+1, unbarred only.
using Letter = int;

std::string letter_str(Letter x);
Letter parse_letter(const std::string& s);

bool letter_in_alphabet(const LieType& t, Letter x);
std::vector<Letter> alphabet(const LieType& t);

Weight letter_weight(const LieType& t, Letter x);

// Kashiwara operators on the vector representation.
std::optional<Letter> letter_f(const LieType& t, int i, Letter x);
std::optional<Letter> letter_e(const LieType& t, int i, Letter x);

// String lengths eps_i / phi_i (0,1 or 2; the B chain passes through 0).
int letter_eps(const LieType& t, int i, Letter x);
int letter_phi(const LieType& t, int i, Letter x);

// Strict order of the alphabet.  For D the pair {n, nbar} is incomparable:
// letter_lt returns false both ways and letter_comparable reports it.
bool letter_lt(const LieType& t, Letter x, Letter y);
bool letter_le(const LieType& t, Letter x, Letter y);
bool letter_comparable(const LieType& t, Letter x, Letter y);

// Spin column of type B_n or D_n: sign +1 at j means the letter j is
// present, -1 means j bar; weight is half the sign vector.
struct SpinColumn {
    LieType type;
    std::vector<int> signs; // size n, entries +1 / -1

    std::string str() const;            // "+-+"
    std::vector<Letter> letters() const; // entries top to bottom
    Weight weight() const;
    int minus_parity() const;           // # of -1 mod 2 (D component tag)

    friend bool operator==(const SpinColumn& a, const SpinColumn& b) {
        return a.type == b.type && a.signs == b.signs;
    }
};

std::optional<SpinColumn> spin_f(int i, const SpinColumn& s);
std::optional<SpinColumn> spin_e(int i, const SpinColumn& s);
int spin_eps(int i, const SpinColumn& s);
int spin_phi(int i, const SpinColumn& s);

} // namespace crystal

#endif
