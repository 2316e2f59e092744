#ifndef CRYSTAL_WORD_HPP
#define CRYSTAL_WORD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crystal/letters.hpp"
#include "crystal/signature.hpp"

namespace crystal {

// One tensor factor: a vector-representation letter or a whole spin column.
struct Factor {
    bool is_spin = false;
    Letter letter = 0;
    SpinColumn spin;

    static Factor of_letter(Letter x) { Factor f; f.is_spin = false; f.letter = x; return f; }
    static Factor of_spin(SpinColumn s) { Factor f; f.is_spin = true; f.spin = std::move(s); return f; }
};

using Word = std::vector<Factor>;

int factor_eps(const LieType& t, int i, const Factor& b);
int factor_phi(const LieType& t, int i, const Factor& b);
std::optional<Factor> factor_e(const LieType& t, int i, const Factor& b);
std::optional<Factor> factor_f(const LieType& t, int i, const Factor& b);
Weight factor_weight(const LieType& t, const Factor& b);

enum class Op : char { e = 'e', f = 'f' };

// The +- string of the word for color i: minus^eps plus^phi per factor,
// factors left to right.
std::vector<Sym> word_signature(const LieType& t, int i, const Word& w);

int word_eps(const LieType& t, int i, const Word& w);
int word_phi(const LieType& t, int i, const Word& w);
Weight word_weight(const LieType& t, const Word& w);

// Tensor-product rule: e acts at the rightmost surviving minus, f at the
// leftmost surviving plus, replacing exactly one factor.  Returns the new
// word and the index of the changed factor.
std::optional<std::pair<Word, size_t>> word_apply(const LieType& t, Op op, int i, const Word& w);

} // namespace crystal

#endif
