#include "crystal/word.hpp"

namespace crystal {

int factor_eps(const LieType& t, int i, const Factor& b) {
    return b.is_spin ? spin_eps(i, b.spin) : letter_eps(t, i, b.letter);
}

int factor_phi(const LieType& t, int i, const Factor& b) {
    return b.is_spin ? spin_phi(i, b.spin) : letter_phi(t, i, b.letter);
}

std::optional<Factor> factor_e(const LieType& t, int i, const Factor& b) {
    if (b.is_spin) {
        auto r = spin_e(i, b.spin);
        if (!r) return std::nullopt;
        return Factor::of_spin(*r);
    }
    auto r = letter_e(t, i, b.letter);
    if (!r) return std::nullopt;
    return Factor::of_letter(*r);
}

std::optional<Factor> factor_f(const LieType& t, int i, const Factor& b) {
    if (b.is_spin) {
        auto r = spin_f(i, b.spin);
        if (!r) return std::nullopt;
        return Factor::of_spin(*r);
    }
    auto r = letter_f(t, i, b.letter);
    if (!r) return std::nullopt;
    return Factor::of_letter(*r);
}

Weight factor_weight(const LieType& t, const Factor& b) {
    return b.is_spin ? b.spin.weight() : letter_weight(t, b.letter);
}

std::vector<Sym> word_signature(const LieType& t, int i, const Word& w) {
    std::vector<Sym> seq;
    for (const Factor& b : w) {
        int eps = factor_eps(t, i, b);
        int phi = factor_phi(t, i, b);
        for (int k = 0; k < eps; ++k) seq.push_back(Sym::minus);
        for (int k = 0; k < phi; ++k) seq.push_back(Sym::plus);
    }
    return seq;
}

int word_eps(const LieType& t, int i, const Word& w) {
    return reduce_signature(word_signature(t, i, w)).minus_count;
}

int word_phi(const LieType& t, int i, const Word& w) {
    return reduce_signature(word_signature(t, i, w)).plus_count;
}

Weight word_weight(const LieType& t, const Word& w) {
    Weight s = zero_weight(t);
    for (const Factor& b : w) s = add(s, factor_weight(t, b));
    return s;
}

std::optional<std::pair<Word, size_t>> word_apply(const LieType& t, Op op, int i, const Word& w) {
    // Rebuild the signature remembering which factor each symbol comes from.
    std::vector<Sym> seq;
    std::vector<size_t> owner;
    for (size_t j = 0; j < w.size(); ++j) {
        int eps = factor_eps(t, i, w[j]);
        int phi = factor_phi(t, i, w[j]);
        for (int k = 0; k < eps; ++k) { seq.push_back(Sym::minus); owner.push_back(j); }
        for (int k = 0; k < phi; ++k) { seq.push_back(Sym::plus); owner.push_back(j); }
    }
    ReducedSignature red = reduce_signature(seq);
    size_t pos = (op == Op::e) ? red.rightmost_minus() : red.leftmost_plus();
    if (pos == ReducedSignature::npos) return std::nullopt;
    size_t j = owner[pos];
    auto nb = (op == Op::e) ? factor_e(t, i, w[j]) : factor_f(t, i, w[j]);
    if (!nb) return std::nullopt; // cannot happen on a well-formed signature
    Word out = w;
    out[j] = *nb;
    return std::make_pair(std::move(out), j);
}

} // namespace crystal
