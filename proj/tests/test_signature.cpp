#include "doctest.h"

#include <random>

#include "crystal/letters.hpp"
#include "crystal/signature.hpp"
#include "crystal/word.hpp"

using namespace crystal;

namespace {

// Independent oracle: delete one randomly chosen adjacent (+,-) pair at a
// time until none remains.
std::vector<Sym> reduce_oracle(std::vector<Sym> seq, std::mt19937& rng) {
    while (true) {
        std::vector<size_t> pairs;
        for (size_t k = 0; k + 1 < seq.size(); ++k)
            if (seq[k] == Sym::plus && seq[k + 1] == Sym::minus) pairs.push_back(k);
        if (pairs.empty()) return seq;
        size_t k = pairs[rng() % pairs.size()];
        seq.erase(seq.begin() + k, seq.begin() + k + 2);
    }
}

// Apply the tensor rule to a 2-factor grouping where the factors are
// themselves words, then flatten.
std::optional<Word> grouped_apply(const LieType& t, Op op, int i, const Word& a, const Word& b) {
    std::vector<Sym> seq;
    std::vector<int> owner;
    for (int which = 0; which < 2; ++which) {
        const Word& w = which ? b : a;
        int eps = word_eps(t, i, w), phi = word_phi(t, i, w);
        for (int k = 0; k < eps; ++k) { seq.push_back(Sym::minus); owner.push_back(which); }
        for (int k = 0; k < phi; ++k) { seq.push_back(Sym::plus); owner.push_back(which); }
    }
    ReducedSignature red = reduce_signature(seq);
    size_t pos = (op == Op::e) ? red.rightmost_minus() : red.leftmost_plus();
    if (pos == ReducedSignature::npos) return std::nullopt;
    Word a2 = a, b2 = b;
    if (owner[pos] == 0) {
        auto r = word_apply(t, op, i, a);
        REQUIRE(r.has_value());
        a2 = r->first;
    } else {
        auto r = word_apply(t, op, i, b);
        REQUIRE(r.has_value());
        b2 = r->first;
    }
    Word out = a2;
    out.insert(out.end(), b2.begin(), b2.end());
    return out;
}

bool same_word(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k].letter != b[k].letter) return false;
    return true;
}

} // namespace

TEST_CASE("reduce_signature examples") {
    auto r = reduce_signature({Sym::minus, Sym::plus, Sym::plus, Sym::minus});
    REQUIRE(r.syms == std::vector<Sym>{Sym::minus, Sym::plus});
    REQUIRE(r.origin == std::vector<size_t>{0, 1});

    REQUIRE(reduce_signature({}).syms.empty());

    auto r3 = reduce_signature({Sym::plus, Sym::plus, Sym::plus});
    REQUIRE(r3.plus_count == 3);
    REQUIRE(r3.minus_count == 0);
}

TEST_CASE("reduce_signature is confluent against the random-order oracle") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 10000; ++trial) {
        size_t len = rng() % 24;
        std::vector<Sym> seq;
        for (size_t k = 0; k < len; ++k) seq.push_back(rng() % 2 ? Sym::plus : Sym::minus);
        auto fast = reduce_signature(seq);
        auto slow = reduce_oracle(seq, rng);
        REQUIRE(fast.syms == slow);
    }
}

TEST_CASE("tensor_apply worked examples (B_2 letters)") {
    LieType b2(Family::B, 2);
    Word w{Factor::of_letter(1), Factor::of_letter(1)};
    auto f1 = word_apply(b2, Op::f, 1, w);
    REQUIRE(f1.has_value());
    CHECK(f1->first[0].letter == 2);
    CHECK(f1->first[1].letter == 1);
    CHECK(f1->second == 0);

    CHECK_FALSE(word_apply(b2, Op::e, 1, w).has_value());

    Word w2{Factor::of_letter(2), Factor::of_letter(-2)};
    CHECK_FALSE(word_apply(b2, Op::f, 2, w2).has_value());
}

TEST_CASE("tensor_apply agrees with both bracketings on all letter triples at rank <= 3") {
    std::vector<LieType> types{LieType(Family::A, 1), LieType(Family::A, 2), LieType(Family::A, 3),
                               LieType(Family::B, 2), LieType(Family::B, 3), LieType(Family::C, 2),
                               LieType(Family::C, 3)};
    for (const auto& t : types) {
        auto ab = alphabet(t);
        for (Letter x : ab)
            for (Letter y : ab)
                for (Letter z : ab)
                    for (int i = 1; i <= t.rank; ++i)
                        for (Op op : {Op::e, Op::f}) {
                            Word flat{Factor::of_letter(x), Factor::of_letter(y), Factor::of_letter(z)};
                            auto whole = word_apply(t, op, i, flat);
                            Word wx{Factor::of_letter(x)}, wy{Factor::of_letter(y)}, wz{Factor::of_letter(z)};
                            Word xy = wx;
                            xy.push_back(wy[0]);
                            Word yz = wy;
                            yz.push_back(wz[0]);
                            auto left = grouped_apply(t, op, i, xy, wz);
                            auto right = grouped_apply(t, op, i, wx, yz);
                            REQUIRE(whole.has_value() == left.has_value());
                            REQUIRE(whole.has_value() == right.has_value());
                            if (whole) {
                                CHECK(same_word(whole->first, *left));
                                CHECK(same_word(whole->first, *right));
                            }
                        }
    }
}
