#include "doctest.h"


#include <algorithm>
#include <tuple>
#include "crystal/graph.hpp"
#include "crystal/letters.hpp"

using namespace crystal;

namespace {

// Letter as a graph model.
struct LetterModel {
    LieType type;
    Letter x;
    Weight weight() const { return letter_weight(type, x); }
    std::optional<LetterModel> e(int i) const {
        auto r = letter_e(type, i, x);
        if (!r) return std::nullopt;
        return LetterModel{type, *r};
    }
    std::optional<LetterModel> f(int i) const {
        auto r = letter_f(type, i, x);
        if (!r) return std::nullopt;
        return LetterModel{type, *r};
    }
    std::string key() const { return letter_str(x); }
};

struct SpinModel {
    SpinColumn s;
    Weight weight() const { return s.weight(); }
    std::optional<SpinModel> e(int i) const {
        auto r = spin_e(i, s);
        if (!r) return std::nullopt;
        return SpinModel{*r};
    }
    std::optional<SpinModel> f(int i) const {
        auto r = spin_f(i, s);
        if (!r) return std::nullopt;
        return SpinModel{*r};
    }
    std::string key() const { return s.str(); }
};

std::vector<int> colors(const LieType& t) {
    std::vector<int> c;
    for (int i = 1; i <= t.rank; ++i) c.push_back(i);
    return c;
}

} // namespace

TEST_CASE("vector representation chains") {
    // B_3: f_3(3) = 0, f_3(0) = 3bar; f_2(1) absent
    LieType b3(Family::B, 3);
    CHECK(letter_f(b3, 3, 3) == 0);
    CHECK(letter_f(b3, 3, 0) == -3);
    CHECK_FALSE(letter_f(b3, 2, 1).has_value());

    // D_4: f_4(3) = 4bar
    LieType d4(Family::D, 4);
    CHECK(letter_f(d4, 4, 3) == -4);
    CHECK(letter_f(d4, 4, 4) == -3);

    // e is inverse to f wherever defined, per color
    for (LieType t : {LieType(Family::A, 3), LieType(Family::B, 3), LieType(Family::C, 3), d4}) {
        for (Letter x : alphabet(t))
            for (int i = 1; i <= t.rank; ++i)
                if (auto y = letter_f(t, i, x)) CHECK(letter_e(t, i, *y) == x);
    }
}

TEST_CASE("component of letter 1 is the full alphabet chain") {
    for (auto [fam, n, expect] : std::vector<std::tuple<Family, int, size_t>>{
             {Family::A, 3, 4}, {Family::B, 2, 5}, {Family::B, 3, 7}, {Family::C, 3, 6}, {Family::D, 4, 8}}) {
        LieType t(fam, n);
        auto g = generate_component(LetterModel{t, 1}, colors(t));
        CHECK(g.size() == expect);
        CHECK(g.highest.size() == 1);
    }
}

TEST_CASE("B_n chain edges match the vector representation graph") {
    for (int n : {2, 3, 4}) {
        LieType t(Family::B, n);
        Letter cur = 1;
        // 1 ->1 2 ->2 ... ->n-1 n ->n 0 ->n nbar ->n-1 ... ->1 1bar
        for (int i = 1; i < n; ++i) {
            auto nx = letter_f(t, i, cur);
            REQUIRE(nx.has_value());
            CHECK(*nx == i + 1);
            cur = *nx;
        }
        CHECK(letter_f(t, n, cur) == 0);
        CHECK(letter_f(t, n, 0) == -n);
        cur = -n;
        for (int i = n - 1; i >= 1; --i) {
            auto nx = letter_f(t, i, cur);
            REQUIRE(nx.has_value());
            CHECK(*nx == -i);
            cur = *nx;
        }
        // no other edges leave the chain endpoints
        for (int i = 1; i <= n; ++i) {
            CHECK_FALSE(letter_e(t, i, 1).has_value());
            CHECK_FALSE(letter_f(t, i, -1).has_value());
        }
    }
}

TEST_CASE("letter weights match the torus action") {
    LieType b3(Family::B, 3);
    CHECK(letter_weight(b3, 2)[1] == Rat(1));
    CHECK(letter_weight(b3, -2)[1] == Rat(-1));
    Weight z = letter_weight(b3, 0);
    for (auto& c : z) CHECK(c == Rat(0));
}

TEST_CASE("spin crystal structure") {
    LieType b3(Family::B, 3);
    SpinColumn top{b3, {1, 1, 1}};
    auto f3 = spin_f(3, top);
    REQUIRE(f3.has_value());
    CHECK(f3->signs == std::vector<int>{1, 1, -1});
    CHECK_FALSE(spin_f(1, top).has_value());

    auto g = generate_component(SpinModel{top}, colors(b3));
    CHECK(g.size() == 8); // 2^3

    LieType d4(Family::D, 4);
    SpinColumn dtop{d4, {1, 1, 1, 1}};
    auto f4 = spin_f(4, dtop);
    REQUIRE(f4.has_value());
    CHECK(f4->signs == std::vector<int>{1, 1, -1, -1});
    auto gd = generate_component(SpinModel{dtop}, colors(d4));
    CHECK(gd.size() == 8); // 2^{n-1} per parity class
    for (const auto& k : gd.keys) {
        int minus = (int)std::count(k.begin(), k.end(), '-');
        CHECK(minus % 2 == 0);
    }

    // e of f returns the original, all colors
    for (int mask = 0; mask < 16; ++mask) {
        SpinColumn s{d4, {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1, mask & 8 ? -1 : 1}};
        for (int i = 1; i <= 4; ++i)
            if (auto r = spin_f(i, s)) CHECK(*spin_e(i, *r) == s);
    }
}
