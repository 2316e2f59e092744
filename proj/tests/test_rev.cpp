#include "doctest.h"

#include "crystal/graph.hpp"
#include "crystal/rev_tableau.hpp"

using namespace crystal;

namespace {

std::vector<int> colors(const LieType& t) {
    std::vector<int> c;
    for (int i = 1; i <= t.rank; ++i) c.push_back(i);
    return c;
}

} // namespace

TEST_CASE("gry_shape and the omega decomposition") {
    LieType b4(Family::B, 4);
    Weight lam = weight_from_coeffs(b4, {0, 1, 1, 1}); // omega_2 + omega_3 + lambda_4
    auto d = gry_shape(b4, lam);
    CHECK(d.rows == std::vector<Rat>{Rat(5, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)});
    CHECK(gry_weight(d) == lam);

    CHECK(gry_shape(b4, zero_weight(b4)).rows == std::vector<Rat>(4, Rat(0)));

    LieType b3(Family::B, 3);
    CHECK(gry_shape(b3, fundamental(b3, 3)).rows == std::vector<Rat>(3, Rat(1, 2)));

    auto dec = omega_decompose(b4, lam);
    CHECK(dec.parts == std::vector<int>{2, 3});
    CHECK(dec.b_spin == 1);

    auto dec2 = omega_decompose(b4, weight_from_coeffs(b4, {0, 0, 1, 3})); // omega_3+omega_4+lambda_4
    CHECK(dec2.parts == std::vector<int>{3, 4});
    CHECK(dec2.b_spin == 1);

    LieType d4(Family::D, 4);
    CHECK(omega_decompose(d4, weight_from_coeffs(d4, {0, 0, 2, 0})).parts == std::vector<int>{5});
    CHECK(omega_decompose(d4, weight_from_coeffs(d4, {0, 0, 1, 1})).parts == std::vector<int>{3});
    auto dm = omega_decompose(d4, weight_from_coeffs(d4, {0, 0, 0, 1}));
    CHECK(dm.parts.empty());
    CHECK(dm.b2 == 1);
}

TEST_CASE("one column condition") {
    LieType b3(Family::B, 3);
    CHECK_FALSE(check_1cc(b3, {1, -1}));     // 1 + (2-2+1) = 2 > 1
    CHECK(check_1cc(b3, {3, 0, -3}));        // 1 + (3-3+1) = 2 <= 3
    CHECK(check_1cc(b3, {2, 0}));            // no (a, abar) pair
    CHECK_FALSE(check_1cc(b3, {1, 2, -1}));  // 1 + (3-3+1) = 2 > 1
}

TEST_CASE("first two column condition") {
    LieType b3(Family::B, 3);
    // a = 3 at row 3 of the left column, 3bar at row 1 of the right:
    // p - q = 2 > n - 3 = 0
    CHECK_FALSE(check_2cc1(b3, {3, 0, -3}, {1, 2, -3}, true));
    // a = 1 at row 2, 1bar at row 1: 1 <= n - 1 = 2
    CHECK(check_2cc1(b3, {1, 2}, {2, -1}, true));
    // no cross (a, bbar) pairs
    CHECK(check_2cc1(b3, {1, 2}, {1, 2}, true));
    // the printed equal-letter form ignores mixed pairs
    CHECK(check_2cc1(b3, {2, 3}, {3, -1}, false));
}

TEST_CASE("second two column condition") {
    LieType b4(Family::B, 4);
    // trigger (a=2; p=3, q=2) with witness (2, 2bar) inside the right
    // column at rows (3,2): (p-r)+(s-q) = 0 >= b-a = 0
    CHECK_FALSE(check_2cc2(b4, {1, 2, 3, 4}, {1, 2, -2, -1}));
    // trigger (a=1; p=4, q=1) with witness (3, 3bar) at rows (4,1):
    // 0 + 0 = 0 < 3 - 1
    CHECK(check_2cc2(b4, {1, 2, 3, 4}, {3, 0, -3, -1}));
    // no trigger at all
    CHECK(check_2cc2(b4, {1, 2}, {1, 2}));
}

TEST_CASE("third two column condition (D)") {
    LieType d4(Family::D, 4);
    // even configuration (3, 4, 4, 3bar) at (p,q,r,s) = (2,2,1,1):
    // q(3) = p - s = 1 >= n - a = 1
    CHECK_FALSE(check_2cc3(d4, {3, 4}, {4, -3}));
    // mixed middles with even spread form no configuration
    CHECK(check_2cc3(d4, {3, -4}, {4, -3}));
    // no n letters at all
    CHECK(check_2cc3(d4, {1, 2}, {2, -1}));
    // the degenerate a = n pattern: identical nbar-over-n steps
    CHECK_FALSE(check_2cc3(d4, {-4, 4}, {-4, 4}));
}

TEST_CASE("t_valid on the paper tableaux") {
    LieType b4(Family::B, 4);
    Weight w3 = weight_from_coeffs(b4, {0, 0, 1, 0});
    CHECK(t_valid(b4, w3, rev_from_external(b4, w3, {{2, 3, 0}}, std::nullopt)));

    Weight w38 = weight_from_coeffs(b4, {0, 1, 1, 1});
    SpinColumn sp{b4, {1, -1, -1, -1}};
    CHECK(t_valid(b4, w38, rev_from_external(b4, w38, {{3, 4}, {2, 0, 0}}, sp)));
    // as misprinted in the source example, the bottom row (3bar, 0, 2bar)
    // fails the weak row increase
    CHECK_FALSE(t_valid(b4, w38, rev_from_external(b4, w38, {{3, -3}, {2, 0, 0}}, sp)));
}

TEST_CASE("enumerate_t counts against the dimension oracle") {
    LieType b3(Family::B, 3);
    auto spin = enumerate_t(b3, fundamental(b3, 3));
    CHECK(spin.size() == 8);
    for (const auto& t : spin) CHECK(t.spin.has_value());

    LieType b2(Family::B, 2);
    CHECK(enumerate_t(b2, fundamental(b2, 1)).size() == 5);
    CHECK(enumerate_t(b2, zero_weight(b2)).size() == 1);

    LieType a2(Family::A, 2);
    CHECK(enumerate_t(a2, weight_from_coeffs(a2, {1, 1})).size() == 8);
}

TEST_CASE("exactly one element of T(lambda) is killed by every e_i") {
    for (auto [t, c] : std::vector<std::pair<LieType, std::vector<long>>>{
             {LieType(Family::B, 2), {1, 1}},
             {LieType(Family::C, 2), {2, 0}},
             {LieType(Family::A, 2), {1, 1}},
             {LieType(Family::D, 4), {0, 0, 1, 1}}}) {
        Weight lam = weight_from_coeffs(t, c);
        size_t killed = 0;
        for (const auto& x : enumerate_t(t, lam)) {
            bool hw = true;
            for (int i = 1; i <= t.rank; ++i)
                if (x.e(i)) hw = false;
            killed += hw;
            if (hw) CHECK(x.key() == highest_rev(t, lam).key());
        }
        CHECK(killed == 1);
    }
}

TEST_CASE("closure of t_valid under the crystal operators") {
    for (auto [t, c] : std::vector<std::pair<LieType, std::vector<long>>>{
             {LieType(Family::B, 2), {1, 1}},
             {LieType(Family::B, 3), {0, 0, 1}},
             {LieType(Family::D, 4), {0, 0, 2, 0}}}) {
        Weight lam = weight_from_coeffs(t, c);
        for (const auto& m : enumerate_t(t, lam)) {
            for (int i = 1; i <= t.rank; ++i) {
                if (auto d = m.f(i)) CHECK(t_valid(t, lam, *d));
                if (auto u = m.e(i)) CHECK(t_valid(t, lam, *u));
            }
        }
        CHECK(generate_component(highest_rev(t, lam), colors(t)).size() == enumerate_t(t, lam).size());
    }
}

TEST_CASE("reading word of the omega_2+omega_3+lambda_4 example") {
    LieType b4(Family::B, 4);
    Weight w38 = weight_from_coeffs(b4, {0, 1, 1, 1});
    SpinColumn sp{b4, {1, -1, -1, -1}};
    RevTableau t38 = rev_from_external(b4, w38, {{3, 4}, {2, 0, 0}}, sp);
    Word w = t38.reading();
    REQUIRE(w.size() == 6);
    CHECK(w[0].is_spin); // the spin column is the first tensor factor
    CHECK(w[1].letter == 2);
    CHECK(w[2].letter == 0);
    CHECK(w[3].letter == 0);
    CHECK(w[4].letter == 3);
    CHECK(w[5].letter == 4);
}

TEST_CASE("D mirrored weights relabel n and nbar") {
    LieType d4(Family::D, 4);
    Weight lam = weight_from_coeffs(d4, {0, 0, 2, 0}); // 2 lambda_3, last coordinate negative
    RevTableau h = highest_rev(d4, lam);
    CHECK(h.mirrored);
    CHECK(h.weight() == lam);
    CHECK(h.key() == "T[1,2,3,-4]");
    auto all = enumerate_t(d4, lam);
    CHECK(all.size() == 35);
    for (const auto& m : all) CHECK(t_valid(d4, lam, m));
}
