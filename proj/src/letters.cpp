#include "crystal/letters.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystal {

std::string letter_str(Letter x) { return std::to_string(x); }

Letter parse_letter(const std::string& s) { return std::stoi(s); }

bool letter_in_alphabet(const LieType& t, Letter x) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return x >= 1 && x <= n + 1;
        case Family::B: return x == 0 || (x >= -n && x <= n);
        case Family::C:
        case Family::D: return x != 0 && x >= -n && x <= n;
    }
    return false;
}

std::vector<Letter> alphabet(const LieType& t) {
    int n = t.rank;
    std::vector<Letter> a;
    if (t.family == Family::A) {
        for (int k = 1; k <= n + 1; ++k) a.push_back(k);
        return a;
    }
    for (int k = 1; k <= n; ++k) a.push_back(k);
    if (t.family == Family::B) a.push_back(0);
    for (int k = n; k >= 1; --k) a.push_back(-k);
    return a;
}

Weight letter_weight(const LieType& t, Letter x) {
    Weight w = zero_weight(t);
    if (x > 0) w[x - 1] = Rat(1);
    else if (x < 0) w[-x - 1] = Rat(-1);
    return w;
}

std::optional<Letter> letter_f(const LieType& t, int i, Letter x) {
    int n = t.rank;
    if (i < 1 || i > n) throw std::out_of_range("letter_f: color out of range");
    switch (t.family) {
        case Family::A:
            if (x == i) return i + 1;
            return std::nullopt;
        case Family::B:
            if (i < n) {
                if (x == i) return i + 1;
                if (x == -(i + 1)) return -i;
                return std::nullopt;
            }
            if (x == n) return 0;
            if (x == 0) return -n;
            return std::nullopt;
        case Family::C:
            if (i < n) {
                if (x == i) return i + 1;
                if (x == -(i + 1)) return -i;
                return std::nullopt;
            }
            if (x == n) return -n;
            return std::nullopt;
        case Family::D:
            if (i <= n - 1) {
                if (x == i) return i + 1;
                if (x == -(i + 1)) return -i;
                return std::nullopt;
            }
            if (x == n - 1) return -n;
            if (x == n) return -(n - 1);
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Letter> letter_e(const LieType& t, int i, Letter x) {
    for (Letter y : alphabet(t)) {
        auto fy = letter_f(t, i, y);
        if (fy && *fy == x) return y;
    }
    return std::nullopt;
}

int letter_eps(const LieType& t, int i, Letter x) {
    int k = 0;
    Letter cur = x;
    while (true) {
        auto e = letter_e(t, i, cur);
        if (!e) return k;
        cur = *e;
        ++k;
    }
}

int letter_phi(const LieType& t, int i, Letter x) {
    int k = 0;
    Letter cur = x;
    while (true) {
        auto f = letter_f(t, i, cur);
        if (!f) return k;
        cur = *f;
        ++k;
    }
}

namespace {

// Position in the linear order; D gives {n, nbar} the same level.
int level(const LieType& t, Letter x) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return x;
        case Family::B:
            if (x > 0) return x;
            if (x == 0) return n + 1;
            return 2 * n + 2 + x; // x = -k -> 2n+2-k
        case Family::C:
            if (x > 0) return x;
            return 2 * n + 1 + x;
        case Family::D:
            if (x > 0) return x;
            return 2 * n + x; // x = -k -> 2n-k; nbar lands on level n like n
    }
    return 0;
}

} // namespace

bool letter_comparable(const LieType& t, Letter x, Letter y) {
    if (t.family == Family::D) {
        int n = t.rank;
        if ((x == n && y == -n) || (x == -n && y == n)) return false;
    }
    return true;
}

bool letter_lt(const LieType& t, Letter x, Letter y) {
    if (!letter_comparable(t, x, y)) return false;
    if (x == y) return false;
    return level(t, x) < level(t, y);
}

bool letter_le(const LieType& t, Letter x, Letter y) {
    return x == y || letter_lt(t, x, y);
}

std::string SpinColumn::str() const {
    std::string s;
    for (int v : signs) s += (v > 0 ? '+' : '-');
    return s;
}

std::vector<Letter> SpinColumn::letters() const {
    // Entries top to bottom: the column strictly increases downward, so sort
    // by alphabet level.  Within one spin column n and nbar never co-occur.
    std::vector<Letter> out;
    for (size_t j = 0; j < signs.size(); ++j)
        out.push_back(signs[j] > 0 ? (Letter)(j + 1) : -(Letter)(j + 1));
    std::sort(out.begin(), out.end(), [&](Letter a, Letter b) { return letter_lt(type, a, b); });
    return out;
}

Weight SpinColumn::weight() const {
    Weight w = zero_weight(type);
    for (size_t j = 0; j < signs.size(); ++j) w[j] = Rat(signs[j], 2);
    return w;
}

int SpinColumn::minus_parity() const {
    int m = 0;
    for (int v : signs) m += (v < 0);
    return m % 2;
}

std::optional<SpinColumn> spin_f(int i, const SpinColumn& s) {
    int n = s.type.rank;
    if (i < 1 || i > n) throw std::out_of_range("spin_f: color out of range");
    SpinColumn r = s;
    if (i < n) {
        if (s.signs[i - 1] > 0 && s.signs[i] < 0) { r.signs[i - 1] = -1; r.signs[i] = 1; return r; }
        return std::nullopt;
    }
    if (s.type.family == Family::B) {
        if (s.signs[n - 1] > 0) { r.signs[n - 1] = -1; return r; }
        return std::nullopt;
    }
    // D
    if (s.signs[n - 2] > 0 && s.signs[n - 1] > 0) { r.signs[n - 2] = -1; r.signs[n - 1] = -1; return r; }
    return std::nullopt;
}

std::optional<SpinColumn> spin_e(int i, const SpinColumn& s) {
    int n = s.type.rank;
    if (i < 1 || i > n) throw std::out_of_range("spin_e: color out of range");
    SpinColumn r = s;
    if (i < n) {
        if (s.signs[i - 1] < 0 && s.signs[i] > 0) { r.signs[i - 1] = 1; r.signs[i] = -1; return r; }
        return std::nullopt;
    }
    if (s.type.family == Family::B) {
        if (s.signs[n - 1] < 0) { r.signs[n - 1] = 1; return r; }
        return std::nullopt;
    }
    if (s.signs[n - 2] < 0 && s.signs[n - 1] < 0) { r.signs[n - 2] = 1; r.signs[n - 1] = 1; return r; }
    return std::nullopt;
}

int spin_eps(int i, const SpinColumn& s) { return spin_e(i, s) ? 1 : 0; }
int spin_phi(int i, const SpinColumn& s) { return spin_f(i, s) ? 1 : 0; }

} // namespace crystal
