#ifndef CRYSTAL_SIGNATURE_HPP
#define CRYSTAL_SIGNATURE_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace crystal {

enum class Sym : char { plus = '+', minus = '-' };

struct ReducedSignature {
    std::vector<Sym> syms;          // minus^a plus^b
    std::vector<size_t> origin;     // index of each survivor in the input
    int minus_count = 0;
    int plus_count = 0;

    // Input position of the rightmost surviving minus / leftmost surviving
    // plus, or npos when there is none.
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t rightmost_minus() const { return minus_count ? origin[minus_count - 1] : npos; }
    size_t leftmost_plus() const { return plus_count ? origin[minus_count] : npos; }
};

// Cancel all adjacent (+,-) pairs.  A stack scan: a '-' eats the most recent
// uncancelled '+', which is the unique normal form of the rewriting.
inline ReducedSignature reduce_signature(const std::vector<Sym>& seq) {
    ReducedSignature out;
    std::vector<size_t> stack; // positions of surviving '+'
    std::vector<size_t> minuses;
    for (size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] == Sym::plus) {
            stack.push_back(k);
        } else if (!stack.empty()) {
            stack.pop_back();
        } else {
            minuses.push_back(k);
        }
    }
    out.minus_count = (int)minuses.size();
    out.plus_count = (int)stack.size();
    for (size_t k : minuses) { out.syms.push_back(Sym::minus); out.origin.push_back(k); }
    for (size_t k : stack) { out.syms.push_back(Sym::plus); out.origin.push_back(k); }
    return out;
}

} // namespace crystal

#endif
