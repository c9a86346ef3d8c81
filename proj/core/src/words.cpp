#include <dio/words.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dio {

Int fibonacci_number(std::size_t m) {
    Int prev = 0, cur = 1;  // F_0, F_1
    if (m == 0) return prev;
    for (std::size_t i = 1; i < m; ++i) {
        prev += cur;
        std::swap(prev, cur);
    }
    return cur;
}

Word fibonacci_word_prefix(std::size_t length) {
    if (length == 0) throw std::invalid_argument("fibonacci_word_prefix: length must be >= 1");
    Word prev = "b", cur = "a";  // f_0, f_1
    while (cur.size() < length) {
        Word next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(length);
    return cur;
}

Word phi_prefix(std::size_t n) {
    if (n < 2) throw std::invalid_argument("phi_prefix: n must be >= 2");
    Int len = fibonacci_number(n + 2) - 2;
    return fibonacci_word_prefix(len.get_ui());
}

bool verify_phi_recursion(std::size_t n) {
    if (n < 4) throw std::invalid_argument("verify_phi_recursion: n must be >= 4");
    const char* sep = n % 2 == 0 ? "ab" : "ba";
    return phi_prefix(n) == phi_prefix(n - 1) + sep + phi_prefix(n - 2);
}

bool is_palindrome(const Word& w) {
    return std::equal(w.begin(), w.begin() + w.size() / 2, w.rbegin());
}

}  // namespace dio
