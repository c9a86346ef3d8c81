#pragma once

/**
 * @file words.hpp
 * @brief The Fibonacci word over {a, b} and its palindromic prefixes.
 *
 * The word is the limit of f_1 = "a", f_2 = "ab", f_i = f_{i-1} f_{i-2};
 * |f_i| = F_{i+1} in the usual Fibonacci numbering F_0 = 0, F_1 = 1.
 * The prefixes of length F_{n+2} - 2 (n >= 2) are palindromes and obey
 * the concatenation laws checked by verify_phi_recursion.
 */

#include <dio/rational.hpp>

#include <cstddef>
#include <string>

namespace dio {

using Word = std::string;  // letters 'a' and 'b'

/// F_m with F_0 = 0, F_1 = 1.
Int fibonacci_number(std::size_t m);

/// First `length` letters of the Fibonacci word; length >= 1.
Word fibonacci_word_prefix(std::size_t length);

/// Palindromic prefix of length F_{n+2} - 2; n >= 2.
Word phi_prefix(std::size_t n);

/// Checks phi_n == phi_{n-1} + sep + phi_{n-2} with sep = "ab" for even
/// n, "ba" for odd n; n >= 4.
bool verify_phi_recursion(std::size_t n);

bool is_palindrome(const Word& w);

}  // namespace dio
