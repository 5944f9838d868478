"""Shared brute-force oracles and frozen reference data.

The brute-force helpers deliberately avoid the library's own shortcuts
(prefix-sum tables, incremental state) so they can serve as independent
ground truth for small inputs.
"""

from itertools import combinations

import pytest


def all_words(n):
    """Every binary word of length n, as strings, ascending as integers."""
    if n == 0:
        return [""]
    return [format(x, f"0{n}b") for x in range(1 << n)]


def words_of_weight(n, d):
    """Every length-n word with exactly d ones."""
    out = []
    for positions in combinations(range(n), d):
        w = ["0"] * n
        for i in positions:
            w[i] = "1"
        out.append("".join(w))
    return out


def brute_max_ones(w):
    """Window maxima by enumerating every substring directly."""
    n = len(w)
    f = [0] * (n + 1)
    for i in range(1, n + 1):
        f[i] = max(w[j:j + i].count("1") for j in range(n - i + 1))
    return f


def brute_is_prefix_normal(w):
    f = brute_max_ones(w)
    return all(f[i] == w[:i].count("1") for i in range(1, len(w) + 1))


def brute_substring_parikh(w):
    """Set of (ones, zeros) pairs realized by substrings of w."""
    n = len(w)
    pairs = {(0, 0)}
    for i in range(n):
        for j in range(i + 1, n + 1):
            sub = w[i:j]
            pairs.add((sub.count("1"), sub.count("0")))
    return pairs


# Complete cool-lex listing for length 7, weights ascending: the frozen
# expected output of the Gray code generator.
LENGTH7_COOLEX_LISTING = """
0000000
1000000
1010000 1001000 1000100 1000010 1000001 1100000
1101000 1010100 1100100 1010010 1100010 1010001 1001001 1100001 1110000
1101100 1110100 1101010 1100110 1110010 1101001 1010101 1100101 1100011 1110001 1111000
1110110 1111010 1101101 1110101 1101011 1110011 1111001 1111100
1110111 1111011 1111101 1111110
1111111
""".split()

# Prefix normal forms of length 5 with their full equivalence classes.
LENGTH5_CLASSES = {
    "11111": {"11111"},
    "11110": {"11110", "01111"},
    "11101": {"11101", "10111"},
    "11100": {"11100", "01110", "00111"},
    "11011": {"11011"},
    "11010": {"11010", "10110", "01101", "01011"},
    "11001": {"11001", "10011"},
    "11000": {"11000", "01100", "00110", "00011"},
    "10101": {"10101"},
    "10100": {"10100", "01010", "00101"},
    "10010": {"10010", "01001"},
    "10001": {"10001"},
    "10000": {"10000", "01000", "00100", "00010", "00001"},
    "00000": {"00000"},
}

PNW_COUNTS = [2, 3, 5, 8, 14, 23, 41, 70, 125, 218, 395, 697]  # n = 1..12


@pytest.fixture(scope="session")
def length7_listing():
    return list(LENGTH7_COOLEX_LISTING)
