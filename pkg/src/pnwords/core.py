"""Binary words, prefix/max-ones tables and prefix normal membership testers.

A binary word is represented as a ``str`` of ``'0'``/``'1'`` characters,
most significant position first.  A word w is *prefix normal* when no
substring of w contains more 1s than the prefix of the same length,
i.e. ``max_ones(w) == prefix_weights(w)`` elementwise.

All functions here are pure; returned tables are plain lists indexed by
length (index 0 holds the empty-prefix value 0).
"""

from dataclasses import dataclass


class WordFormatError(ValueError):
    """Raised for text that is not a plain 0/1 word."""


def parse_word(text: str) -> str:
    """Validate word text (ASCII 0/1, optional single trailing newline)."""
    word = text[:-1] if text.endswith("\n") else text
    if word.strip("01"):
        bad = word.strip("01")[0]
        raise WordFormatError(f"invalid character {bad!r} in word {word!r}")
    return word


def weight(w: str) -> int:
    """Number of 1s in w."""
    return w.count("1")


def complement(w: str) -> str:
    """Exchange 0s and 1s."""
    return w.translate(_COMPLEMENT)


_COMPLEMENT = str.maketrans("01", "10")


def prefix_weights(w: str) -> list[int]:
    """p[i] = number of 1s in the length-i prefix of w, for i = 0..n."""
    p = [0] * (len(w) + 1)
    acc = 0
    for i, c in enumerate(w, 1):
        if c == "1":
            acc += 1
        p[i] = acc
    return p


def max_ones(w: str) -> list[int]:
    """f[i] = maximum number of 1s over all length-i substrings of w.

    Quadratic scan over all window offsets via the prefix-weight table.
    """
    n = len(w)
    p = prefix_weights(w)
    f = [0] * (n + 1)
    for i in range(1, n + 1):
        f[i] = max(p[j + i] - p[j] for j in range(n - i + 1))
    return f


def min_ones(w: str) -> list[int]:
    """g[i] = minimum number of 1s over all length-i substrings of w."""
    n = len(w)
    fc = max_ones(complement(w))
    return [i - fc[i] for i in range(n + 1)]


def pnf(w: str) -> str:
    """Prefix normal form: the unique prefix normal word with the same
    max-ones table as w (first differences of ``max_ones(w)``)."""
    f = max_ones(w)
    return "".join("1" if f[i] > f[i - 1] else "0" for i in range(1, len(w) + 1))


def is_prefix_normal(w: str) -> bool:
    """Quadratic membership test with early exit on the first substring
    that beats the prefix of its length."""
    n = len(w)
    p = prefix_weights(w)
    bits = [1 if c == "1" else 0 for c in w]
    for i in range(1, n):  # substrings starting at offset i (prefixes are never violations)
        f = 0
        for j in range(i, n):
            f += bits[j]
            if f > p[j - i + 1]:
                return False
    return True


@dataclass(frozen=True)
class CriticalPrefix:
    """Decomposition w = 1^s 0^t gamma with gamma empty or starting with 1.

    ``cr = s + t`` is the critical prefix length; for the all-ones word the
    convention is t = 0 and cr = n.
    """

    s: int
    t: int
    gamma: str

    @property
    def cr(self) -> int:
        return self.s + self.t


def critical_prefix(w: str) -> CriticalPrefix:
    """Unique (s, t, gamma) decomposition of a non-empty word."""
    if not w:
        raise ValueError("critical prefix of the empty word is undefined")
    n = len(w)
    s = 0
    while s < n and w[s] == "1":
        s += 1
    t = 0
    while s + t < n and w[s + t] == "0":
        t += 1
    return CriticalPrefix(s, t, w[s + t:])


def run_length_blocks(w: str) -> list[tuple[int, int]]:
    """Maximal blocks 1^s 0^t of w as (s, t) pairs.

    The first block may have s = 0 and the last may have t = 0; every
    other run length is positive.
    """
    blocks = []
    n = len(w)
    i = 0
    while i < n:
        s = 0
        while i < n and w[i] == "1":
            s += 1
            i += 1
        t = 0
        while i < n and w[i] == "0":
            t += 1
            i += 1
        blocks.append((s, t))
    return blocks


def phase1_rejects(w: str, mode: str = "combined") -> bool:
    """Linear-time rejection tests on the run-length block encoding.

    ``trivial`` rejects when the longest 1-run is not a prefix (some
    s_i > s_1).  ``combined`` additionally rejects when two adjacent
    blocks fit inside the critical prefix length but carry more 1s:
    s_{i-1} + t_{i-1} + s_i <= s_1 + t_1 and s_{i-1} + s_i > s_1.
    A True result is definitive (w is not prefix normal); False means
    the tests were inconclusive.
    """
    if mode not in ("trivial", "combined"):
        raise ValueError(f"unknown mode {mode!r}")
    blocks = run_length_blocks(w)
    if len(blocks) < 2:
        return False
    s1, t1 = blocks[0]
    prev_s, prev_t = s1, t1
    for s_i, t_i in blocks[1:]:
        if s_i > s1:
            return True
        if mode == "combined" and prev_s + prev_t + s_i <= s1 + t1 and prev_s + s_i > s1:
            return True
        prev_s, prev_t = s_i, t_i
    return False


def member_two_phase(w: str) -> bool:
    """Two-phase membership test: block rejection first, quadratic scan
    for the survivors.  Always agrees with ``is_prefix_normal``."""
    if phase1_rejects(w, "combined"):
        return False
    return is_prefix_normal(w)


def is_extension_critical(w: str) -> bool:
    """True when w (prefix normal) cannot be extended by a 1.

    w1 is prefix normal iff every proper suffix u of w (the empty suffix
    included) has fewer 1s than the prefix of length |u| + 1.
    """
    assert is_prefix_normal(w), "is_extension_critical requires a prefix normal word"
    n = len(w)
    if n == 0:
        return False
    p = prefix_weights(w)
    total = p[n]
    for length in range(n):
        if total - p[n - length] >= p[length + 1]:
            return True
    return False


@dataclass(frozen=True)
class BjpmIndex:
    """Constant-time index for substring Parikh queries on a fixed word.

    A word has a substring with x 1s and y 0s iff x lies between the
    minimum and maximum 1-count over windows of length x + y.
    """

    length: int
    max_ones: tuple[int, ...]
    min_ones: tuple[int, ...]

    @classmethod
    def from_word(cls, w: str) -> "BjpmIndex":
        return cls(len(w), tuple(max_ones(w)), tuple(min_ones(w)))

    def query(self, x: int, y: int) -> bool:
        if x < 0 or y < 0:
            raise ValueError("counts must be non-negative")
        k = x + y
        if k > self.length:
            return False
        return self.min_ones[k] <= x <= self.max_ones[k]


def bjpm_query(idx: BjpmIndex, x: int, y: int) -> bool:
    """Does the indexed word have a substring with exactly x 1s and y 0s?"""
    return idx.query(x, y)
