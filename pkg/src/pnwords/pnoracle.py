"""Cool-lex Gray code generation of prefix normal words with an
incremental window-maxima oracle.

The generator walks the fixed-weight computation tree (see ``bubble``)
but prunes children with a membership test specialised to nodes of the
form 1^s 0^t gamma that are already known to be prefix normal.  Swapping
the s-th and (s+j)-th symbols keeps the word prefix normal unless either
the window starting at the moved 1 collects s or more 1s, or the suffix
beyond the old critical prefix already has a window of length s+j-1 with
s or more 1s.  The latter maxima are kept in an array ``f`` that is
updated in O(s+i) time per tree edge and restored from a stack snapshot
on the way back up, so the work per generated word is proportional to
its critical prefix length.

The word buffer carries n trailing zeros so window reads never need a
bounds check.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import bubble, core
from .bubble import word_str


class GenerationInvariantError(AssertionError):
    """An internal consistency check failed during a validated run."""


@dataclass
class GenerationStats:
    """Visit count plus instrumentation counters for one generation run."""

    count: int = 0
    cr_sum: int = 0
    membership_calls: int = 0
    symbol_reads: int = 0
    swaps: int = 0

    @property
    def avg_cr(self) -> Fraction:
        return Fraction(self.cr_sum, self.count)

    @property
    def reads_per_word(self) -> float:
        return self.symbol_reads / self.count


class OracleState:
    """Mutable word buffer plus the maintained window-maxima array.

    ``buf`` is 1-based and has length 2n+1; positions n+1..2n stay 0.
    ``f[i]`` equals the maximum number of 1s over length-i windows of the
    current node's suffix (everything past the leading 1-run and 0-run)
    padded with zeros; it is meaningful for i up to s+t and starts all
    zero at a root 1^d 0^(n-d).
    """

    __slots__ = ("n", "buf", "f", "word", "_mv",
                 "membership_calls", "symbol_reads", "swaps")

    def __init__(self, n: int, d: int):
        if not 0 <= d <= n:
            raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
        self.n = n
        self.buf = bytearray(2 * n + 1)
        for i in range(1, d + 1):
            self.buf[i] = 1
        self.f = bytearray(n + 2) if n < 256 else [0] * (n + 2)
        self._mv = memoryview(self.buf)
        self.word = self._mv.toreadonly()[1:n + 1]
        self.membership_calls = 0
        self.symbol_reads = 0
        self.swaps = 0

    def swap(self, i: int, j: int) -> None:
        buf = self.buf
        buf[i], buf[j] = buf[j], buf[i]
        self.swaps += 1

    def member_pn(self, s: int, j: int) -> bool:
        """Does swap(word, s, s+j) stay prefix normal?

        Requires the current word 1^s 0^t gamma to be prefix normal and
        1 <= j <= t.  Counts the 1s in the child's window from position
        s+j to 2(s+j-1) (the swapped-in 1 included) and consults
        f[s+j-1]; O(s+j) time.
        """
        self.membership_calls += 1
        x = s + j
        hi = 2 * (x - 1)
        ones = 1
        if hi >= x + 1:
            ones += sum(self._mv[x + 1:hi + 1])
            self.symbol_reads += hi - x
        return ones < s and self.f[x - 1] < s

    def oracle_pn(self, s: int, t: int) -> int:
        """Bubble upper bound: largest j <= t with member_pn true for all
        of 1..j."""
        j = 1
        while j <= t and self.member_pn(s, j):
            j += 1
        return j - 1

    def update_f(self, x: int) -> None:
        """Fold in the window counts starting at position x (call with the
        swap already applied, x = s+i); touches f[1..x+1]."""
        buf = self.buf
        f = self.f
        ones = 0
        fi = 1
        for k in range(x, 2 * x + 1):
            ones += buf[k]
            if f[fi] < ones:
                f[fi] = ones
            fi += 1
        self.symbol_reads += x + 1

    def snapshot(self, x: int):
        """Copy of f[1..x+1], exactly the segment update_f(x) may write."""
        return self.f[1:x + 2]

    def restore(self, x: int, saved) -> None:
        self.f[1:x + 2] = saved


_ORDERS = ("coolex", "visit-first")


def _gen_weight(st: OracleState, d: int, visit, order: str, validate: bool):
    """Walk one weight class from the root 1^d 0^(n-d) in st.buf.

    order: "coolex" (post-order), "visit-first" (pre-order, children left
    to right) or "reverse" (pre-order, children right to left, which
    yields exactly the reversed cool-lex listing).
    """
    pre = order != "coolex"
    reverse = order == "reverse"
    word = st.word
    count = 0
    cr_sum = 0
    naive = bubble.naive_oracle(core.is_prefix_normal) if validate else None

    def checked_oracle(s, t):
        j = 0
        while j < t:
            got = st.member_pn(s, j + 1)
            child = bytearray(word)
            child[s - 1], child[s + j] = child[s + j], child[s - 1]
            want = core.is_prefix_normal(word_str(child))
            if got != want:
                raise GenerationInvariantError(
                    f"member_pn({s},{j + 1}) = {got} at {word_str(word)}, "
                    f"quadratic test says {want}")
            if not got:
                break
            j += 1
        j_naive = naive(s, t, word)
        if j != j_naive:
            raise GenerationInvariantError(
                f"oracle bound {j} != naive bound {j_naive} at {word_str(word)}")
        return j

    def check_f_state(s, t):
        # f[1..s+t] must equal the brute-force window maxima of the suffix
        # past the critical prefix, zero-padded to length n.
        suffix = word_str(st._mv[s + t + 1:s + t + 1 + st.n])
        brute = core.max_ones(suffix)
        for i in range(1, s + t + 1):
            if st.f[i] != brute[i]:
                raise GenerationInvariantError(
                    f"f[{i}] = {st.f[i]} != {brute[i]} at {word_str(word)}")

    def gen(s, t):
        nonlocal count, cr_sum
        if validate:
            check_f_state(s, t)
        if pre:
            count += 1
            cr_sum += s + t
            if visit is not None:
                visit(word)
        if s > 0 and t > 0:
            j = checked_oracle(s, t) if validate else st.oracle_pn(s, t)
            entry_buf = bytes(st.buf) if validate else None
            entry_f = bytes(st.f) if validate else None
            for i in (range(j, 0, -1) if reverse else range(1, j + 1)):
                x = s + i
                st.swap(s, x)
                saved = st.snapshot(x)
                st.update_f(x)
                gen(s - 1, i)
                st.restore(x, saved)
                st.swap(s, x)
                if validate and (bytes(st.buf) != entry_buf or bytes(st.f) != entry_f):
                    raise GenerationInvariantError(
                        f"state not restored after child {i} of {word_str(word)}")
        if not pre:
            count += 1
            cr_sum += s + t
            if visit is not None:
                visit(word)

    gen(d, st.n - d)
    return count, cr_sum


def _run_weights(n, weight_orders, visit, validate):
    stats = GenerationStats()
    for d, order in weight_orders:
        st = OracleState(n, d)
        count, cr_sum = _gen_weight(st, d, visit, order, validate)
        stats.count += count
        stats.cr_sum += cr_sum
        stats.membership_calls += st.membership_calls
        stats.symbol_reads += st.symbol_reads
        stats.swaps += st.swaps
    return stats


def gen_bubble_pn(n: int, d: int, visit=None, *, order: str = "coolex",
                  validate: bool = False) -> GenerationStats:
    """Generate the weight-d prefix normal words of length n."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    if order not in _ORDERS:
        raise ValueError(f"order must be one of {_ORDERS}")
    return _run_weights(n, [(d, order)], visit, validate)


def generate_all_pn(n: int, visit=None, *, order: str = "coolex",
                    validate: bool = False) -> GenerationStats:
    """Generate every prefix normal word of length n, weights ascending.

    With the default cool-lex order consecutive words differ by at most
    two swaps within a weight class and by a swap plus a bit flip across
    the weight boundary.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if order not in _ORDERS:
        raise ValueError(f"order must be one of {_ORDERS}")
    return _run_weights(n, ((d, order) for d in range(n + 1)), visit, validate)


def generate_all_pn_cyclic(n: int, visit=None, *,
                           validate: bool = False) -> GenerationStats:
    """Generate all prefix normal words of length n as a cyclic Gray code.

    Odd weights ascending, then even weights descending.  Odd blocks are
    emitted in reversed cool-lex (they start at their root 1^d 0^(n-d)),
    even blocks in forward cool-lex (they end at their root); every block
    junction and the wrap-around pair then differ by at most two flips,
    or a swap and a flip.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    weights = [(d, "reverse") for d in range(1, n + 1, 2)]
    weights += [(d, "coolex") for d in range(n - (n % 2), -1, -2)]
    return _run_weights(n, weights, visit, validate)


def simple_generate_pn(n: int, visit=None) -> GenerationStats:
    """Generate all prefix normal words of length n by depth-first prefix
    extension: every prefix normal word extends by 0, and by 1 exactly
    when no suffix already matches the corresponding prefix weight.

    Leaves come out in ascending lexicographic order; this is not a Gray
    code.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    buf = bytearray(n)
    word = memoryview(buf).toreadonly()
    p = [0] * (n + 1)
    stats = GenerationStats()

    def extension_critical(k):
        # suffix of length l has p[k]-p[k-l] ones; appending 1 fails once
        # some suffix reaches the weight of the (l+1)-prefix
        pk = p[k]
        for length in range(k):
            if pk - p[k - length] >= p[length + 1]:
                return True
        return False

    def rec(k):
        if k == n:
            stats.count += 1
            if n:
                stats.cr_sum += core.critical_prefix(word_str(word)).cr
            if visit is not None:
                visit(word)
            return
        buf[k] = 0
        p[k + 1] = p[k]
        rec(k + 1)
        if not extension_critical(k):
            buf[k] = 1
            p[k + 1] = p[k] + 1
            rec(k + 1)
            buf[k] = 0

    rec(0)
    return stats


def pn_words(n: int, *, cyclic: bool = False, order: str = "coolex") -> list[str]:
    """Materialized listing (convenience wrapper for small n)."""
    sink = bubble.Collector()
    if cyclic:
        generate_all_pn_cyclic(n, sink)
    else:
        generate_all_pn(n, sink, order=order)
    return sink.words
