"""Pure-Python versions of the hot loops.

Imported by :mod:`signed_involutions.kernels` whenever the compiled
``_kernels`` extension is unavailable. Both implementations must return
identical results; the test-suite checks this directly.
"""

from collections import Counter


def inversions(seq):
    """Number of pairs i < j with seq[i] > seq[j]."""
    n = len(seq)
    count = 0
    for i in range(n):
        si = seq[i]
        for j in range(i + 1, n):
            if si > seq[j]:
                count += 1
    return count


def involution_length_histogram(n):
    """Tally every involution of [n] by (number of fixed points, length).

    Length is (inversions + number of 2-cycles) / 2. Returns a dict mapping
    ``(fixed_points, length)`` to the number of involutions with that data.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    w = [0] * n
    hist = Counter()

    def rec(pos, fixed, cycles):
        while pos < n and w[pos]:
            pos += 1
        if pos == n:
            inv = inversions(w)
            hist[fixed, (inv + cycles) // 2] += 1
            return
        w[pos] = pos + 1
        rec(pos + 1, fixed + 1, cycles)
        for j in range(pos + 1, n):
            if not w[j]:
                w[pos] = j + 1
                w[j] = pos + 1
                rec(pos + 1, fixed, cycles + 1)
                w[j] = 0
        w[pos] = 0

    rec(0, 0, 0)
    return dict(hist)
