"""Principal specializations of Schur functions and their normalizations.

Everything is computed by the hook-free ratio product

    s_alpha(1, q, ..., q^(r-1))
        = q^{n(alpha)} * prod_{i<j<=r} (1 - q^{a_i - a_j + j - i}) / (1 - q^{j-i})

which needs no polynomial division and is exact at any q > 0, q != 1.
"""

from __future__ import annotations

from .combinatorics import n_stat, pad, trim
from .scalars import Rat


def schur_principal(alpha, r: int, q):
    """s_alpha(1, q, ..., q^(r-1)); zero when alpha has more than r rows."""
    alpha = trim(alpha)
    if len(alpha) > r:
        return Rat(0)
    a = pad(alpha, r)
    value = q ** n_stat(alpha)
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            value *= (1 - q ** (a[i - 1] - a[j - 1] + j - i)) / (1 - q ** (j - i))
    return value


def schur_normalized(alpha, r: int, q):
    """s_{alpha,r}(q) = s_alpha / s_[1]^{|alpha|} at x_i = q^(i-1)."""
    alpha = trim(alpha)
    one_var = schur_principal((1,), r, q)
    return schur_principal(alpha, r, q) / one_var ** sum(alpha)


def rectangle_schur(m: int, r1: int, r2: int, q):
    """Closed form of s_{[m^r1], r1+r2}(q), the normalized Schur value of
    the r1 x m rectangle."""
    r = r1 + r2
    value = q ** (m * r1 * (r1 - 1) // 2)
    for i in range(1, r1 + 1):
        for j in range(1, r2 + 1):
            value *= (1 - q ** (m + r1 + j - i)) / (1 - q ** (r1 + j - i))
    return value / schur_principal((1,), r, q) ** (m * r1)
