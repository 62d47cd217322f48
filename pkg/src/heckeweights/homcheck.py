"""Machine verification of the skew/type-B equivalence.

Three report generators, each pure and exact:

* ``rho_eigenvalue_report``  -- spectrum of t on the two size-1 skew modules
  against the full-twist scalar ratio;
* ``character_match_report`` -- characters of the skew realization against
  the generic construction at Q = -q^(r1+m), plus pairwise separation of
  distinct shapes;
* ``weight_ratio_report``    -- normalized Schur ratio of the glued diagram
  against the weight formula at the specialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .combinatorics import double_partitions, embed_double, shape_str, \
    standard_tableaux
from .reps import T_LETTER, character, full_twist_scalar, g_letter, \
    random_word, skew_rep, typeB_rep, word
from .scalars import Rat, specialized_point
from .schur import rectangle_schur, schur_normalized
from .traces import weight_B


@dataclass
class Report:
    name: str
    passed: bool = True
    failures: list = field(default_factory=list)

    def check(self, ok: bool, message: str):
        if not ok:
            self.passed = False
            self.failures.append(message)


def rho_eigenvalue_report(m: int, r1: int, q) -> Report:
    """For n = 1, the diagonal t-action on the two skew modules must be
    exactly -q^(r1+m) and -1, and must agree with the full-twist ratio."""
    if m < 2 or r1 < 2:
        raise ValueError("need m >= 2 and r1 >= 2")
    q = Rat(q)
    report = Report(name=f"rho-eigenvalues m={m} r1={r1} q={q}")
    gamma = (m,) * r1 + (1,)
    beta = (m + 1,) + (m,) * (r1 - 1)
    ratio = -full_twist_scalar(beta, q) / full_twist_scalar(gamma, q)
    report.check(ratio == -(q ** (r1 + m)),
                 f"full-twist ratio {ratio} != -q^{r1 + m}")
    for shape, expected in ((((1,), ()), -(q ** (r1 + m))), (((), (1,)), Rat(-1))):
        rep = skew_rep(shape, m, r1, q)
        spectrum = {rep.t_matrix[i, i] for i in range(rep.dimension)}
        report.check(spectrum == {expected},
                     f"t-spectrum on {shape_str(shape)} is {spectrum}, "
                     f"expected {{{expected}}}")
    return report


def _sample_words(n: int, samples: int, seed: int) -> list:
    """Deterministic word sample: identity, t, each generator, then random
    short words."""
    rng = random.Random(seed)
    words = [word((), n), word((T_LETTER,), n)]
    words += [word((g_letter(i),), n) for i in range(1, n)]
    while len(words) < samples:
        words.append(random_word(n, rng))
    return words[:samples]


def character_match_report(n: int, m: int, r1: int, q, samples: int = 20,
                           seed: int = 0) -> Report:
    """Characters of skew and generic realizations must agree shape by
    shape, and distinct shapes must be separated by some sampled word."""
    if not (m > n and r1 > n):
        raise ValueError(f"need m > n and r1 > n (got m={m}, r1={r1}, n={n})")
    q = Rat(q)
    point = specialized_point(q, m, r1)
    report = Report(name=f"character-match n={n} m={m} r1={r1} q={q}")
    words = _sample_words(n, samples, seed)
    shapes = double_partitions(n)
    char_vectors = {}
    for shape in shapes:
        skew = skew_rep(shape, m, r1, q)
        generic = typeB_rep(shape, point)
        vec = []
        for w in words:
            a = character(skew, w)
            b = character(generic, w)
            report.check(a == b,
                         f"{shape_str(shape)}: character mismatch on "
                         f"{w.letters}: skew {a} vs generic {b}")
            vec.append(a)
        char_vectors[shape] = tuple(vec)
    for i, s1 in enumerate(shapes):
        for s2 in shapes[i + 1:]:
            report.check(char_vectors[s1] != char_vectors[s2],
                         f"no sampled word separates {shape_str(s1)} "
                         f"and {shape_str(s2)}")
    return report


def weight_ratio_report(n: int, m: int, r1: int, r2: int, q) -> Report:
    """Normalized Schur value of the glued diagram, divided by the rectangle
    value, must equal the weight at Q = -q^(r1+m), for every shape."""
    if not (m > n and r1 > n):
        raise ValueError(f"need m > n and r1 > n (got m={m}, r1={r1}, n={n})")
    q = Rat(q)
    r = r1 + r2
    point = specialized_point(q, m, r1)
    rect = rectangle_schur(m, r1, r2, q)
    report = Report(name=f"weight-ratio n={n} m={m} r1={r1} r2={r2} q={q}")
    for shape in double_partitions(n):
        mu = embed_double(shape, m, r1)
        lhs = schur_normalized(mu, r, q) / rect
        rhs = weight_B(shape, r1, r2, point)
        report.check(lhs == rhs,
                     f"{shape_str(shape)}: schur ratio {lhs} != weight {rhs}")
    return report


def skew_dimension_ok(n: int, m: int, r1: int, q) -> bool:
    """Skew module dimension bookkeeping: (n choose |alpha|) f^alpha f^beta."""
    from math import comb as binomial
    for shape in double_partitions(n):
        alpha, beta = shape
        expected = binomial(n, sum(alpha)) \
            * len(standard_tableaux((alpha, ()))) \
            * len(standard_tableaux((beta, ())))
        if skew_rep(shape, m, r1, q).dimension != expected:
            return False
    return True
