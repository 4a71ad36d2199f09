"""Property suites shared by the command line and the demos.

Each function returns a :class:`~heiscat.diagram.VerificationReport`; a suite
passes when every check in it passes.
"""

from __future__ import annotations

import itertools
import random

from . import fock, heisenberg as hz, lattice as lt
from .diagram import CheckResult, VerificationReport, verify_decat, verify_fg, verify_sdcross_lemma
from .heisenberg import AlgebraElement, Word
from .lattice import Lattice


def random_word(rng: random.Random, rank: int, max_len: int, max_level: int = 3,
                weight: int | None = 0) -> AlgebraElement:
    length = rng.randint(1, max_len)
    letters = tuple((rng.choice((hz.P, hz.Q)), rng.randrange(rank), rng.randint(1, max_level)) for _ in range(length))
    return AlgebraElement.word(Word(letters, weight))


def random_gram(rng: random.Random, rank: int, lo: int = -2, hi: int = 3) -> list[list[int]]:
    return [[rng.randint(lo, hi) for _ in range(rank)] for _ in range(rank)]


def confluence(count: int = 500, max_len: int = 6, seed: int = 0) -> VerificationReport:
    """Normal forms from leftmost rewriting, two random rewrite orders and the memoised path agree."""
    rng = random.Random(seed)
    rep = VerificationReport("confluence")
    for k in range(count):
        rank = rng.randint(1, 3)
        lat = Lattice(random_gram(rng, rank))
        w = random_word(rng, rank, max_len)
        forms = {
            "leftmost": hz.rewrite(w, lat, "leftmost"),
            "random_a": hz.rewrite(w, lat, "random", random.Random(2 * k)),
            "random_b": hz.rewrite(w, lat, "random", random.Random(2 * k + 1)),
            "fast": hz.normal_order(w, lat),
        }
        ok = len(set(forms.values())) == 1 and all(x.is_normal() for x in forms.values())
        rep.checks.append(CheckResult("confluence", {"word": str(w), "gram": [list(r) for r in lat.gram]},
                                      "pass" if ok else "fail",
                                      None if ok else {k_: str(v) for k_, v in forms.items()}))
    return rep


def commutators(max_level: int = 4, max_degree: int = 6, max_rank: int = 2, seed: int = 0) -> VerificationReport:
    """``[a_b(m), a_c(-n)]`` acts on low-degree Fock space as ``delta_{mn} m <b, c>``."""
    rng = random.Random(seed)
    rep = VerificationReport("commutators")
    for rank in range(1, max_rank + 1):
        lat = Lattice(random_gram(rng, rank))
        sources = [fock.FockVector({mono: 1}) for d in range(max_degree + 1) for mono in fock.basis(d, rank)]
        for b, c, m, n in itertools.product(range(rank), range(rank), range(1, max_level + 1), range(1, max_level + 1)):
            comm = hz.commutator(hz.to_power_sums(b, m, lat), hz.to_power_sums(c, -n, lat), lat)
            expected = m * lat.gram[b][c] if m == n else 0
            ok = all(fock.act(comm, v, lat) == v.scale(expected) for v in sources)
            rep.checks.append(CheckResult("power_sum_commutator",
                                          {"gram": [list(r) for r in lat.gram], "b": b, "c": c, "m": m, "n": n},
                                          "pass" if ok else "fail"))
    return rep


def fock_dims(max_n: int = 8, max_rank: int = 3) -> VerificationReport:
    rep = VerificationReport("fock-dims")
    for n, r in itertools.product(range(max_n + 1), range(max_rank + 1)):
        vals = (fock.graded_dim(n, r), len(fock.basis(n, r)), fock.partition_sum_dim(n, r))
        ok = len(set(vals)) == 1
        rep.checks.append(CheckResult("graded_dim", {"n": n, "r": r}, "pass" if ok else "fail",
                                      None if ok else {"series": vals[0], "basis": vals[1], "partition_sum": vals[2]}))
    return rep


def faithfulness(max_degree: int = 3) -> VerificationReport:
    rep = VerificationReport("faithfulness")
    for gram in ([[1]], [[1, 0], [0, 1]]):
        r = fock.faithfulness_report(max_degree, Lattice(gram))
        rep.checks.append(CheckResult("full_rank", {"gram": gram, **r.to_json()}, "pass" if r.full_rank else "fail"))
    return rep


def sdcross(max_n: int = 6) -> VerificationReport:
    return verify_sdcross_lemma(max_n, strict=False)


def fg(max_m: int = 6, max_n: int = 6) -> VerificationReport:
    rep = VerificationReport("fg")
    for m, n in itertools.product(range(max_m + 1), range(max_n + 1)):
        rep.checks.extend(verify_fg(m, n).checks)
    return rep


def decat(max_m: int = 4, max_n: int = 4, chis=range(-2, 4)) -> VerificationReport:
    return verify_decat(max_m, max_n, chis)


def iso_agreement(gram, words: int = 20, max_len: int = 4, seed: int = 0) -> VerificationReport:
    """Normal forms over the Smith-diagonalised form map to normal forms over ``gram``."""
    lat = Lattice(gram)
    gmap = lt.diagonalizing_map(lat)
    rng = random.Random(seed)
    rep = VerificationReport("iso")
    for _ in range(words):
        w = random_word(rng, lat.rank, max_len, weight=rng.randint(-2, 2))
        lhs = hz.substitute(hz.normal_order(w, gmap.source), gmap)
        rhs = hz.substitute(w, gmap)
        ok = lhs == rhs
        rep.checks.append(CheckResult("iso_normal_forms", {"word": str(w)}, "pass" if ok else "fail",
                                      None if ok else {"mapped_normal_form": str(lhs), "normal_form_of_image": str(rhs)}))
    return rep


SUITES = {
    "confluence": confluence,
    "commutators": commutators,
    "fock-dims": fock_dims,
    "sdcross": sdcross,
    "fg": fg,
    "decat": decat,
    "faithfulness": faithfulness,
}
