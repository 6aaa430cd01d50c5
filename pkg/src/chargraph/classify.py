"""Case classification and verification for seven-vertex K4-free character
graphs, plus the enumeration scanners and solvable-graph validators.

A group with such a graph is a direct product of PSL2(2^f) with a solvable
radical, and the prime-divisor counts of 2^f -+ 1 decide which of three
graph shapes occurs.  verify_main rebuilds the product degree set from a
radical model and confirms the predicted shape edge for edge.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

from .arith import factorize, is_prime, prime_divisors
from .degrees import GroupModel, cd_direct_product, graph_psl2, prime_power
from .graphs import (
    CharGraph,
    DegreeSet,
    are_isomorphic,
    complement,
    graph_from_cd,
    is_bipartite,
    is_kn_free,
)
from .shapes import GraphExpr, eval_shape, parse_shape, render_shape

F_MAX = 63
Q_ODD_MAX = 100_000

CASE_SHAPES = {
    "I": "K3^c * C4",
    "II": "(K2 + K1 + K2) * K2^c",
    "III": "K3 + K1 + K3",
}

_RADICAL_NOTES = {
    "I": "two degree-set factors, each contributing two fresh primes and no edge",
    "II": "one degree-set factor contributing two fresh primes and no edge",
    "III": "abelian (contributes no primes)",
    None: "none (prime-divisor counts match no case)",
}


class RadicalValidationError(ValueError):
    """A radical model does not fit the case; carries all failures found."""

    def __init__(self, failures: list[str]) -> None:
        super().__init__("; ".join(failures))
        self.failures = list(failures)


@dataclass(frozen=True)
class CaseReport:
    """Classification of one exponent f, optionally with verification."""

    f: int
    sizes: tuple[int, int]
    case: str | None
    socle_graph: CharGraph
    required_radical: str
    expected_shape: GraphExpr | None
    verified: bool | None = None
    product_graph: CharGraph | None = None

    def to_json(self) -> dict:
        return {
            "f": self.f,
            "sizes": list(self.sizes),
            "case": self.case,
            "socle_graph": self.socle_graph.to_json(),
            "required_radical": self.required_radical,
            "expected_shape": render_shape(self.expected_shape) if self.expected_shape else None,
            "verified": self.verified,
            "product_graph": self.product_graph.to_json() if self.product_graph else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CaseReport":
        shape = data["expected_shape"]
        product = data["product_graph"]
        return cls(
            f=data["f"],
            sizes=tuple(data["sizes"]),
            case=data["case"],
            socle_graph=CharGraph.from_json(data["socle_graph"]),
            required_radical=data["required_radical"],
            expected_shape=parse_shape(shape) if shape else None,
            verified=data["verified"],
            product_graph=CharGraph.from_json(product) if product else None,
        )


def _check_f(f: int) -> None:
    if not 2 <= f <= F_MAX:
        raise ValueError(f"f must be in [2, {F_MAX}], got {f}")


def classify_f(f: int) -> CaseReport:
    """Assign f to case I/II/III by the prime-divisor counts of 2^f -+ 1.

    Case I: both counts 1; II: both 2; III: both 3; anything else (mixed
    counts included) is no case.
    """
    _check_f(f)
    q = 2**f
    sizes = (len(prime_divisors(q - 1)), len(prime_divisors(q + 1)))
    case = {(1, 1): "I", (2, 2): "II", (3, 3): "III"}.get(sizes)
    return CaseReport(
        f=f,
        sizes=sizes,
        case=case,
        socle_graph=graph_psl2(q),
        required_radical=_RADICAL_NOTES[case],
        expected_shape=parse_shape(CASE_SHAPES[case]) if case else None,
    )


def _validate_radical(case: str, socle_primes: set[int], radical: list[DegreeSet]) -> list[str]:
    failures: list[str] = []
    expected_count = {"I": 2, "II": 1}.get(case)
    if expected_count is not None and len(radical) != expected_count:
        failures.append(f"case {case} needs exactly {expected_count} radical factor(s), got {len(radical)}")
    seen: set[int] = set()
    for i, factor in enumerate(radical):
        rho = factor.rho()
        overlap = rho & socle_primes
        if overlap:
            failures.append(f"factor {i} reuses socle primes {sorted(overlap)}")
        dup = rho & seen
        if dup:
            failures.append(f"factor {i} reuses primes {sorted(dup)} of an earlier factor")
        seen |= rho
        if case in ("I", "II"):
            if len(rho) != 2:
                failures.append(f"factor {i} must contribute exactly 2 primes, has {sorted(rho)}")
            elif graph_from_cd(factor).edge_count != 0:
                failures.append(f"factor {i} must have an edgeless graph")
        else:
            if rho:
                failures.append(f"case III radical must be abelian; factor {i} has primes {sorted(rho)}")
    return failures


def verify_main(f: int, radical: list[DegreeSet]) -> CaseReport:
    """Build the product degree-set graph for f and a radical model and check
    it: seven vertices, K4-free, non-bipartite complement, and isomorphic to
    the case's expected shape.
    """
    report = classify_f(f)
    if report.case is None:
        raise ValueError(f"f = {f} has sizes {report.sizes}; no case applies")
    q = 2**f
    socle_primes = {2} | prime_divisors(q - 1) | prime_divisors(q + 1)
    failures = _validate_radical(report.case, socle_primes, radical)
    if failures:
        raise RadicalValidationError(failures)
    models = [GroupModel.psl2(2, f)] + [GroupModel.solvable(ds) for ds in radical]
    cd = cd_direct_product(models)
    delta = graph_from_cd(cd)
    expected = eval_shape(report.expected_shape)
    ok = (
        delta.vertex_count == 7
        and is_kn_free(delta, 4)
        and not is_bipartite(complement(delta))
        and are_isomorphic(delta, expected) is not None
    )
    return replace(report, verified=ok, product_graph=delta)


def synthetic_radical(f: int) -> list[DegreeSet]:
    """A conforming radical model for f's case, built from the smallest
    primes outside the socle: {1, a, b} factors for cases I/II, nothing
    for case III.
    """
    report = classify_f(f)
    if report.case is None:
        raise ValueError(f"f = {f} has sizes {report.sizes}; no case applies")
    if report.case == "III":
        return []
    q = 2**f
    socle_primes = {2} | prime_divisors(q - 1) | prime_divisors(q + 1)
    needed = 4 if report.case == "I" else 2
    fresh: list[int] = []
    candidate = 3
    while len(fresh) < needed:
        if is_prime(candidate) and candidate not in socle_primes:
            fresh.append(candidate)
        candidate += 2
    factors = [DegreeSet([1, fresh[0], fresh[1]])]
    if report.case == "I":
        factors.append(DegreeSet([1, fresh[2], fresh[3]]))
    return factors


@dataclass(frozen=True)
class InterestHit:
    """An f whose PSL2(2^f) graph has four vertices, with its clause."""

    f: int
    sizes: tuple[int, int]
    clause: str | None  # "a", "b", or None for a counterexample
    witness: str

    def to_json(self) -> dict:
        return {"f": self.f, "sizes": list(self.sizes), "clause": self.clause, "witness": self.witness}


@dataclass(frozen=True)
class EvenFiveHit:
    """An f with both prime-divisor counts equal to 2."""

    f: int
    conforming: bool
    reason: str

    def to_json(self) -> dict:
        return {"f": self.f, "conforming": self.conforming, "reason": self.reason}


@dataclass(frozen=True)
class OddFourHit:
    """An odd prime power q = p^f with exactly three primes in q^2 - 1."""

    q: int
    p: int
    f: int
    clause: str | None  # "a", "b", "c", or None for a counterexample

    def to_json(self) -> dict:
        return {"q": self.q, "p": self.p, "f": self.f, "clause": self.clause}


def scan_lemma_interest(f_max: int) -> list[InterestHit]:
    """All f in [2, f_max] whose counts sum to 3, classified as f = 4 or as
    (f prime >= 5, 2^f - 1 prime, 2^f + 1 = 3 t^beta with beta odd).
    Anything else is flagged as a counterexample.
    """
    if not 2 <= f_max <= F_MAX:
        raise ValueError(f"f_max must be in [2, {F_MAX}]")
    hits: list[InterestHit] = []
    for f in range(2, f_max + 1):
        q = 2**f
        sizes = (len(prime_divisors(q - 1)), len(prime_divisors(q + 1)))
        if sizes[0] + sizes[1] != 3:
            continue
        if f == 4:
            hits.append(InterestHit(f, sizes, "a", "2^4 - 1 = 3 * 5 and 2^4 + 1 = 17"))
            continue
        clause, witness = None, f"no clause fits sizes {sizes}"
        if is_prime(f) and f >= 5 and is_prime(q - 1):
            plus = factorize(q + 1).as_dict()
            others = sorted(p for p in plus if p != 3)
            if plus.get(3) == 1 and len(others) == 1 and plus[others[0]] % 2 == 1:
                t, beta = others[0], plus[others[0]]
                clause = "b"
                witness = f"2^{f} - 1 = {q - 1} prime; 2^{f} + 1 = 3 * {t}^{beta}"
        hits.append(InterestHit(f, sizes, clause, witness))
    return hits


def scan_lemma_evenfive(f_max: int) -> list[EvenFiveHit]:
    """All f in [2, f_max] with both counts 2; conforming iff f is prime or
    f is 6 or 9."""
    if not 2 <= f_max <= F_MAX:
        raise ValueError(f"f_max must be in [2, {F_MAX}]")
    hits: list[EvenFiveHit] = []
    for f in range(2, f_max + 1):
        q = 2**f
        if len(prime_divisors(q - 1)) != 2 or len(prime_divisors(q + 1)) != 2:
            continue
        if f in (6, 9):
            hits.append(EvenFiveHit(f, True, f"f = {f}"))
        elif is_prime(f):
            hits.append(EvenFiveHit(f, True, "f prime"))
        else:
            hits.append(EvenFiveHit(f, False, "f composite and not 6 or 9"))
    return hits


def scan_lemma_oddfour(q_max: int) -> list[OddFourHit]:
    """All odd prime powers q <= q_max with exactly 3 primes dividing
    q^2 - 1, assigned to q in {25, 49, 81}, (p = 3, f an odd prime), or
    (p >= 11, f = 1)."""
    if not 3 <= q_max <= Q_ODD_MAX:
        raise ValueError(f"q_max must be in [3, {Q_ODD_MAX}]")
    hits: list[OddFourHit] = []
    for q in range(3, q_max + 1, 2):
        pf = prime_power(q)
        if pf is None:
            continue
        p, f = pf
        if len(prime_divisors(q - 1) | prime_divisors(q + 1)) != 3:
            continue
        if q in (25, 49, 81):
            clause = "a"
        elif p == 3 and f % 2 == 1 and is_prime(f):
            clause = "b"
        elif p >= 11 and f == 1:
            clause = "c"
        else:
            clause = None
        hits.append(OddFourHit(q, p, f, clause))
    return hits


def scan_counterexamples(hits) -> list:
    """The hits a scanner could not assign to any clause."""
    out = []
    for h in hits:
        if isinstance(h, EvenFiveHit):
            if not h.conforming:
                out.append(h)
        elif h.clause is None:
            out.append(h)
    return out


def check_palfy(g: CharGraph) -> bool:
    """Necessary condition for the graph of a solvable group: among any
    three vertices, two are adjacent (the complement is triangle-free)."""
    for t in combinations(g.vertices, 3):
        if not any(g.has_edge(a, b) for a, b in combinations(t, 2)):
            return False
    return True


def check_solvable_shape(g: CharGraph) -> bool:
    """Necessary condition for the graph of a solvable group: with at least
    four vertices it contains a triangle or is a 4-cycle."""
    if g.vertex_count <= 3:
        return True
    if not is_kn_free(g, 3):
        return True
    four_cycle = CharGraph([2, 3, 5, 7], [(2, 3), (3, 5), (5, 7), (2, 7)])
    return are_isomorphic(g, four_cycle) is not None


def k4free_vertex_bound(g: CharGraph) -> str | None:
    """Warn when a K4-free graph has more than seven vertices: no character
    graph can look like that.  Returns the warning text, or None."""
    if g.vertex_count > 7 and is_kn_free(g, 4):
        return (
            f"K4-free graph on {g.vertex_count} > 7 vertices: "
            "not realizable as a character graph"
        )
    return None
