"""Brute-force verification of extremal claims about the Mostar index.

A claim binds a tree class (a :class:`~mostar.enumeration.ConstraintSpec`),
an optimization direction, and the family asserted to attain the
optimum.  ``check_claim`` enumerates every isomorphism class in the
constrained class at each order, finds the exact optimum and the full
set of optimizers, and reports whether the claimed family is among
them.  Uniqueness of the optimizer is recorded but never required.

The registry covers:

======  ==========================================================
id      claim (direction over the constrained class)
======  ==========================================================
T2.1    unconstrained: star maximizes, path minimizes
T2.6    k leaves (3 <= k <= n-2): balanced spider maximizes
C2.7    spider index grows strictly with the leg count
T3.1    2k odd vertices: spider with 2k legs maximizes
T3.2    2k odd vertices: near-balanced caterpillar C minimizes
C3.3    k branch vertices: near-balanced caterpillar C minimizes
T3.4    all degrees odd: star maximizes, full comb C minimizes
T4.1    t degree-2 vertices: spider with n-t-1 legs maximizes
T4.3    t degree-2 vertices: C or F family minimizes (by parity)
C4.4    series-reduced trees: C or F family minimizes (by parity)
T5.1    k pendent paths of length r: spider-of-paths maximizes
T5.3    k pendent paths of length r: path-like A family minimizes
LDL-min-degseq
        fixed degree sequence: some minimizer is a spine
        caterpillar whose spine degrees decrease then increase
======  ==========================================================

Searches share one cached table of (tree, index, stats) records per
order, so checking many claims at the same order costs one enumeration.
"""

from __future__ import annotations

import csv
import io as _io
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .enumeration import DEFAULT_CAP, ConstraintSpec, all_trees
from .families import FamilySpec, ParameterError, build, claimed_extremal
from .tree import Tree, canonical_form, mostar_fast, stats

__all__ = [
    "TheoremClaim",
    "VerificationReport",
    "DegreeSequenceStructureReport",
    "REGISTRY",
    "claim_ids",
    "extremal_search",
    "check_claim",
    "check_degree_sequence_structure",
    "reports_to_json_obj",
    "reports_to_csv",
    "failed_reports",
]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one claim instance.

    ``claimed_is_argopt`` is the pass bit: for extremal claims it means
    the claimed family attains the brute-force optimum; for the
    monotonicity and degree-sequence claims it carries the claim's own
    pass condition.  ``invalid`` is set (with the violated constraint)
    when the claimed family cannot even be built, and such instances do
    not count as failures of the mathematics, only of the parameters.
    """

    claim_id: str
    n: int
    params: dict
    direction: str
    brute_value: Optional[int]
    claimed_value: Optional[int]
    value_match: Optional[bool]
    claimed_in_class: Optional[bool]
    claimed_is_argopt: Optional[bool]
    argopt_unique: Optional[bool]
    argopt_count: int
    argopt_canonical_forms: tuple[str, ...]
    claimed_family: Optional[str]
    empty_class: bool
    invalid: Optional[str]
    millis: float

    @property
    def passed(self) -> bool:
        if self.invalid is not None or self.empty_class:
            return True
        return bool(self.claimed_is_argopt)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "params": dict(self.params),
            "direction": self.direction,
            "brute_value": self.brute_value,
            "claimed_value": self.claimed_value,
            "value_match": self.value_match,
            "claimed_is_argopt": self.claimed_is_argopt,
            "argopt_unique": self.argopt_unique,
            "argopt_count": self.argopt_count,
            "claimed_family": self.claimed_family,
            "empty_class": self.empty_class,
            "invalid": self.invalid,
            "millis": round(self.millis, 3),
        }


class _Record:
    __slots__ = ("tree", "mo", "st")

    def __init__(self, tree, mo, st):
        self.tree = tree
        self.mo = mo
        self.st = st


@lru_cache(maxsize=16)
def _records(n: int, cap: Optional[int]) -> tuple:
    out = []
    for t in all_trees(n, cap=cap):
        st = stats(t) if t.n >= 2 else None
        out.append(_Record(t, mostar_fast(t)[0], st))
    return tuple(out)


def extremal_search(
    n: int,
    constraint: ConstraintSpec,
    direction: str,
    cap: Optional[int] = None,
) -> tuple[Optional[int], list[Tree]]:
    """Exact optimum of the Mostar index over a constrained tree class.

    Returns ``(value, optimizers)`` with every optimizer (one per
    isomorphism class).  An empty class yields ``(None, [])``, which is
    a legitimate result rather than an error.
    """
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    constraint.validate()
    best: Optional[int] = None
    argopt: list[Tree] = []
    want_max = direction == "max"
    for rec in _records(n, cap):
        if rec.st is None:
            if constraint.kind != "unconstrained":
                continue
        elif not constraint.matches(rec.st):
            continue
        if best is None or (rec.mo > best if want_max else rec.mo < best):
            best = rec.mo
            argopt = [rec.tree]
        elif rec.mo == best:
            argopt.append(rec.tree)
    return best, argopt


def _verify_instance(
    claim_id: str,
    n: int,
    params: dict,
    constraint: ConstraintSpec,
    direction: str,
    family: Optional[FamilySpec],
    cap: Optional[int],
) -> VerificationReport:
    t0 = time.perf_counter()
    claimed_tree = None
    invalid = None
    if family is None:
        invalid = "no family claimed for this instance"
    else:
        try:
            claimed_tree = build(family)
        except ParameterError as exc:
            invalid = str(exc)
    brute_value, argopt = extremal_search(n, constraint, direction, cap=cap)
    empty = brute_value is None
    argopt_canons = tuple(canonical_form(t) for t in argopt)
    claimed_value = None
    value_match = None
    claimed_in_class = None
    claimed_is_argopt = None
    if claimed_tree is not None and not empty:
        claimed_value = mostar_fast(claimed_tree)[0]
        claimed_in_class = constraint.matches(stats(claimed_tree))
        value_match = claimed_value == brute_value
        claimed_is_argopt = bool(
            claimed_in_class and value_match and canonical_form(claimed_tree) in argopt_canons
        )
    millis = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(
        claim_id=claim_id,
        n=n,
        params=params,
        direction=direction,
        brute_value=brute_value,
        claimed_value=claimed_value,
        value_match=value_match,
        claimed_in_class=claimed_in_class,
        claimed_is_argopt=claimed_is_argopt,
        argopt_unique=(len(argopt) == 1) if not empty else None,
        argopt_count=len(argopt),
        argopt_canonical_forms=argopt_canons,
        claimed_family=family.to_text() if family is not None else None,
        empty_class=empty,
        invalid=invalid,
        millis=millis,
    )


# -- claim registry -------------------------------------------------------------


@dataclass(frozen=True)
class TheoremClaim:
    id: str
    summary: str
    # instance generator: n -> iterable of (params, constraint, direction)
    instances: Optional[Callable[[int], Iterable[tuple[dict, ConstraintSpec, str]]]] = None
    # special checks (monotonicity, degree-sequence structure) bypass instances
    custom_check: Optional[Callable[..., list]] = None

    def check(self, n: int, cap: Optional[int] = None, maximal_census: bool = False) -> list[VerificationReport]:
        if self.custom_check is not None:
            return self.custom_check(self.id, n, cap)
        reports = []
        for params, constraint, direction in self.instances(n):
            if maximal_census and constraint.kind == "pendent_path_count":
                constraint = ConstraintSpec.pendent_path_count(
                    constraint.value, constraint.r, maximal=True)
            family = claimed_extremal(n, constraint, direction)
            reports.append(
                _verify_instance(self.id, n, params, constraint, direction, family, cap))
        return reports


def _instances_t21(n):
    if n < 2:
        return
    yield {}, ConstraintSpec.unconstrained(), "max"
    yield {}, ConstraintSpec.unconstrained(), "min"


def _instances_t26(n):
    for r in range(3, n - 1):
        yield {"r": r}, ConstraintSpec.pendent_path_count(r, 1), "max"


def _instances_t31(n):
    for k in range(1, n // 2 + 1):
        yield {"k": k}, ConstraintSpec.odd_count(2 * k), "max"


def _instances_t32(n):
    for k in range(1, n // 2 + 1):
        yield {"k": k}, ConstraintSpec.odd_count(2 * k), "min"


def _instances_c33(n):
    for k in range(0, (n - 2) // 2 + 1):
        yield {"k": k}, ConstraintSpec.branch_count(k), "min"


def _instances_t34(n):
    if n % 2 == 0:
        yield {}, ConstraintSpec.all_odd(), "max"
        yield {}, ConstraintSpec.all_odd(), "min"


def _instances_t41(n):
    for t in range(0, n - 3):
        yield {"t": t}, ConstraintSpec.deg2_count(t), "max"


def _instances_t43(n):
    for t in range(0, n - 3):
        yield {"t": t}, ConstraintSpec.deg2_count(t), "min"


def _instances_c44(n):
    if n >= 5:
        yield {}, ConstraintSpec.series_reduced(), "min"


def _instances_t51(n):
    for r in range(2, n - 2):
        yield {"k": 1, "r": r}, ConstraintSpec.pendent_path_count(1, r), "max"
    for k in range(2, (n - 2) // 2 + 1):
        for r in range(2, (n - 2) // k + 1):
            yield {"k": k, "r": r}, ConstraintSpec.pendent_path_count(k, r), "max"


def _instances_t53(n):
    for r in range(2, n - 2):
        yield {"k": 1, "r": r}, ConstraintSpec.pendent_path_count(1, r), "min"
    for r in range(1, n - 1):
        yield {"k": 2, "r": r}, ConstraintSpec.pendent_path_count(2, r), "min"
    for k in range(3, n - 1):
        for r in range(1, (n - 2) // k + 1):
            yield {"k": k, "r": r}, ConstraintSpec.pendent_path_count(k, r), "min"


def _check_spider_monotonicity(claim_id: str, n: int, cap: Optional[int]) -> list[VerificationReport]:
    """Strict growth of the spider index in the leg count, 2 <= r <= n-2."""
    reports = []
    if n < 4:
        return reports
    mo = {r: mostar_fast(build(FamilySpec.spider(n, r)))[0] for r in range(2, n)}
    for r in range(2, n - 1):
        t0 = time.perf_counter()
        ok = mo[r] < mo[r + 1]
        reports.append(VerificationReport(
            claim_id=claim_id, n=n, params={"r": r}, direction="monotone",
            brute_value=mo[r], claimed_value=mo[r + 1], value_match=ok,
            claimed_in_class=None, claimed_is_argopt=ok, argopt_unique=None,
            argopt_count=0, argopt_canonical_forms=(),
            claimed_family=FamilySpec.spider(n, r + 1).to_text(),
            empty_class=False, invalid=None,
            millis=(time.perf_counter() - t0) * 1000.0,
        ))
    return reports


def _spine_degree_path(t: Tree) -> Optional[list[int]]:
    """Tree degrees along the internal-vertex path, or None if the
    internal vertices do not form a path (not a spine caterpillar)."""
    deg = t.degrees
    internal = [v for v in range(t.n) if deg[v] >= 2]
    if len(internal) <= 1:
        return [deg[v] for v in internal]
    iset = set(internal)
    inner_neighbors = {v: [w for w in t.adj[v] if w in iset] for v in internal}
    if any(len(ws) > 2 for ws in inner_neighbors.values()):
        return None
    ends = sorted(v for v in internal if len(inner_neighbors[v]) == 1)
    walk = [ends[0]]
    prev = -1
    while len(walk) < len(internal):
        nxt = next(w for w in inner_neighbors[walk[-1]] if w != prev)
        prev = walk[-1]
        walk.append(nxt)
    return [deg[v] for v in walk]


def _is_valley(seq: list[int]) -> bool:
    """True when the sequence is non-increasing then non-decreasing."""
    z = len(seq)
    if z <= 2:
        return True
    for s in range(1, z):
        prefix = seq[:s]
        suffix = seq[s:]
        if all(prefix[i] >= prefix[i + 1] for i in range(len(prefix) - 1)) and all(
            suffix[i] <= suffix[i + 1] for i in range(len(suffix) - 1)
        ):
            return True
    return False


@dataclass(frozen=True)
class DegreeSequenceStructureReport:
    """Per-order summary: every degree sequence whose brute-force
    minimizer set contains no valley-spine caterpillar is a violation."""

    n: int
    sequences_checked: int
    violations: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_degree_sequence_structure(n: int, cap: Optional[int] = None) -> DegreeSequenceStructureReport:
    """Check the degree-sequence minimizer structure at order n.

    For every degree sequence realized by a tree of order n, the set of
    trees minimizing the Mostar index over that sequence must contain a
    caterpillar whose spine degrees (in path order) first decrease and
    then increase.
    """
    if n < 2:
        return DegreeSequenceStructureReport(n=n, sequences_checked=0, violations=())
    groups: dict[tuple[int, ...], list[_Record]] = {}
    for rec in _records(n, cap):
        groups.setdefault(rec.st.degree_sequence, []).append(rec)
    violations = []
    for seq, recs in groups.items():
        best = min(r.mo for r in recs)
        minimizers = [r.tree for r in recs if r.mo == best]
        found = False
        for t in minimizers:
            spine = _spine_degree_path(t)
            if spine is not None and _is_valley(spine):
                found = True
                break
        if not found:
            violations.append(seq)
    return DegreeSequenceStructureReport(
        n=n, sequences_checked=len(groups), violations=tuple(sorted(violations)))


def _check_degseq_claim(claim_id: str, n: int, cap: Optional[int]) -> list[VerificationReport]:
    t0 = time.perf_counter()
    summary = check_degree_sequence_structure(n, cap=cap)
    millis = (time.perf_counter() - t0) * 1000.0
    return [VerificationReport(
        claim_id=claim_id, n=n,
        params={"sequences": summary.sequences_checked,
                "violations": [",".join(map(str, v)) for v in summary.violations]},
        direction="min", brute_value=None, claimed_value=None,
        value_match=None, claimed_in_class=None,
        claimed_is_argopt=summary.ok, argopt_unique=None, argopt_count=0,
        argopt_canonical_forms=(), claimed_family=None,
        empty_class=(summary.sequences_checked == 0), invalid=None, millis=millis,
    )]


REGISTRY: dict[str, TheoremClaim] = {
    c.id: c
    for c in (
        TheoremClaim("T2.1", "star maximizes and path minimizes over all trees", _instances_t21),
        TheoremClaim("T2.6", "balanced spider maximizes over trees with r leaves", _instances_t26),
        TheoremClaim("C2.7", "spider index strictly increases with the leg count",
               custom_check=_check_spider_monotonicity),
        TheoremClaim("T3.1", "spider with 2k legs maximizes over trees with 2k odd vertices",
               _instances_t31),
        TheoremClaim("T3.2", "near-balanced C caterpillar minimizes over trees with 2k odd vertices",
               _instances_t32),
        TheoremClaim("C3.3", "near-balanced C caterpillar minimizes over trees with k branch vertices",
               _instances_c33),
        TheoremClaim("T3.4", "star maximizes and full comb minimizes over all-odd trees",
               _instances_t34),
        TheoremClaim("T4.1", "spider with n-t-1 legs maximizes over trees with t degree-2 vertices",
               _instances_t41),
        TheoremClaim("T4.3", "C or F family (by parity of n-t) minimizes over trees with t "
               "degree-2 vertices", _instances_t43),
        TheoremClaim("C4.4", "C or F family (by parity of n) minimizes over series-reduced trees",
               _instances_c44),
        TheoremClaim("T5.1", "spider of k length-r paths plus pendants maximizes over trees with "
               "k pendent paths of length r", _instances_t51),
        TheoremClaim("T5.3", "path-like A family minimizes over trees with k pendent paths of "
               "length r", _instances_t53),
        TheoremClaim("LDL-min-degseq", "a fixed-degree-sequence minimizer is a valley-spine "
               "caterpillar", custom_check=_check_degseq_claim),
    )
}


def claim_ids() -> list[str]:
    return list(REGISTRY)


def check_claim(
    claim_id: str,
    n_min: int,
    n_max: int,
    cap: Optional[int] = None,
    maximal_census: bool = False,
) -> list[VerificationReport]:
    """Run one registered claim over an order range, one report per instance."""
    if claim_id not in REGISTRY:
        raise KeyError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}")
    claim = REGISTRY[claim_id]
    reports = []
    for n in range(n_min, n_max + 1):
        reports.extend(claim.check(n, cap=cap, maximal_census=maximal_census))
    return reports


def failed_reports(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    return [r for r in reports if not r.passed]


def reports_to_json_obj(reports: Iterable[VerificationReport]):
    """Group reports by claim: one {claim, instances: [...]} object each."""
    by_claim: dict[str, list[VerificationReport]] = {}
    for r in reports:
        by_claim.setdefault(r.claim_id, []).append(r)
    objs = [
        {"claim": cid, "instances": [r.to_json_dict() for r in rs]}
        for cid, rs in by_claim.items()
    ]
    return objs[0] if len(objs) == 1 else objs


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    """CSV summary, one row per instance."""
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([
        "claim", "n", "params", "direction", "brute_value", "claimed_value",
        "value_match", "claimed_is_argopt", "argopt_unique", "argopt_count", "millis",
    ])
    for r in reports:
        params = ";".join(f"{k}={v}" for k, v in r.params.items())
        writer.writerow([
            r.claim_id, r.n, params, r.direction, r.brute_value, r.claimed_value,
            r.value_match, r.claimed_is_argopt, r.argopt_unique, r.argopt_count,
            f"{r.millis:.3f}",
        ])
    return buf.getvalue()
