"""Named tree families and the extremal claims attached to tree classes.

Constructors for the parametrized families used throughout the library:

* ``path`` / ``star`` - P_n and S_n.
* ``spider`` - the balanced spider S_{n,r}: r pendent paths of nearly
  equal lengths at a common center (r*floor((n-1)/r) legs rounded so the
  lengths differ by at most one).  S_{n,n-1} is the star, S_{n,2} the
  path.
* ``cat`` - the spine caterpillar T(d_1, ..., d_z): a spine of z >= 2
  vertices whose j-th vertex has total degree d_j, every other vertex a
  leaf hanging off the spine.  The order is derived from the degrees:
  n = sum(d) - z + 2.
* ``C`` - C(n, a, b): a path v_1..v_{n-a-b} with one pendant at each of
  v_2..v_{a+1} and each of v_{n-a-2b}..v_{n-a-b-1}.  C(n, 0, 0) = P_n.
* ``F`` - F(n, a, b): a path v_1..v_{n-a-b-2} with two pendants at v_2,
  one pendant at each of v_3..v_{a+2} and each of
  v_{n-a-2b-2}..v_{n-a-b-3}.
* ``srk`` - S^r(n, k): k pendent paths of length r plus n-k*r-1 pendent
  edges at a common center.
* ``A`` - A^r(n, a, b): a path with a pendent paths of length r at one
  end and b at the other.

Labeling is deterministic: spine (or center) vertices first, then
pendant vertices appended in definition order, so golden files are
reproducible; isomorphism checks absorb the remaining freedom.

``claimed_extremal`` maps a tree-class constraint and an optimization
direction to the family that is claimed to attain the optimum over that
class; the verify module confirms those claims by brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .enumeration import ConstraintSpec
from .tree import Tree

__all__ = ["FamilySpec", "ParameterError", "build", "claimed_extremal", "parse_family_spec"]


class ParameterError(ValueError):
    """Family parameters violate the construction's preconditions."""


_KINDS = ("path", "star", "spider", "cat", "C", "F", "srk", "A")


@dataclass(frozen=True)
class FamilySpec:
    """Tagged parameter record naming one family instance.

    Only the fields that the kind uses are set; ``build`` validates the
    parameter ranges and raises :class:`ParameterError` otherwise.
    """

    kind: str
    n: Optional[int] = None
    r: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    k: Optional[int] = None
    degrees: Optional[tuple[int, ...]] = None

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", n=n)

    @classmethod
    def star(cls, n: int) -> "FamilySpec":
        return cls("star", n=n)

    @classmethod
    def spider(cls, n: int, r: int) -> "FamilySpec":
        return cls("spider", n=n, r=r)

    @classmethod
    def caterpillar(cls, degrees) -> "FamilySpec":
        return cls("cat", degrees=tuple(degrees))

    @classmethod
    def c(cls, n: int, a: int, b: int) -> "FamilySpec":
        return cls("C", n=n, a=a, b=b)

    @classmethod
    def f(cls, n: int, a: int, b: int) -> "FamilySpec":
        return cls("F", n=n, a=a, b=b)

    @classmethod
    def srk(cls, n: int, k: int, r: int) -> "FamilySpec":
        return cls("srk", n=n, k=k, r=r)

    @classmethod
    def a_family(cls, n: int, r: int, a: int, b: int) -> "FamilySpec":
        return cls("A", n=n, r=r, a=a, b=b)

    def to_text(self) -> str:
        """Canonical text form, e.g. ``C:n=7,a=1,b=1`` or ``cat:d=4,3,2``."""
        if self.kind == "path":
            return f"path:n={self.n}"
        if self.kind == "star":
            return f"star:n={self.n}"
        if self.kind == "spider":
            return f"spider:n={self.n},r={self.r}"
        if self.kind == "cat":
            return "cat:d=" + ",".join(str(d) for d in self.degrees)
        if self.kind == "C":
            return f"C:n={self.n},a={self.a},b={self.b}"
        if self.kind == "F":
            return f"F:n={self.n},a={self.a},b={self.b}"
        if self.kind == "srk":
            return f"srk:n={self.n},k={self.k},r={self.r}"
        if self.kind == "A":
            return f"A:n={self.n},r={self.r},a={self.a},b={self.b}"
        raise ParameterError(f"unknown family kind {self.kind!r}")

    def __str__(self) -> str:
        return self.to_text()


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the canonical text form produced by :meth:`FamilySpec.to_text`."""
    head, _, rest = text.partition(":")
    kind = head.strip()
    matched = next((k for k in _KINDS if k.lower() == kind.lower()), None)
    if matched is None:
        raise ParameterError(f"unknown family kind {kind!r}; expected one of {_KINDS}")
    kind = matched
    if kind == "cat":
        if not rest.startswith("d="):
            raise ParameterError("caterpillar spec must look like cat:d=4,3,2")
        try:
            degrees = tuple(int(v) for v in rest[2:].split(","))
        except ValueError:
            raise ParameterError(f"bad caterpillar degrees in {text!r}") from None
        return FamilySpec.caterpillar(degrees)
    params = {}
    if rest:
        for item in rest.split(","):
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in ("n", "r", "a", "b", "k"):
                raise ParameterError(f"unknown family parameter {key!r} in {text!r}")
            try:
                params[key] = int(value)
            except ValueError:
                raise ParameterError(f"non-integer value for {key!r} in {text!r}") from None
    required = {"path": "n", "star": "n", "spider": "nr", "C": "nab", "F": "nab",
                "srk": "nkr", "A": "nrab"}[kind]
    missing = [p for p in required if p not in params]
    if missing:
        raise ParameterError(f"{kind} spec is missing parameters {missing}")
    extra = set(params) - set(required)
    if extra:
        raise ParameterError(f"{kind} spec does not take parameters {sorted(extra)}")
    return FamilySpec(kind, **params)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def _build_path(n: int) -> Tree:
    _require(n >= 1, f"path requires n >= 1, got n={n}")
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def _build_star(n: int) -> Tree:
    _require(n >= 2, f"star requires n >= 2, got n={n}")
    return Tree(n, [(0, i) for i in range(1, n)])


def _attach_path(edges: list, anchor: int, length: int, next_id: int) -> int:
    """Append a pendent path of ``length`` new vertices at ``anchor``."""
    prev = anchor
    for _ in range(length):
        edges.append((prev, next_id))
        prev = next_id
        next_id += 1
    return next_id


def _build_spider(n: int, r: int) -> Tree:
    _require(2 <= r <= n - 1, f"spider requires 2 <= r <= n-1, got n={n}, r={r}")
    q, t = divmod(n - 1, r)
    # t legs of length q+1 first, then r-t legs of length q.
    legs = [q + 1] * t + [q] * (r - t)
    edges: list = []
    nxt = 1
    for length in legs:
        nxt = _attach_path(edges, 0, length, nxt)
    return Tree(n, edges)


def _build_caterpillar(degrees: tuple[int, ...]) -> Tree:
    z = len(degrees)
    _require(z >= 2, f"caterpillar spine needs z >= 2 vertices, got {z}")
    _require(all(d >= 2 for d in degrees),
             f"caterpillar spine degrees must all be >= 2, got {degrees}")
    n = sum(degrees) - z + 2
    edges = [(j, j + 1) for j in range(z - 1)]
    nxt = z
    for j, d in enumerate(degrees):
        pendants = d - 2 + (j == 0) + (j == z - 1)
        for _ in range(pendants):
            edges.append((j, nxt))
            nxt += 1
    return Tree(n, edges)


def _build_c(n: int, a: int, b: int) -> Tree:
    _require(a >= 0 and b >= 0, f"C requires a, b >= 0, got a={a}, b={b}")
    _require(n >= 2, f"C requires n >= 2, got n={n}")
    _require(2 * (a + b) <= n - 1, f"C requires 2*(a+b) <= n-1, got n={n}, a={a}, b={b}")
    _require(a + 1 < n - a - 2 * b,
             f"C attachment windows must be disjoint (a+1 < n-a-2b), got n={n}, a={a}, b={b}")
    spine = n - a - b
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    hosts = list(range(2, a + 2)) + list(range(n - a - 2 * b, n - a - b))
    for i in hosts:
        edges.append((i - 1, nxt))  # v_i is vertex i-1 in 0-based labels
        nxt += 1
    return Tree(n, edges)


def _build_f(n: int, a: int, b: int) -> Tree:
    _require(a >= 0 and b >= 0, f"F requires a, b >= 0, got a={a}, b={b}")
    _require(2 * (a + b) <= n - 5, f"F requires 2*(a+b) <= n-5, got n={n}, a={a}, b={b}")
    spine = n - a - b - 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    hosts = [2] + list(range(2, a + 3)) + list(range(n - a - 2 * b - 2, n - a - b - 2))
    for i in hosts:
        edges.append((i - 1, nxt))
        nxt += 1
    return Tree(n, edges)


def _build_srk(n: int, k: int, r: int) -> Tree:
    ok = (k == 1 and 2 <= r <= n - 3) or (k >= 2 and r >= 2 and k * r <= n - 2)
    _require(ok, "srk requires (k=1 and 2 <= r <= n-3) or (k >= 2, r >= 2, k*r <= n-2), "
                 f"got n={n}, k={k}, r={r}")
    edges: list = []
    nxt = 1
    for _ in range(k):
        nxt = _attach_path(edges, 0, r, nxt)
    for _ in range(n - k * r - 1):
        edges.append((0, nxt))
        nxt += 1
    return Tree(n, edges)


def _build_a(n: int, r: int, a: int, b: int) -> Tree:
    _require(a >= b >= 0 and a >= 1, f"A requires a >= b >= 0 and a >= 1, got a={a}, b={b}")
    _require(r >= 1, f"A requires r >= 1, got r={r}")
    _require((a + b) * r <= n - 2, f"A requires (a+b)*r <= n-2, got n={n}, r={r}, a={a}, b={b}")
    spine = n - (a + b) * r
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for _ in range(a):
        nxt = _attach_path(edges, 0, r, nxt)
    for _ in range(b):
        nxt = _attach_path(edges, spine - 1, r, nxt)
    return Tree(n, edges)


def build(spec: FamilySpec) -> Tree:
    """Construct the tree named by ``spec``.

    Raises :class:`ParameterError` naming the violated constraint when
    the parameters are out of range.
    """
    if spec.kind == "path":
        return _build_path(spec.n)
    if spec.kind == "star":
        return _build_star(spec.n)
    if spec.kind == "spider":
        return _build_spider(spec.n, spec.r)
    if spec.kind == "cat":
        return _build_caterpillar(spec.degrees)
    if spec.kind == "C":
        return _build_c(spec.n, spec.a, spec.b)
    if spec.kind == "F":
        return _build_f(spec.n, spec.a, spec.b)
    if spec.kind == "srk":
        return _build_srk(spec.n, spec.k, spec.r)
    if spec.kind == "A":
        return _build_a(spec.n, spec.r, spec.a, spec.b)
    raise ParameterError(f"unknown family kind {spec.kind!r}")


def _deg2_minimizer(n: int, t: int) -> FamilySpec:
    """Minimizer over trees with exactly t degree-2 vertices (0 <= t <= n-4).

    Split by the parity of n - t: odd lands in the F family (one degree-4
    vertex), even in the C family (maximum degree 3).  The n - t = 5 case
    is F(n, 0, 0).
    """
    m = n - t
    if m % 2 == 1:
        if m == 5:
            return FamilySpec.f(n, 0, 0)
        # a = ceil((m-5)/4) - 1, b = floor((m-5)/4) + 1 in integer form
        return FamilySpec.f(n, (m - 2) // 4 - 1, (m - 5) // 4 + 1)
    # a = ceil(m/4 - 1/2), b = floor(m/4 - 1/2) in integer form
    return FamilySpec.c(n, (m + 1) // 4, (m - 2) // 4)


def claimed_extremal(n: int, constraint: ConstraintSpec, direction: str) -> Optional[FamilySpec]:
    """Family claimed to attain the optimum of the Mostar index.

    Returns the family spec with parameters instantiated for order
    ``n``, or ``None`` when no family is claimed for the given
    constraint and direction.  ``direction`` is "max" or "min".
    """
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    kind = constraint.kind

    if kind == "unconstrained":
        return FamilySpec.star(n) if direction == "max" else FamilySpec.path(n)

    if kind == "odd_count":
        count = constraint.value
        k = count // 2
        if direction == "max":
            # Balanced spider with 2k legs; all-odd (2k = n) degenerates to the star.
            return FamilySpec.star(n) if 2 * k == n else FamilySpec.spider(n, 2 * k)
        return FamilySpec.c(n, k // 2, (k - 1) // 2)  # a = ceil((k-1)/2), b = floor((k-1)/2)

    if kind == "all_odd":
        if n % 2 == 1:
            return None
        return FamilySpec.star(n) if direction == "max" else FamilySpec.c(n, 0, n // 2 - 1)

    if kind == "branch_count":
        if direction == "min":
            k = constraint.value
            return FamilySpec.c(n, (k + 1) // 2, k // 2)  # a = ceil(k/2), b = floor(k/2)
        return None

    if kind == "deg2_count":
        t = constraint.value
        if t == n - 2:
            return FamilySpec.path(n)
        if t > n - 4:
            return None  # t = n-3 is an empty class
        if direction == "max":
            return FamilySpec.spider(n, n - t - 1)
        return _deg2_minimizer(n, t)

    if kind == "series_reduced":
        # Same classes as deg2_count with t = 0.
        if direction == "max":
            return FamilySpec.star(n)
        return _deg2_minimizer(n, 0)

    if kind == "pendent_path_count":
        k, r = constraint.value, constraint.r
        if direction == "max":
            if r == 1:
                # k pendent paths of length one = k leaves: the balanced spider.
                return FamilySpec.spider(n, k) if 3 <= k <= n - 2 else None
            ok = (k == 1 and 2 <= r <= n - 3) or (k >= 2 and r >= 2 and k * r <= n - 2)
            return FamilySpec.srk(n, k, r) if ok else None
        if k == 1 and 2 <= r <= n - 3:
            # The broom: a long path with two extra leaves at one end.  Stated
            # with legs (1, 2) but built as the mirror image (2, 1) so a >= b.
            return FamilySpec.a_family(n, 1, 2, 1)
        if k == 2 and 1 <= r <= n - 2:
            return FamilySpec.path(n)
        if k >= 3 and 1 <= r and k * r <= n - 2:
            return FamilySpec.a_family(n, r, (k + 1) // 2, k // 2)
        return None

    return None
