"""Named invariants of higher rank Teichmueller (Cayley) components.

Each operation returns the polynomial invariant of one family of
components, computed through the twisted Higgs moduli it is isomorphic to:

* special orthogonal components (Hodge polynomials via the equivariant
  quotient description of the rank-2 orthogonal fibre),
* odd SO_0(n,n+2) components and the quaternionic E6 component (Poincare
  polynomials via the rank-2 / rank-3 projective-linear pipeline, with an
  independent closed-form cross-check),
* U(n,n) and PU(n,n) maximal-Toledo components (twist-2 specializations).

The polynomials are independent of the topological class d; the class set
is recorded as metadata only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import pgl2_twisted_closed, pgl3_quaternionic_closed
from .errors import InternalInconsistencyError
from .laurent import LaurentPoly, even_total_degree_part
from .pipeline import CurveParams, PoincarePolynomial, poincare_gl, poincare_pgl

SO_VARIANT = "SO"
SO0_VARIANT = "SO0"

METHOD_CLOSED = "closed-formula"
METHOD_PIPELINE = "pipeline"
METHOD_BOTH = "both"
_METHODS = (METHOD_CLOSED, METHOD_PIPELINE, METHOD_BOTH)


class HodgePolynomial:
    """Hodge polynomial of a pure intersection-cohomology structure.

    Stored as integer coefficients on (i, j); construction checks the
    purity constraints: symmetry under u <-> v and nonnegativity.
    """

    __slots__ = ("coefficients", "group", "n", "g")

    def __init__(self, coefficients: dict[tuple[int, int], int], group: str, n, g):
        coeffs = {(int(i), int(j)): int(c) for (i, j), c in coefficients.items() if c}
        for (i, j), c in coeffs.items():
            if i < 0 or j < 0:
                raise InternalInconsistencyError(f"negative Hodge degree ({i},{j})")
            if c < 0:
                raise InternalInconsistencyError(f"negative Hodge number {c} at ({i},{j})")
            if coeffs.get((j, i)) != c:
                raise InternalInconsistencyError(f"Hodge symmetry broken at ({i},{j})")
        self.coefficients = coeffs
        self.group = group
        self.n = n
        self.g = g

    @classmethod
    def from_laurent(cls, p: LaurentPoly, **meta) -> "HodgePolynomial":
        if not set(p.vars) <= {"u", "v"}:
            raise InternalInconsistencyError(f"expected u,v variables, got {p.vars}")
        iu = p.vars.index("u") if "u" in p.vars else None
        iv = p.vars.index("v") if "v" in p.vars else None
        coeffs = {}
        for e, c in p.terms.items():
            if c.denominator != 1:
                raise InternalInconsistencyError(f"non-integer Hodge number {c}")
            i = e[iu] if iu is not None else 0
            j = e[iv] if iv is not None else 0
            coeffs[(i, j)] = int(c)
        return cls(coeffs, **meta)

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly(("u", "v"), {(i, j): c for (i, j), c in self.coefficients.items()})

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.coefficients.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def max_weight(self) -> int:
        return max(i + j for i, j in self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None

    def __str__(self) -> str:
        return str(self.as_laurent())

    def __repr__(self) -> str:
        return f"HodgePolynomial({self.group}, n={self.n}, g={self.g}: {self})"


def fiber_hodge(D: int) -> HodgePolynomial:
    """Hodge polynomial 1 + uv + ... + (uv)^{D-1} of the rank-2D quotient fibre."""
    if D < 1:
        raise ValueError(f"fibre dimension parameter must be >= 1, got {D}")
    coeffs = {(k, k): 1 for k in range(D)}
    return HodgePolynomial(coeffs, group="(V+ . V-)//C*", n=D, g=None)


def _torus_factor(g: int) -> LaurentPoly:
    u = LaurentPoly.var("u")
    v = LaurentPoly.var("v")
    return (1 + u) ** g * (1 + v) ** g


def hodge_collier_gothen(n: int, g: int, variant: str = SO_VARIANT) -> HodgePolynomial:
    """Hodge polynomial of the distinguished component for SO(n,n+1).

    The variant selects the group: "SO" for the full orthogonal family,
    "SO0" for the identity component, whose answer depends on the parity
    of n (even n coincides with "SO"; odd n keeps the full torus factor).
    """
    if variant not in (SO_VARIANT, SO0_VARIANT):
        raise ValueError(f"variant must be SO or SO0, got {variant!r}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    D = (2 * n - 1) * (g - 1)
    fib = fiber_hodge(D).as_laurent()
    torus = _torus_factor(g)
    if variant == SO_VARIANT or n % 2 == 0:
        poly = even_total_degree_part(torus) * fib
    else:
        poly = torus * fib
    label = "SO" if variant == SO_VARIANT else "SO_0"
    return HodgePolynomial.from_laurent(poly, group=f"{label}({n},{n + 1})", n=n, g=g)


def hodge_so012_component(n: int, g: int) -> HodgePolynomial:
    """Hodge polynomial of the distinguished twist-n SO_0(1,2) component.

    Needs n >= 2: at n = 1 the fibre dimension jumps on a subvariety and
    the component is not a vector-bundle quotient.
    """
    if n < 2:
        raise ValueError(f"need twist n >= 2, got {n}")
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    D = (2 * n - 1) * (g - 1)
    poly = _torus_factor(g) * fiber_hodge(D).as_laurent()
    return HodgePolynomial.from_laurent(poly, group="SO_0(1,2) component", n=n, g=g)


def _check_method(method: str) -> str:
    if method not in _METHODS:
        raise ValueError(f"method must be one of {_METHODS}, got {method!r}")
    return method


def _dual_route(closed_value, pipeline_thunk, method: str, meta: dict) -> PoincarePolynomial:
    method = _check_method(method)
    closed = pipeline = None
    if method in (METHOD_CLOSED, METHOD_BOTH):
        closed = PoincarePolynomial.from_ratfunc(closed_value(), provenance=METHOD_CLOSED, **meta)
    if method in (METHOD_PIPELINE, METHOD_BOTH):
        base = pipeline_thunk()
        pipeline = PoincarePolynomial(base.coefficients, provenance=METHOD_PIPELINE, **meta)
    if method == METHOD_CLOSED:
        return closed
    if method == METHOD_PIPELINE:
        return pipeline
    if closed.coefficients != pipeline.coefficients:
        raise InternalInconsistencyError(
            f"{meta.get('group')}: closed formula and pipeline disagree: "
            f"{closed.coefficients} vs {pipeline.coefficients}")
    return PoincarePolynomial(pipeline.coefficients, provenance="both-agree", **meta)


def poincare_so0_nn2(n: int, g: int, method: str = METHOD_BOTH,
                     mode: str = "specialize-early", jobs: int = 1) -> PoincarePolynomial:
    """P_c of the SO_0(n,n+2) higher rank Teichmueller components, n odd.

    Isomorphic (up to a vector-space factor) to the twist-n rank-2
    projective-linear moduli, so both the partition-series pipeline and the
    rank-2 closed form compute it; `method` selects the route, and "both"
    insists they agree.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need odd n >= 3, got {n}")
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    meta = dict(group=f"SO_0({n},{n + 2})", n=n, g=g, l=n,
                degree_label="independent of d in Z/2Z")
    return _dual_route(
        lambda: pgl2_twisted_closed(n, g),
        lambda: poincare_pgl(2, CurveParams(g, n), mode, jobs),
        method, meta)


def poincare_e6(g: int, method: str = METHOD_BOTH,
                mode: str = "specialize-early", jobs: int = 1) -> PoincarePolynomial:
    """P_c of the quaternionic E6 higher rank Teichmueller components.

    The Cayley partner is the twist-4 rank-3 projective-linear moduli
    (magical triple data m_c = 3, l_1 = 1, l_2 = 5).
    """
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    meta = dict(group="E6 quaternionic", n=None, g=g, l=4,
                degree_label="independent of d in Z/3Z")
    return _dual_route(
        lambda: pgl3_quaternionic_closed(g),
        lambda: poincare_pgl(3, CurveParams(g, 4), mode, jobs),
        method, meta)


def poincare_unn(n: int, g: int, mode: str = "specialize-early", jobs: int = 1) -> PoincarePolynomial:
    """P_c of the maximal-Toledo U(n,n) components: the twist-2 GL output."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    base = poincare_gl(n, CurveParams(g, 2), mode, jobs)
    return PoincarePolynomial(base.coefficients, group=f"U({n},{n})", n=n, g=g, l=2,
                              degree_label="independent of d in Z")


def poincare_punn(n: int, g: int, mode: str = "specialize-early", jobs: int = 1) -> PoincarePolynomial:
    """P_c of the PU(n,n) higher rank Teichmueller components: twist-2 PGL."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    base = poincare_pgl(n, CurveParams(g, 2), mode, jobs)
    return PoincarePolynomial(base.coefficients, group=f"PU({n},{n})", n=n, g=g, l=2,
                              degree_label=f"independent of d in Z/{n}Z")


@dataclass(frozen=True)
class ComponentSpec:
    """A named component family with its parameters.

    Group tokens: "so" SO(n,n+1); "so0" SO_0(n,n+1); "so012" the twist-n
    SO_0(1,2) component; "so0-nn2" SO_0(n,n+2) with n odd; "e6" the
    quaternionic E6 form (no n); "unn"/"punn" U(n,n)/PU(n,n); "gl"/"pgl"
    the twisted moduli themselves (these take an explicit twist).
    """

    group: str
    n: int | None = None
    g: int = 2
    l: int | None = None


def compute_component(spec: ComponentSpec, method: str = METHOD_BOTH,
                      mode: str = "specialize-early", jobs: int = 1):
    """Dispatch a ComponentSpec to its invariant; validates parameters."""
    group, n, g, l = spec.group, spec.n, spec.g, spec.l
    if group in ("gl", "pgl"):
        if n is None or l is None:
            raise ValueError(f"{group} needs both n and l")
        fn = poincare_gl if group == "gl" else poincare_pgl
        return fn(n, CurveParams(g, l), mode, jobs)
    if l is not None and group not in ("unn", "punn"):
        raise ValueError(f"{group} does not take an explicit twist")
    if group in ("so", "so0", "so012", "so0-nn2") and n is None:
        raise ValueError(f"{group} needs the size parameter n")
    if group == "so":
        return hodge_collier_gothen(n, g, SO_VARIANT)
    if group == "so0":
        return hodge_collier_gothen(n, g, SO0_VARIANT)
    if group == "so012":
        return hodge_so012_component(n, g)
    if group == "so0-nn2":
        return poincare_so0_nn2(n, g, method, mode, jobs)
    if group == "e6":
        if n is not None:
            raise ValueError("the E6 component has no rank parameter")
        return poincare_e6(g, method, mode, jobs)
    if group in ("unn", "punn"):
        if l not in (None, 2):
            raise ValueError(f"{group} components have twist 2")
        if n is None or n < 1:
            raise ValueError(f"{group} needs n >= 1")
        fn = poincare_unn if group == "unn" else poincare_punn
        return fn(n, g, mode, jobs)
    raise ValueError(f"unknown group {group!r}")
