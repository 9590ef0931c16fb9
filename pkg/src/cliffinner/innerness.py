"""Deciding whether a Bogolyubov automorphism is inner.

Two independent routes:

* :func:`criterion` reads the answer off the eigenspace data of phi
  (codimension of V(+-1) and the determinant on the quotient).
* :func:`solve_witness` looks for the conjugating element directly, as the
  nullspace of the linear system [phi](v_i) x = x v_i over a finite window.

An element x of the window commutes with every tail generator iff it is
even and anticommutes with all of them iff it is odd, so conjugation by x
realises the tail action +1 (resp. -1) exactly when x has pure even
(resp. odd) parity. Restricting the unknown to that parity makes the
finite solve a faithful test of innerness on the infinite algebra.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from . import linalg
from .bogolyubov import BogolyubovAction
from .clifford import Multivector, blades_of_parity, mv_mul
from .errors import InvalidArgument, InvariantViolation, NotInvertible, WindowTooSmall
from .finitary import FinitaryOrthogonal, eigen_data, require_orthogonal
from .quadratic import QuadraticSpace, Subspace
from .scalars import ONE, Scalar, render_scalar

log = logging.getLogger(__name__)

BRANCH_PLUS = "phi-finitary"
BRANCH_MINUS = "minus-phi-finitary"


@dataclass(frozen=True)
class CriterionReason:
    branch: str
    k: int | None
    quotient_det: Scalar | None
    rule: str  # which clause decided: identity, minus_identity, k_zero, det


def criterion(phi: FinitaryOrthogonal) -> tuple[bool, CriterionReason]:
    """Innerness read off V(+-1) and det(phi on V/V(+-1))."""
    require_orthogonal(phi)
    if phi.tail == 1:
        data = eigen_data(phi, 1)
        if phi.is_identity():
            return True, CriterionReason(BRANCH_PLUS, data.codim, data.quotient_det, "identity")
        return data.quotient_det == ONE, CriterionReason(BRANCH_PLUS, data.codim, data.quotient_det, "det")
    data = eigen_data(phi, -1)
    if phi.is_minus_identity():
        return False, CriterionReason(BRANCH_MINUS, data.codim, data.quotient_det, "minus_identity")
    if data.codim < 1:
        return False, CriterionReason(BRANCH_MINUS, data.codim, data.quotient_det, "k_zero")
    sign = ONE if data.codim % 2 == 0 else -ONE
    return sign * data.quotient_det == -ONE, CriterionReason(BRANCH_MINUS, data.codim, data.quotient_det, "det")


def witness_window(phi: FinitaryOrthogonal) -> int:
    """Even window size m' holding the block (m, or m + 1 for odd m)."""
    return phi.m + (phi.m % 2)


def default_truncation(m: int) -> int:
    return m + (m % 2) + 2


@dataclass
class WitnessSolution:
    witness: Multivector | None
    window: int
    parity: int
    solution_dim: int
    flagged: bool = False
    notes: list[str] = field(default_factory=list)


def intertwining_system(phi: FinitaryOrthogonal, window: int, parity: int):
    """Matrix whose kernel is {x of given parity : [phi](v_i) x = x v_i, i < window}."""
    action = BogolyubovAction(phi, window)
    unknowns = blades_of_parity(window, parity)
    gens = [Multivector.generator(window, i) for i in range(window)]
    cols = []
    for b in unknowns:
        eb = Multivector(window, {b: 1})
        col = []
        for i in range(window):
            col.extend((mv_mul(action.generator_images[i], eb) - mv_mul(eb, gens[i])).coords())
        cols.append(col)
    return linalg.transpose(cols), unknowns


def _normalise(x: Multivector) -> Multivector:
    lead = next(iter(x.items()))[1]
    return x.scale(lead.inverse())


def _invertible(x: Multivector) -> bool:
    try:
        x.inverse()
    except NotInvertible:
        return False
    return True


def solve_witness_detailed(phi: FinitaryOrthogonal, n: int | None = None) -> WitnessSolution:
    require_orthogonal(phi)
    m = phi.m
    if n is None:
        n = default_truncation(m)
    if n < m:
        raise WindowTooSmall(f"truncation n = {n} is smaller than the block size {m}")
    window = witness_window(phi)
    parity = 0 if phi.tail == 1 else 1
    target_n = max(n, window)
    unknowns = blades_of_parity(window, parity)
    if not unknowns:
        return WitnessSolution(None, window, parity, 0)
    mat, unknowns = intertwining_system(phi, window, parity)
    kern = linalg.nullspace(mat, len(unknowns))
    sol = WitnessSolution(None, window, parity, len(kern))
    if not kern:
        return sol
    candidates = [Multivector.from_coords(window, v, unknowns) for v in kern]
    if len(candidates) == 1:
        x = candidates[0]
        if _invertible(x):
            sol.witness = _normalise(x).with_n(target_n)
        else:
            sol.notes.append("one-dimensional solution space without an invertible element")
        return sol
    sol.flagged = True
    sol.notes.append(f"solution space has dimension {len(kern)}; sweeping small combinations")
    log.warning("intertwiner space of dimension %d for %r", len(kern), phi)
    for coefs in itertools.product(range(-2, 3), repeat=len(candidates)):
        if not any(coefs):
            continue
        x = Multivector.zero(window)
        for c, v in zip(coefs, candidates):
            if c:
                x = x + v.scale(c)
        if x and _invertible(x):
            sol.witness = _normalise(x).with_n(target_n)
            break
    return sol


def solve_witness(phi: FinitaryOrthogonal, n: int | None = None) -> Multivector | None:
    """Invertible x of the tail's parity with [phi](a) = x a x^-1, or None."""
    return solve_witness_detailed(phi, n).witness


def verify_witness(phi: FinitaryOrthogonal, x: Multivector, n: int | None = None) -> bool:
    """Exact check that x has the right parity and conjugates every v_i (i < n) to [phi](v_i)."""
    n = x.n if n is None else n
    x = x.with_n(n)
    if x.parity() != (0 if phi.tail == 1 else 1) or not x:
        return False
    try:
        x_inv = x.inverse()
    except NotInvertible:
        return False
    action = BogolyubovAction(phi, n)
    for i in range(n):
        v = Multivector.generator(n, i)
        if x * v * x_inv != action.generator_images[i]:
            return False
    return True


@dataclass
class InnernessVerdict:
    criterion_inner: bool
    criterion_reason: CriterionReason
    witness: Multivector | None
    routes_agree: bool
    truncation: int
    witness_verified: bool | None = None
    solution_dim: int = 0
    flagged: bool = False

    @property
    def inner(self) -> bool:
        return self.criterion_inner

    def to_json(self) -> dict:
        r = self.criterion_reason
        return {
            "inner": self.criterion_inner,
            "branch": r.branch,
            "k": r.k,
            "quotient_det": None if r.quotient_det is None else render_scalar(r.quotient_det),
            "witness": None if self.witness is None else str(self.witness),
            "routes_agree": self.routes_agree,
        }


def decide(phi: FinitaryOrthogonal, n: int | None = None) -> InnernessVerdict:
    """Run both routes, verify any witness on all n generators, compare."""
    inner, reason = criterion(phi)
    if n is None:
        n = default_truncation(phi.m)
    sol = solve_witness_detailed(phi, n)
    verified = None
    if sol.witness is not None:
        verified = verify_witness(phi, sol.witness)
    found = sol.witness is not None and bool(verified)
    return InnernessVerdict(
        criterion_inner=inner,
        criterion_reason=reason,
        witness=sol.witness,
        routes_agree=inner == found,
        truncation=max(n, sol.window),
        witness_verified=verified,
        solution_dim=sol.solution_dim,
        flagged=sol.flagged,
    )


# centralizer


@dataclass(frozen=True)
class CentralizerBasis:
    n: int
    k: int
    basis: tuple[Multivector, ...]
    formula: tuple[Multivector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _span(n: int, elems) -> Subspace:
    return Subspace(1 << n, [e.coords() for e in elems])


def _check_orthonormal(space: QuadraticSpace | None, n: int) -> None:
    if space is None:
        return
    if space.n != n:
        raise InvalidArgument(f"form has {space.n} values for {n} generators")
    space.require_square_diagonal()
    if not space.is_orthonormal:
        raise InvalidArgument("the centralizer formula needs an orthonormal basis (all f(v_i) = 1)")


def centralizer_formula(n: int, k: int) -> list[Multivector]:
    """Cl(U^perp)_even + v_0...v_{k-1} Cl(U^perp)_odd for U = span(v_0..v_{k-1})."""
    top = Multivector(n, {(1 << k) - 1: 1})
    out = []
    for b in range(1 << (n - k)):
        blade = b << k
        e = Multivector(n, {blade: 1})
        out.append(e if b.bit_count() % 2 == 0 else top * e)
    return out


def centralizer(n: int, k: int, space: QuadraticSpace | None = None) -> CentralizerBasis:
    """All x in Cl(V_n) commuting with v_0..v_{k-1}, by exact linear solve.

    Raises :class:`InvariantViolation` if the solved space differs from
    :func:`centralizer_formula`.
    """
    if k % 2:
        raise InvalidArgument(f"k = {k} must be even")
    if not 0 <= k <= n:
        raise InvalidArgument(f"need 0 <= k <= n, got k = {k}, n = {n}")
    _check_orthonormal(space, n)
    dim = 1 << n
    gens = [Multivector.generator(n, i) for i in range(k)]
    cols = []
    for b in range(dim):
        eb = Multivector(n, {b: 1})
        col = []
        for g in gens:
            col.extend((eb * g - g * eb).coords())
        cols.append(col)
    if gens:
        kern = linalg.nullspace(linalg.transpose(cols, k * dim), dim)
    else:
        kern = linalg.identity(dim)
    basis = tuple(Multivector.from_coords(n, v) for v in kern)
    formula = tuple(centralizer_formula(n, k))
    if _span(n, basis) != _span(n, formula):
        raise InvariantViolation(f"centralizer of Cl(V_{k}) in Cl(V_{n}) differs from the formula")
    return CentralizerBasis(n, k, basis, formula)


def tensor_split_check(n: int, k: int) -> bool:
    """Multiplication Cl(V_k) x Z -> Cl(V_n) is a linear isomorphism."""
    if k % 2 or not 0 <= k <= n:
        raise InvalidArgument(f"need even k with 0 <= k <= n, got k = {k}, n = {n}")
    z = centralizer(n, k).basis
    if (1 << k) * len(z) != 1 << n:
        return False
    products = []
    for a in range(1 << k):
        ea = Multivector(n, {a: 1})
        products.extend(ea * zz for zz in z)
    return linalg.rank([p.coords() for p in products], 1 << n) == 1 << n
