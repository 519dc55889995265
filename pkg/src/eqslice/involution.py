"""Semilinear involutions of presented modules.

A strong inversion acts on the knot module by an additive bijection tau with
tau(p(t) * x) = p(t^-1) * tau(x).  Here that action is a matrix applied after
conjugating coefficients.  The matrix is input data (from the catalog or a
file); this module verifies the axioms rather than deriving the map from a
diagram.
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import ONE, ZERO
from .matrices import LambdaMatrix, in_span, mat_vec
from .modules import ModuleElement, PresentedModule, direct_sum
from .pairing import GramPairing, pair


@dataclass(frozen=True)
class SemilinearMap:
    """Matrix acting with coefficient conjugation: x -> M * conj(x)."""

    module: PresentedModule
    matrix: LambdaMatrix

    def __post_init__(self):
        n = self.module.generators
        if self.matrix.rows != n or self.matrix.cols != n:
            raise ValueError("involution matrix must be square of generator size")

    def apply(self, x: ModuleElement) -> ModuleElement:
        if len(x.coeffs) != self.module.generators:
            raise ValueError("element does not match the map's module")
        conj = [c.conjugate() for c in x.coeffs]
        return ModuleElement(self.module, mat_vec(self.matrix, conj))


def apply(T: SemilinearMap, x: ModuleElement) -> ModuleElement:
    return T.apply(x)


def is_well_defined(T: SemilinearMap) -> bool:
    """Relation columns must map into the relation span."""
    R = T.module.relations
    for col in range(R.cols):
        r = [R.entry(i, col).conjugate() for i in range(R.rows)]
        image = mat_vec(T.matrix, r)
        if in_span(list(image), R, T.module.snf) is None:
            return False
    return True


def is_involutive(T: SemilinearMap) -> bool:
    """tau composed with itself is the identity modulo relations."""
    n = T.module.generators
    square = T.matrix * T.matrix.conjugate()
    R = T.module.relations
    for j in range(n):
        diff = [
            square.entry(i, j) - (ONE if i == j else ZERO)
            for i in range(n)
        ]
        if in_span(diff, R, T.module.snf) is None:
            return False
    return True


def verify_involution(T: SemilinearMap) -> bool:
    return is_well_defined(T) and is_involutive(T)


def verify_anti_isometry(T: SemilinearMap, B: GramPairing) -> bool:
    """pair(x, y) = conj(pair(tau x, tau y)), checked on generator pairs.

    Sesquilinearity of the pairing and semilinearity of tau propagate the
    generator-pair identity to all elements.
    """
    if B.module.generators != T.module.generators:
        raise ValueError("pairing and involution live on different modules")
    n = T.module.generators
    images = [T.apply(ModuleElement(T.module, tuple(ONE if k == i else ZERO for k in range(n)))) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = B.gram[i][j]
            rhs = pair(B, images[i], images[j]).conjugate()
            if lhs != rhs:
                return False
    return True


def swap_involution(M: PresentedModule) -> SemilinearMap:
    """Factor-swapping involution on a two-block direct sum.

    Requires the relation matrix to be a block sum whose blocks are mutually
    conjugate presentations (each block's conjugated relations lie in the
    other block's span), which is exactly what makes the swap well defined.
    """
    n = M.generators
    if n % 2:
        raise ValueError("module is not an even-split direct sum")
    h = n // 2
    R = M.relations
    split = None
    for m1 in range(R.cols + 1):
        top_right_zero = all(
            R.entry(i, j).is_zero() for i in range(h) for j in range(m1, R.cols)
        )
        bottom_left_zero = all(
            R.entry(i, j).is_zero() for i in range(h, n) for j in range(m1)
        )
        if top_right_zero and bottom_left_zero:
            split = m1
            break
    if split is None:
        raise ValueError("relation matrix is not a two-block sum")
    R1 = LambdaMatrix([[R.entry(i, j) for j in range(split)] for i in range(h)])
    R2 = LambdaMatrix([[R.entry(i, j) for j in range(split, R.cols)] for i in range(h, n)])
    from .matrices import snf as _snf

    s1, s2 = _snf(R1), _snf(R2)
    for col in range(R1.cols):
        c = [R1.entry(i, col).conjugate() for i in range(h)]
        if in_span(c, R2, s2) is None:
            raise ValueError("blocks are not conjugate presentations; swap is not well defined")
    for col in range(R2.cols):
        c = [R2.entry(i, col).conjugate() for i in range(h)]
        if in_span(c, R1, s1) is None:
            raise ValueError("blocks are not conjugate presentations; swap is not well defined")
    entries = [[ZERO] * n for _ in range(n)]
    for i in range(h):
        entries[i][h + i] = ONE
        entries[h + i][i] = ONE
    return SemilinearMap(module=M, matrix=LambdaMatrix(entries))


def direct_sum_involution(T1: SemilinearMap, T2: SemilinearMap, module: PresentedModule | None = None) -> SemilinearMap:
    if module is None:
        module = direct_sum(T1.module, T2.module)
    return SemilinearMap(
        module=module,
        matrix=LambdaMatrix.block_diag(T1.matrix, T2.matrix),
    )
