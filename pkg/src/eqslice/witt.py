"""Equivariant linking-form triples and their Witt-group operations.

A triple bundles a torsion module, a Hermitian nonsingular pairing, and a
semilinear involution acting as an anti-isometry.  The group operations are
block sums and sign flips; metabolizers are certified one-sidedly: exhibiting
one proves the class is trivial, while the obstruction engine proves
nontriviality.  Deciding Witt equality in general is out of scope.
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import ONE, LaurentPoly, laurent_gcd, unit_equal
from .matrices import LambdaMatrix, in_span
from .modules import (
    ModuleElement,
    PresentedModule,
    direct_sum,
    submodule_presentation,
)
from .involution import (
    SemilinearMap,
    direct_sum_involution,
    is_involutive,
    is_well_defined,
    verify_anti_isometry,
)
from .pairing import (
    GramPairing,
    check_hermitian,
    check_nonsingular,
    direct_sum_pairing,
    negate_pairing,
    pair,
    vanishes_on_relations,
)


@dataclass(frozen=True)
class EquivariantTriple:
    module: PresentedModule
    pairing: GramPairing
    involution: SemilinearMap

    @property
    def order(self) -> LaurentPoly:
        return self.module.order


@dataclass(frozen=True)
class SubmoduleWitness:
    generators: tuple[ModuleElement, ...]


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def validate(T: EquivariantTriple) -> ValidationReport:
    """Run every structural axiom and report pass/fail per check."""
    checks: list[AxiomCheck] = []

    torsion = T.module.is_torsion
    checks.append(
        AxiomCheck("torsion", torsion, "" if torsion else f"free rank {T.module.free_rank}")
    )
    checks.append(AxiomCheck("hermitian", check_hermitian(T.pairing)))
    checks.append(AxiomCheck("pairing_well_defined", vanishes_on_relations(T.pairing)))
    checks.append(
        AxiomCheck(
            "nonsingular",
            check_nonsingular(T.pairing) if torsion else False,
            "" if torsion else "skipped: module not torsion",
        )
    )
    wd = is_well_defined(T.involution)
    checks.append(AxiomCheck("involution_well_defined", wd))
    checks.append(AxiomCheck("involutive", is_involutive(T.involution) if wd else False))
    checks.append(
        AxiomCheck(
            "anti_isometry",
            verify_anti_isometry(T.involution, T.pairing) if wd else False,
        )
    )
    if torsion and not T.module.order.is_zero():
        tm1 = LaurentPoly({1: 1, 0: -1})
        invertible = (
            T.module.order.is_unit()
            or laurent_gcd(T.module.order, tm1).is_one()
        )
    else:
        invertible = False
    checks.append(
        AxiomCheck(
            "one_minus_t_invertible",
            invertible,
            "" if invertible else "order shares a factor with t - 1",
        )
    )
    return ValidationReport(tuple(checks))


def triple_sum(T1: EquivariantTriple, T2: EquivariantTriple) -> EquivariantTriple:
    module = direct_sum(T1.module, T2.module)
    return EquivariantTriple(
        module=module,
        pairing=direct_sum_pairing(T1.pairing, T2.pairing, module),
        involution=direct_sum_involution(T1.involution, T2.involution, module),
    )


def negate(T: EquivariantTriple) -> EquivariantTriple:
    return EquivariantTriple(
        module=T.module,
        pairing=negate_pairing(T.pairing),
        involution=T.involution,
    )


@dataclass(frozen=True)
class MetabolizerReport:
    pairwise_vanishing: AxiomCheck
    order_identity: AxiomCheck
    tau_invariant: AxiomCheck

    @property
    def ok(self) -> bool:
        return (
            self.pairwise_vanishing.passed
            and self.order_identity.passed
            and self.tau_invariant.passed
        )

    def checks(self) -> tuple[AxiomCheck, ...]:
        return (self.pairwise_vanishing, self.order_identity, self.tau_invariant)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks()
            ],
        }


def is_metabolizer(T: EquivariantTriple, P: SubmoduleWitness) -> MetabolizerReport:
    """Check the three metabolizer conditions for a generated submodule.

    (a) the pairing vanishes on generator pairs (sesquilinearity extends
    this to the whole submodule); (b) |P| * conj|P| equals |H| up to units;
    (c) the submodule is invariant under the involution, both inclusions
    checked through span membership.
    """
    n = T.module.generators
    for g in P.generators:
        if len(g.coeffs) != n:
            raise ValueError("witness generator does not live in the module")

    vanish = True
    for x in P.generators:
        for y in P.generators:
            if not pair(T.pairing, x, y).is_zero():
                vanish = False
                break
        if not vanish:
            break
    check_a = AxiomCheck("pairwise_vanishing", vanish)

    sub = submodule_presentation(T.module, list(P.generators))
    if sub.is_torsion and T.module.is_torsion:
        product = sub.order * sub.order.conjugate()
        order_ok = unit_equal(product, T.module.order)
        detail = f"|P| = {sub.order}"
    else:
        order_ok = False
        detail = "submodule or module not torsion"
    check_b = AxiomCheck("order_identity", order_ok, detail)

    if P.generators:
        G = LambdaMatrix(zip(*[g.coeffs for g in P.generators]))
        span_matrix = G.hstack(T.module.relations)
        images = [T.involution.apply(g) for g in P.generators]
        forward = all(
            in_span(list(img.coeffs), span_matrix) is not None for img in images
        )
        if forward:
            TG = LambdaMatrix(zip(*[img.coeffs for img in images]))
            tspan = TG.hstack(T.module.relations)
            backward = all(
                in_span(list(g.coeffs), tspan) is not None for g in P.generators
            )
        else:
            backward = False
        tau_ok = forward and backward
    else:
        tau_ok = True
    check_c = AxiomCheck("tau_invariant", tau_ok)

    return MetabolizerReport(check_a, check_b, check_c)


def diagonal_metabolizer(T: EquivariantTriple) -> SubmoduleWitness:
    """The diagonal witness {(g_i, g_i)} inside T + (-T)."""
    double = triple_sum(T, negate(T))
    n = T.module.generators
    gens = [
        double.module.element([ONE if j in (i, n + i) else 0 for j in range(2 * n)])
        for i in range(n)
    ]
    return SubmoduleWitness(generators=tuple(gens))
