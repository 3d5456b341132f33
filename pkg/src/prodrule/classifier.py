"""Classification of all real sequences satisfying the product rule.

The case split runs on (a, b) = (T(0), T(1)).  The (1, 1) instance of
the rule forces b = b^2 + a^2.  When a != 0 the sequence is forced to
the constant 1/2; when a = b = 0 it collapses to the zero sequence; the
remaining branch a = 0, b = 1 leaves c = T(2) free, and every further
instance of the rule imposes a polynomial constraint on c.

Two probe instances suffice.  The (3, 3) and (3, 5) constraints share
exactly the rational roots 0, 1 and 3, each selecting one closed-form
family, and two exact certificates rule out anything else surviving:
deflating the probe GCD by its rational roots must leave a constant
(`residual_cofactor_check`), and the two constraint cofactors left after
removing the shared roots must be coprime (`cofactor_gcd_check`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import Poly, RatFunc, exact_div, extract_rational_factors, poly_gcd, rational_roots
from .seqengine import FamilyId, SymbolicTable, derive_d, residual_numerator

__all__ = [
    "DEFAULT_PROBES",
    "Branch",
    "BranchRecord",
    "ClassificationReport",
    "ConstraintRecord",
    "WeakProbesError",
    "branch_analysis",
    "cofactor_gcd_check",
    "linear_factor_str",
    "solve_c",
]

DEFAULT_PROBES: tuple[tuple[int, int], ...] = ((3, 3), (3, 5))

FAMILY_BY_C: dict[Fraction, FamilyId] = {
    Fraction(0): FamilyId.PERIOD3,
    Fraction(1): FamilyId.CEIL_HALF,
    Fraction(3): FamilyId.TRIANGULAR,
}

PERIOD3_NOTE = (
    "c = 0 selects the period-3 family, whose value is 1 exactly at "
    "indices n = 1 (mod 3)"
)


class WeakProbesError(ValueError):
    """Every probe residual vanished identically, so nothing constrains c."""


class Branch(enum.Enum):
    """The three cases of the split on (T(0), T(1))."""

    A_NONZERO = "a_nonzero"
    A0_B0 = "a0_b0"
    A0_B1 = "a0_b1"


@dataclass(frozen=True)
class BranchRecord:
    """Outcome of one branch: which families it forces and why."""

    branch: Branch
    conclusion: str
    families: tuple[FamilyId, ...]
    justification: tuple[str, ...]


@dataclass(frozen=True)
class ConstraintRecord:
    """One probe instance (m, n) reduced to a polynomial constraint on c."""

    m: int
    n: int
    numerator: Poly
    roots: tuple[tuple[Fraction, int], ...]
    cofactor: Poly


@dataclass
class ClassificationReport:
    """Full result of the constraint-solving classification."""

    branches: list[BranchRecord]
    d_formula: RatFunc
    constraints: list[ConstraintRecord]
    surviving_c: tuple[Fraction, ...]
    family_map: dict[Fraction, FamilyId]
    residual_cofactor_check: bool
    cofactor_gcd_check: bool
    notes: tuple[str, ...] = ()
    unresolved_cofactor: Poly | None = field(default=None, repr=False)

    @property
    def all_checks_pass(self) -> bool:
        return self.residual_cofactor_check and self.cofactor_gcd_check

    def to_dict(self) -> dict:
        """Stable JSON shape; rationals are rendered as strings."""
        return {
            "branches": [
                {
                    "branch": rec.branch.value,
                    "conclusion": rec.conclusion,
                    "families": [fam.value for fam in rec.families],
                    "justification": list(rec.justification),
                }
                for rec in self.branches
            ],
            "d": str(self.d_formula),
            "constraints": [
                {
                    "m": rec.m,
                    "n": rec.n,
                    "numerator": str(rec.numerator),
                    "roots": [[str(root), mult] for root, mult in rec.roots],
                    "factors": [linear_factor_str(root, mult) for root, mult in rec.roots],
                    "cofactor": str(rec.cofactor),
                }
                for rec in self.constraints
            ],
            "surviving_c": [str(root) for root in self.surviving_c],
            "family_map": {str(root): fam.value for root, fam in self.family_map.items()},
            "cofactor_check": self.residual_cofactor_check,
            "cofactor_gcd_check": self.cofactor_gcd_check,
            "notes": list(self.notes),
        }


def linear_factor_str(root: Fraction, multiplicity: int = 1) -> str:
    """Render the factor (c - root)^multiplicity the way the CLI prints it."""
    base = str(Poly((-root, 1)))
    return f"({base})^{multiplicity}" if multiplicity > 1 else base


def branch_analysis() -> list[BranchRecord]:
    """Case split on (T(0), T(1)) forced by the (1, 1) and m = 1 instances."""
    return [
        BranchRecord(
            branch=Branch.A_NONZERO,
            conclusion="T(0) != 0 forces the constant sequence T(n) = 1/2",
            families=(FamilyId.HALF,),
            justification=(
                "instance (1, 1): T(1) = T(1)^2 + T(0)^2",
                "T(1) = 1 would force T(0) = 0, so T(1) != 1",
                "instance m = 1: T(n)(1 - T(1)) = T(0) T(n-1), and T(1) = "
                "T(1)^2 + T(0)^2 turns the constant ratio into T(1)/T(0), "
                "so T(n) = T(0) r^n with r = T(1)/T(0)",
                "instance m = 2: the geometric form satisfies the rule only "
                "with r = 1, so the sequence is a constant v = T(0)",
                "v = 2v^2 with v != 0 gives v = 1/2",
            ),
        ),
        BranchRecord(
            branch=Branch.A0_B0,
            conclusion="T(0) = T(1) = 0 forces the zero sequence",
            families=(FamilyId.ZERO,),
            justification=(
                "instance m = 1: T(n) = T(1) T(n) + T(0) T(n-1) = 0 for n >= 1",
                "T(0) = 0 holds by hypothesis",
            ),
        ),
        BranchRecord(
            branch=Branch.A0_B1,
            conclusion="T(0) = 0, T(1) = 1 leaves c = T(2) free; resolved by "
            "constraint solving on c",
            families=(),
            justification=(
                "instance (1, 1) with T(0) = 0: T(1) = T(1)^2, so T(1) is 0 or 1",
                "the halving identities determine every T(n) from c = T(2) "
                "and d = T(3)",
                "equating two product-rule routes to T(18) pins d to "
                "(3c^3 + c)/(c^2 + 2c - 1)",
                "each remaining instance (m, n) becomes a polynomial "
                "constraint on c with roots at the genuine solutions",
            ),
        ),
    ]


def solve_c(
    probe_pairs=DEFAULT_PROBES,
    table: SymbolicTable | None = None,
) -> ClassificationReport:
    """Solve the a = 0, b = 1 branch by probing product-rule instances.

    Each probe (m, n) contributes the numerator of its residual; the
    monic GCD of the nonzero numerators carries every value of c that
    survives all probes.  Its rational roots are extracted and deflated;
    a constant leftover certifies the root set is complete.

    Raises WeakProbesError when every probe residual is identically zero
    (for example any probe with a component below 3).
    """
    probes = [(int(m), int(n)) for m, n in probe_pairs]
    if not probes:
        raise ValueError("at least one probe pair is required")
    for m, n in probes:
        if m < 2 or n < 2:
            raise ValueError(f"probe ({m}, {n}) is out of range; both indices must be >= 2")
    if table is None:
        table = SymbolicTable()

    constraints: list[ConstraintRecord] = []
    nonzero: list[Poly] = []
    for m, n in probes:
        numerator = residual_numerator(m, n, table)
        if numerator.is_zero:
            constraints.append(ConstraintRecord(m, n, numerator, (), Poly()))
            continue
        roots, cofactor = extract_rational_factors(numerator)
        constraints.append(ConstraintRecord(m, n, numerator, roots, cofactor))
        nonzero.append(numerator)
    if not nonzero:
        raise WeakProbesError(
            "every probe residual is identically zero; add a pair with both "
            "components >= 3"
        )

    shared = nonzero[0]
    for numerator in nonzero[1:]:
        shared = poly_gcd(shared, numerator)
    shared = shared.monic()

    roots, leftover = extract_rational_factors(shared)
    complete = leftover.degree == 0
    surviving = tuple(root for root, _ in roots)
    family_map = {root: FAMILY_BY_C[root] for root in surviving if root in FAMILY_BY_C}

    notes = [PERIOD3_NOTE]
    if not complete:
        notes.append(
            f"unresolved common factor {leftover}; the surviving set may be incomplete"
        )

    return ClassificationReport(
        branches=branch_analysis(),
        d_formula=derive_d(),
        constraints=constraints,
        surviving_c=surviving,
        family_map=family_map,
        residual_cofactor_check=complete,
        cofactor_gcd_check=cofactor_gcd_check(table),
        notes=tuple(notes),
        unresolved_cofactor=None if complete else leftover,
    )


def cofactor_gcd_check(table: SymbolicTable | None = None) -> bool:
    """Certify that the (3, 3) and (3, 5) constraints only meet at 0, 1, 3.

    Removes the rational roots the two numerators share, then demands the
    leftover cofactors be coprime.  A nontrivial GCD here would mean a
    common factor beyond the shared linear ones, that is a possible
    common real root the rational-root extraction cannot see.
    """
    if table is None:
        table = SymbolicTable()
    n33 = residual_numerator(3, 3, table)
    n35 = residual_numerator(3, 5, table)
    roots33 = dict(rational_roots(n33))
    roots35 = dict(rational_roots(n35))
    cof33, cof35 = n33, n35
    for root in sorted(set(roots33) & set(roots35)):
        lin = Poly((-root, 1))
        for _ in range(min(roots33[root], roots35[root])):
            cof33 = exact_div(cof33, lin)
            cof35 = exact_div(cof35, lin)
    return poly_gcd(cof33, cof35).degree == 0
