"""Constructive solution of f1*h1 + ... + fn*hn = 1.

Pipeline: split the inputs onto the fixed slice, certify that the stacked
Koszul matrix (A, -B) has full rank everywhere via the minor-gcd
certificate, solve the first split equation with a Bezout combination,
correct it through the (A, -B) system so the second equation holds too,
reassemble, extend off the slice, and re-verify the identity by exact
coefficient equality.  Validation is certificate-based on purpose: slice
coprimality of the splits alone misses common zeros that sit off the slice
plane, while the certificate is sound and complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .cpoly import CPoly, bezout_multi
from .hpoly import (
    HP_ONE,
    HPoly,
    Sphere,
    SphereZero,
    SplitPair,
    real_poly_sphere_factors,
    zeros_on_sphere,
)
from .polymatrix import (
    FullRankCertificate,
    RankObstruction,
    minor_gcd_certificate,
    solve_full_rank,
)
from .scalars import Quat
from .syzygy import (
    SyzygyPair,
    build_koszul,
    certificate_column_order,
    hat_swap,
    interleave_splits,
)


@dataclass(frozen=True)
class SolverConfig:
    """Tunables for validation and reporting."""

    minor_budget: int = 2000
    sample_points: int = 20


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class CoronaInstance:
    """A family of quaternionic polynomials, at least one nonzero."""

    fs: tuple[HPoly, ...]
    names: tuple[str, ...]

    @classmethod
    def from_polys(cls, fs: Sequence[HPoly], names: Optional[Sequence[str]] = None) -> "CoronaInstance":
        fs = tuple(fs)
        if names is None:
            names = tuple(f"f{k + 1}" for k in range(len(fs)))
        else:
            names = tuple(names)
            if len(names) != len(fs):
                raise ValueError("one name per polynomial")
        return cls(fs, names)

    @property
    def n(self) -> int:
        return len(self.fs)

    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.fs)

    def check_not_all_zero(self) -> None:
        if not self.fs:
            raise ValueError("empty instance")
        if all(f.is_zero() for f in self.fs):
            raise ValueError("all polynomials are zero")


@dataclass(frozen=True)
class CommonZeroObstruction:
    """Nonconstant gcd of the maximal minors of (A, -B).

    Its roots are the slice points over whose spheres the family has a
    common zero, so the unit cannot be generated.
    """

    gcd: CPoly
    minors_examined: int


class InternalCheckError(RuntimeError):
    """A mandatory exact post-check failed; indicates a convention bug."""


@dataclass(frozen=True)
class SolveTrace:
    """Intermediate data of one solver run, kept for inspection."""

    splits: tuple[SplitPair, ...]
    particular: tuple[CPoly, ...]
    alpha: tuple[CPoly, ...]
    beta: tuple[CPoly, ...]
    corrected: tuple[CPoly, ...]


@dataclass(frozen=True)
class CoronaSolution:
    hs: tuple[HPoly, ...]
    certificate: FullRankCertificate
    trace: SolveTrace

    def h_degrees(self) -> tuple[int, ...]:
        return tuple(h.degree for h in self.hs)


def validate(
    inst: CoronaInstance, config: SolverConfig = DEFAULT_CONFIG
) -> Union[FullRankCertificate, CommonZeroObstruction]:
    """Certify no-common-zeros, or return the obstruction gcd.

    A found certificate implies the stacked matrix has full rank at every
    point, which rules out common zeros; conversely a common zero forces
    every maximal minor to vanish at the matching slice point, so the
    accumulated gcd stays nonconstant.
    """
    inst.check_not_all_zero()
    pair = build_koszul(inst.fs)
    outcome = minor_gcd_certificate(
        pair.combined(),
        budget=config.minor_budget,
        column_order=certificate_column_order(pair),
    )
    if isinstance(outcome, RankObstruction):
        return CommonZeroObstruction(outcome.gcd, outcome.minors_examined)
    return outcome


def particular_solution(splits: Sequence[SplitPair]) -> list[CPoly]:
    """Vector u with <(F1, G1, ..., Fn, Gn), u> = 1 from a Bezout combination.

    Odd slots of u play the H components, even slots the negated hatted K
    components of the first split equation.
    """
    p = interleave_splits(splits)
    gcd, witnesses = bezout_multi(p)
    if not gcd.is_one():
        raise ValueError(
            f"split components share the slice zeros of {gcd}; no solution exists"
        )
    return witnesses


def correct_and_assemble(
    splits: Sequence[SplitPair],
    u: Sequence[CPoly],
    pair: SyzygyPair,
    cert: FullRankCertificate,
) -> tuple[list[HPoly], SolveTrace]:
    """Fix up a first-equation solution so both split equations hold.

    Solving (A, -B) (alpha; beta) = hat_swap(u) and adding A*hat(beta) to u
    leaves the first equation untouched (columns of A are syzygies) and
    makes the hat-swapped vector land in the column span of A, which is the
    second equation.  Components are then reassembled and extended.
    """
    h_rhs = hat_swap(u)
    x = solve_full_rank(pair.combined(), h_rhs, cert)
    k = pair.A.cols
    alpha, beta = x[:k], x[k:]
    correction = pair.A.mul_vector([b.hat() for b in beta])
    v = [ui + ci for ui, ci in zip(u, correction)]

    p = interleave_splits(splits)
    first = sum((pi * vi for pi, vi in zip(p, v)), CPoly())
    second = sum((pi * wi for pi, wi in zip(p, hat_swap(v))), CPoly())
    if not first.is_one() or not second.is_zero():
        raise InternalCheckError("corrected vector does not satisfy the split system")

    hs = []
    for ell in range(len(splits)):
        h_comp = v[2 * ell]
        k_comp = (-v[2 * ell + 1]).hat()
        hs.append(SplitPair(h_comp, k_comp).extend())
    trace = SolveTrace(tuple(splits), tuple(u), tuple(alpha), tuple(beta), tuple(v))
    return hs, trace


def verify_identity(fs: Sequence[HPoly], hs: Sequence[HPoly]) -> bool:
    """Exact check that sum f_l * h_l equals the constant one."""
    acc = HPoly()
    for f, h in zip(fs, hs):
        acc = acc + f * h
    return acc == HP_ONE


def solve_corona(
    inst: CoronaInstance, config: SolverConfig = DEFAULT_CONFIG
) -> Union[CoronaSolution, CommonZeroObstruction]:
    """Full pipeline; every returned solution is re-verified exactly."""
    inst.check_not_all_zero()
    pair = build_koszul(inst.fs)
    outcome = minor_gcd_certificate(
        pair.combined(),
        budget=config.minor_budget,
        column_order=certificate_column_order(pair),
    )
    if isinstance(outcome, RankObstruction):
        return CommonZeroObstruction(outcome.gcd, outcome.minors_examined)
    u = particular_solution(pair.splits)
    hs, trace = correct_and_assemble(pair.splits, u, pair, outcome)
    if not verify_identity(inst.fs, hs):
        raise InternalCheckError("assembled solution failed the star identity")
    return CoronaSolution(tuple(hs), outcome, trace)


# ---------------------------------------------------------------------------
# Diagnosis of obstructed instances


@dataclass(frozen=True)
class SphereDiagnosis:
    """Zero structure of every input polynomial on one obstructing sphere."""

    sphere: Sphere
    per_poly: tuple[SphereZero, ...]
    common_points: tuple[Quat, ...]
    whole_sphere: bool


@dataclass(frozen=True)
class DiagnosisReport:
    entries: tuple[SphereDiagnosis, ...]
    unresolved: CPoly  # real-coefficient factor with no rational sphere data

    def found_common_zero(self) -> bool:
        return any(e.whole_sphere or e.common_points for e in self.entries)


def diagnose_common_zero(
    inst: CoronaInstance, obstruction: CommonZeroObstruction
) -> DiagnosisReport:
    """Name the common zeros behind an obstruction when the data is rational.

    The obstruction gcd lives over the Gaussian rationals; multiplying by
    its hat gives a real polynomial with the same spheres, whose rational
    sphere factors are extracted exactly.  Each such sphere is then resolved
    against every input polynomial.  Factors without rational sphere data
    are reported unresolved instead of being approximated.
    """
    gcd = obstruction.gcd
    if gcd.is_zero():
        return DiagnosisReport((), CPoly())
    norm = (gcd * gcd.hat()).monic()
    spheres, unresolved = real_poly_sphere_factors(norm)
    seen = set()
    entries = []
    for sphere, _ in spheres:
        key = (sphere.x, sphere.y_squared)
        if key in seen:
            continue
        seen.add(key)
        per_poly = tuple(zeros_on_sphere(f, sphere) for f in inst.fs)
        whole = all(res.kind == "spherical" for res in per_poly)
        common: tuple[Quat, ...] = ()
        if not whole and all(res.kind != "none" for res in per_poly):
            points = {res.point for res in per_poly if res.kind == "point"}
            if len(points) == 1:
                common = (points.pop(),)
        entries.append(SphereDiagnosis(sphere, per_poly, common, whole))
    return DiagnosisReport(tuple(entries), unresolved)
