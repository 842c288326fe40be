"""Identity sweeps cross-checking the engine, the oracle and the closed forms.

Each suite yields :class:`VerifyReport` records; a report passes when its two
sides are equal as exact rationals (or, for the sign classification, when the
predicted and observed classes agree).
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import closed
from .genus import Genus
from .oracle import genus_value_oracle, total_chern_series
from .residue import genus_value
from .series import Series
from .space import Space


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    instance: str
    lhs: str
    rhs: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "instance": self.instance,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class SweepConfig:
    nmax: int = 8
    dmax: int = 5
    rmax: int = 3
    seed: int = 20200916
    sinh_trials: int = 20
    sinh_order: int = 40

    def spaces(self) -> list[Space]:
        return sweep_spaces(self.nmax, self.dmax, self.rmax)


SWEEP_GENERA = (
    Genus.todd(),
    Genus.ahat(),
    Genus.signature(),
    Genus.euler(),
    Genus.ty(Fraction(1, 2)),
    Genus.ty(2),
    Genus.ak(2),
    Genus.ak(3),
)


def sweep_spaces(nmax: int, dmax: int, rmax: int, nmin: int = 0) -> list[Space]:
    """All X_n(d) with nmin <= n <= nmax, r <= rmax, non-decreasing degrees <= dmax."""
    out = []
    for n in range(nmin, nmax + 1):
        for r in range(rmax + 1):
            for degs in itertools.combinations_with_replacement(range(1, dmax + 1), r):
                out.append(Space(n, degs))
    out.sort(key=lambda sp: (sp.n, sp.degrees))
    return out


def _check(identity: str, instance: str, lhs, rhs) -> VerifyReport:
    return VerifyReport(identity, instance, str(lhs), str(rhs), lhs == rhs)


def _inst(sp: Space, g: Genus | None = None) -> str:
    return f"{sp} {g.label}" if g is not None else str(sp)


def suite_engine_oracle(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        for g in SWEEP_GENERA:
            yield _check("engine≡oracle", _inst(sp, g), genus_value(sp, g), genus_value_oracle(sp, g))


def suite_ahat_closed(cfg: SweepConfig) -> Iterator[VerifyReport]:
    g = Genus.ahat()
    for sp in cfg.spaces():
        if sp.n % 2 == 0:
            yield _check("ahat-closed", _inst(sp), closed.ahat_closed(sp), genus_value(sp, g))


def suite_ahat_odd(cfg: SweepConfig) -> Iterator[VerifyReport]:
    g = Genus.ahat()
    for sp in cfg.spaces():
        if sp.n % 2:
            yield _check("ahat-odd-vanishing", _inst(sp, g), genus_value(sp, g), Fraction(0))
            yield _check("ahat-odd-vanishing", _inst(sp) + " closed", closed.ahat_closed(sp), Fraction(0))


def suite_ahat_hypersurface(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for n_half in range(cfg.nmax // 2 + 1):
        for d in range(1, 2 * cfg.dmax + 1):
            sp = Space(2 * n_half, (d,))
            yield _check("ahat-hypersurface", _inst(sp), closed.ahat_hypersurface(n_half, d), closed.ahat_closed(sp))


def suite_ahat_iterated(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        if sp.n % 2 == 0 and sp.r >= 2:
            yield _check("ahat-iterated", _inst(sp), closed.ahat_iterated(sp), closed.ahat_closed(sp))


def _observed_sign(x: Fraction) -> str:
    return "zero" if x == 0 else ("positive" if x > 0 else "negative")


def suite_ahat_sign(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        if sp.n % 2 == 0 and sp.spin:
            predicted = closed.ahat_sign_class(sp).value
            observed = _observed_sign(closed.ahat_closed(sp))
            yield _check("ahat-sign", _inst(sp), predicted, observed)


def suite_alpha(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        if not sp.spin:
            continue
        alpha = closed.alpha_invariant(sp)
        m = sp.n % 4
        if m == 2:
            # alpha = A-hat / 2 lives in Z, so A-hat must be an even integer
            yield _check("alpha-consistency", _inst(sp) + " ahat mod 2", closed.ahat_closed(sp) % 2, Fraction(0))
        elif m == 0:
            yield _check("alpha-consistency", _inst(sp) + " integral", alpha.value.denominator, 1)
        elif m == 1:
            base = closed.alpha_mod2_sum(sp)
            for i in range(sp.r - 1):
                yield _check(
                    "alpha-consistency", _inst(sp) + f" exclude d[{i}]", closed.alpha_mod2_sum(sp, excluded=i), base
                )
        else:
            yield _check("alpha-consistency", _inst(sp) + " zero", alpha.kind, "zero")


def suite_todd(cfg: SweepConfig) -> Iterator[VerifyReport]:
    g = Genus.todd()
    for sp in cfg.spaces():
        t2 = closed.todd_t2(sp)
        yield _check("T1≡T2", _inst(sp) + " T1=T2", closed.todd_t1(sp), t2)
        yield _check("T1≡T2", _inst(sp) + " T2=engine", t2, genus_value(sp, g))


def _lagrange_at(xs, ys, x0) -> Fraction:
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        w = Fraction(yi)
        for j, xj in enumerate(xs):
            if j != i:
                w *= Fraction(x0 - xj, xi - xj)
        total += w
    return total


def suite_chi_y(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        yield _check("chi_y-interp", _inst(sp) + " y=0", genus_value(sp, Genus.ty(0)), genus_value(sp, Genus.todd()))
        yield _check(
            "chi_y-interp", _inst(sp) + " y=1", genus_value(sp, Genus.ty(1)), genus_value(sp, Genus.signature())
        )
        euler = genus_value(sp, Genus.euler())
        yield _check("chi_y-interp", _inst(sp) + " y=-1", genus_value(sp, Genus.ty(-1)), euler)
        # chi_y has degree <= n in y: extrapolate to y = -1 from y = 0..n
        ys = list(range(sp.n + 1))
        vals = [genus_value(sp, Genus.ty(y)) for y in ys]
        yield _check("chi_y-interp", _inst(sp) + " y=-1 extrapolated", _lagrange_at(ys, vals, -1), euler)


def suite_euler(cfg: SweepConfig) -> Iterator[VerifyReport]:
    g = Genus.euler()
    for sp in cfg.spaces():
        closed_value = closed.euler_closed(sp)
        yield _check("euler-closed", _inst(sp), closed_value, genus_value(sp, g))
        top_chern = sp.total_degree * total_chern_series(sp).coeff(sp.n)
        yield _check("euler-closed", _inst(sp) + " top Chern", closed_value, top_chern)


def suite_a1(cfg: SweepConfig) -> Iterator[VerifyReport]:
    todd = Genus.todd()
    for sp in cfg.spaces():
        t = genus_value(sp, todd)
        yield _check("A1≡Todd", _inst(sp) + " closed", closed.ak_closed(sp, 1), t)
        yield _check("A1≡Todd", _inst(sp) + " engine", genus_value(sp, Genus.ak(1)), t)


def suite_a2(cfg: SweepConfig) -> Iterator[VerifyReport]:
    ahat = Genus.ahat()
    for sp in cfg.spaces():
        target = 2**sp.n * genus_value(sp, ahat)
        yield _check("A2≡2^n·Ahat", _inst(sp) + " closed", closed.ak_closed(sp, 2), target)
        yield _check("A2≡2^n·Ahat", _inst(sp) + " engine", genus_value(sp, Genus.ak(2)), target)


def suite_ak(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        for k in (1, 2, 3, 4):
            g = Genus.ak(k)
            yield _check("ak-closed", _inst(sp, g), closed.ak_closed(sp, k), genus_value(sp, g))


def suite_permutation(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        if sp.r < 2:
            continue
        perms = sorted(set(itertools.permutations(sp.degrees)) - {sp.degrees})
        for g in SWEEP_GENERA:
            base = genus_value(sp, g)
            for p in perms:
                q = sp.with_degrees(p)
                yield _check("perm-invariance", f"{q} vs {sp} {g.label}", genus_value(q, g), base)


def suite_degree_one(cfg: SweepConfig) -> Iterator[VerifyReport]:
    for sp in cfg.spaces():
        for g in SWEEP_GENERA:
            base = genus_value(sp, g)
            for q in (sp.with_degrees(sp.degrees + (1,)), sp.with_degrees((1,) + sp.degrees)):
                yield _check("degree1-absorption", f"{q} vs {sp} {g.label}", genus_value(q, g), base)


def sinh_series(order: int) -> Series:
    """R(t) = 2 sinh(t/2) through t**order."""
    coeffs = []
    f = Fraction(1)
    for i in range(order + 1):
        if i:
            f /= i
        coeffs.append(f * 2 / 2**i if i % 2 else Fraction(0))
    return Series(coeffs)


def sinh_identity_sides(a, b, c, order: int) -> tuple[Series, Series]:
    """Both sides of R((a+c)t) R((b+c)t) = R(at) R(bt) + R((a+b+c)t) R(ct)."""
    R = sinh_series(order)
    lhs = R.subst_scale(a + c) * R.subst_scale(b + c)
    rhs = R.subst_scale(a) * R.subst_scale(b) + R.subst_scale(a + b + c) * R.subst_scale(c)
    return lhs, rhs


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-30, 30), rng.randint(1, 12))


def suite_sinh(cfg: SweepConfig) -> Iterator[VerifyReport]:
    rng = random.Random(cfg.seed)
    for _ in range(cfg.sinh_trials):
        a, b, c = (random_rational(rng) for _ in range(3))
        lhs, rhs = sinh_identity_sides(a, b, c, cfg.sinh_order)
        inst = f"(a,b,c)=({a},{b},{c}) order {cfg.sinh_order}"
        bad = next((i for i in range(cfg.sinh_order + 1) if lhs.coeff(i) != rhs.coeff(i)), None)
        if bad is None:
            yield VerifyReport("sinh-addition", inst, "all coefficients", "all coefficients", True)
        else:
            yield VerifyReport("sinh-addition", inst + f" t^{bad}", str(lhs.coeff(bad)), str(rhs.coeff(bad)), False)


SUITES: dict[str, Callable[[SweepConfig], Iterable[VerifyReport]]] = {
    "engine≡oracle": suite_engine_oracle,
    "ahat-closed": suite_ahat_closed,
    "ahat-odd-vanishing": suite_ahat_odd,
    "ahat-hypersurface": suite_ahat_hypersurface,
    "ahat-iterated": suite_ahat_iterated,
    "ahat-sign": suite_ahat_sign,
    "alpha-consistency": suite_alpha,
    "T1≡T2": suite_todd,
    "chi_y-interp": suite_chi_y,
    "euler-closed": suite_euler,
    "A1≡Todd": suite_a1,
    "A2≡2^n·Ahat": suite_a2,
    "ak-closed": suite_ak,
    "perm-invariance": suite_permutation,
    "degree1-absorption": suite_degree_one,
    "sinh-addition": suite_sinh,
}

# alternative spellings accepted by --only
ALIASES = {
    "engine-oracle": "engine≡oracle",
    "thm1.1": "ahat-closed",
    "eq1.2": "ahat-hypersurface",
    "thm1.3": "ahat-iterated",
    "thm4.7": "ahat-sign",
    "thm1.2": "alpha-consistency",
    "T1-T2": "T1≡T2",
    "A1-Todd": "A1≡Todd",
    "A2-2^n-Ahat": "A2≡2^n·Ahat",
    "prop4.4-specialization": "sinh-addition",
}


def resolve_suite(name: str) -> str:
    if name in SUITES:
        return name
    if name in ALIASES:
        return ALIASES[name]
    raise ValueError(f"unknown identity {name!r}; choose from {', '.join([*SUITES, *ALIASES])}")


def _run_one(args) -> list[VerifyReport]:
    name, cfg = args
    return list(SUITES[name](cfg))


def run_verify(cfg: SweepConfig, names: Iterable[str] | None = None, jobs: int = 1) -> list[VerifyReport]:
    """Run the selected suites (all by default); report order does not depend on ``jobs``."""
    selected = [resolve_suite(n) for n in names] if names else list(SUITES)
    selected = list(dict.fromkeys(selected))
    tasks = [(name, cfg) for name in selected]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, tasks))
    else:
        chunks = [_run_one(t) for t in tasks]
    return [rep for chunk in chunks for rep in chunk]
