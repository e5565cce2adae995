"""Command line front end.

Every subcommand writes one JSON report to stdout and, when stderr is a
terminal, a short human-readable summary to stderr.  Exit status: 0 when all
reported residuals are within tolerance, 1 on a numerical failure, 2 on a
usage error.  The environment variable LEMNIS_TOL overrides the default
pass tolerance.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction

from .curves import (
    Curve,
    CurvePoint,
    abel_jacobi,
    equivalent_mod_group,
    inverse_quartic,
    inverse_quartic_t_routes,
    inverse_sextic,
    lift_branch,
    mul_one_plus_i,
    mul_one_plus_zeta,
    ratio_identities_quartic,
    ratio_identities_sextic,
    special_point,
)
from .hypergeometric import SchwarzVariant
from .meaniter import (
    MeanPair,
    closed_form_limit,
    cubic_preimage_x0,
    iterate_until_converged,
)
from .monodromy import (
    AffineMap,
    Ring,
    as_affine,
    base_change_affine,
    general_m0_m1,
    group_closure,
    m0_m1_closed_form,
    n_matrices,
    ring_one,
)
from .numerics import DomainError, IterationLimitError, PathError, Tolerance
from .theta import (
    Modulus,
    OmegaPower,
    TAU_I,
    TAU_ZETA,
    ThetaChar,
    TorusPoint,
    addition_check,
    canonical_torus_point,
    i_multiple,
    omega_multiple,
    one_plus_i_multiple,
    one_plus_zeta_multiple,
    quasi_period_factor,
    theta,
    theta_constants,
    theta_dz,
)

_DEFAULT_TOL = 1e-10
_MASK64 = (1 << 64) - 1

_HALF_CHARS = (
    ThetaChar(0, 0),
    ThetaChar(0, "1/2"),
    ThetaChar("1/2", 0),
    ThetaChar("1/2", "1/2"),
)


class SplitMix64:
    """Deterministic 64-bit generator; splittable, tiny, reproducible."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0 ** -53)

    def int_range(self, lo: int, hi: int) -> int:
        return lo + self.next_u64() % (hi - lo + 1)


def parse_complex(text: str) -> complex:
    """Parse 're+imi' (and plain reals / pure imaginaries)."""
    cleaned = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise DomainError(f"cannot parse complex number {text!r}") from exc


def format_complex(w: complex) -> str:
    sign = "+" if w.imag >= 0 or math.isnan(w.imag) else "-"
    return f"{w.real!r}{sign}{abs(w.imag)!r}i"


def format_rational(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _env_tol() -> float:
    raw = os.environ.get("LEMNIS_TOL")
    if raw is None:
        return _DEFAULT_TOL
    try:
        val = float(raw)
    except ValueError as exc:
        raise DomainError(f"LEMNIS_TOL={raw!r} is not a number") from exc
    if not 0.0 < val < 1.0:
        raise DomainError("LEMNIS_TOL must lie in (0, 1)")
    return val


def _emit(report: dict, started: float) -> int:
    report["elapsed_ms"] = round(1000.0 * (time.perf_counter() - started), 3)
    sys.stdout.write(json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n")
    if sys.stderr.isatty():
        lines = [f"{report['command']}: {'PASS' if report['pass'] else 'FAIL'}"]
        for r in report["residuals"]:
            mark = "ok " if r["value"] < r["tol"] else "BAD"
            lines.append(f"  [{mark}] {r['name']:<40} {r['value']:.3e} (tol {r['tol']:.1e})")
        sys.stderr.write("\n".join(lines) + "\n")
    return 0 if report["pass"] else 1


def _finish(command: str, inputs: dict, outputs: dict, residuals: list, seed: int | None, started: float) -> int:
    report = {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "residuals": residuals,
        "pass": all(r["value"] < r["tol"] for r in residuals),
        "seed": seed,
    }
    return _emit(report, started)


# ---------------------------------------------------------------------------
# theta subcommand.

def _cmd_theta(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    tol = args.tol if args.tol is not None else _env_tol()
    try:
        a = Fraction(args.a)
        b = Fraction(args.b)
        char = ThetaChar(a, b)
        z = parse_complex(args.z)
        if args.tau == "i":
            mod = TAU_I
        elif args.tau == "zeta":
            mod = TAU_ZETA
        else:
            mod = Modulus.generic(parse_complex(args.tau))
    except (ValueError, ZeroDivisionError, DomainError) as exc:
        parser.error(str(exc))
    eval_tol = Tolerance(abs_tol=tol * 1e-2, rel_tol=tol * 1e-2)
    value = theta(char, z, mod, eval_tol)
    mirrored = theta(ThetaChar(-a, -b), z, mod, eval_tol)
    flipped = theta(char, -z, mod, eval_tol)
    parity = abs(mirrored - flipped) / max(1.0, abs(flipped))
    residuals = [{"name": "parity", "value": parity, "tol": tol}]
    if z == 0:
        try:
            table = theta_constants(mod)
        except DomainError:
            table = {}
        key, factor = char.reduce()
        if key in table:
            residuals.append(
                {"name": "closed_form", "value": abs(value - factor * table[key]), "tol": tol}
            )
    inputs = {"a": format_rational(a), "b": format_rational(b), "z": format_complex(z), "tau": args.tau}
    outputs = {"value": format_complex(value)}
    return _finish("theta", inputs, outputs, residuals, None, started)


# ---------------------------------------------------------------------------
# agm subcommand.

def _cmd_agm(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    variant = SchwarzVariant.QUARTIC if args.variant == "quartic" else SchwarzVariant.SEXTIC
    default_tol = 1e-11 if variant is SchwarzVariant.QUARTIC else 1e-10
    if args.tol is not None:
        tol = args.tol
    elif os.environ.get("LEMNIS_TOL") is not None:
        tol = _env_tol()
    else:
        tol = default_tol
    try:
        pair = MeanPair(args.a, args.b)
    except DomainError as exc:
        parser.error(str(exc))
    trace = iterate_until_converged(pair, variant, tol=1e-12, max_iter=60)
    closed = closed_form_limit(pair, variant)
    diff = abs(trace.limit - closed)
    inputs = {"variant": args.variant, "a": repr(args.a), "b": repr(args.b)}
    outputs = {
        "iterations": trace.iterations,
        "converged": trace.converged,
        "trace": [[repr(p.a), repr(p.b)] for p in trace.pairs],
        "limit": repr(trace.limit),
        "closed_form": repr(closed),
        "difference": repr(diff),
    }
    residuals = [{"name": "limit_vs_closed_form", "value": diff, "tol": tol}]
    return _finish("agm", inputs, outputs, residuals, None, started)


# ---------------------------------------------------------------------------
# curve subcommand.

def _cmd_curve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    tol = args.tol if args.tol is not None else _env_tol()
    curve = Curve.C_I if args.curve == "i" else Curve.C_ZETA
    try:
        if args.point is not None:
            point = special_point(curve, args.point)
        else:
            if args.t is None:
                raise DomainError("either --t or --point is required")
            t = parse_complex(args.t)
            if abs(t) < 1e-12 or abs(t - 1) < 1e-12:
                raise DomainError("ramification value; select the fiber point with --point")
            point = lift_branch(curve, t, args.branch)
    except (DomainError, ValueError) as exc:
        parser.error(str(exc))
    try:
        z = abel_jacobi(point)
    except (PathError, IterationLimitError) as exc:
        return _finish(
            "curve",
            {"curve": args.curve, "t": args.t, "point": args.point},
            {"error": str(exc)},
            [{"name": "path", "value": math.inf, "tol": tol}],
            None,
            started,
        )
    inputs = {
        "curve": args.curve,
        "t": args.t if args.t is not None else "",
        "branch": args.branch,
        "point": args.point if args.point is not None else "",
        "mul": bool(args.mul),
    }
    outputs = {
        "t": format_complex(point.t),
        "u": format_complex(point.u),
        "at_infinity": point.at_infinity,
        "z": format_complex(z.z),
        "alpha": repr(z.alpha),
        "beta": repr(z.beta),
    }
    residuals = [{"name": "on_curve", "value": _curve_residual(point), "tol": tol}]
    if args.mul:
        image = mul_one_plus_i(point) if curve is Curve.C_I else mul_one_plus_zeta(point)
        z_img = abel_jacobi(image)
        target = canonical_torus_point(curve.modulus, (1 + curve.unit) * z.z)
        witness = equivalent_mod_group(z_img, target, tol=max(tol, 1e-8))
        outputs["mul_t"] = format_complex(image.t)
        outputs["mul_u"] = format_complex(image.u)
        outputs["mul_at_infinity"] = image.at_infinity
        outputs["mul_z"] = format_complex(z_img.z)
        outputs["mul_unit"] = format_complex(witness.unit) if witness.unit is not None else ""
        residuals.append(
            {"name": "mul_group_equivalence", "value": witness.distance, "tol": max(tol, 1e-8)}
        )
    return _finish("curve", inputs, outputs, residuals, None, started)


def _curve_residual(p: CurvePoint) -> float:
    if p.at_infinity:
        return 0.0
    if p.curve is Curve.C_I:
        return abs(p.u ** 4 - p.t * p.t * (p.t - 1)) / max(abs(p.u) ** 4, abs(p.t) ** 3, 1.0)
    return abs(p.u ** 6 - p.t ** 3 * (p.t - 1)) / max(abs(p.u) ** 6, abs(p.t) ** 4, 1.0)


# ---------------------------------------------------------------------------
# verify subcommand: seeded residual sweeps over the identity families.

def _rand_torus(rng: SplitMix64, mod: Modulus) -> TorusPoint:
    return canonical_torus_point(
        mod, rng.uniform(0.03, 0.97) * mod.value + rng.uniform(0.03, 0.97)
    )


def _scaled(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


class _Worst:
    """Track the max residual of a family and the sample that produced it."""

    def __init__(self) -> None:
        self.value = 0.0
        self.sample = ""

    def push(self, value: float, sample: str) -> None:
        if value >= self.value:
            self.value = value
            self.sample = sample


def _suite_addition(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    out: dict[str, _Worst] = {}
    for label, mod in (("tau_i", TAU_I), ("tau_zeta", TAU_ZETA)):
        worst = _Worst()
        for _ in range(n):
            z1, z2 = _rand_torus(rng, mod), _rand_torus(rng, mod)
            res = addition_check(z1.z, z2.z, mod, tol)
            worst.push(max(res), f"z1={format_complex(z1.z)} z2={format_complex(z2.z)}")
        out[f"addition.{label}"] = worst
    return out


def _suite_tau_i(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    mod = TAU_I
    quasi, parity, shift, itimes, oneplusi, squares = (_Worst() for _ in range(6))
    for _ in range(n):
        z = _rand_torus(rng, mod).z
        tag = f"z={format_complex(z)}"
        for char in _HALF_CHARS:
            base = theta(char, z, mod, tol)
            p, q = rng.int_range(-2, 2), rng.int_range(-2, 2)
            shifted = theta(char, z + p * mod.value + q, mod, tol)
            factor = quasi_period_factor(char, p, q, z, mod)
            quasi.push(_scaled(shifted, factor * base), tag + f" p={p} q={q}")
            parity.push(
                _scaled(theta(ThetaChar(-char.a, -char.b), z, mod, tol), theta(char, -z, mod, tol)),
                tag,
            )
            cs = ThetaChar(char.a + p, char.b + q)
            reduced, cf = cs.reduce()
            shift.push(
                _scaled(theta(cs, z, mod, tol), cf * theta(reduced, z, mod, tol)), tag
            )
            pref, target = i_multiple(char, z)
            itimes.push(
                _scaled(theta(char, 1j * z, mod, tol), pref * theta(target, z, mod, tol)), tag
            )
        for pair in one_plus_i_multiple(z, tol):
            oneplusi.push(pair.residual, tag + f" {pair.name}")
        th00 = theta(_HALF_CHARS[0], z, mod, tol)
        th01 = theta(_HALF_CHARS[1], z, mod, tol)
        th10 = theta(_HALF_CHARS[2], z, mod, tol)
        th11 = theta(_HALF_CHARS[3], z, mod, tol)
        rt2 = math.sqrt(2.0)
        squares.push(_scaled(rt2 * th01 ** 2, th00 ** 2 + th11 ** 2), tag)
        squares.push(_scaled(rt2 * th10 ** 2, th00 ** 2 - th11 ** 2), tag)
    jacobi = _Worst()
    lhs = theta_dz(_HALF_CHARS[3], 0j, mod, tol)
    rhs = -math.pi * (
        theta(_HALF_CHARS[0], 0j, mod, tol)
        * theta(_HALF_CHARS[1], 0j, mod, tol)
        * theta(_HALF_CHARS[2], 0j, mod, tol)
    )
    jacobi.push(_scaled(lhs, rhs), "z=0")
    return {
        "tau_i.quasi_periodicity": quasi,
        "tau_i.parity": parity,
        "tau_i.char_shift": shift,
        "tau_i.i_times": itimes,
        "tau_i.one_plus_i": oneplusi,
        "tau_i.two_squares": squares,
        "tau_i.jacobi_derivative": jacobi,
    }


def _suite_tau_zeta(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    mod = TAU_ZETA
    omega_fam, onepz, lincomb = _Worst(), _Worst(), _Worst()
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    for _ in range(n):
        z = _rand_torus(rng, mod).z
        tag = f"z={format_complex(z)}"
        for char in _HALF_CHARS:
            for power, mult in ((OmegaPower.OMEGA, omega), (OmegaPower.OMEGA_SQ, omega * omega)):
                pref, target = omega_multiple(char, z, power)
                omega_fam.push(
                    _scaled(theta(char, mult * z, mod, tol), pref * theta(target, z, mod, tol)),
                    tag + f" {power.name}",
                )
        for pair in one_plus_zeta_multiple(z, tol):
            onepz.push(pair.residual, tag + f" {pair.name}")
        th00 = theta(_HALF_CHARS[0], z, mod, tol)
        th01 = theta(_HALF_CHARS[1], z, mod, tol)
        th10 = theta(_HALF_CHARS[2], z, mod, tol)
        th11 = theta(_HALF_CHARS[3], z, mod, tol)
        e12 = complex(math.cos(math.pi / 6.0), math.sin(math.pi / 6.0))
        lincomb.push(_scaled(th01 ** 2, (th00 ** 2 - omega * omega * th11 ** 2) / e12), tag)
        lincomb.push(_scaled(th10 ** 2, e12 * (th00 ** 2 + omega * th11 ** 2)), tag)
    hi = _Worst()
    table = theta_constants(mod)
    for char, closed in table.items():
        hi.push(abs(theta(char, 0j, mod, tol) - closed), f"char=({char.a},{char.b})")
    jacobi = _Worst()
    lhs = theta_dz(_HALF_CHARS[3], 0j, mod, tol)
    rhs = -math.pi * (
        theta(_HALF_CHARS[0], 0j, mod, tol)
        * theta(_HALF_CHARS[1], 0j, mod, tol)
        * theta(_HALF_CHARS[2], 0j, mod, tol)
    )
    jacobi.push(_scaled(lhs, rhs), "z=0")
    return {
        "tau_zeta.omega_times": omega_fam,
        "tau_zeta.one_plus_zeta": onepz,
        "tau_zeta.linear_combination": lincomb,
        "tau_zeta.constants": hi,
        "tau_zeta.jacobi_derivative": jacobi,
    }


def _sample_point(rng: SplitMix64, curve: Curve) -> tuple[TorusPoint, CurvePoint]:
    mod = curve.modulus
    inverse = inverse_quartic if curve is Curve.C_I else inverse_sextic
    for _ in range(200):
        zp = _rand_torus(rng, mod)
        p = inverse(zp)
        if p.at_infinity:
            continue
        if abs(p.t) < 0.05 or abs(p.t - 1) < 0.05 or abs(p.t) > 40.0:
            continue
        return zp, p
    raise IterationLimitError("failed to sample a well-conditioned curve point")


def _suite_inverse(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    routes, on_curve, ratios = _Worst(), _Worst(), _Worst()
    for _ in range(n):
        zp, p = _sample_point(rng, Curve.C_I)
        tag = f"z={format_complex(zp.z)}"
        t1, t2 = inverse_quartic_t_routes(zp)
        routes.push(_scaled(t1, t2), tag)
        on_curve.push(_curve_residual(p), tag)
        for pair in ratio_identities_quartic(zp):
            ratios.push(pair.residual, tag + f" {pair.name}")
        zp, p = _sample_point(rng, Curve.C_ZETA)
        tag = f"z={format_complex(zp.z)}"
        on_curve.push(_curve_residual(p), tag)
        for pair in ratio_identities_sextic(zp):
            ratios.push(pair.residual, tag + f" {pair.name}")
    return {
        "inverse.t_routes": routes,
        "inverse.on_curve": on_curve,
        "inverse.ratio_identities": ratios,
    }


def _suite_multiplication(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    quartic, sextic = _Worst(), _Worst()
    for _ in range(n):
        for curve, fam in ((Curve.C_I, quartic), (Curve.C_ZETA, sextic)):
            zp, p = _sample_point(rng, curve)
            mul = mul_one_plus_i if curve is Curve.C_I else mul_one_plus_zeta
            if curve is Curve.C_ZETA and abs(4 * p.t - 3) < 0.05:
                continue
            image = mul(p)
            z2 = canonical_torus_point(curve.modulus, (1 + curve.unit) * zp.z)
            inverse = inverse_quartic if curve is Curve.C_I else inverse_sextic
            direct = inverse(z2)
            if image.at_infinity or direct.at_infinity:
                continue
            tag = f"z={format_complex(zp.z)}"
            fam.push(_scaled(image.t, direct.t), tag)
            fam.push(_scaled(image.u, direct.u), tag)
    return {"multiplication.quartic": quartic, "multiplication.sextic": sextic}


def _suite_monodromy(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    orders, hom, special, dual, closure = (_Worst() for _ in range(5))
    for variant, expect in ((SchwarzVariant.QUARTIC, (2, 4, 4)), (SchwarzVariant.SEXTIC, (2, 6, 3))):
        mats = n_matrices(variant)
        got = tuple(m.order() for m in mats)
        orders.push(0.0 if got == expect else 1.0, f"{variant.name}: {got}")
        n0, n1, _ = mats
        words = [n0, n1, n0 @ n1, n1 @ n0 @ n1]
        for _ in range(n):
            a = words[rng.int_range(0, len(words) - 1)]
            b = words[rng.int_range(0, len(words) - 1)]
            lhs = as_affine(a @ b)
            rhs = as_affine(a) @ as_affine(b)
            hom.push(0.0 if lhs == rhs else 1.0, variant.name)
        alpha = 0.25 if variant is SchwarzVariant.QUARTIC else 1.0 / 3.0
        m0, m1 = general_m0_m1(alpha, 0.0, 0.5)
        for got_m, ref in zip((m0, m1), (n_matrices(variant)[0], n_matrices(variant)[1])):
            diff = abs(base_change_affine(got_m, alpha) - ref.as_complex()).max()
            special.push(float(diff), f"{variant.name}")
        summary = group_closure([as_affine(m) for m in mats], cap=2000)
        ok = len(summary.units) == (4 if variant is SchwarzVariant.QUARTIC else 6)
        closure.push(0.0 if ok and summary.has_translation_basis else 1.0, variant.name)
    ga, gb = general_m0_m1(0.3, 0.2, 0.7)
    ca, cb = m0_m1_closed_form(0.3, 0.2, 0.7)
    dual.push(float(max(abs(ga - ca).max(), abs(gb - cb).max())), "(0.3,0.2,0.7)")
    ring = Ring.GAUSS
    trans = AffineMap(ring_one(ring), ring_one(ring))
    summary = group_closure([trans], cap=300)
    closure.push(0.0 if set(summary.units) == {ring_one(ring)} else 1.0, "translation-only")
    return {
        "monodromy.orders": orders,
        "monodromy.affine_hom": hom,
        "monodromy.specialization": special,
        "monodromy.dual_route": dual,
        "monodromy.closure": closure,
    }


def _suite_meaniter(rng: SplitMix64, n: int, tol: Tolerance) -> dict[str, _Worst]:
    quartic, sextic, preimage = _Worst(), _Worst(), _Worst()
    for _ in range(n):
        a = math.exp(rng.uniform(math.log(0.5), math.log(2.0)))
        ratio = math.exp(rng.uniform(math.log(0.1), math.log(10.0)))
        pair = MeanPair(a, a * ratio)
        tag = f"a={a:.6f} b={a * ratio:.6f}"
        tq = iterate_until_converged(pair, SchwarzVariant.QUARTIC, tol=1e-12, max_iter=60)
        quartic.push(abs(tq.limit - closed_form_limit(pair, SchwarzVariant.QUARTIC)) / max(1.0, tq.limit), tag)
        ts = iterate_until_converged(pair, SchwarzVariant.SEXTIC, tol=1e-12, max_iter=60)
        sextic.push(abs(ts.limit - closed_form_limit(pair, SchwarzVariant.SEXTIC)) / max(1.0, ts.limit), tag)
        if pair.a < pair.b:
            x0 = cubic_preimage_x0(pair)
            val = x0 * (9 - 8 * x0) ** 2 / (4 * x0 - 3) ** 3
            preimage.push(abs(val - (pair.b / pair.a) ** 2) / max(1.0, (pair.b / pair.a) ** 2), tag)
    return {
        "meaniter.quartic_limit": quartic,
        "meaniter.sextic_limit": sextic,
        "meaniter.cubic_preimage": preimage,
    }


_SUITES = {
    "addition": _suite_addition,
    "tau-i": _suite_tau_i,
    "tau-zeta": _suite_tau_zeta,
    "inverse": _suite_inverse,
    "multiplication": _suite_multiplication,
    "monodromy": _suite_monodromy,
    "meaniter": _suite_meaniter,
}


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    started = time.perf_counter()
    tol = args.tol if args.tol is not None else _env_tol()
    if not 1 <= args.samples <= 10000:
        parser.error("--samples must lie in [1, 10000]")
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    rng = SplitMix64(args.seed)
    eval_tol = Tolerance(abs_tol=min(1e-12, tol * 1e-2), rel_tol=min(1e-12, tol * 1e-2))
    residuals = []
    worst_samples = {}
    for name in names:
        for family, worst in _SUITES[name](rng, args.samples, eval_tol).items():
            residuals.append({"name": family, "value": worst.value, "tol": tol})
            worst_samples[family] = worst.sample
    inputs = {"suite": args.suite, "samples": args.samples, "tol": tol}
    outputs = {"worst_samples": worst_samples}
    return _finish("verify", inputs, outputs, residuals, args.seed, started)


# ---------------------------------------------------------------------------
# Argument wiring.

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lemnis",
        description="Theta quotients, special curves, and mean iterations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="evaluate one theta value with residual checks")
    p_theta.add_argument("--a", required=True, help="characteristic a as p/q")
    p_theta.add_argument("--b", required=True, help="characteristic b as p/q")
    p_theta.add_argument("--z", default="0+0i", help="argument as re+imi")
    p_theta.add_argument(
        "--tau", required=True, help="modulus: 'i', 'zeta', or a complex re+imi (generic)"
    )
    p_theta.add_argument("--tol", type=float, default=None)
    p_theta.set_defaults(func=_cmd_theta)

    p_verify = sub.add_parser("verify", help="run seeded identity sweeps")
    p_verify.add_argument(
        "--suite",
        default="all",
        choices=sorted(_SUITES) + ["all"],
    )
    p_verify.add_argument("--samples", type=int, default=50)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_agm = sub.add_parser("agm", help="run a mean iteration against its closed form")
    p_agm.add_argument("--variant", required=True, choices=["quartic", "sextic"])
    p_agm.add_argument("--a", type=float, required=True)
    p_agm.add_argument("--b", type=float, required=True)
    p_agm.add_argument("--tol", type=float, default=None)
    p_agm.set_defaults(func=_cmd_agm)

    p_curve = sub.add_parser("curve", help="map a curve point to its torus image")
    p_curve.add_argument("--curve", required=True, choices=["i", "zeta"])
    p_curve.add_argument("--t", default=None, help="t coordinate as re+imi")
    p_curve.add_argument("--branch", type=int, default=0)
    p_curve.add_argument("--point", default=None, help="named special point, e.g. P1, P01, Pinf1")
    p_curve.add_argument("--mul", action="store_true", help="also apply the unit multiplication map")
    p_curve.add_argument("--tol", type=float, default=None)
    p_curve.set_defaults(func=_cmd_curve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (DomainError, PathError) as exc:
        parser.error(str(exc))
    except IterationLimitError as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
