"""Command-line interface.

Subcommands: probs (single-point report), sweep (CSV parameter sweep),
verify (randomized cross-validation of the three probability routes),
independence (closed-form angle conditions), sample (seeded sampling run).
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import bipartite, independence, information, sampler
from .bipartite import BellLabel, InternalConsistencyError, JointDistribution, ObservablePair
from .observables import TWO_PI, Observable, Plane

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

CSV_HEADER = "mu,eta,nu,zeta,s,t,p00,p01,p10,p11,entropy,mutual_info,degree,independent"

_ANGLE_NAMES = ("mu", "eta", "nu", "zeta")
_PLANE_FLAGS = {"x0": Plane.X_ZERO, "y0": Plane.Y_ZERO, "z0": Plane.Z_ZERO}


def _fmt(value: float) -> str:
    # 17 significant digits round-trip double precision exactly
    return format(float(value), ".17g")


@dataclass(frozen=True)
class SweepRecord:
    """One CSV row of a parameter sweep; fields in header order."""

    mu: float
    eta: float
    nu: float
    zeta: float
    s: int
    t: int
    p00: float
    p01: float
    p10: float
    p11: float
    entropy: float
    mutual_info: float
    degree: float
    independent: int

    def to_csv_row(self) -> str:
        return ",".join(
            [_fmt(self.mu), _fmt(self.eta), _fmt(self.nu), _fmt(self.zeta),
             str(self.s), str(self.t),
             _fmt(self.p00), _fmt(self.p01), _fmt(self.p10), _fmt(self.p11),
             _fmt(self.entropy), _fmt(self.mutual_info), _fmt(self.degree),
             str(self.independent)]
        )


@dataclass(frozen=True)
class VarySpec:
    """Inclusive linear range for one swept angle."""

    name: str
    start: float
    stop: float
    steps: int

    def values(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.start])
        return np.linspace(self.start, self.stop, self.steps)


def _parse_vary(text: str) -> VarySpec:
    name, sep, spec = text.partition("=")
    if not sep or name not in _ANGLE_NAMES:
        raise ValueError(f"--vary expects one of {_ANGLE_NAMES} as 'name=start:stop:steps', got {text!r}")
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"--vary range must be 'start:stop:steps', got {spec!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError as exc:
        raise ValueError(f"--vary range {spec!r}: {exc}") from None
    if steps < 1:
        raise ValueError("--vary steps must be at least 1")
    return VarySpec(name=name, start=start, stop=stop, steps=steps)


def _to_radians(value: float, use_degrees: bool) -> float:
    return math.radians(value) if use_degrees else float(value)


def _parse_point(args) -> tuple[ObservablePair, BellLabel]:
    pair = ObservablePair(
        a=Observable(_to_radians(args.mu, args.deg), _to_radians(args.eta, args.deg)),
        b=Observable(_to_radians(args.nu, args.deg), _to_radians(args.zeta, args.deg)),
    )
    return pair, BellLabel(args.s, args.t)


# ---------------------------------------------------------------------------
# probs
# ---------------------------------------------------------------------------

def cmd_probs(args) -> int:
    pair, label = _parse_point(args)
    psi = bipartite.bell_state(label)
    methods = {
        "closed": lambda: bipartite.joint_distribution_closed(pair, label),
        "amplitude": lambda: bipartite.joint_distribution_amplitude(pair, label),
        "brute": lambda: bipartite.joint_distribution_bruteforce(pair, psi),
    }
    wanted = list(methods) if args.method == "all" else [args.method]
    dists = {name: methods[name]() for name in wanted}
    dist = dists[wanted[0]]
    report = information.report_from_distribution(dist, args.tol)

    print(f"observable A: mu={_fmt(pair.a.mu)} eta={_fmt(pair.a.eta)}")
    print(f"observable B: nu={_fmt(pair.b.mu)} zeta={_fmt(pair.b.eta)}")
    print(f"bell label:   s={label.s} t={label.t}")
    print(f"method:       {wanted[0]}")
    print("joint probabilities p(k,l), rows k=0,1:")
    print(f"  {_fmt(dist.p[0]):<26} {_fmt(dist.p[1])}")
    print(f"  {_fmt(dist.p[2]):<26} {_fmt(dist.p[3])}")
    (pa0, pa1), (pb0, pb1) = bipartite.marginals(dist)
    print(f"marginals A:  {_fmt(pa0)} {_fmt(pa1)}")
    print(f"marginals B:  {_fmt(pb0)} {_fmt(pb1)}")
    print(f"theta       = {_fmt(report.theta)}")
    print(f"entropy     = {_fmt(report.entropy)} nats")
    print(f"mutual_info = {_fmt(report.mutual_info)} nats")
    print(f"degree      = {_fmt(report.degree)}")
    print(f"independent = {'yes' if report.independent else 'no'} (tol {_fmt(report.tolerance)})")
    if len(dists) > 1:
        arrays = [d.as_array() for d in dists.values()]
        gap = max(
            float(np.abs(x - y).max())
            for i, x in enumerate(arrays)
            for y in arrays[i + 1:]
        )
        print(f"max pairwise method discrepancy = {gap:.3e}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _sweep_grid(args) -> tuple[dict[str, np.ndarray], int]:
    varies = [_parse_vary(text) for text in (args.vary or [])]
    if len(varies) > 2:
        raise ValueError("at most two parameters can vary")
    names = [v.name for v in varies]
    if len(set(names)) != len(names):
        raise ValueError("each --vary parameter may appear only once")

    fixed = {name: _to_radians(getattr(args, name), args.deg) for name in _ANGLE_NAMES}
    series = {}
    for vary in varies:
        values = vary.values()
        if args.deg:
            values = np.radians(values)
        series[vary.name] = values

    if not varies:
        total = 1
        columns = {name: np.array([fixed[name]]) for name in _ANGLE_NAMES}
    elif len(varies) == 1:
        values = series[varies[0].name]
        total = values.shape[0]
        columns = {
            name: values if name == varies[0].name else np.full(total, fixed[name])
            for name in _ANGLE_NAMES
        }
    else:
        slow = series[varies[0].name]
        fast = series[varies[1].name]
        total = slow.shape[0] * fast.shape[0]
        grid = {
            varies[0].name: np.repeat(slow, fast.shape[0]),  # first listed varies slowest
            varies[1].name: np.tile(fast, slow.shape[0]),
        }
        columns = {
            name: grid.get(name, np.full(total, fixed[name]))
            for name in _ANGLE_NAMES
        }
    return columns, total


def cmd_sweep(args) -> int:
    if args.tol <= 0.0:
        raise ValueError("tolerance must be positive")
    label = BellLabel(args.s, args.t)
    columns, total = _sweep_grid(args)
    s = np.full(total, label.s, dtype=np.int64)
    t = np.full(total, label.t, dtype=np.int64)
    probs = bipartite.joint_closed_batch(
        columns["mu"], columns["eta"], columns["nu"], columns["zeta"], s, t
    )
    entropy = information.shannon_entropy_rows(probs)
    mutual = information.mutual_information_rows(probs)
    degree = information.degree_rows(probs)
    independent = (np.abs(probs[:, 0] - 0.25) <= args.tol).astype(int)

    lines = [CSV_HEADER]
    for i in range(total):
        record = SweepRecord(
            mu=columns["mu"][i], eta=columns["eta"][i],
            nu=columns["nu"][i], zeta=columns["zeta"][i],
            s=label.s, t=label.t,
            p00=probs[i, 0], p01=probs[i, 1], p10=probs[i, 2], p11=probs[i, 3],
            entropy=entropy[i], mutual_info=mutual[i], degree=degree[i],
            independent=int(independent[i]),
        )
        lines.append(record.to_csv_row())
    text = "\n".join(lines) + "\n"

    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationResult:
    """Worst-case deviations over the random draw set."""

    samples: int
    seed: int
    max_method_gap: float
    max_sum_error: float
    max_klein_gap: float
    max_marginal_gap: float
    max_variant_gap: float
    max_commutator: float
    worst_tuple: tuple[float, float, float, float, int, int]

    def worst(self) -> float:
        return max(
            self.max_method_gap, self.max_sum_error, self.max_klein_gap,
            self.max_marginal_gap, self.max_variant_gap, self.max_commutator,
        )

    def passes(self, tol: float) -> bool:
        return self.worst() <= tol


def run_verification(samples: int = 10000, seed: int = 0) -> VerificationResult:
    """Cross-validate the three probability routes on random angle tuples.

    Draws (mu, eta, nu, zeta, s, t) uniformly, evaluates all routes plus the
    alternate closed variant, and aggregates worst-case pairwise gaps along
    with the distribution invariants (normalization, diagonal symmetry,
    uniform marginals) and the lifted commutator norm.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    mu = rng.uniform(0.0, math.pi, samples)
    eta = rng.uniform(0.0, TWO_PI, samples)
    nu = rng.uniform(0.0, math.pi, samples)
    zeta = rng.uniform(0.0, TWO_PI, samples)
    s = rng.integers(0, 2, samples)
    t = rng.integers(0, 2, samples)

    closed = bipartite.joint_closed_batch(mu, eta, nu, zeta, s, t, check=False)
    alternate = bipartite.joint_closed_alt_batch(mu, eta, nu, zeta, s, t)
    amplitude = bipartite.joint_amplitude_batch(mu, eta, nu, zeta, s, t)
    brute = bipartite.joint_bruteforce_batch(mu, eta, nu, zeta, bipartite.bell_state_batch(s, t))

    method_gap = np.maximum(
        np.abs(closed - amplitude),
        np.maximum(np.abs(closed - brute), np.abs(amplitude - brute)),
    )
    per_row_gap = method_gap.max(axis=1)
    worst_row = int(per_row_gap.argmax())

    klein = max(
        float(np.abs(amplitude[:, 0] - amplitude[:, 3]).max()),
        float(np.abs(amplitude[:, 1] - amplitude[:, 2]).max()),
        float(np.abs(brute[:, 0] - brute[:, 3]).max()),
        float(np.abs(brute[:, 1] - brute[:, 2]).max()),
    )
    marginal = max(
        float(np.abs(brute[:, 0] + brute[:, 1] - 0.5).max()),
        float(np.abs(brute[:, 2] + brute[:, 3] - 0.5).max()),
        float(np.abs(brute[:, 0] + brute[:, 2] - 0.5).max()),
        float(np.abs(brute[:, 1] + brute[:, 3] - 0.5).max()),
    )

    return VerificationResult(
        samples=samples,
        seed=seed,
        max_method_gap=float(per_row_gap[worst_row]),
        max_sum_error=max(
            float(np.abs(m.sum(axis=1) - 1.0).max()) for m in (closed, amplitude, brute)
        ),
        max_klein_gap=klein,
        max_marginal_gap=marginal,
        max_variant_gap=float(np.abs(closed - alternate).max()),
        max_commutator=_max_commutator_norm(mu, eta, nu, zeta),
        worst_tuple=(
            float(mu[worst_row]), float(eta[worst_row]),
            float(nu[worst_row]), float(zeta[worst_row]),
            int(s[worst_row]), int(t[worst_row]),
        ),
    )


def _observable_matrices(polar: np.ndarray, azimuth: np.ndarray) -> np.ndarray:
    n = polar.shape[0]
    mats = np.empty((n, 2, 2), dtype=np.complex128)
    c, sn = np.cos(polar), np.sin(polar)
    phase = np.exp(-1j * azimuth)
    mats[:, 0, 0] = c
    mats[:, 0, 1] = phase * sn
    mats[:, 1, 0] = np.conj(phase) * sn
    mats[:, 1, 1] = -c
    return mats


def _max_commutator_norm(mu, eta, nu, zeta) -> float:
    a = _observable_matrices(np.asarray(mu), np.asarray(eta))
    b = _observable_matrices(np.asarray(nu), np.asarray(zeta))
    eye = np.eye(2, dtype=np.complex128)
    n = a.shape[0]
    lift_a = np.einsum("nij,kl->nikjl", a, eye).reshape(n, 4, 4)
    lift_b = np.einsum("ij,nkl->nikjl", eye, b).reshape(n, 4, 4)
    comm = lift_a @ lift_b - lift_b @ lift_a
    norms = np.sqrt((np.abs(comm) ** 2).sum(axis=(1, 2)))
    return float(norms.max())


def cmd_verify(args) -> int:
    result = run_verification(samples=args.samples, seed=args.seed)
    checks = [
        ("three-method max gap", result.max_method_gap),
        ("normalization error", result.max_sum_error),
        ("diagonal symmetry gap", result.max_klein_gap),
        ("marginal deviation from 1/2", result.max_marginal_gap),
        ("closed-variant gap", result.max_variant_gap),
        ("lifted commutator norm", result.max_commutator),
    ]
    print(f"samples={result.samples} seed={result.seed} tol={args.tol:g}")
    ok = True
    for name, value in checks:
        status = "OK" if value <= args.tol else "FAIL"
        ok &= value <= args.tol
        print(f"  {name:<30} {value:.3e}  {status}")
    if not ok:
        mu, eta, nu, zeta, s, t = result.worst_tuple
        print("worst tuple:")
        print(f"  mu={_fmt(mu)} eta={_fmt(eta)} nu={_fmt(nu)} zeta={_fmt(zeta)} s={s} t={t}")
        return EXIT_VERIFY_FAILED
    print("all checks passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# independence
# ---------------------------------------------------------------------------

def cmd_independence(args) -> int:
    plane = _PLANE_FLAGS[args.plane]
    label = BellLabel(args.s, args.t)
    cond = independence.plane_condition(plane, label)

    if plane is Plane.Z_ZERO:
        lhs = "eta + zeta" if cond.condition_kind is independence.ConditionKind.SUM else "|eta - zeta|"
        anchor_name, partner_name = "eta", "zeta"
        anchor = args.eta
        if args.mu is not None:
            raise ValueError("plane z0 takes an --eta anchor, not --mu")
    else:
        lhs = "mu + nu" if cond.condition_kind is independence.ConditionKind.SUM else "|mu - nu|"
        anchor_name, partner_name = "mu", "nu"
        anchor = args.mu
        if args.eta is not None:
            raise ValueError(f"plane {args.plane} takes a --mu anchor, not --eta")

    targets = ", ".join(_fmt(v) for v in cond.target_values)
    multiples = ", ".join(f"{v / math.pi:g}*pi" for v in cond.target_values)
    print(f"plane: {plane.value}")
    print(f"bell label: s={label.s} t={label.t}")
    print(f"condition: {lhs} in {{{targets}}}  ({multiples})")
    if anchor is not None:
        anchor_rad = _to_radians(anchor, args.deg)
        partners = independence.partner_angles(plane, label, anchor_rad)
        values = ", ".join(_fmt(v) for v in partners) if partners else "none"
        print(f"solutions for {partner_name} at {anchor_name}={_fmt(anchor_rad)}: {values}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# sample
# ---------------------------------------------------------------------------

def cmd_sample(args) -> int:
    pair, label = _parse_point(args)
    dist = bipartite.joint_distribution_closed(pair, label)
    counts = sampler.sample(dist, args.n, args.seed)
    empirical = sampler.empirical_distribution(counts)
    report = sampler.empirical_report(counts, args.tol)
    scores = sampler.cell_z_scores(counts, dist)

    print(f"n={counts.n} seed={counts.seed}")
    print("cell        count        empirical            closed-form          z-score")
    for (k, ell), observed, emp, expected, z in zip(
        bipartite.INDEX_ORDER, counts.counts, empirical.p, dist.p, scores
    ):
        print(f"({k},{ell})  {observed:>12}  {_fmt(emp):<20} {_fmt(expected):<20} {z:+.3f}")
    print(f"empirical theta       = {_fmt(report.theta)}")
    print(f"empirical entropy     = {_fmt(report.entropy)} nats")
    print(f"empirical mutual_info = {_fmt(report.mutual_info)} nats")
    print(f"empirical degree      = {_fmt(report.degree)}")
    print(f"independent = {'yes' if report.independent else 'no'} (tol {_fmt(report.tolerance)})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------

def _add_angle_args(parser: argparse.ArgumentParser, with_label: bool = True) -> None:
    parser.add_argument("--mu", type=float, default=0.0, help="polar angle of observable A")
    parser.add_argument("--eta", type=float, default=0.0, help="azimuthal angle of observable A")
    parser.add_argument("--nu", type=float, default=0.0, help="polar angle of observable B")
    parser.add_argument("--zeta", type=float, default=0.0, help="azimuthal angle of observable B")
    if with_label:
        parser.add_argument("--s", type=int, choices=(0, 1), default=0, help="bell label bit s")
        parser.add_argument("--t", type=int, choices=(0, 1), default=0, help="bell label bit t")
    parser.add_argument("--deg", action="store_true", help="interpret input angles as degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellxtalk",
        description="Joint measurement statistics and crosstalk conditions for paired "
                    "single-qubit observables on Bell states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("probs", help="single-point probability and crosstalk report")
    _add_angle_args(p)
    p.add_argument("--method", choices=("closed", "amplitude", "brute", "all"), default="closed")
    p.add_argument("--tol", type=float, default=information.DEFAULT_INDEPENDENCE_TOL,
                   help="independence tolerance on |theta - 1/4|")
    p.set_defaults(func=cmd_probs)

    p = sub.add_parser("sweep", help="parameter sweep emitted as CSV")
    _add_angle_args(p)
    p.add_argument("--vary", action="append", metavar="name=start:stop:steps",
                   help="angle range to sweep (repeat for a second axis; first varies slowest)")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--tol", type=float, default=information.DEFAULT_INDEPENDENCE_TOL)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="randomized agreement and invariant checks")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("independence", help="closed-form independence conditions per plane")
    p.add_argument("--plane", choices=sorted(_PLANE_FLAGS), required=True)
    p.add_argument("--s", type=int, choices=(0, 1), required=True)
    p.add_argument("--t", type=int, choices=(0, 1), required=True)
    p.add_argument("--mu", type=float, default=None, help="anchor polar angle (planes x0/y0)")
    p.add_argument("--eta", type=float, default=None, help="anchor azimuthal angle (plane z0)")
    p.add_argument("--deg", action="store_true")
    p.set_defaults(func=cmd_independence)

    p = sub.add_parser("sample", help="seeded sampling run with closed-form comparison")
    _add_angle_args(p)
    p.add_argument("--n", type=int, default=10000, help="number of draws")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=information.DEFAULT_INDEPENDENCE_TOL)
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
