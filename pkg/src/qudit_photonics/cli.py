"""Command-line front end.

Subcommands: ``encode``, ``synthesize``, ``mub``, ``pump``, ``qkd``.  Exit
status is 0 when every verification residual meets its threshold, 1 when a
check fails and 2 for invalid input.

State files are JSON objects ``{"dimension": 3|4, "amplitudes": [[re, im],
...]}`` (qutrit order ``|HH>, |VV>, |psi+>``; ququad order ``|HH>, |VV>,
|HV>, |VH>``), or a JSON list of such objects.  Plan files hold the seed
amplitude, the two unitaries as nested ``[re, im]`` pairs, their provenance
and optional element sequences.
"""

import argparse
import contextlib
import json
import math
import sys

import numpy as np

from . import encoder, mub, optics
from .qmath import is_unitary, unitarity_deviation

STATE_NORM_TOL = 1e-6
PLAN_UNITARY_TOL = 1e-10
SEQUENCE_TOL = 1e-10
PUMP_TOL = 1e-12


class InputError(Exception):
    """Invalid or unreadable input file or argument."""


def complex_to_pairs(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return [float(a.real), float(a.imag)]
    return [complex_to_pairs(z) for z in a]


def pairs_to_complex(p) -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.shape[-1:] != (2,):
        raise InputError("complex numbers must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def to_json_text(obj, indent=0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad = " " * (indent + 1)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize {obj}")
        return format(obj, "#.17g")
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(str(k))}: {to_json_text(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}" if items else "{}"
    if isinstance(obj, (list, tuple)):
        if any(isinstance(v, (dict, list, tuple)) and not _is_pair(v) for v in obj):
            items = [pad + to_json_text(v, indent + 1) for v in obj]
            return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"
        return "[" + ", ".join(to_json_text(v, indent) for v in obj) + "]"
    return json.dumps(obj)


def _is_pair(v):
    return isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(z, float) for z in v)


def _write_json(path, obj):
    with open(path, "w") as fh:
        fh.write(to_json_text(obj) + "\n")


def state_to_record(amplitudes, label=None) -> dict:
    amplitudes = np.asarray(amplitudes, dtype=complex)
    rec = {"dimension": int(amplitudes.size), "amplitudes": complex_to_pairs(amplitudes)}
    if label is not None:
        rec["label"] = label
    return rec


def state_from_record(rec: dict, warn=None) -> tuple:
    """Validate a state record; returns ``(dimension, normalized amplitudes)``."""
    try:
        dim = int(rec["dimension"])
        amps = pairs_to_complex(rec["amplitudes"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed state record: {exc}") from exc
    if dim not in (3, 4):
        raise InputError(f"dimension must be 3 or 4, got {dim}")
    if amps.shape != (dim,):
        raise InputError(f"expected {dim} amplitudes, got {amps.size}")
    if not np.all(np.isfinite(amps)):
        raise InputError("non-finite amplitude")
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise InputError("state is the zero vector")
    if abs(norm - 1.0) > STATE_NORM_TOL and warn is not None:
        warn(f"warning: state norm {norm:#.17g} differs from 1; renormalizing")
    return dim, amps / norm


def load_state_file(path, index=None, warn=None) -> tuple:
    data = _read_json(path)
    if isinstance(data, list):
        if not data:
            raise InputError(f"{path} holds no states")
        k = 0 if index is None else index
        if not 0 <= k < len(data):
            raise InputError(f"state index {k} out of range (file holds {len(data)})")
        data = data[k]
    elif index not in (None, 0):
        raise InputError(f"{path} holds a single state")
    return state_from_record(data, warn)


def carrier_from(dim, amps) -> np.ndarray:
    return encoder.qutrit_embed(amps) if dim == 3 else amps


def plan_to_record(plan: encoder.EncodingPlan, provenance="svd", d=None, sequences=None) -> dict:
    rec = {
        "x": float(plan.x),
        "singular_values": [float(v) for v in (d if d is not None else (plan.x, plan.seed[1].real))],
        "u": complex_to_pairs(plan.u),
        "w": complex_to_pairs(plan.w),
        "provenance": provenance,
    }
    if sequences:
        rec["sequences"] = {k: s.to_dict() for k, s in sequences.items()}
    return rec


def load_plan_file(path) -> tuple:
    """Returns ``(plan, record)``; rejects non-unitary matrices."""
    rec = _read_json(path)
    try:
        x = float(rec["x"])
        u = pairs_to_complex(rec["u"])
        w = pairs_to_complex(rec["w"])
        provenance = rec.get("provenance", "svd")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed plan file: {exc}") from exc
    if provenance not in ("svd", "closed-form"):
        raise InputError(f"unknown provenance {provenance!r}")
    for name, m in (("u", u), ("w", w)):
        if m.shape != (2, 2) or not np.all(np.isfinite(m)):
            raise InputError(f"{name} must be a finite 2x2 matrix")
        if not is_unitary(m, PLAN_UNITARY_TOL):
            raise InputError(f"{name} is not unitary (deviation {unitarity_deviation(m):.3e})")
    if not 0.0 <= x <= 1.0:
        raise InputError(f"seed amplitude {x} outside [0, 1]")
    return encoder.EncodingPlan(x, u, w), rec


def _closed_form_plan(dim, amps):
    if dim != 3:
        raise InputError("closed-form encoding applies to qutrit states only")
    if np.max(np.abs(np.abs(amps) - 1 / np.sqrt(3))) > STATE_NORM_TOL:
        raise InputError("closed-form encoding needs equal-weight qutrit amplitudes")
    psi = float(np.angle(amps[1] / amps[0]))
    phi = float(np.angle(amps[2] / amps[0]))
    u, d, w = encoder.xi_closed_form(psi, phi)
    return encoder.EncodingPlan(float(d[0]), u, w), d


def _fmt_angle(a):
    return f"{a:#.17g} rad ({math.degrees(a):#.17g} deg)"


def _describe_element(e):
    (name, value), = vars(e).items()
    return f"{type(e).__name__}({name}={_fmt_angle(value)})"


def cmd_encode(args, out, err) -> int:
    dim, amps = load_state_file(args.input, args.index, warn=lambda m: print(m, file=err))
    target = encoder.canonicalize(carrier_from(dim, amps))
    if args.method == "closed-form":
        plan, d = _closed_form_plan(dim, amps)
        provenance = "closed-form"
    else:
        plan = encoder.encode(target)
        d = (plan.x, float(np.sqrt(max(0.0, 1 - plan.x**2))))
        provenance = "svd"
    fid = encoder.fidelity(plan.state(), target)
    seqs = {"u": optics.realize_unitary(plan.u), "w": optics.realize_unitary(plan.w)}
    _write_json(args.output, plan_to_record(plan, provenance, d, seqs))
    print(f"x: {plan.x:#.17g}", file=out)
    print(f"singular_values: {d[0]:#.17g} {d[1]:#.17g}", file=out)
    print(f"provenance: {provenance}", file=out)
    print(f"fidelity: {fid:#.17g}", file=out)
    ok = fid >= encoder.PLAN_FIDELITY
    print(f"status: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def cmd_synthesize(args, out, err) -> int:
    plan, _ = load_plan_file(args.plan)
    worst = 0.0
    for name, m in (("u", plan.u), ("w", plan.w)):
        f = optics.factorize_unitary(m)
        seq = optics.synthesize_sequence(f)
        plates = optics.to_waveplates(seq)
        residual = max(seq.residual(m), plates.residual(m))
        worst = max(worst, residual)
        print(f"{name}.factorization: alpha={f.alpha:#.17g} beta={f.beta:#.17g} gamma={f.gamma:#.17g} "
              f"theta={_fmt_angle(f.theta)}", file=out)
        print(f"{name}.sequence: " + " -> ".join(_describe_element(e) for e in seq.elements)
              + f" ; global_phase={seq.global_phase:#.17g}", file=out)
        print(f"{name}.waveplates: " + (" -> ".join(_describe_element(e) for e in plates.elements) or "none")
              + f" ; global_phase={plates.global_phase:#.17g}", file=out)
        print(f"{name}.residual: {residual:#.17g}", file=out)
    ok = worst <= SEQUENCE_TOL
    print(f"status: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def cmd_mub(args, out, err) -> int:
    family = mub.qutrit_mub_family() if args.dimension == 3 else mub.ququad_mub_family()
    report = mub.verify_mub(family, args.tol)
    print(f"dimension: {report.dimension}", file=out)
    print(f"bases: {len(family)}", file=out)
    for b, dev in zip(family, report.orthonormality):
        line = f"basis {b.label}: orthonormality_deviation={dev:#.17g}"
        if args.dimension == 4:
            line += f" bell={mub.bell_check(b)}"
        print(line, file=out)
    print(f"overlap_deviation: {report.overlap_deviation:#.17g}", file=out)
    if args.emit_states:
        records = [state_to_record(s, f"{b.label}/{k}") for b in family for k, s in enumerate(b.states)]
        _write_json(args.emit_states, records)
        print(f"states_written: {len(records)}", file=out)
    print(f"status: {'PASS' if report.passed else 'FAIL'}", file=out)
    return 0 if report.passed else 1


def cmd_pump(args, out, err) -> int:
    if not 0.0 <= args.x <= 1.0:
        raise InputError(f"seed amplitude {args.x} outside [0, 1]")
    p = optics.pump_for_seed(args.x)
    x_back = optics.seed_from_pump(p)
    residual = abs(x_back - args.x)
    print(f"branch: {p.branch.value}", file=out)
    print(f"theta_p: {_fmt_angle(p.theta_p)}", file=out)
    print(f"x_forward: {x_back:#.17g}", file=out)
    print(f"residual: {residual:#.17g}", file=out)
    ok = residual <= PUMP_TOL
    print(f"status: {'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def cmd_qkd(args, out, err) -> int:
    if args.rounds < 0:
        raise InputError("rounds must be non-negative")
    outcome = mub.simulate_two_basis_qkd(args.rounds, args.eve, args.seed)
    print(outcome.record(), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qudit-photonics", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="seed amplitude and local unitaries for a state file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--index", type=int, default=None, help="state to use from a multi-state file")
    p.add_argument("--method", choices=("svd", "closed-form"), default="svd")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("synthesize", help="optical element sequences for a plan file")
    p.add_argument("plan")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("mub", help="build and verify the mutually unbiased bases")
    p.add_argument("dimension", type=int, choices=(3, 4))
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--emit-states", metavar="FILE", help="write all basis states as state records")
    p.set_defaults(func=cmd_mub)

    p = sub.add_parser("pump", help="pump waveplate setting for a seed amplitude")
    p.add_argument("x", type=float)
    p.set_defaults(func=cmd_pump)

    p = sub.add_parser("qkd", help="simulate the two-Bell-basis key exchange")
    p.add_argument("--rounds", type=int, default=100_000)
    p.add_argument("--eve", action="store_true", help="intercept-resend every signal")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_qkd)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def run():
    sys.exit(main())
