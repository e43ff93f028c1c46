"""Command-line front end: ``ceasnr <command> [options]``.

Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
"""

import argparse
import sys

import numpy as np

from . import __version__, config as cfgmod, experiments, filters, heuristic, noise, outputs
from .amp import AmplifierSpec, output_noise_rms


class UsageError(Exception):
    pass


def _floats(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _u64(text):
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def _common():
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--seed", type=_u64, help="master seed (unsigned 64-bit)")
    g.add_argument("--out", help="write results here instead of stdout")
    g.add_argument("--plot", help="write an SVG plot of the result")
    g.add_argument("--config", help="YAML configuration or a run manifest (JSON)")
    g.add_argument("--trials", type=int, help="Monte-Carlo trials per row")
    g.add_argument("--transient", choices=["discard", "include"], help="filter start-up handling")
    g.add_argument("--set", action="append", default=[], metavar="SECTION.KEY=VALUE", help="override a config field")
    g.add_argument("--manifest", help="manifest path (default: <out>.manifest.json)")
    g.add_argument("--workers", type=int, default=1, help="threads for Monte-Carlo trials")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="ceasnr", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("noise", parents=[common], help="thermal and shot noise figures")
    p.add_argument("--r", type=float, help="resistance (ohm)")
    p.add_argument("--t", type=float, default=300.0, help="temperature (K), default 300")
    p.add_argument("--b", type=float, help="thermal noise bandwidth (Hz)")
    p.add_argument("--ib", type=float, help="DC base current (A)")
    p.add_argument("--w", type=float, help="shot noise bandwidth (Hz)")
    p.add_argument("--gain", type=float, default=None, help="amplifier voltage gain")
    p.add_argument("--sweep-r", type=_floats, help="comma-separated base resistors for a thermal/shot table")
    p.add_argument("--vcc", type=float, default=12.0, help="supply for the fixed-bias model (V)")
    p.add_argument("--vbe", type=float, default=0.7, help="base-emitter drop (V)")
    p.add_argument("--format", choices=["table", "csv"], default="table")

    p = sub.add_parser("design", parents=[common], help="design a low-pass IIR filter")
    p.add_argument("--family", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--cutoff", type=float, required=True, help="cutoff (Hz)")
    p.add_argument("--fs", type=float, required=True, help="sample rate (Hz)")
    p.add_argument("--rp", type=float, help="passband ripple (dB)")
    p.add_argument("--rs", type=float, help="stopband attenuation (dB)")
    p.add_argument("--response", help="write freq_hz,magnitude_db,phase_deg CSV here")
    p.add_argument("--points", type=int, default=1001, help="response grid size")

    p = sub.add_parser("recommend", parents=[common], help="cutoff rule of thumb")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--freq", type=float, required=True, help="signal frequency (Hz)")
    p.add_argument("--fs", type=float, help="sample rate to check Nyquist against")

    sub.add_parser("simulate", parents=[common], help="one Monte-Carlo run of the configured chain")

    p = sub.add_parser("sweep", parents=[common], help="sweep filter order or cutoff")
    p.add_argument("--axis", choices=["order", "cutoff"])
    p.add_argument("--values", help="comma-separated axis values")

    p = sub.add_parser("compare", parents=[common], help="compare filter families or transient modes")
    p.add_argument("--by", choices=["family", "transient"])
    p.add_argument("--values", help="families (for --by family) or orders (for --by transient)")
    return parser


# -- noise ---------------------------------------------------------------


def _si(value, unit):
    for scale, prefix in ((1, ""), (1e-3, "m"), (1e-6, "u"), (1e-9, "n"), (1e-12, "p")):
        if abs(value) >= scale:
            return f"{value / scale:.4g} {prefix}{unit}"
    return f"{value:.4g} {unit}"


def cmd_noise(args, out):
    if args.sweep_r:
        if args.b is None:
            raise UsageError("--sweep-r needs --b (bandwidth)")
        rows = experiments.sweep_base_resistor(
            args.sweep_r, noise.BiasModel(vcc_volt=args.vcc, vbe_volt=args.vbe), args.t, args.b
        )
        _emit(args, outputs.resistor_csv(rows), out)
        return 0

    thermal = (args.r, args.b)
    shot = (args.ib, args.w)
    if thermal == (None, None) and shot == (None, None):
        raise UsageError("give --r and --b for thermal noise and/or --ib and --w for shot noise")
    if None in thermal and thermal != (None, None):
        raise UsageError("thermal noise needs both --r and --b")
    if None in shot and shot != (None, None):
        raise UsageError("shot noise needs both --ib and --w")
    amp = AmplifierSpec(args.gain) if args.gain is not None else None

    results = []
    if args.r is not None:
        v = noise.thermal_noise_rms(noise.ThermalNoiseSpec(args.r, args.t, args.b))
        results.append(("thermal_rms", v, "V"))
        if amp:
            results.append(("thermal_rms_output", output_noise_rms(v, amp), "V"))
    if args.ib is not None:
        i = noise.shot_noise_rms(noise.ShotNoiseSpec(args.ib, args.w))
        results.append(("shot_rms", i, "A"))
        if amp:
            results.append(("shot_rms_output", output_noise_rms(i, amp), "A"))

    if args.format == "csv":
        text = "quantity,value,unit\n" + "".join(f"{n},{outputs.fmt(v)},{u}\n" for n, v, u in results)
    else:
        text = "".join(f"{n:<20} {v:.6g} {u}  ({_si(v, u)})\n" for n, v, u in results)
    _emit(args, text, out)
    return 0


# -- design --------------------------------------------------------------


def cmd_design(args, out):
    spec = filters.FilterSpec(args.family, args.order, args.cutoff, args.fs, args.rp, args.rs)
    filt = filters.design(spec)
    _emit(args, filters.coefficient_dump(filt), out)
    if args.response:
        grid = np.union1d(np.linspace(0.0, args.fs / 2, max(args.points, 2)), [args.cutoff])
        h = filters.frequency_response(filt, grid, args.fs)
        outputs.atomic_write(args.response, outputs.response_csv(grid, h))
    return 0


# -- recommend -----------------------------------------------------------


def cmd_recommend(args, out):
    rec = heuristic.recommended_cutoff(args.order, args.freq)
    lines = [f"cutoff_hz {outputs.fmt(rec.cutoff_hz)}", f"branch {rec.branch.value}"]
    if args.fs is not None:
        rec = heuristic.validate_recommendation(rec, args.fs)
        lines.append(f"valid {'yes' if rec.valid else 'no'} (fs/2 = {outputs.fmt(args.fs / 2)} Hz)")
    _emit(args, "\n".join(lines) + "\n", out)
    if rec.below_signal:
        print(
            f"warning: cutoff {outputs.fmt(rec.cutoff_hz)} Hz is not above the "
            f"{outputs.fmt(rec.signal_freq_hz)} Hz signal",
            file=sys.stderr,
        )
    return 0


# -- simulate / sweep / compare -----------------------------------------


def _resolve(args):
    resolved, lines = cfgmod.load_file(args.config) if args.config else (cfgmod.merge({}), {})
    for assignment in args.set:
        resolved = cfgmod.apply_override(resolved, assignment)
    if args.seed is not None:
        resolved["run"]["seed"] = args.seed
    if args.trials is not None:
        resolved["run"]["trials"] = args.trials
    if args.transient is not None:
        resolved["run"]["transient"] = args.transient
    return resolved, lines


def _sweep_request(args, resolved, axis_attr, choices):
    axis = getattr(args, axis_attr, None) or resolved["sweep"]["axis"]
    values = args.values if args.values is not None else resolved["sweep"]["values"]
    if axis is None or axis not in choices:
        raise UsageError(f"need {'/'.join(choices)} axis (--{axis_attr} or sweep.axis in the config)")
    if values is None:
        raise UsageError("need --values or sweep.values in the config")
    if isinstance(values, str):
        values = [v.strip() for v in values.split(",") if v.strip()]
    return axis, list(values)


def _numbers(values, integer, name):
    try:
        nums = [float(v) for v in values]
    except (TypeError, ValueError):
        raise UsageError(f"{name}: expected numbers, got {values!r}") from None
    if integer:
        if any(int(v) != v for v in nums):
            raise UsageError(f"{name}: expected integers, got {values!r}")
        return [int(v) for v in nums]
    return nums


def _run_experiment(args, out, command):
    resolved, lines = _resolve(args)
    conf = cfgmod.build(resolved, lines)
    sweep = None
    if command == "simulate":
        rep = experiments.run_monte_carlo(conf, workers=args.workers)
        result = experiments.SweepResult("cutoff_hz", [experiments.SweepRow.from_report(conf.filter.cutoff_hz, rep)])
    elif command == "sweep":
        axis, values = _sweep_request(args, resolved, "axis", ("order", "cutoff"))
        sweep = {"axis": axis, "values": None}
        if axis == "order":
            vals = _numbers(values, True, "values")
            for n in vals:  # validate every row before running any
                conf.with_filter(order=n)
            result = experiments.sweep_order(conf, vals, workers=args.workers)
        else:
            vals = _numbers(values, False, "values")
            for fc in vals:
                _validate_field(conf, "cutoff_hz", fc)
            result = experiments.sweep_cutoff(conf, vals, workers=args.workers)
        sweep["values"] = vals
    else:
        axis, values = _sweep_request(args, resolved, "by", ("family", "transient"))
        if axis == "family":
            fams = [filters.FilterFamily.parse(v).value for v in values]
            for fam in fams:
                _validate_field(conf, "family", fam)
            result = experiments.compare_families(conf, fams, workers=args.workers)
            sweep = {"axis": axis, "values": fams}
        else:
            orders = _numbers(values, True, "values")
            modes = experiments.transient_comparison(conf, orders, workers=args.workers)
            rows = [
                experiments.SweepRow(f"{mode}:{r.axis_value}", r.snr_before_db, r.snr_after_db, r.improvement_db, r.ci_halfwidth_db)
                for mode, res in modes.items()
                for r in res.rows
            ]
            result = experiments.SweepResult("transient:order", rows)
            sweep = {"axis": axis, "values": orders}

    csv_text = outputs.sweep_csv(result)
    _emit(args, csv_text, out)
    man_path = args.manifest or (f"{args.out}.manifest.json" if args.out else None)
    if man_path:
        data = outputs.manifest(cfgmod.echo(conf, sweep), conf.seed, command)
        outputs.atomic_write(man_path, outputs.manifest_json(data))
    if args.plot:
        outputs.atomic_write(args.plot, outputs.sweep_svg(result, title=command))
    return 0


def _validate_field(conf, key, value):
    try:
        conf.with_filter(**{key: value})
    except ValueError as exc:
        raise cfgmod.ConfigError(f"filter.{exc}") from None


def _emit(args, text, out):
    if getattr(args, "out", None):
        outputs.atomic_write(args.out, text)
    else:
        out.write(text)


COMMANDS = {
    "noise": cmd_noise,
    "design": cmd_design,
    "recommend": cmd_recommend,
    "simulate": lambda a, o: _run_experiment(a, o, "simulate"),
    "sweep": lambda a, o: _run_experiment(a, o, "sweep"),
    "compare": lambda a, o: _run_experiment(a, o, "compare"),
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on malformed flags
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, cfgmod.ConfigError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - reported as a runtime failure
        print(f"{parser.prog} {args.command}: failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
