"""
Command line front door: inertia <subcommand> [options].

Exit status is 0 on success or PASS, 1 when a checked property FAILs and 2 on
usage, parse and model errors.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from inertial_delays import __version__
from inertial_delays.config import Settings, load_settings
from inertial_delays.counterexamples import DEMOS
from inertial_delays.delays.factory import parse_model
from inertial_delays.errors import DemoMismatchError, InertiaError, UnfittableCorpusError
from inertial_delays.inertia.membership import ai_member, ri_member
from inertial_delays.inertia.params import AIParams, RIParams, ri_subset, ri_to_ai, ri_zeno_free
from inertial_delays.inertia.windows import fit_ri
from inertial_delays.inertia.zeno import zeno_witness
from inertial_delays.signals.core import Window, erode
from inertial_delays.utils.helpers import parse_time, parse_time_list
from inertial_delays.waveio.text import WaveDoc, emit_waves, read_waves
from inertial_delays.waveio.vcd import VcdWriter


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Missing or inconsistent command line options."""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="wave text file with input signals")
    common.add_argument("--state", help="wave text file with state signals")
    common.add_argument("--params", action="append", help="mu_r,delta_r,mu_f,delta_f (or d_r,d_f for check-ai)")
    common.add_argument("--window", help="delta,mu")
    common.add_argument("--model", help="transport:D | selftimed:THETA:INIT | dual(...) | serial(a,b,...)")
    common.add_argument("--times", help="t1,t2,...")
    common.add_argument("--bound", help="cap on delta for window searches")
    common.add_argument("--epsilon", default="1", help="pulse width bound for Zeno witnesses")
    common.add_argument("--horizon", help="final VCD timestamp")
    common.add_argument("--out", help="write the produced waves or VCD to this file")

    parser = argparse.ArgumentParser(prog="inertia", description="Binary signals and inertial delays")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="subcommand")
    subparsers.required = True
    for name, help_text in (
        ("eval", "print signal values at given times"),
        ("erode", "apply a sliding window to every input signal"),
        ("apply", "run a delay model on every input signal"),
        ("check-ri", "check relative inertia membership of state against input"),
        ("check-ai", "check absolute inertia of state signals"),
        ("subset", "compare two relative inertia parameter sets"),
        ("zeno", "decide Zeno-freeness and build a witness"),
        ("export-vcd", "write input signals as a value change dump"),
    ):
        subparsers.add_parser(name, parents=[common], help=help_text)
    fit = subparsers.add_parser("fit", parents=[common], help="fit relative inertia envelopes to a corpus")
    fit.add_argument("--asymmetric", action="store_true", help="fit rise and fall windows independently")
    demo = subparsers.add_parser("demo", parents=[common], help="reproduce a counterexample")
    demo.add_argument("name", choices=sorted(DEMOS))
    return parser


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) in (None, [])]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _single_params(args: argparse.Namespace) -> str:
    _require(args, "params")
    if len(args.params) != 1:
        raise UsageError(f"{args.command} takes --params once")
    return args.params[0].strip()


def _pairs(args: argparse.Namespace):
    _require(args, "input", "state")
    inputs, states = read_waves(args.input), read_waves(args.state)
    if len(inputs) != len(states):
        raise UsageError(f"{len(inputs)} input signal(s) but {len(states)} state signal(s)")
    return list(zip(inputs, states))


def _emit(text: str, args: argparse.Namespace, out: TextIO) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {args.out}")
    else:
        out.write(text)


def cmd_eval(args, out, settings) -> int:
    _require(args, "input", "times")
    tokens = [token.strip() for token in args.times.split(",") if token.strip()]
    times = [parse_time(token) for token in tokens]
    for name, signal in read_waves(args.input):
        values = " ".join(f"{token}:{signal.eval(t)}" for token, t in zip(tokens, times))
        out.write(f"{name} {values}\n")
    return EXIT_OK


def cmd_erode(args, out, settings) -> int:
    _require(args, "input", "window")
    values = parse_time_list(args.window)
    if len(values) != 2:
        raise UsageError("--window takes delta,mu")
    window = Window(*values)
    doc = read_waves(args.input)
    _emit(emit_waves(WaveDoc(tuple((name, erode(signal, window)) for name, signal in doc))), args, out)
    return EXIT_OK


def cmd_apply(args, out, settings) -> int:
    _require(args, "input", "model")
    model = parse_model(args.model)
    doc = read_waves(args.input)
    _emit(emit_waves(WaveDoc(tuple((name, model.apply(signal)) for name, signal in doc))), args, out)
    logger.info(f"Applied {model.describe()} to {len(doc)} signal(s)")
    return EXIT_OK


def cmd_check_ri(args, out, settings) -> int:
    text = _single_params(args)
    p = RIParams.parse(text)
    status = EXIT_OK
    for (u_name, u), (x_name, x) in _pairs(args):
        result = ri_member(u, x, p)
        out.write(f"{'PASS' if result else 'FAIL'} {x_name} against {u_name} under RI {text}\n")
        for violation in result.violations:
            out.write(f"  {violation.describe(u_name)}\n")
        if not result:
            status = EXIT_FAIL
    return status


def cmd_check_ai(args, out, settings) -> int:
    _require(args, "state")
    text = _single_params(args)
    a = AIParams.parse(text)
    status = EXIT_OK
    for name, x in read_waves(args.state):
        result = ai_member(x, a)
        out.write(f"{'PASS' if result else 'FAIL'} {name} under AI {text}\n")
        for violation in result.violations:
            out.write(f"  {violation.describe(name)}\n")
        if not result:
            status = EXIT_FAIL
    return status


def cmd_subset(args, out, settings) -> int:
    _require(args, "params")
    if len(args.params) != 2:
        raise UsageError("subset takes --params twice")
    p_text, q_text = (text.strip() for text in args.params)
    verdict = "true" if ri_subset(RIParams.parse(p_text), RIParams.parse(q_text)) else "false"
    out.write(f"RI {p_text} subset of RI {q_text}: {verdict}\n")
    return EXIT_OK


def cmd_zeno(args, out, settings) -> int:
    text = _single_params(args)
    p = RIParams.parse(text)
    epsilon = parse_time(args.epsilon)
    if ri_zeno_free(p):
        out.write(f"RI {text} is Zeno-free\n")
        a = ri_to_ai(p)
        if a is not None:
            out.write(f"implies AI {a}\n")
        return EXIT_OK
    u, x = zeno_witness(p, epsilon)
    out.write(f"RI {text} is not Zeno-free\n")
    out.write(f"witness with pulse shorter than {args.epsilon.strip()}:\n")
    out.write(emit_waves(WaveDoc((("u", u), ("x", x)))))
    return EXIT_OK


def cmd_fit(args, out, settings) -> int:
    bound = parse_time(args.bound) if args.bound else settings.search_bound
    corpus = [(u, x) for (_, u), (_, x) in _pairs(args)]
    if not corpus:
        raise UsageError("fit needs at least one (input, state) pair")
    try:
        frontier = fit_ri(corpus, bound, symmetric=not args.asymmetric, progress=settings.show_progress)
    except UnfittableCorpusError as e:
        out.write(f"FAIL unfittable: {e}\n")
        return EXIT_FAIL
    out.write(f"frontier ({len(frontier)} point(s), bound {args.bound or bound}):\n")
    for p in frontier:
        out.write(f"  {p}\n")
    return EXIT_OK


def cmd_demo(args, out, settings) -> int:
    try:
        result = DEMOS[args.name](settings.search_bound)
    except DemoMismatchError as e:
        out.write(f"FAIL {args.name}: {e}\n")
        return EXIT_FAIL
    out.write(result.report())
    return EXIT_OK


def cmd_export_vcd(args, out, settings) -> int:
    _require(args, "input", "horizon")
    doc = read_waves(args.input)
    _emit(VcdWriter(settings.vcd_timescale).render(doc, parse_time(args.horizon)), args, out)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, TextIO, Settings], int]] = {
    "eval": cmd_eval,
    "erode": cmd_erode,
    "apply": cmd_apply,
    "check-ri": cmd_check_ri,
    "check-ai": cmd_check_ai,
    "subset": cmd_subset,
    "zeno": cmd_zeno,
    "fit": cmd_fit,
    "demo": cmd_demo,
    "export-vcd": cmd_export_vcd,
}


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    settings: Optional[Settings] = None,
) -> int:
    """
    Execute one subcommand.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)
        stdout: Stream receiving the report (sys.stdout when None)
        settings: Runtime settings (read from the environment when None)

    Returns:
        Exit status
    """
    out = stdout or sys.stdout
    settings = settings or load_settings()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        return COMMANDS[args.command](args, out, settings)
    except (UsageError, InertiaError, ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        sys.stderr.write(f"inertia {args.command}: {e}\n")
        return EXIT_USAGE


def main() -> None:
    settings = load_settings()
    logging.basicConfig(
        level=settings.log_level,
        format='%(asctime)s - %(levelname)s - %(message)s'
    )
    sys.exit(run(sys.argv[1:], settings=settings))


if __name__ == "__main__":
    main()
