"""
Corpus level checks of the delay, time invariance and non-anticipation
meta-properties.

These are necessary conditions evaluated on finitely many inputs, not proofs
over every signal.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from tqdm import tqdm

from inertial_delays.delays.base import DelayModel
from inertial_delays.errors import MalformedSignalError
from inertial_delays.signals.core import Signal, agree_until
from inertial_delays.utils.helpers import TimeLike, as_time, format_time


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Corpus:
    """
    Labeled input signals.

    Attributes:
        entries: (label, signal) pairs with unique labels
    """

    entries: Tuple[Tuple[str, Signal], ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        labels = [label for label, _ in entries]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise MalformedSignalError(f"corpus labels must be unique, repeated: {', '.join(duplicates)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, signals: Iterable[Signal], prefix: str = "u") -> "Corpus":
        """Label signals prefix0, prefix1, ..."""
        return cls(tuple((f"{prefix}{index}", signal) for index, signal in enumerate(signals)))

    def __iter__(self) -> Iterator[Tuple[str, Signal]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CheckFailure:
    """One counterexample found by a corpus check."""

    label: str
    detail: str

    def __str__(self) -> str:
        return f"{self.label}: {self.detail}"


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a corpus check; truthy when no input failed."""

    ok: bool
    failures: List[CheckFailure] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _report(name: str, model: DelayModel, failures: List[CheckFailure]) -> CheckReport:
    if failures:
        logger.info(f"{name} failed for {model.describe()} on {len(failures)} input(s)")
    return CheckReport(not failures, failures)


def check_delay_on(m: DelayModel, c: Corpus, progress: bool = False) -> CheckReport:
    """
    Every output settles to the final value of its input.

    Args:
        m: Delay model
        c: Corpus of inputs
        progress: Show a tqdm progress bar

    Returns:
        Report with one failure per input whose final values differ
    """
    failures = []
    for label, u in tqdm(c, desc="delay", disable=not progress):
        x = m.apply(u)
        if x.final_value != u.final_value:
            failures.append(CheckFailure(label, f"final value {x.final_value}, input settles to {u.final_value}"))
    return _report("delay check", m, failures)


def check_time_invariance_on(
    m: DelayModel,
    c: Corpus,
    shifts: Sequence[TimeLike],
    progress: bool = False,
) -> CheckReport:
    """
    apply(m, translate(u, d)) equals translate(apply(m, u), d) for every input and shift.
    """
    shifts = [as_time(d) for d in shifts]
    failures = []
    for label, u in tqdm(c, desc="time invariance", disable=not progress):
        x = m.apply(u)
        for d in shifts:
            shifted = m.apply(u.translate(d))
            if shifted != x.translate(d):
                failures.append(
                    CheckFailure(label, f"shift {format_time(d)}: got {shifted}, expected {x.translate(d)}")
                )
    return _report("time invariance check", m, failures)


def tail_variants(u: Signal, cut: Fraction, gap: Fraction) -> List[Tuple[str, Signal]]:
    """
    Inputs that agree with u on (-inf, cut] and differ from it later.

    The flipped variant complements u from cut + gap on; the held variant keeps
    the value u has at cut forever.
    """
    flipped = u ^ Signal(0, (cut + gap,))
    held = Signal(u.initial, tuple(t for t in u.transitions if t <= cut))
    variants = [("flipped tail", flipped)]
    if held != u:
        variants.append(("held tail", held))
    return variants


def check_non_anticipation_on(
    m: DelayModel,
    c: Corpus,
    cut: TimeLike,
    gap: TimeLike = 1,
    progress: bool = False,
) -> CheckReport:
    """
    Outputs up to cut only depend on inputs up to cut.

    Args:
        m: Delay model
        c: Corpus of inputs
        cut: Instant up to which mutated inputs agree with the original
        gap: Strictly positive distance between cut and the flipped tail
        progress: Show a tqdm progress bar

    Returns:
        Report with one failure per mutated input whose output differs on (-inf, cut]
    """
    cut, gap = as_time(cut), as_time(gap)
    if gap <= 0:
        raise ValueError("gap must be strictly positive")
    failures = []
    for label, u in tqdm(c, desc="non-anticipation", disable=not progress):
        x = m.apply(u)
        for name, v in tail_variants(u, cut, gap):
            y = m.apply(v)
            if not agree_until(x, y, cut):
                failures.append(CheckFailure(label, f"{name}: outputs {x} and {y} differ before {format_time(cut)}"))
    return _report("non-anticipation check", m, failures)
