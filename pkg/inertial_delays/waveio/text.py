"""
Line oriented text format for named signals.

    # comment
    u = 0 | [0,1) [2,3) [4,inf)
    z = 1 |

The bit before "|" is the value on (-inf, first transition); the intervals
mark where the signal takes the other value.
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from inertial_delays.errors import MalformedSignalError, WaveParseError
from inertial_delays.signals.core import Signal, from_intervals
from inertial_delays.utils.helpers import parse_time


logger = logging.getLogger(__name__)

NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')
_LINE_RE = re.compile(r'^(?P<name>[^=]*)=(?P<bit>[^|]*)\|(?P<intervals>.*)$')
_INTERVAL_RE = re.compile(r'\[\s*([^,\[\]()]+?)\s*,\s*([^,\[\]()]+?)\s*\)')


@dataclass(frozen=True)
class WaveDoc:
    """
    Ordered named signals.

    Attributes:
        entries: (name, signal) pairs; names are unique identifiers
    """

    entries: Tuple[Tuple[str, Signal], ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        seen = set()
        for name, _ in entries:
            if not NAME_RE.match(name):
                raise MalformedSignalError(f"invalid signal name {name!r}")
            if name in seen:
                raise MalformedSignalError(f"duplicate signal name {name!r}")
            seen.add(name)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, **signals: Signal) -> "WaveDoc":
        return cls(tuple(signals.items()))

    @property
    def names(self) -> List[str]:
        return [name for name, _ in self.entries]

    @property
    def signals(self) -> List[Signal]:
        return [signal for _, signal in self.entries]

    def get(self, name: str) -> Optional[Signal]:
        for entry_name, signal in self.entries:
            if entry_name == name:
                return signal
        return None

    def __getitem__(self, name: str) -> Signal:
        signal = self.get(name)
        if signal is None:
            raise KeyError(name)
        return signal

    def __iter__(self) -> Iterator[Tuple[str, Signal]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _parse_intervals(text: str, line_no: int) -> List[Tuple]:
    intervals = []
    position = 0
    for match in _INTERVAL_RE.finditer(text):
        if text[position:match.start()].strip():
            raise WaveParseError(line_no, f"unexpected text {text[position:match.start()].strip()!r}")
        start_text, end_text = match.group(1), match.group(2)
        if start_text in ("inf", "-inf"):
            raise WaveParseError(line_no, "intervals must start at a finite time")
        try:
            start = parse_time(start_text)
            end = None if end_text == "inf" else parse_time(end_text)
        except ValueError as e:
            raise WaveParseError(line_no, str(e)) from e
        intervals.append((start, end))
        position = match.end()
    if text[position:].strip():
        raise WaveParseError(line_no, f"unexpected text {text[position:].strip()!r}")
    return intervals


def parse_waves(text: str) -> WaveDoc:
    """
    Parse the wave text format.

    Args:
        text: Document text

    Returns:
        Parsed document, entries in file order

    Raises:
        WaveParseError: With the 1-based line number of the first bad line
    """
    entries = []
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _LINE_RE.match(line)
        if not match:
            raise WaveParseError(line_no, "expected 'name = <0|1> | intervals'")
        name = match.group("name").strip()
        if not NAME_RE.match(name):
            raise WaveParseError(line_no, f"invalid signal name {name!r}")
        if name in seen:
            raise WaveParseError(line_no, f"duplicate signal name {name!r}")
        bit = match.group("bit").strip()
        if bit not in ("0", "1"):
            raise WaveParseError(line_no, f"initial value must be 0 or 1, got {bit!r}")
        intervals = _parse_intervals(match.group("intervals"), line_no)
        try:
            signal = from_intervals(int(bit), intervals)
        except MalformedSignalError as e:
            raise WaveParseError(line_no, str(e)) from e
        seen.add(name)
        entries.append((name, signal))
    logger.debug(f"Parsed {len(entries)} signal(s)")
    return WaveDoc(tuple(entries))


def emit_waves(doc: WaveDoc) -> str:
    """
    Canonical text of a document: one line per entry, merged intervals,
    times as p or p/q.
    """
    return "".join(f"{name} = {signal}\n" for name, signal in doc)


def read_waves(path: str) -> WaveDoc:
    with open(path, "r", encoding="utf-8") as f:
        return parse_waves(f.read())


def write_waves(doc: WaveDoc, path: str) -> str:
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit_waves(doc))
    logger.info(f"Wrote {len(doc)} signal(s) to {path}")
    return path
