"""
Value change dump export.

Times are exact rationals, VCD timestamps are integers: every time is
multiplied by the least common multiple of the denominators and the scale is
recorded in the header comment. The value a signal has on (-inf, first
transition) is dumped one tick before the earliest transition.
"""

import io
import logging
from fractions import Fraction
from typing import List, TextIO, Tuple

from vcd import VCDWriter

from inertial_delays.errors import HorizonError
from inertial_delays.utils.helpers import TimeLike, as_time, denominator_lcm, format_time
from inertial_delays.waveio.text import WaveDoc


logger = logging.getLogger(__name__)

_FIRST_ID = 33
_ID_CHARS = 94


def identifier_code(index: int) -> str:
    """Printable short identifier: "!", '"', ... then two characters and so on."""
    code = chr(_FIRST_ID + index % _ID_CHARS)
    index //= _ID_CHARS
    while index:
        index -= 1
        code += chr(_FIRST_ID + index % _ID_CHARS)
        index //= _ID_CHARS
    return code


class VcdWriter:
    """
    Writer for scalar 0/1 dumps of a wave document.
    """

    SCOPE = "waves"

    def __init__(self, timescale: str = "1 ns"):
        """
        Initialize the writer.

        Args:
            timescale: Text written into the $timescale section
        """
        self.timescale = timescale
        self.logger = logging.getLogger(self.__class__.__name__)

    def dump(self, doc: WaveDoc, horizon: TimeLike, stream: TextIO) -> None:
        """
        Write the dump of a document to an open text stream.

        Args:
            doc: Signals to dump, one variable each in document order
            horizon: Final timestamp, strictly after every transition
            stream: Destination, left open

        Raises:
            HorizonError: When some transition is at or after the horizon
        """
        horizon = as_time(horizon)
        transitions = sorted({t for _, signal in doc for t in signal.transitions})
        if transitions and horizon <= transitions[-1]:
            raise HorizonError(
                f"horizon {format_time(horizon)} must lie after the last transition {format_time(transitions[-1])}"
            )

        scale = denominator_lcm([*transitions, horizon])
        horizon_tick = int(horizon * scale)
        first_tick = (int(transitions[0] * scale) if transitions else horizon_tick) - 1
        if horizon_tick <= first_tick:
            raise HorizonError(f"horizon {format_time(horizon)} leaves no room for the initial dump")

        comment = (
            f"ticks per time unit: {scale}; "
            f"values before the first transition are dumped at #{first_tick}"
        )
        writer = VCDWriter(stream, timescale=self.timescale, date="", comment=comment, init_timestamp=first_tick)
        variables = [
            writer.register_var(self.SCOPE, name, "wire", size=1, init=signal.initial)
            for index, (name, signal) in enumerate(doc)
        ]

        changes: List[Tuple[Fraction, int, int]] = []
        for position, (_, signal) in enumerate(doc):
            for edge in signal.edges():
                changes.append((edge.at, position, edge.kind.target))
        changes.sort()
        for at, position, value in changes:
            writer.change(variables[position], int(at * scale), value)
        writer.close(horizon_tick)

        self.logger.debug(f"Dumped {len(doc)} variable(s), {len(changes)} change(s), scale {scale}")

    def render(self, doc: WaveDoc, horizon: TimeLike) -> str:
        """VCD text of a document; see dump."""
        buffer = io.StringIO()
        self.dump(doc, horizon, buffer)
        return buffer.getvalue()

    def write(self, doc: WaveDoc, horizon: TimeLike, path: str) -> str:
        text = self.render(doc, horizon)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        self.logger.info(f"VCD written to {path}")
        return path


def export_vcd(doc: WaveDoc, horizon: TimeLike, timescale: str = "1 ns") -> str:
    """VCD text for a document; see VcdWriter.dump."""
    return VcdWriter(timescale).render(doc, horizon)
