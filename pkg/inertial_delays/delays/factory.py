"""
Build delay models from their textual description.

Grammar:
    model := transport:D | selftimed:THETA[:INIT] | dual(model) | serial(model,model,...)
"""

import logging
from typing import List

from inertial_delays.delays.base import DelayModel
from inertial_delays.delays.composite import DualDelay, SerialDelay
from inertial_delays.delays.self_timed import SelfTimedDelay
from inertial_delays.delays.transport import TransportDelay
from inertial_delays.errors import ModelSpecError
from inertial_delays.utils.helpers import parse_time


logger = logging.getLogger(__name__)


def _split_top_level(text: str) -> List[str]:
    """Split on commas that are not nested inside parentheses."""
    parts, depth, current = [], 0, []
    for char in text:
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ModelSpecError(f"unbalanced parentheses in {text!r}")
        if char == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(char)
    if depth != 0:
        raise ModelSpecError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return [part.strip() for part in parts]


def _wrapped(spec: str, keyword: str) -> str:
    inner = spec[len(keyword):].strip()
    if not (inner.startswith("(") and inner.endswith(")")):
        raise ModelSpecError(f"expected {keyword}(...), got {spec!r}")
    return inner[1:-1]


def parse_model(spec: str) -> DelayModel:
    """
    Parse a --model description.

    Args:
        spec: Text such as "serial(selftimed:2:0,selftimed:4:0)"

    Returns:
        The described model

    Raises:
        ModelSpecError: For anything that does not match the grammar
    """
    spec = spec.strip()
    if not spec:
        raise ModelSpecError("empty model description")

    try:
        if spec.startswith("serial"):
            stages = _split_top_level(_wrapped(spec, "serial"))
            if not stages or any(not part for part in stages):
                raise ModelSpecError(f"serial chain needs one or more stages: {spec!r}")
            model: DelayModel = SerialDelay([parse_model(part) for part in stages])
        elif spec.startswith("dual"):
            model = DualDelay(parse_model(_wrapped(spec, "dual")))
        elif spec.startswith("transport:"):
            fields = spec.split(":")
            if len(fields) != 2:
                raise ModelSpecError(f"expected transport:D, got {spec!r}")
            model = TransportDelay(parse_time(fields[1]))
        elif spec.startswith("selftimed:"):
            fields = spec.split(":")
            if len(fields) not in (2, 3):
                raise ModelSpecError(f"expected selftimed:THETA[:INIT], got {spec!r}")
            init = fields[2].strip() if len(fields) == 3 else "0"
            if init not in ("0", "1"):
                raise ModelSpecError(f"initial state must be 0 or 1, got {init!r}")
            model = SelfTimedDelay(parse_time(fields[1]), int(init))
        else:
            raise ModelSpecError(f"unknown delay model {spec!r}")
    except ModelSpecError:
        raise
    except ValueError as e:
        raise ModelSpecError(f"invalid model {spec!r}: {e}") from e

    logger.debug(f"Parsed model {model.describe()}")
    return model
