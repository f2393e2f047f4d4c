"""
Deterministic delay models, their relative inertia envelopes and corpus
checks of the delay meta-properties.
"""

from typing import Optional

from inertial_delays.delays.base import DelayModel
from inertial_delays.delays.checks import (
    CheckFailure,
    CheckReport,
    Corpus,
    check_delay_on,
    check_non_anticipation_on,
    check_time_invariance_on,
    tail_variants,
)
from inertial_delays.delays.composite import DualDelay, SerialDelay
from inertial_delays.delays.factory import parse_model
from inertial_delays.delays.self_timed import SelfTimedDelay
from inertial_delays.delays.transport import TransportDelay
from inertial_delays.inertia.params import AIParams, RIParams, ri_to_ai, ri_zeno_free
from inertial_delays.signals.core import Signal


def apply(m: DelayModel, u: Signal) -> Signal:
    return m.apply(u)


def ri_envelope_of(m: DelayModel) -> Optional[RIParams]:
    """Statically known relative inertia params of a model (None for serial chains)."""
    return m.ri_envelope()


def ai_envelope_of(m: DelayModel) -> Optional[AIParams]:
    """Absolute inertia implied by the model's envelope, when both exist."""
    envelope = m.ri_envelope()
    return None if envelope is None else ri_to_ai(envelope)


def model_zeno_free(m: DelayModel) -> Optional[bool]:
    """
    True when the envelope proves the model is not Zeno, None when unknown.

    A Zeno-free envelope bounds every output pulse from below. An envelope
    that is not Zeno-free says nothing about the model itself: self-timed
    stages have the all-zero envelope yet keep interior pulses at least theta.
    """
    envelope = m.ri_envelope()
    if envelope is not None and ri_zeno_free(envelope):
        return True
    return None


__all__ = [
    "CheckFailure",
    "CheckReport",
    "Corpus",
    "DelayModel",
    "DualDelay",
    "SelfTimedDelay",
    "SerialDelay",
    "TransportDelay",
    "ai_envelope_of",
    "apply",
    "check_delay_on",
    "check_non_anticipation_on",
    "check_time_invariance_on",
    "model_zeno_free",
    "parse_model",
    "ri_envelope_of",
    "tail_variants",
]
