"""
Wave text format and VCD export.
"""

from inertial_delays.waveio.text import WaveDoc, emit_waves, parse_waves, read_waves, write_waves
from inertial_delays.waveio.vcd import VcdWriter, export_vcd, identifier_code

__all__ = [
    "VcdWriter",
    "WaveDoc",
    "emit_waves",
    "export_vcd",
    "identifier_code",
    "parse_waves",
    "read_waves",
    "write_waves",
]
