"""
Inertial delays - exact binary signals and inertial delay models.

This package provides:
- Signals with exact rational transition times, Boolean algebra and erosion
- Relative and absolute inertia properties, their order, duality and Zeno analysis
- Deterministic delay models (transport, self-timed, serial, dual) with corpus checks
- A wave text format and VCD export
"""

__version__ = "1.0.0"
