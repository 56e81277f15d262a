"""Exact verification toolkit for anticanonical thresholds on del Pezzo surfaces
and birational maps of del Pezzo fibrations."""

__version__ = "0.1.0"
