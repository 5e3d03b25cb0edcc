"""Exact verification engine for multi-component Pfaff-Toda bilinear relations."""
__version__ = "0.1.0"
