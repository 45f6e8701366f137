"""Shared formatting helpers."""

from __future__ import annotations

__all__ = ["sig12", "fmt12"]


def sig12(x: float) -> float:
    """Round to 12 significant digits (the precision of all CSV output)."""
    return float(f"{x:.12g}")


def fmt12(x) -> str:
    """Format a value for CSV: floats at 12 significant digits, rest as str."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return f"{x:.12g}"
