"""Small I/O and formatting helpers used by several modules."""

import hashlib


def format_number(x) -> str:
    """Render a count or statistic for file output.

    Integral values print as integers; everything else uses 10 significant
    digits so repeated runs produce byte-identical files.
    """
    if isinstance(x, int):
        return str(x)
    xf = float(x)
    if xf.is_integer() and abs(xf) < 2**53:
        return str(int(xf))
    return f"{xf:.10g}"


def round10(x: float) -> float:
    """Round to 10 significant digits (stable JSON output)."""
    return float(f"{float(x):.10g}")


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()
