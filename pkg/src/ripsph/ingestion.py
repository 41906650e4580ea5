"""Point-cloud ingestion: PDB alpha-carbon extraction and CSV coordinates."""
from __future__ import annotations

from typing import IO, Optional, Union

import numpy as np

from .errors import EmptySelection, MalformedRecord, NonNumeric, RaggedRows

# PDB v3.3 fixed columns (0-based slices of the 1-indexed ranges).
_RECORD = slice(0, 6)
_ATOM_NAME = slice(12, 16)
_ALTLOC = 16
_CHAIN = 21
_RESSEQ = slice(22, 26)
_X = slice(30, 38)
_Y = slice(38, 46)
_Z = slice(46, 54)


def _as_text(source: Union[str, bytes, IO]) -> str:
    if isinstance(source, bytes):
        return source.decode("ascii", errors="replace")
    if isinstance(source, str):
        return source
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("ascii", errors="replace")
    return data


def as_point_cloud(rows: list[list[float]]) -> np.ndarray:
    """Validate and freeze a list of coordinate rows into an (n, d) array."""
    arr = np.asarray(rows, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("point cloud must be a 2-d array of coordinates")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point cloud contains NaN or infinite coordinates")
    arr.setflags(write=False)
    return arr


def parse_pdb(source: Union[str, bytes, IO], chain: Optional[str] = None) -> np.ndarray:
    """Extract CA atom coordinates from a PDB file, in file order.

    Only the first MODEL is read in multi-model (NMR) files. Alternate
    locations other than blank or 'A' are skipped so each residue yields
    at most one point.
    """
    text = _as_text(source)
    points: list[list[float]] = []
    in_first_model = True
    saw_model = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        record = line[_RECORD].strip()
        if record == "MODEL":
            if saw_model:
                in_first_model = False
            saw_model = True
            continue
        if record == "ENDMDL":
            in_first_model = False
            continue
        if not in_first_model or record != "ATOM":
            continue
        if len(line) < 54:
            raise MalformedRecord(lineno, "ATOM record shorter than 54 columns")
        if line[_ATOM_NAME].strip() != "CA":
            continue
        if line[_ALTLOC] not in (" ", "A"):
            continue
        if chain is not None and line[_CHAIN] != chain:
            continue
        try:
            xyz = [float(line[_X]), float(line[_Y]), float(line[_Z])]
        except ValueError:
            raise MalformedRecord(lineno, "unparseable coordinate fields") from None
        points.append(xyz)
    if not points:
        raise EmptySelection("no CA atoms matched the selection")
    return as_point_cloud(points)


def load_csv(source: Union[str, bytes, IO]) -> np.ndarray:
    """Parse comma-separated coordinates; a non-numeric first row is a header."""
    text = _as_text(source)
    rows: list[list[float]] = []
    width: Optional[int] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        fields = [f.strip() for f in line.split(",")]
        if lineno == 1 and not rows:
            try:
                float(fields[0])
            except ValueError:
                continue  # header row
        values = []
        for f in fields:
            try:
                values.append(float(f))
            except ValueError:
                raise NonNumeric(lineno, f) from None
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise RaggedRows(
                f"line {lineno}: expected {width} fields, got {len(values)}")
        rows.append(values)
    if not rows:
        raise EmptySelection("no coordinate rows found")
    return as_point_cloud(rows)


def write_csv(points: np.ndarray) -> str:
    """Headerless CSV of coordinates that round-trips through load_csv."""
    lines = [",".join(repr(float(x)) for x in row) for row in points]
    return "\n".join(lines) + "\n"
