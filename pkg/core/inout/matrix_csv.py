# core/inout/matrix_csv.py
"""
CSV form of block-indexed polynomial matrices: a header row and a header
column of weight strings in block order, canonical polynomial text inside.
"""
import csv
import io
from pathlib import Path

from core.numeric.poly_matrix import PolyMatrix


def matrix_to_csv(matrix: PolyMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [str(w) for w in matrix.index])
    for w, row in zip(matrix.index, matrix.rows):
        writer.writerow([str(w)] + [str(p) for p in row])
    return buf.getvalue()


def write_matrix_csv(matrix: PolyMatrix, path: Path) -> None:
    Path(path).write_text(matrix_to_csv(matrix), encoding="utf-8", newline="")
