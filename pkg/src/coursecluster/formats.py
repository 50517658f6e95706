"""CSV ingestion and JSON / Newick / SVG output."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .data import DataMatrix
from .dendro import ByCount, ByHeight, ByRelativeHeight, ComparisonReport
from .engine import Dendrogram, Merge
from .errors import ParseError, ValidationError


@dataclass(frozen=True)
class CsvSchema:
    delimiter: str = ","
    has_header: bool = True
    first_column_is_id: bool = True

    def __post_init__(self):
        d = self.delimiter
        if len(d) != 1 or not (d.isprintable() or d == "\t") or d.isalnum() or d in "\"'.-+":
            raise ValidationError(f"unusable CSV delimiter {d!r}")


def parse_csv(text, schema: CsvSchema = CsvSchema()) -> DataMatrix:
    """Read a respondent x course table.

    ``text`` may be ``bytes`` (decoded as UTF-8) or ``str``. Blank lines are
    skipped; row numbers in errors are 1-based line numbers of the input.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 ({exc.reason})") from None
    reader = csv.reader(io.StringIO(text), delimiter=schema.delimiter)
    rows = []
    for record in reader:
        fields = [f.strip() for f in record]
        if not any(fields):
            continue
        rows.append((reader.line_num, fields))
    if not rows:
        raise ValidationError("CSV input is empty")

    offset = 1 if schema.first_column_is_id else 0
    if schema.has_header:
        header_line, header = rows[0]
        body = rows[1:]
        col_labels = header[offset:]
        width = len(header)
    else:
        body = rows
        width = len(rows[0][1])
        col_labels = [f"c{j + 1}" for j in range(width - offset)]
    if not body:
        raise ValidationError("CSV input has a header but no data rows")

    seen = set()
    for j, label in enumerate(col_labels):
        if not label:
            raise ValidationError(f"empty course code in header column {j + offset + 1}")
        if label in seen:
            raise ValidationError(f"duplicate course code {label!r}")
        seen.add(label)

    values, row_labels = [], []
    for number, (line, fields) in enumerate(body, start=1):
        if len(fields) != width:
            raise ParseError(f"expected {width} fields, found {len(fields)}", row=line)
        row_labels.append(fields[0] if schema.first_column_is_id else f"r{number}")
        parsed = []
        for j, raw in enumerate(fields[offset:]):
            col = j + offset + 1
            try:
                x = float(raw)
            except ValueError:
                raise ParseError(f"non-numeric frequency {raw!r}", row=line, column=col) from None
            if not math.isfinite(x) or x < 0:
                raise ParseError(f"frequency must be finite and >= 0, got {raw!r}",
                                 row=line, column=col)
            parsed.append(x)
        values.append(parsed)
    return DataMatrix(values, row_labels, col_labels)


def _number(x):
    x = float(x)
    return str(int(x)) if x.is_integer() and abs(x) < 2 ** 53 else repr(x)


def matrix_to_csv(m: DataMatrix, id_header="respondent", delimiter=",") -> str:
    """Serialize a table so that :func:`parse_csv` recovers every value exactly."""
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    writer.writerow([id_header, *m.col_labels])
    for label, row in zip(m.row_labels, m.values):
        writer.writerow([label, *(_number(x) for x in row)])
    return buf.getvalue()


# -- dendrogram JSON ---------------------------------------------------------

def dendrogram_to_dict(d: Dendrogram) -> dict:
    return {
        "n_leaves": d.n_leaves,
        "labels": list(d.labels),
        "merges": [[m.left, m.right, float(m.height), m.size] for m in d.merges],
    }


def dendrogram_to_json(d: Dendrogram) -> str:
    return json.dumps(dendrogram_to_dict(d))


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def json_to_dendrogram(text) -> Dendrogram:
    """Inverse of :func:`dendrogram_to_json`; every invariant is re-checked."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ParseError("schema: top level must be an object")
    missing = {"n_leaves", "labels", "merges"} - obj.keys()
    if missing:
        raise ParseError(f"schema: missing key(s) {sorted(missing)}")
    n = obj["n_leaves"]
    if not _is_int(n):
        raise ParseError("schema: n_leaves must be an integer")
    labels = obj["labels"]
    if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
        raise ParseError("schema: labels must be a list of strings")
    raw = obj["merges"]
    if not isinstance(raw, list):
        raise ParseError("schema: merges must be a list")
    merges = []
    for t, rec in enumerate(raw):
        if (not isinstance(rec, list) or len(rec) != 4 or not _is_int(rec[0])
                or not _is_int(rec[1]) or not _is_int(rec[3])
                or isinstance(rec[2], bool) or not isinstance(rec[2], (int, float))):
            raise ParseError(f"schema: merge {t} must be [int, int, number, int]")
        merges.append(Merge(rec[0], rec[1], float(rec[2]), rec[3]))
    try:
        return Dendrogram(n, merges, labels)
    except ValidationError as exc:
        raise ParseError(f"invariant: {exc}") from None


# -- Newick ------------------------------------------------------------------

_NEWICK_META = set(",():;[]' \t\n")


def _newick_label(label):
    if any(ch in _NEWICK_META for ch in label):
        return "'" + label.replace("'", "''") + "'"
    return label


def _children(d: Dendrogram, node):
    m = d.merges[node - d.n_leaves]
    return m.left, m.right


def _height(d, node):
    return 0.0 if node < d.n_leaves else d.merges[node - d.n_leaves].height


def dendrogram_to_newick(d: Dendrogram) -> str:
    """Ultrametric Newick string; branch length = parent height - child height."""
    n = d.n_leaves

    def render(node, parent_height):
        length = _number(parent_height - _height(d, node))
        if node < n:
            return f"{_newick_label(d.labels[node])}:{length}"
        left, right = _children(d, node)
        h = _height(d, node)
        return f"({render(left, h)},{render(right, h)}):{length}"

    root = 2 * n - 2
    left, right = _children(d, root)
    h = _height(d, root)
    return f"({render(left, h)},{render(right, h)});"


def leaf_order(d: Dendrogram):
    """Leaves in left-to-right drawing order (stored child order)."""
    n = d.n_leaves
    out, stack = [], [2 * n - 2]
    while stack:
        node = stack.pop()
        if node < n:
            out.append(node)
        else:
            left, right = _children(d, node)
            stack.extend((right, left))
    return out


# -- SVG ---------------------------------------------------------------------

def render_svg(d: Dendrogram, width=800, height=500, orientation="vertical") -> str:
    """Static SVG drawing of the tree.

    ``vertical`` puts leaves along the bottom with height growing upwards;
    ``horizontal`` puts leaves on the left with height growing to the right.
    Merge height maps linearly onto the axis from 0 to the root height. Each
    merge is one ``<polyline class="merge">``, each leaf one ``<text>``.
    """
    if width <= 0 or height <= 0:
        raise ValueError("SVG dimensions must be positive")
    if orientation not in ("vertical", "horizontal"):
        raise ValueError(f"unknown orientation {orientation!r}")
    n = d.n_leaves
    margin = 20.0
    label_room = 90.0
    root_h = d.root_height
    vertical = orientation == "vertical"
    along = (width if vertical else height) - 2 * margin
    across = (height if vertical else width) - 2 * margin - label_room

    order = leaf_order(d)
    slot = {leaf: (k + 0.5) * along / n for k, leaf in enumerate(order)}

    def depth(h):
        return across * (h / root_h) if root_h > 0 else 0.0

    def point(pos, h):
        # pos runs along the leaves, h is a merge height
        if vertical:
            return margin + pos, margin + across - depth(h)
        return margin + label_room + depth(h), margin + pos

    parts = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<g fill="none" stroke="black" stroke-width="1">',
    ]
    pos = dict(slot)
    for t, m in enumerate(d.merges):
        node = n + t
        xs = []
        for child in (m.left, m.right):
            xs.append((pos[child], _height(d, child)))
        (p1, h1), (p2, h2) = xs
        pts = [point(p1, h1), point(p1, m.height), point(p2, m.height), point(p2, h2)]
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in pts)
        parts.append(f'<polyline class="merge" data-height={quoteattr(repr(float(m.height)))} '
                     f'points="{coords}"/>')
        pos[node] = (p1 + p2) / 2
    parts.append("</g>")
    parts.append('<g font-family="sans-serif" font-size="10">')
    for leaf in order:
        x, y = point(slot[leaf], 0.0)
        if vertical:
            attrs = (f'x="{x:.3f}" y="{y + 6:.3f}" text-anchor="end" '
                     f'transform="rotate(-90 {x:.3f} {y + 6:.3f})" dominant-baseline="middle"')
        else:
            attrs = f'x="{x - 6:.3f}" y="{y:.3f}" text-anchor="end" dominant-baseline="middle"'
        parts.append(f"<text {attrs}>{escape(d.labels[leaf])}</text>")
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# -- comparison report -------------------------------------------------------

def _cut_to_dict(rule):
    if isinstance(rule, ByCount):
        return {"rule": "count", "k": rule.k}
    if isinstance(rule, ByHeight):
        return {"rule": "height", "h": rule.h}
    if isinstance(rule, ByRelativeHeight):
        return {"rule": "relative_height", "fraction": rule.fraction}
    raise TypeError(f"unknown cut rule {rule!r}")


def report_to_dict(r: ComparisonReport) -> dict:
    per_linkage = {}
    for linkage, res in r.per_linkage.items():
        per_linkage[linkage.value] = {
            "root_height": float(res.dendrogram.root_height),
            "cut_height": res.cut_height,
            "n_clusters": res.n_clusters,
            "clusters": res.assignment.members(),
            "dendrogram": dendrogram_to_dict(res.dendrogram),
        }
    return {
        "dataset_id": r.dataset_id,
        "orientation": r.orientation.value,
        "standardized": r.standardized,
        "cut": _cut_to_dict(r.cut),
        "per_linkage": per_linkage,
        "ranking": [{"label": label, "score": score} for label, score in r.ranking],
        "strongest": list(r.strongest),
        "weakest": list(r.weakest),
        "agreement": r.agreement,
    }


def report_to_json(r: ComparisonReport) -> str:
    return json.dumps(report_to_dict(r), indent=2) + "\n"
