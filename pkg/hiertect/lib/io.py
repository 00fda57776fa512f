"""
    Reading and writing the file formats of the command line: CSV matrices,
    dendrogram / basis / model / config JSON, and result tables.  Every
    output goes through atomic_write, so an error never leaves a partial
    file behind; the path "-" stands for stdout.
"""

from ..utils.exceptions import FileFormatError, ConfigError, SimilarityError
from ..utils.exceptions import HierarchyError
from ..core.SimilarityMatrix import SimilarityMatrix
from ..core.SnapshotSet import SnapshotSet
from ..core.Dendrogram import Dendrogram
from ..core.TreeModel import TreeModel
from io import StringIO
import numpy as np
import tempfile
import json
import csv
import sys
import os

STDIO = "-"

# Writing

def atomic_write(path, text):
    """
        Writes 'text' to a temporary file next to 'path' and renames it into
        place
    """
    if path is None or path == STDIO:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    dirname = os.path.dirname(os.path.abspath(path))
    os.makedirs(dirname, exist_ok = True)
    fd, tmp = tempfile.mkstemp(dir = dirname, prefix = ".hiertect_",
                               suffix = ".tmp")
    try:
        with os.fdopen(fd, "w", newline = "") as outfile:
            outfile.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise

def format_value(x):
    """
        Shortest round-trip text for floats, plain text for everything else
    """
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)

def comment_lines(params):
    return [f"# {key}={format_value(val)}" for key, val in params.items()]

def csv_text(columns, rows, comments = ()):
    buffer = StringIO()
    for line in comments:
        buffer.write(line.rstrip("\n") + "\n")
    writer = csv.writer(buffer, lineterminator = "\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(x) for x in row])
    return buffer.getvalue()

def json_text(obj):
    return json.dumps(obj, indent = 2, allow_nan = False) + "\n"

def write_json(path, obj):
    atomic_write(path, json_text(obj))

def write_matrix_csv(path, M, comments = ()):
    M = np.asarray(M)
    columns = [f"c{j:d}" for j in range(M.shape[1])]
    atomic_write(path, csv_text(columns, M.tolist(), comments))

# Reading

def _read_text(path):
    if path == STDIO:
        return sys.stdin.read()
    try:
        with open(path, newline = "") as infile:
            return infile.read()
    except OSError as e:
        raise FileFormatError(path, e.strerror or str(e))

def _is_number(cell):
    try:
        float(cell)
    except ValueError:
        return False
    return True

def read_numeric_csv(path):
    """
        Parses a CSV of numbers, skipping blank and '#' lines and a header
        row (any non-numeric cell in the first data row).  Returns a list of
        (1-based file row, float values) pairs.
    """
    text = _read_text(path)
    rows = []
    header_seen = False
    for lineno, cells in enumerate(csv.reader(StringIO(text)), start = 1):
        cells = [c.strip() for c in cells]
        if not cells or all(c == "" for c in cells):
            continue
        if cells[0].startswith("#"):
            continue
        if not rows and not header_seen and not all(map(_is_number, cells)):
            header_seen = True
            continue
        values = []
        for col, cell in enumerate(cells, start = 1):
            try:
                value = float(cell)
            except ValueError:
                msg = f"'{cell}' is not a number."
                raise FileFormatError(path, msg, lineno, col)
            if not np.isfinite(value):
                msg = f"'{cell}' is not a finite number."
                raise FileFormatError(path, msg, lineno, col)
            values.append(value)
        rows.append((lineno, values))
    if not rows:
        raise FileFormatError(path, "File holds no numeric rows.")
    return rows

def read_matrix_csv(path):
    """
        Rectangular matrix; every row must be as long as the first
    """
    rows = read_numeric_csv(path)
    width = len(rows[0][1])
    for lineno, values in rows:
        if len(values) != width:
            msg = f"Row has {len(values):d} columns, expected {width:d}."
            raise FileFormatError(path, msg, lineno)
    return np.array([values for _, values in rows])

def read_similarity_csv(path):
    """
        Square symmetric matrix; the first row whose length differs from
        the number of rows is reported
    """
    rows = read_numeric_csv(path)
    n = len(rows)
    for lineno, values in rows:
        if len(values) != n:
            msg = (f"Row has {len(values):d} columns; a similarity matrix "
                   f"with {n:d} rows must be square.")
            raise FileFormatError(path, msg, lineno)
    try:
        return SimilarityMatrix([values for _, values in rows])
    except SimilarityError as e:
        raise FileFormatError(path, str(e))

def read_snapshots_csv(path, M = 1.0):
    return SnapshotSet(read_matrix_csv(path), M)

def read_json(path):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FileFormatError(path, e.msg, e.lineno, e.colno)

def read_config_json(path):
    """
        Parsed experiment configuration; any parse problem is a ConfigError
    """
    try:
        return read_json(path)
    except FileFormatError as e:
        raise ConfigError(str(e))

# Domain objects

def dendrogram_to_dict(D):
    return {"leaf_count": D.leaf_count,
            "merges": [{"left": m.left, "right": m.right, "parent": m.parent,
                        "linkage": m.linkage,
                        "members": list(D.cluster(m.parent).members)}
                       for m in D.merges]}

def dendrogram_from_dict(data, path = "<dendrogram>"):
    try:
        merges = [(m["left"], m["right"], m["parent"], m["linkage"])
                  for m in data["merges"]]
        return Dendrogram(data["leaf_count"], merges)
    except (KeyError, TypeError) as e:
        raise FileFormatError(path, f"Malformed dendrogram: {e!s}.")
    except HierarchyError as e:
        raise FileFormatError(path, str(e))

def basis_to_dict(B):
    """
        Sparse description: per column its merge, sorted support and the
        weight on each support leaf
    """
    M = B.matrix
    columns = []
    for k in range(B.size):
        support = B.support(k)
        merge = list(B.provenance[k]) if k < B.size - 1 else None
        columns.append({"merge": merge,
                        "support": [int(i) for i in support],
                        "weights": [float(w) for w in M[support, k]]})
    return {"size": B.size, "columns": columns}

def model_to_dict(m, g = None):
    data = {"d": m.d, "L": m.L}
    if g is not None:
        data.update(g.to_dict())
    return data

def model_from_dict(data, path = "<model>"):
    """
        (TreeModel, beta, alpha, gammas) from a model JSON object; gammas
        entries of null mean an infinite level and stay None.  "level0" is
        accepted but recomputed from beta and alpha.
    """
    if not isinstance(data, dict):
        raise FileFormatError(path, "Model must be a JSON object.")
    unknown = set(data) - {"d", "L", "beta", "alpha", "gammas", "level0"}
    if unknown:
        msg = f"Unknown model keys: {', '.join(sorted(unknown))}."
        raise FileFormatError(path, msg)
    try:
        m = TreeModel(data["d"], data["L"])
    except (KeyError, TypeError, ValueError) as e:
        raise FileFormatError(path, f"Invalid tree model: {e!s}.")
    gammas = data.get("gammas")
    if gammas is not None:
        try:
            gammas = [None if g is None else float(g) for g in gammas]
        except (TypeError, ValueError) as e:
            raise FileFormatError(path, f"Invalid gammas: {e!s}.")
    return m, data.get("beta"), data.get("alpha"), gammas

# Result tables

def pattern_rows(X, D, A, roots):
    for k in range(X.shape[0]):
        yield [k, int(roots[k])] + D[k].tolist() + A[k].tolist() + X[k].tolist()

def write_patterns_csv(path, X, D, A, roots, comments = ()):
    L, p = D.shape[1], X.shape[1]
    columns = (["sample", "root"] + [f"D{l:d}" for l in range(1, L + 1)]
               + [f"A{l:d}" for l in range(L + 1)]
               + [f"x{i:d}" for i in range(p)])
    atomic_write(path, csv_text(columns, pattern_rows(X, D, A, roots),
                                comments))

def write_power_csv(path, curve, comments = ()):
    columns = ["detector", "mu", "power", "stderr", "trials", "threshold"]
    atomic_write(path, csv_text(columns, curve.rows, comments))

def write_calibration_csv(path, calibrations, comments = ()):
    columns = ["detector", "threshold", "target_far", "trials",
               "achieved_far", "ci_low", "ci_high"]
    rows = [[c.kind, c.threshold, c.target_far, c.trials, c.achieved_far,
             *c.achieved_far_ci] for c in calibrations]
    atomic_write(path, csv_text(columns, rows, comments))

def write_recovery_csv(path, table, comments = ()):
    columns = ["p", "n", "trials", "recovery_prob", "stderr"]
    atomic_write(path, csv_text(columns, table.rows, comments))

def write_decisions_csv(path, kinds, decisions, comments = ()):
    columns = ["observation"] + list(kinds)
    rows = ([k] + [int(v) for v in row] for k, row in enumerate(decisions))
    atomic_write(path, csv_text(columns, rows, comments))
