"""
Report writers. A report is a volatile header (timestamp, host, command,
elapsed time) plus a body that depends only on the configuration and seed.
"""

import csv
import hashlib
import io
import json
import socket
import sys
from datetime import datetime, timezone


VIOLATION_FIELDS = ["poset", "decomposition", "triple", "indices", "lhs", "rhs"]


def make_header(command, elapsed_ms):
    return {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "host": socket.gethostname(),
        "command": command,
        "elapsed_ms": int(elapsed_ms),
    }


def make_report(header, body):
    report = {"header": header}
    report.update(body)
    return report


def report_body(report):
    return {k: v for k, v in report.items() if k != "header"}


def _canonical(body):
    return json.dumps(body, sort_keys=True, separators=(",", ":"))


def report_body_digest(report):
    """ sha256 of the canonical JSON of everything except the header. """
    return hashlib.sha256(_canonical(report_body(report)).encode("utf-8")).hexdigest()


def to_json(report):
    return json.dumps(report, indent=4, sort_keys=True) + "\n"


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join("" if x is None else str(x) for x in value)
    return str(value)


def to_csv(report):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=VIOLATION_FIELDS, lineterminator="\n")
    writer.writeheader()
    for violation in report.get("violations", []):
        writer.writerow({k: _cell(violation.get(k)) for k in VIOLATION_FIELDS})
    return buf.getvalue()


def to_text(report):
    lines = []
    for name, suite in sorted(report.get("suites", {}).items()):
        status = "ok" if suite["passed"] else "FAILED"
        lines.append(
            "%-14s %6s  %d instances, %d violations"
            % (name, status, suite["instances_checked"], suite["violations"])
        )
    lines.append(
        "scope %s: %d instances checked, %d violations"
        % (report["scope"], report["instances_checked"], len(report["violations"]))
    )
    for violation in report["violations"]:
        lines.append(
            "  " + " ".join("%s=%s" % (k, _cell(violation.get(k))) for k in VIOLATION_FIELDS)
        )
    return "\n".join(lines) + "\n"


FORMATTERS = {"json": to_json, "csv": to_csv, "text": to_text}


def render_report(report, fmt):
    if fmt not in FORMATTERS:
        raise ValueError("--format %s is not supported" % fmt)
    return FORMATTERS[fmt](report)


def write_report(report, fmt, path=None):
    """ Writes the formatted report to @path, or to stdout when @path is None. """
    text = render_report(report, fmt)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fp:
            fp.write(text)
    return text


def _table_value(table, key, q):
    return table.poly(*key).to_text() if q else str(table.count(*key))


def table_body(p, table, q=False):
    """ Report body of `table`: one entry per nonzero cell, keyed "i,j". """
    return {
        "poset": p.to_text(),
        "triple": list(table.triple),
        "signed": table.signed,
        "q": bool(q),
        "entries": {"%d,%d" % key: _table_value(table, key, q) for key, _ in table.items()},
    }


def table_to_csv(table, q=False):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "value"])
    for key, _ in table.items():
        writer.writerow([key[0], key[1], _table_value(table, key, q)])
    return buf.getvalue()


def table_to_text(table, q=False):
    """ Grid with rows i and columns j; empty cells print as 0. """
    rows, cols = table.rows(), table.cols()
    cells = [[_table_value(table, (i, j), q) for j in cols] for i in rows]
    width = max([len(c) for row in cells for c in row] + [len(str(x)) for x in rows + cols] + [1])
    lines = [" " * (width + 1) + " ".join("%*d" % (width, j) for j in cols)]
    for i, row in zip(rows, cells):
        lines.append("%*d " % (width, i) + " ".join("%*s" % (width, c) for c in row))
    return "\n".join(lines) + "\n"


def region_body(p, d, grid, extension=None):
    """ Report body of `render`; @grid is the rendered region, top row first. """
    return {
        "poset": p.to_text(),
        "decomposition": d.to_text(),
        "extension": extension,
        "grid": grid.split("\n"),
    }


def region_to_csv(grid):
    """ One row per vertex (h, k) with its grid character. """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["h", "k", "cell"])
    rows = grid.split("\n")
    for y, row in enumerate(rows):
        for h, cell in enumerate(row):
            writer.writerow([h, len(rows) - 1 - y, cell])
    return buf.getvalue()
