"""
Text reports: redundancy analysis, occurrence tables and family statistics (CSV)
"""

import csv
import io
from typing import List, Sequence, Tuple

from config.settings import FORMAT_CONFIG
from core.eoltree import EOLTree, occurrence_tree, skeletal_match
from core.formula import formula_key, render
from data.models import FamilyStats, RedundancyReport
from export.eol_text import export_eol


def export_report(report: RedundancyReport, t: EOLTree) -> str:
    """
    "level label count" rows sorted by (level, label), then for each reported
    level the repeated subtree in EOL format and "multiplicity <k> at level <i>"
    """
    lines = [f"threshold {report.threshold}"]
    for level in sorted(report.histogram):
        row = report.histogram[level]
        for label in sorted(row, key=formula_key):
            lines.append(f"{level} {render(label)} {row[label]}")
    if report.is_empty:
        lines.append("no level reaches the threshold")
        return '\n'.join(lines) + '\n'

    text = '\n'.join(lines) + '\n'
    for repeated in report.repeated:
        first = next(o for o in skeletal_match(repeated.pattern, t) if o.root == repeated.roots[0])
        text += export_eol(occurrence_tree(t, first, repeated.pattern))
        text += f"multiplicity {repeated.multiplicity} at level {repeated.level}\n"
    return text


def export_occurrence_table(rows: Sequence[Tuple[int, str, int, int]]) -> str:
    """Rows of (level, label, measured, expected)"""
    lines = ["level label occ expected"]
    lines.extend(f"{level} {label} {measured} {expected}" for level, label, measured, expected in rows)
    return '\n'.join(lines) + '\n'


def export_stats_csv(stats: FamilyStats) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(FORMAT_CONFIG['stats_columns'])
    for row in stats.rows:
        ratio = '' if row.ratio is None else f"{row.ratio:.6f}"
        writer.writerow([row.n, row.labels, row.nodes, row.height, row.max_occ, ratio])
    return buffer.getvalue()


def stats_summary(stats: FamilyStats) -> List[str]:
    lines = [f"growth exponent {stats.growth_exponent:.6f}"]
    if stats.step_ratio is not None:
        lines.append(f"step ratio {stats.step_ratio:.6f}")
    return lines
