from typing import List

from common import cell_label, label_to_cell
from richardson.core import MultiplicityReport


def render_text(report: MultiplicityReport) -> str:
    lines = [
        "d=%i (%s, ambient %i)" % (report["d"], report["mode"], report["ambient"]),
        "alpha = %s" % (_tuple(report["alpha"]),),
        "beta  = %s" % (_tuple(report["beta"]),),
        "gamma = %s" % (_tuple(report["gamma"]),),
    ]

    if "reason" in report:
        lines.append("multiplicity = 0 (%s)" % (report["reason"],))
        return "\n".join(lines) + "\n"

    lines.append("T~alpha = %s" % (_cells(report["t_alpha"]),))
    lines.append("W~gamma = %s" % (_cells(report["w_gamma"]),))

    for key in sorted(report["endpoints"], key=label_to_cell):
        ends = report["endpoints"][key]
        lines.append(
            "  (%s): floor (%s), ceil (%s)"
            % (key, cell_label(ends["floor"]), cell_label(ends["ceil"]))
        )

    for method, result in report["results"].items():
        line = "%s: multiplicity %i" % (method, result["multiplicity"])
        if "max_degree" in result:
            line += ", maximal degree %i" % (result["max_degree"],)
        if "timings_ms" in report and method in report["timings_ms"]:
            line += " [%.1f ms]" % (report["timings_ms"][method],)
        lines.append(line)

    for number, family in enumerate(report.get("families", []), start=1):
        lines.append("family %i:" % (number,))
        for path in family:
            lines.append("  " + " -> ".join("(%s)" % cell_label(cell) for cell in path))

    lines.append("multiplicity = %i" % (report["multiplicity"],))

    return "\n".join(lines) + "\n"


def _tuple(values: List[int]) -> str:
    return "(%s)" % (",".join(map(str, values)),)


def _cells(values: List[List[int]]) -> str:
    return "{%s}" % (", ".join("(%s)" % cell_label(cell) for cell in values),)
