import json

from richardson.core import MultiplicityReport


def report_to_json(report: MultiplicityReport) -> str:
    # Key order is fixed by construction and every cell list is sorted, so the
    # output is byte-reproducible.
    return json.dumps(report, indent=2) + "\n"


def report_from_json(text: str) -> MultiplicityReport:
    return json.loads(text)
