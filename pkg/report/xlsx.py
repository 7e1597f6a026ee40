import openpyxl

from common import cell_label
from richardson.core import MultiplicityReport


def export_xlsx(report: MultiplicityReport, filename: str) -> None:
    workbook = openpyxl.Workbook()
    bd_fat_bottom = openpyxl.styles.borders.Border(
        bottom=openpyxl.styles.borders.Side("medium")
    )
    bold = openpyxl.styles.Font(bold=True)

    summary = workbook.active
    summary.title = "Summary"
    summary.append(("Key", "Value"))
    for column in (1, 2):
        summary.cell(row=1, column=column).border = bd_fat_bottom

    for key in ("d", "mode", "ambient"):
        summary.append((key, report[key]))

    for key in ("alpha", "beta", "gamma"):
        summary.append((key, ",".join(map(str, report[key]))))

    for key in ("t_alpha", "w_gamma"):
        summary.append((key, " ".join("(%s)" % cell_label(cell) for cell in report[key])))

    for anchor, ends in report["endpoints"].items():
        summary.append(
            (
                "endpoints (%s)" % (anchor,),
                "floor (%s), ceil (%s)"
                % (cell_label(ends["floor"]), cell_label(ends["ceil"])),
            )
        )

    for method, result in report["results"].items():
        for key, value in result.items():
            summary.append(("%s %s" % (method, key), value))

    summary.append(("multiplicity", report["multiplicity"]))
    summary.cell(row=summary.max_row, column=1).font = bold
    summary.cell(row=summary.max_row, column=2).font = bold

    if "reason" in report:
        summary.append(("reason", report["reason"]))

    if "families" in report:
        sheet = workbook.create_sheet("Families")
        headers = ("Family", "Anchor", "Path")
        sheet.append(headers)
        for column, _ in enumerate(headers, start=1):
            sheet.cell(row=1, column=column).border = bd_fat_bottom

        anchors = sorted(report["t_alpha"] + report["w_gamma"])
        for number, family in enumerate(report["families"], start=1):
            for anchor, path in zip(anchors, family):
                sheet.append(
                    (
                        number,
                        cell_label(anchor),
                        " ".join("(%s)" % cell_label(cell) for cell in path),
                    )
                )

    workbook.save(filename)
