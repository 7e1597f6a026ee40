from .serialize import report_from_json, report_to_json
from .svg import RenderError, render_svg
from .text import render_text
from .xlsx import export_xlsx

__all__ = [
    "RenderError",
    "export_xlsx",
    "render_svg",
    "render_text",
    "report_from_json",
    "report_to_json",
]
