"""Relatórios CSV e JSON."""

from app.report.emitter import ReportEmitter, emit_report, read_table

__all__ = ["ReportEmitter", "emit_report", "read_table"]
