"""Debris catalog ingestion from two-line element sets."""
from .tle import DebrisRecord, line_checksum, parse_tle, read_catalog, select_records

__all__ = ["DebrisRecord", "line_checksum", "parse_tle", "read_catalog", "select_records"]
