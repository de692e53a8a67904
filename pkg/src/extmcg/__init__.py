"""Exact algebra for extendable mapping class groups of sphere products."""

from . import ambient_geom, classifier, f2_forms, homotopy_tables, sl2z, smallgrp, verify

__all__ = [
    "ambient_geom",
    "classifier",
    "f2_forms",
    "homotopy_tables",
    "sl2z",
    "smallgrp",
    "verify",
]

__version__ = "0.1.0"
