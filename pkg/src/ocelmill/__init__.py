"""Schema-graph exploration and object-centric event log extraction for
ERP-style relational data.

The package covers the full pipeline: parse schema metadata, build a labeled
property graph over tables and document classes, seed and expand a table
selection from a document class, and extract an OCEL JSON event log from the
selected tables' row data, without writing a single query.
"""

__version__ = "0.1.0"


def bundled_dataset_path():
    """Directory of the miniature procurement dataset shipped in the package."""
    import os
    from importlib.resources import files
    from pathlib import Path

    return Path(os.fspath(files("ocelmill") / "data" / "p2p_mini"))
