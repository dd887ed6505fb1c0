"""HTTP service exposing ingestion, graph exploration, and extraction."""

from ocelmill.service.app import Settings, create_app

__all__ = ["Settings", "create_app"]
