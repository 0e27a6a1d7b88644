"""HTTP service wrapping the clustering and benchmark core."""

from .app import app, create_app

__all__ = ["app", "create_app"]
