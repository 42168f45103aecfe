"""HTTP service wrapping the core library.

Run with: uvicorn quvac.service:app
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
