"""Command line, file formats, scenarios and bundled fixtures."""
from .main import main

__all__ = ["main"]
