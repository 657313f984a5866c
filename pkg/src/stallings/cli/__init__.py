"""Command-line interface and file formats."""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
