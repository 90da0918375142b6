from .render import FigureSpec, SchemaError, load_rows, render, main

__all__ = ["FigureSpec", "SchemaError", "load_rows", "render", "main"]
