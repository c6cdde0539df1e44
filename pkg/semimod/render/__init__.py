from .ascii import render_ascii
from .svg import render_svg

__all__ = ["render_ascii", "render_svg"]
