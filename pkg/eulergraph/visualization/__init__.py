"""Visualization of maw dual graphs."""

from .maw_visualizer import MawGraphVisualizer

__all__ = ["MawGraphVisualizer"]
