"""
critcolor - partition-coloring analysis of critical graphs.
"""

__version__ = "0.1.0"
TOOL_NAME = "critcolor"
