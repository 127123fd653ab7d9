"""Homogeneous edge-coloring API"""

from .graphs.toplevel import *
