"""Linear systems on the blown-up surface and the resulting classification."""
from linsys.peel import PeelResult, movable_selfint, peel
from linsys.rules import DEFERRED, h0_rule
from linsys.classifier import classify

__all__ = ["PeelResult", "movable_selfint", "peel", "DEFERRED", "h0_rule", "classify"]
