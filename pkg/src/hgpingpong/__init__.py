"""Exact ping-pong verification for hypergeometric groups generated by companion matrices."""

from .cones import SimplicialCone, cone
from .errors import HGError
from .exact import RatMat, rat
from .generators import HGTriple, build
from .pingpong import PingPongTable, Verdict, Witness, falsify, standard_cone, verify

__all__ = [
    "HGError",
    "HGTriple",
    "PingPongTable",
    "RatMat",
    "SimplicialCone",
    "Verdict",
    "Witness",
    "build",
    "cone",
    "falsify",
    "standard_cone",
    "rat",
    "verify",
]
