"""Finite right loops: inner mappings, twisted automorphisms, twisted right
gyrogroups and the group extensions they generate."""
from importlib import resources

from .config import LIMITS, Limits
from .errors import CapExceeded, InternalError, InvalidInput, InvalidTable, PreconditionError, RightLoopError
from .extension import build_extension, classify_transversal, decompose, induce_trg, round_trip
from .fileformats import format_group, format_loop, parse_group, parse_loop, read_group, read_loop
from .innermaps import check_prop2_identities, inner_group, inner_map, sigma
from .permgroup import Perm, close, format_perm, isomorphic, parse_perm
from .rightloop import RightLoopTable, validate_table
from .twistedaut import aut_group, is_twisted_automorphism, is_twisted_right_gyrogroup, taut_group

__version__ = "0.1.0"


def example_path(name: str = "ex53.loop"):
    """Path to a bundled example table."""
    return resources.files(__name__) / "data" / name


__all__ = [
    "LIMITS", "Limits", "CapExceeded", "InternalError", "InvalidInput", "InvalidTable",
    "PreconditionError", "RightLoopError", "build_extension", "classify_transversal", "decompose",
    "induce_trg", "round_trip", "format_group", "format_loop", "parse_group", "parse_loop",
    "read_group", "read_loop", "check_prop2_identities", "inner_group", "inner_map", "sigma",
    "Perm", "close", "format_perm", "isomorphic", "parse_perm", "RightLoopTable", "validate_table",
    "aut_group", "is_twisted_automorphism", "is_twisted_right_gyrogroup", "taut_group", "example_path",
]
