from stickgraph.catalog.io import FormatError, dumps, load, loads, save
from stickgraph.catalog.verify import CatalogEntry, Claim, VerificationReport, cycle_knot_census, verify


# imported lazily: the coordinate module is generated by a script that itself
# imports this package
def builtin(name: str) -> CatalogEntry:
    from stickgraph.catalog.entries import builtin as _b
    return _b(name)


def builtin_names():
    from stickgraph.catalog.entries import builtin_names as _n
    return _n()


__all__ = [
    "CatalogEntry", "Claim", "FormatError", "VerificationReport", "builtin", "builtin_names",
    "cycle_knot_census", "dumps", "load", "loads", "save", "verify",
]
