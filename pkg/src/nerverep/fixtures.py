"""Named example complexes shipped with the package."""

from __future__ import annotations

from importlib import resources

from .complex import SimplicialComplex
from .serialize import parse_complex

NAMES = (
    "fig1",
    "fig2",
    "spider",
    "mobius",
    "path4",
    "delta2",
    "boundary_delta2",
    "vkf1",
    "k33",
    "km",
)


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return resources.files("nerverep").joinpath("data").joinpath(f"{name}.txt").read_text(encoding="utf-8")


def load(name: str) -> SimplicialComplex:
    return parse_complex(fixture_text(name))


def all_fixtures() -> dict[str, SimplicialComplex]:
    return {name: load(name) for name in NAMES}
